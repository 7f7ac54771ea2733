#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "qorbit/binary_form.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/scalar.hpp"

namespace qorbit {

inline constexpr double kDefaultQTolerance = 1e-9;

/// A real binary quartic a4 X^4 + a3 X^3 Y + a2 X^2 Y^2 + a1 X Y^3 + a0 Y^4.
/// Coefficients are stored as (a4, a3, a2, a1, a0): c[k] multiplies
/// X^(4-k) Y^k.
template <class T>
struct QuarticForm {
  std::array<T, 5> c{T(0), T(0), T(0), T(0), T(0)};

  QuarticForm() = default;
  QuarticForm(T a4, T a3, T a2, T a1, T a0) : c{std::move(a4), std::move(a3), std::move(a2), std::move(a1), std::move(a0)} {}

  /// X^x_degree Y^(4 - x_degree)
  static QuarticForm monomial(int x_degree) {
    QuarticForm f;
    f.c[static_cast<std::size_t>(4 - x_degree)] = T(1);
    return f;
  }

  static QuarticForm from_binary(const BinaryForm<T>& b) {
    if (b.degree() != 4) throw InvalidInput("binary form is not of degree 4");
    QuarticForm f;
    for (std::size_t k = 0; k < 5; ++k) f.c[k] = b[k];
    return f;
  }

  const T& a4() const { return c[0]; }
  const T& a3() const { return c[1]; }
  const T& a2() const { return c[2]; }
  const T& a1() const { return c[3]; }
  const T& a0() const { return c[4]; }

  T& operator[](std::size_t k) { return c[k]; }
  const T& operator[](std::size_t k) const { return c[k]; }

  bool is_zero() const {
    for (const T& x : c) {
      if (x != T(0)) return false;
    }
    return true;
  }

  QuarticForm& operator+=(const QuarticForm& o) {
    for (std::size_t k = 0; k < 5; ++k) c[k] += o.c[k];
    return *this;
  }
  QuarticForm& operator-=(const QuarticForm& o) {
    for (std::size_t k = 0; k < 5; ++k) c[k] -= o.c[k];
    return *this;
  }
  QuarticForm& operator*=(const T& s) {
    for (T& x : c) x *= s;
    return *this;
  }

  friend QuarticForm operator+(QuarticForm a, const QuarticForm& b) { return a += b; }
  friend QuarticForm operator-(QuarticForm a, const QuarticForm& b) { return a -= b; }
  friend QuarticForm operator-(QuarticForm a) { return a *= T(-1); }
  friend QuarticForm operator*(const T& s, QuarticForm a) { return a *= s; }
  friend QuarticForm operator*(QuarticForm a, const T& s) { return a *= s; }

  friend bool operator==(const QuarticForm& a, const QuarticForm& b) { return a.c == b.c; }
};

/// q(f) = 2 a4 a0 - a1 a3 / 2 + a2^2 / 6, the invariant form of signature (2,3).
template <class T>
T q_value(const QuarticForm<T>& f) {
  return T(2) * f.a4() * f.a0() - f.a1() * f.a3() / T(2) + f.a2() * f.a2() / T(6);
}

/// Polarization of q: b_polar(f, f) == q_value(f).
template <class T>
T b_polar(const QuarticForm<T>& u, const QuarticForm<T>& v) {
  return u.a4() * v.a0() + u.a0() * v.a4() - (u.a1() * v.a3() + u.a3() * v.a1()) / T(4) +
         u.a2() * v.a2() / T(6);
}

/// Matrix of b_polar in the monomial basis (X^4, X^3Y, X^2Y^2, XY^3, Y^4).
template <class T>
std::array<std::array<T, 5>, 5> polar_matrix() {
  std::array<std::array<T, 5>, 5> m{};
  for (auto& row : m) row.fill(T(0));
  m[0][4] = m[4][0] = T(1);
  m[1][3] = m[3][1] = T(-1) / T(4);
  m[2][2] = T(1) / T(6);
  return m;
}

/// Degree-2 invariant I = 12 a4 a0 - 3 a3 a1 + a2^2 (so q = I / 6).
template <class T>
T invariant_i(const QuarticForm<T>& f) {
  return T(12) * f.a4() * f.a0() - T(3) * f.a3() * f.a1() + f.a2() * f.a2();
}

/// Degree-3 invariant J = 72 a4 a2 a0 + 9 a3 a2 a1 - 27 a4 a1^2 - 27 a0 a3^2 - 2 a2^3.
template <class T>
T invariant_j(const QuarticForm<T>& f) {
  return T(72) * f.a4() * f.a2() * f.a0() + T(9) * f.a3() * f.a2() * f.a1() -
         T(27) * f.a4() * f.a1() * f.a1() - T(27) * f.a0() * f.a3() * f.a3() -
         T(2) * f.a2() * f.a2() * f.a2();
}

/// Euclidean norm of the coefficient vector.
double coefficient_norm(const QuarticForm<double>& f);
double coefficient_norm(const QuarticForm<Rational>& f);

QuarticForm<double> unit_normalized(const QuarticForm<double>& f);
QuarticForm<double> to_double(const QuarticForm<Rational>& f);
/// Exact rational expansion of each binary coefficient.
QuarticForm<Rational> to_rational(const QuarticForm<double>& f);

/// Exact proportionality over the rationals.
bool proportional(const QuarticForm<Rational>& u, const QuarticForm<Rational>& v);
/// All 2x2 minors of (u, v) bounded by tol * |u| |v|.
bool proportional(const QuarticForm<double>& u, const QuarticForm<double>& v, double tol = 1e-9);

/// Human-readable polynomial, e.g. "X^3*Y - 1/4*X*Y^3".
std::string to_string(const QuarticForm<Rational>& f);
std::string to_string(const QuarticForm<double>& f);

template <class T>
std::ostream& operator<<(std::ostream& os, const QuarticForm<T>& f) {
  return os << to_string(f);
}

/// A point of P(V): a nonzero lift, equal to any proportional lift.
template <class T>
class ProjectivePoint {
 public:
  explicit ProjectivePoint(QuarticForm<T> rep) : rep_(std::move(rep)) {
    if (rep_.is_zero()) throw InvalidInput("the zero form is not a projective point");
  }

  const QuarticForm<T>& rep() const { return rep_; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return proportional(a.rep_, b.rep_);
  }

 private:
  QuarticForm<T> rep_;
};

enum class Region { Einstein, AdS, H22 };

std::string_view to_string(Region region);
Region parse_region(std::string_view text);

/// Exact sign decision.
Region region_of(const ProjectivePoint<Rational>& p);
/// The lift is rescaled to unit norm before comparing |q| with tol.
Region region_of(const ProjectivePoint<double>& p, double tol = kDefaultQTolerance);

}  // namespace qorbit
