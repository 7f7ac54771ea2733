#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "qorbit/binary_form.hpp"
#include "qorbit/quartic.hpp"

namespace qorbit {

/// The one-parameter subgroups fixing i, infinity and {0, infinity}.
enum class SubgroupKind { EllipticE, ParabolicP, HyperbolicH };

std::string_view to_string(SubgroupKind kind);

/// Traceless 2x2 matrix [[diag, upper], [lower, -diag]], an element of sl(2,R).
template <class T>
struct LieVector {
  T diag{0};
  T upper{0};
  T lower{0};

  /// -det, the quantity whose sign separates hyperbolic, parabolic and elliptic.
  T discriminant() const { return diag * diag + upper * lower; }

  friend bool operator==(const LieVector&, const LieVector&) = default;
};

/// Generators: E = [[0,-1],[1,0]], P = [[0,1],[0,0]], H = [[1,0],[0,-1]].
template <class T>
LieVector<T> generator(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::EllipticE:
      return {T(0), T(-1), T(1)};
    case SubgroupKind::ParabolicP:
      return {T(0), T(1), T(0)};
    case SubgroupKind::HyperbolicH:
      return {T(1), T(0), T(0)};
  }
  return {};
}

/// A real 2x2 matrix [[a, b], [c, d]] with positive determinant, taken as an
/// element of PGL+(2,R) = PSL(2,R). Products of unimodular elements stay
/// unimodular; the action on forms of a non-unimodular representative
/// differs from its unimodular rescaling by the positive factor det^2.
template <class T>
class GroupElement {
 public:
  GroupElement() : a_(1), b_(0), c_(0), d_(1) {}
  GroupElement(T a, T b, T c, T d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (!(determinant() > T(0))) throw ContractError("group element needs a positive determinant");
  }

  static GroupElement identity() { return {}; }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }

  T determinant() const { return a_ * d_ - b_ * c_; }

  /// The adjugate; the inverse up to the positive scalar det.
  GroupElement inverse() const { return GroupElement(d_, -b_, -c_, a_); }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return GroupElement(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_, g.c_ * h.a_ + g.d_ * h.c_,
                        g.c_ * h.b_ + g.d_ * h.d_);
  }

  /// Equality in PSL(2,R): proportional matrices.
  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    return g.a_ * h.b_ == g.b_ * h.a_ && g.a_ * h.c_ == g.c_ * h.a_ && g.a_ * h.d_ == g.d_ * h.a_ &&
           g.b_ * h.c_ == g.c_ * h.b_ && g.b_ * h.d_ == g.d_ * h.b_ && g.c_ * h.d_ == g.d_ * h.c_;
  }

 private:
  T a_, b_, c_, d_;
};

GroupElement<double> to_double(const GroupElement<Rational>& g);

/// Rescaled to determinant one, with a >= 0 (or b > 0 when a == 0) as the sign choice.
GroupElement<double> unimodular(const GroupElement<double>& g);

/// Distance from the identity in PSL(2,R), comparing against both +I and -I.
double distance_from_identity(const GroupElement<double>& g);

/// Moebius action z -> (a z + b) / (c z + d) on the upper half-plane.
std::complex<double> mobius(const GroupElement<double>& g, std::complex<double> z);

/// Moebius action on the real projective line.
template <class T>
RealProjective<T> mobius(const GroupElement<T>& g, const RealProjective<T>& x) {
  return {g.a() * x.s + g.b() * x.t, g.c() * x.s + g.d() * x.t};
}

/// (g . f)(X, Y) = f(d X - b Y, -c X + a Y), so roots are carried forward by
/// the Moebius map of g and act(g h, f) = act(g, act(h, f)).
template <class T>
QuarticForm<T> act(const GroupElement<T>& g, const QuarticForm<T>& f) {
  const BinaryForm<T> first = BinaryForm<T>::linear(g.d(), -g.b());
  const BinaryForm<T> second = BinaryForm<T>::linear(-g.c(), g.a());
  std::array<BinaryForm<T>, 5> first_pow;
  std::array<BinaryForm<T>, 5> second_pow;
  for (int k = 0; k < 5; ++k) {
    first_pow[static_cast<std::size_t>(k)] = first.pow(k);
    second_pow[static_cast<std::size_t>(k)] = second.pow(k);
  }
  QuarticForm<T> out;
  for (std::size_t k = 0; k < 5; ++k) {
    if (f.c[k] == T(0)) continue;
    // c[k] multiplies X^(4-k) Y^k.
    const BinaryForm<T> term = first_pow[4 - k] * second_pow[k];
    for (std::size_t j = 0; j < 5; ++j) out.c[j] += f.c[k] * term[j];
  }
  return out;
}

template <class T>
using Matrix5 = std::array<std::array<T, 5>, 5>;

/// Matrix of act(g, .) in the monomial basis: column j is act(g, e_j).
template <class T>
Matrix5<T> rep5(const GroupElement<T>& g) {
  Matrix5<T> m{};
  for (std::size_t j = 0; j < 5; ++j) {
    QuarticForm<T> e;
    e.c[j] = T(1);
    const QuarticForm<T> col = act(g, e);
    for (std::size_t i = 0; i < 5; ++i) m[i][j] = col.c[i];
  }
  return m;
}

template <class T>
Matrix5<T> multiply(const Matrix5<T>& x, const Matrix5<T>& y) {
  Matrix5<T> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      T s(0);
      for (std::size_t l = 0; l < 5; ++l) s += x[i][l] * y[l][j];
      out[i][j] = s;
    }
  }
  return out;
}

template <class T>
Matrix5<T> transpose(const Matrix5<T>& x) {
  Matrix5<T> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out[i][j] = x[j][i];
  }
  return out;
}

Rational determinant(const Matrix5<Rational>& m);
double determinant(const Matrix5<double>& m);

/// d/dt at 0 of act(exp(t x), f), as the derivation
/// -(h X + e Y) df/dX - (l X - h Y) df/dY for x = [[h, e], [l, -h]].
template <class T>
QuarticForm<T> lie_act(const LieVector<T>& x, const QuarticForm<T>& f) {
  QuarticForm<T> out;
  for (std::size_t k = 0; k < 5; ++k) {
    if (f.c[k] == T(0)) continue;
    const int xdeg = 4 - static_cast<int>(k);
    const int ydeg = static_cast<int>(k);
    // X d/dX - Y d/dY scales the monomial by (xdeg - ydeg).
    out.c[k] -= x.diag * T(xdeg - ydeg) * f.c[k];
    // Y d/dX lowers the X degree.
    if (xdeg > 0) out.c[k + 1] -= x.upper * T(xdeg) * f.c[k];
    // X d/dY raises it.
    if (ydeg > 0) out.c[k - 1] -= x.lower * T(ydeg) * f.c[k];
  }
  return out;
}

/// Closed-form exponential, split on the sign of the discriminant.
GroupElement<double> exp(const LieVector<double>& x);

/// Exact exponential; only nilpotent generators have a rational exponential.
std::optional<GroupElement<Rational>> exact_exp(const LieVector<Rational>& x);

/// E -> rotation by t, P -> x + t, H -> diag(e^t, e^-t).
GroupElement<double> one_param(SubgroupKind kind, double t);

/// Exact members of P and of the diagonal subgroup.
GroupElement<Rational> parabolic(const Rational& t);
GroupElement<Rational> diagonal(const Rational& s);  // diag(s, 1/s), s > 0

/// splitmix64 mixing of (seed, index): per-sample seeds for parallel streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic sampler; owns its generator state.
class GroupSampler {
 public:
  explicit GroupSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits (platform independent).
  double uniform();

  /// Uniform in the ball {|(h, e, l)| <= radius} of sl(2,R).
  LieVector<double> next_lie(double radius);

  /// exp of next_lie(radius).
  GroupElement<double> next(double radius);

  /// Random unimodular rational element with numerators/denominators up to bound.
  GroupElement<Rational> next_rational(int bound = 7);

  /// Random rational p/q with |p| <= bound and 1 <= q <= bound.
  Rational next_small_rational(int bound);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// GroupSampler(seed).next(radius).
GroupElement<double> random_element(std::uint64_t seed, double radius);

}  // namespace qorbit
