#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qorbit/quartic.hpp"

namespace qorbit {

/// Dense univariate polynomial, coefficients lowest degree first, trimmed.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(T(static_cast<long>(i)) * c_[i]);
    return Polynomial(std::move(out));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    std::vector<T> out = c_;
    const T lead = leading();
    for (T& x : out) x /= lead;
    return Polynomial(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<T> out = c_;
    for (T& x : out) x = -x;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& u, const Polynomial& v) {
    if (u.is_zero() || v.is_zero()) return {};
    std::vector<T> out(u.c_.size() + v.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < u.c_.size(); ++i) {
      for (std::size_t j = 0; j < v.c_.size(); ++j) out[i + j] += u.c_[i] * v.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Polynomial<Rational>, Polynomial<Rational>> divmod(const Polynomial<Rational>& a,
                                                             const Polynomial<Rational>& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b);

/// The dehomogenization f(x, 1).
template <class T>
Polynomial<T> dehomogenize(const QuarticForm<T>& f) {
  // c[k] multiplies X^(4-k) Y^k, i.e. x^(4-k) after setting Y = 1.
  return Polynomial<T>({f.c[4], f.c[3], f.c[2], f.c[1], f.c[0]});
}

}  // namespace qorbit
