#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qorbit/scalar.hpp"

namespace qorbit {

/// Homogeneous polynomial in X, Y of arbitrary degree. Coefficient k
/// multiplies X^(d-k) Y^k, so storage is in descending powers of X.
template <class T>
class BinaryForm {
 public:
  BinaryForm() : coeffs_{T(1)} {}
  explicit BinaryForm(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

  /// x X + y Y
  static BinaryForm linear(T x, T y) { return BinaryForm({std::move(x), std::move(y)}); }

  /// X - u Y, the factor vanishing at the finite point u.
  static BinaryForm root_factor(const T& u) { return linear(T(1), T(-u)); }

  /// Y, the factor vanishing at infinity.
  static BinaryForm infinity_factor() { return linear(T(0), T(1)); }

  /// X^2 - 2 re XY + (re^2 + im^2) Y^2, vanishing at re +- i im.
  static BinaryForm pair_factor(const T& re, const T& im) {
    return BinaryForm({T(1), T(-2 * re), T(re * re + im * im)});
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }

  friend BinaryForm operator*(const BinaryForm& u, const BinaryForm& v) {
    std::vector<T> out(u.coeffs_.size() + v.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < v.coeffs_.size(); ++j) out[i + j] += u.coeffs_[i] * v.coeffs_[j];
    }
    return BinaryForm(std::move(out));
  }

  BinaryForm pow(int n) const {
    BinaryForm result;
    for (int i = 0; i < n; ++i) result = result * *this;
    return result;
  }

 private:
  std::vector<T> coeffs_;
};

/// A point [s : t] of the real projective line; t == 0 is infinity.
template <class T>
struct RealProjective {
  T s{0};
  T t{1};

  static RealProjective finite(T x) { return {std::move(x), T(1)}; }
  static RealProjective infinity() { return {T(1), T(0)}; }

  bool is_infinite() const { return t == T(0); }
  T value() const { return s / t; }

  friend bool operator==(const RealProjective& a, const RealProjective& b) {
    return a.s * b.t == a.t * b.s;
  }
};

}  // namespace qorbit
