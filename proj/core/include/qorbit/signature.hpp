#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qorbit/quartic.hpp"

namespace qorbit {

/// (p, q, r): dimensions of a maximal negative-definite subspace, a maximal
/// positive-definite subspace, and the radical.
struct SignatureTriple {
  int n_neg = 0;
  int n_pos = 0;
  int n_rad = 0;

  int dim() const { return n_neg + n_pos + n_rad; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

std::string to_string(const SignatureTriple& s);
std::ostream& operator<<(std::ostream& os, const SignatureTriple& s);

/// Small dense row-major matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Coefficients of det(x I - m), lowest degree first (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const DenseMatrix<Rational>& m);

/// Inertia of a symmetric rational matrix. The characteristic polynomial of
/// a symmetric matrix is real-rooted, so Descartes' rule of signs is exact.
SignatureTriple inertia(const DenseMatrix<Rational>& symmetric);

/// Inertia from symmetric eigenvalues; |lambda| <= rel_tol * max(max|lambda|, 1)
/// counts as zero.
SignatureTriple inertia(const DenseMatrix<double>& symmetric, double rel_tol = 1e-9);

template <class T>
DenseMatrix<T> gram_matrix(std::span<const QuarticForm<T>> vectors) {
  DenseMatrix<T> g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g(i, j) = b_polar(vectors[i], vectors[j]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

/// Indices of a maximal linearly independent subsequence, chosen greedily in
/// order. Float mode treats a vector as dependent when its residual after
/// projection is <= tol times its norm.
std::vector<std::size_t> independent_indices(std::span<const QuarticForm<Rational>> vectors);
std::vector<std::size_t> independent_indices(std::span<const QuarticForm<double>> vectors,
                                             double tol = 1e-9);

template <class T>
std::size_t span_rank(std::span<const QuarticForm<T>> vectors) {
  return independent_indices(vectors).size();
}

/// Signature of q restricted to span(vectors), or to
/// span(vectors) / (span ∩ R·modulo) when `modulo` is given. `modulo` must be
/// b_polar-orthogonal to every vector (ContractError otherwise).
SignatureTriple gram_signature(std::span<const QuarticForm<Rational>> vectors,
                               const std::optional<QuarticForm<Rational>>& modulo = std::nullopt);
SignatureTriple gram_signature(std::span<const QuarticForm<double>> vectors,
                               const std::optional<QuarticForm<double>>& modulo = std::nullopt,
                               double tol = 1e-9);

}  // namespace qorbit
