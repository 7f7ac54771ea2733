#include "qorbit/signature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace qorbit {

std::string to_string(const SignatureTriple& s) {
  std::ostringstream os;
  os << "(" << s.n_neg << "," << s.n_pos << "," << s.n_rad << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SignatureTriple& s) { return os << to_string(s); }

std::vector<Rational> characteristic_polynomial(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ContractError("characteristic polynomial needs a square matrix");
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  DenseMatrix<Rational> mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    DenseMatrix<Rational> next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m(i, l) * mk(l, j);
        next(i, j) = s;
      }
      next(i, i) += coeffs[n - k + 1];
    }
    mk = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += m(i, l) * mk(l, i);
    }
    coeffs[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return coeffs;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SignatureTriple inertia(const DenseMatrix<Rational>& symmetric) {
  const std::size_t n = symmetric.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (symmetric(i, j) != symmetric(j, i)) throw ContractError("inertia needs a symmetric matrix");
    }
  }
  const std::vector<Rational> p = characteristic_polynomial(symmetric);
  SignatureTriple sig;
  while (static_cast<std::size_t>(sig.n_rad) < n && p[static_cast<std::size_t>(sig.n_rad)] == 0) ++sig.n_rad;

  std::vector<int> positive;  // p(x), highest degree first
  std::vector<int> negative;  // p(-x)
  for (std::size_t i = n + 1; i-- > 0;) {
    const int s = sign(p[i]);
    positive.push_back(s);
    negative.push_back(i % 2 == 0 ? s : -s);
  }
  sig.n_pos = sign_changes(positive);
  sig.n_neg = sign_changes(negative);
  if (static_cast<std::size_t>(sig.dim()) != n) {
    throw InternalConsistency("Descartes counts do not add up; matrix is not real-rooted");
  }
  return sig;
}

SignatureTriple inertia(const DenseMatrix<double>& symmetric, double rel_tol) {
  const auto n = static_cast<Eigen::Index>(symmetric.rows());
  SignatureTriple sig;
  if (n == 0) return sig;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = symmetric(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double threshold = rel_tol * std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(ev(i)) <= threshold) {
      ++sig.n_rad;
    } else if (ev(i) < 0.0) {
      ++sig.n_neg;
    } else {
      ++sig.n_pos;
    }
  }
  return sig;
}

std::vector<std::size_t> independent_indices(std::span<const QuarticForm<Rational>> vectors) {
  struct Row {
    std::size_t pivot;
    QuarticForm<Rational> v;
  };
  std::vector<Row> echelon;
  std::vector<std::size_t> picked;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    QuarticForm<Rational> v = vectors[idx];
    for (const Row& row : echelon) {
      if (v.c[row.pivot] != 0) v -= v.c[row.pivot] * row.v;
    }
    if (v.is_zero()) continue;
    std::size_t pivot = 0;
    while (v.c[pivot] == 0) ++pivot;
    v *= Rational(1) / v.c[pivot];
    // Keep the echelon fully reduced so later rows never reintroduce a pivot.
    for (Row& row : echelon) {
      if (row.v.c[pivot] != 0) row.v -= row.v.c[pivot] * v;
    }
    echelon.push_back({pivot, std::move(v)});
    picked.push_back(idx);
  }
  return picked;
}

std::vector<std::size_t> independent_indices(std::span<const QuarticForm<double>> vectors, double tol) {
  std::vector<QuarticForm<double>> ortho;
  std::vector<std::size_t> picked;
  auto dot = [](const QuarticForm<double>& a, const QuarticForm<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < 5; ++k) s += a.c[k] * b.c[k];
    return s;
  };
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    const double norm = coefficient_norm(vectors[idx]);
    if (norm == 0.0) continue;
    QuarticForm<double> v = (1.0 / norm) * vectors[idx];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : ortho) v -= dot(v, e) * e;
    }
    const double residual = coefficient_norm(v);
    if (residual <= tol) continue;
    ortho.push_back((1.0 / residual) * v);
    picked.push_back(idx);
  }
  return picked;
}

namespace {

template <class T>
std::vector<QuarticForm<T>> select(std::span<const QuarticForm<T>> vectors, const std::vector<std::size_t>& idx) {
  std::vector<QuarticForm<T>> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(vectors[i]);
  return out;
}

// Representatives of span(basis) / (span ∩ R·modulo).
template <class T, class IndexFn>
std::vector<QuarticForm<T>> quotient_representatives(const std::vector<QuarticForm<T>>& basis,
                                                     const QuarticForm<T>& modulo, IndexFn independent) {
  std::vector<QuarticForm<T>> combined;
  combined.reserve(basis.size() + 1);
  combined.push_back(modulo);
  combined.insert(combined.end(), basis.begin(), basis.end());
  const std::vector<std::size_t> idx = independent(std::span<const QuarticForm<T>>(combined));
  if (idx.size() != basis.size()) return basis;  // modulo is not in the span
  std::vector<QuarticForm<T>> reps;
  for (std::size_t i : idx) {
    if (i != 0) reps.push_back(combined[i]);
  }
  return reps;
}

}  // namespace

SignatureTriple gram_signature(std::span<const QuarticForm<Rational>> vectors,
                               const std::optional<QuarticForm<Rational>>& modulo) {
  if (vectors.empty()) throw ContractError("gram_signature needs at least one vector");
  std::vector<QuarticForm<Rational>> basis = select(vectors, independent_indices(vectors));
  if (modulo) {
    if (modulo->is_zero()) throw ContractError("cannot quotient by the zero vector");
    for (const auto& v : vectors) {
      if (b_polar(*modulo, v) != 0) throw ContractError("quotient direction is not orthogonal to the span");
    }
    basis = quotient_representatives(basis, *modulo, [](std::span<const QuarticForm<Rational>> s) {
      return independent_indices(s);
    });
  }
  return inertia(gram_matrix(std::span<const QuarticForm<Rational>>(basis)));
}

SignatureTriple gram_signature(std::span<const QuarticForm<double>> vectors,
                               const std::optional<QuarticForm<double>>& modulo, double tol) {
  if (vectors.empty()) throw ContractError("gram_signature needs at least one vector");
  std::vector<QuarticForm<double>> basis = select(vectors, independent_indices(vectors, tol));
  if (modulo) {
    const double mnorm = coefficient_norm(*modulo);
    if (mnorm == 0.0) throw ContractError("cannot quotient by the zero vector");
    for (const auto& v : vectors) {
      if (std::abs(b_polar(*modulo, v)) > tol * mnorm * coefficient_norm(v)) {
        throw ContractError("quotient direction is not orthogonal to the span");
      }
    }
    basis = quotient_representatives(basis, *modulo, [tol](std::span<const QuarticForm<double>> s) {
      return independent_indices(s, tol);
    });
  }
  for (auto& v : basis) v = unit_normalized(v);
  return inertia(gram_matrix(std::span<const QuarticForm<double>>(basis)), tol);
}

}  // namespace qorbit
