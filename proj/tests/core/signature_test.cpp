#include <gtest/gtest.h>

#include <span>

#include <qorbit/signature.hpp>

#include "oracles.hpp"

namespace qorbit {
namespace {

using testing::Q;
using testing::Rng;

DenseMatrix<Rational> dense(const std::vector<std::vector<Rational>>& m) {
  DenseMatrix<Rational> out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  }
  return out;
}

SignatureTriple oracle(const std::vector<std::vector<Rational>>& m) {
  const auto s = testing::ldl_inertia(m);
  return {s[0], s[1], s[2]};
}

TEST(Inertia, AgreesWithSymmetricEliminationOnRandomMatrices) {
  Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    // Low rank half the time: B^T D B.
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(n));
    std::vector<Rational> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = rng.rational(3);
      for (std::size_t j = 0; j < n; ++j) b[i][j] = rng.rational(4);
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < k; ++l) m[i][j] += b[l][i] * d[l] * b[l][j];
      }
    }
    ASSERT_EQ(inertia(dense(m)), oracle(m)) << "trial " << trial;
  }
}

TEST(Inertia, FloatEigenvaluesWithRelativeTolerance) {
  DenseMatrix<double> m(3, 3);
  m(0, 0) = 2.0;
  m(1, 1) = -3.0;
  m(2, 2) = 1e-14;
  EXPECT_EQ(inertia(m), (SignatureTriple{1, 1, 1}));
  m(2, 2) = 1e-3;
  EXPECT_EQ(inertia(m), (SignatureTriple{1, 2, 0}));
}

TEST(Inertia, CharacteristicPolynomialOfDiagonal) {
  const auto p = characteristic_polynomial(dense({{Rational(2), Rational(0)}, {Rational(0), Rational(-3)}}));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], -6);
  EXPECT_EQ(p[1], 1);
  EXPECT_EQ(p[2], 1);
}

TEST(GramSignature, AmbientMonomialBasisIsTwoThree) {
  std::vector<Q> basis;
  for (int x = 4; x >= 0; --x) basis.push_back(Q::monomial(x));
  EXPECT_EQ(gram_signature(std::span<const Q>(basis)), (SignatureTriple{2, 3, 0}));
  EXPECT_EQ(oracle(testing::gram(basis)), (SignatureTriple{2, 3, 0}));
}

TEST(GramSignature, DependentVectorsDoNotInflateTheRadical) {
  const Q a = Q::monomial(4), b = Q::monomial(0);
  const std::vector<Q> vs{a, b, a + b, Rational(2) * a};
  EXPECT_EQ(gram_signature(std::span<const Q>(vs)), (SignatureTriple{1, 1, 0}));
  EXPECT_EQ(span_rank(std::span<const Q>(vs)), 2u);
  EXPECT_EQ(independent_indices(std::span<const Q>(vs)), (std::vector<std::size_t>{0, 1}));
}

TEST(GramSignature, QuotientByANullVector) {
  // span{Y^4, XY^3}: Gram [[0, 0], [0, 0]] at the null pair, radical 2; modulo Y^4 leaves (0, 0, 1).
  const std::vector<Q> vs{Q::monomial(0), Q::monomial(1)};
  EXPECT_EQ(gram_signature(std::span<const Q>(vs)), (SignatureTriple{0, 0, 2}));
  EXPECT_EQ(gram_signature(std::span<const Q>(vs), Q::monomial(0)), (SignatureTriple{0, 0, 1}));
  EXPECT_THROW(gram_signature(std::span<const Q>(vs), Q::monomial(4)), ContractError);
}

TEST(GramSignature, FloatAgreesWithExactOnRandomSpans) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Q> vs;
    const long n = rng.integer(1, 4);
    for (long i = 0; i < n; ++i) vs.push_back(rng.form(5));
    if (trial % 3 == 0) vs.push_back(vs[0] + vs.back());
    std::vector<QuarticForm<double>> vd;
    for (const Q& v : vs) vd.push_back(to_double(v));
    ASSERT_EQ(gram_signature(std::span<const QuarticForm<double>>(vd)), gram_signature(std::span<const Q>(vs)));
  }
}

TEST(SignatureTriple, Formatting) {
  EXPECT_EQ(to_string(SignatureTriple{1, 2, 0}), "(1,2,0)");
  EXPECT_EQ((SignatureTriple{1, 1, 1}).dim(), 3);
}

}  // namespace
}  // namespace qorbit
