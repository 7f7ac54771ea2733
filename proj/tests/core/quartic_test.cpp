#include <gtest/gtest.h>

#include <cmath>

#include <qorbit/quartic.hpp>

#include "oracles.hpp"

namespace qorbit {
namespace {

using testing::Q;
using testing::Rng;

TEST(Scalar, ParsesIntegersFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-1.25e-2"), Rational(-1, 80));
  EXPECT_EQ(parse_rational("2E3"), Rational(2000));
  // Leading zeros are decimal, never an octal prefix.
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("08/09"), Rational(8, 9));
  EXPECT_EQ(parse_rational("0.0"), Rational(0));
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Scalar, RationalFromDoubleIsExact) {
  EXPECT_EQ(rational_from_double(0.5), Rational(1, 2));
  EXPECT_EQ(rational_from_double(-3.0), Rational(-3));
  const Rational tenth = rational_from_double(0.1);
  EXPECT_NE(tenth, Rational(1, 10));
  EXPECT_EQ(to_double(tenth), 0.1);
  EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
}

TEST(Scalar, ModeNamesRoundTrip) {
  EXPECT_EQ(parse_mode(to_string(Mode::Exact)), Mode::Exact);
  EXPECT_EQ(parse_mode(to_string(Mode::Float)), Mode::Float);
  EXPECT_THROW(parse_mode("fuzzy"), ParseError);
}

TEST(QuadraticForm, MatchesFourthTransvectantOnRandomForms) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Q f = rng.form(9);
    ASSERT_EQ(q_value(f), testing::q_by_transvectant(f)) << to_string(f);
    ASSERT_EQ(b_polar(f, f), q_value(f));
    ASSERT_EQ(invariant_i(f), 6 * q_value(f));
  }
}

TEST(QuadraticForm, PolarizationIsSymmetricBilinear) {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const Q u = rng.form(5), v = rng.form(5), w = rng.form(5);
    const Rational s = rng.rational(5);
    ASSERT_EQ(b_polar(u, v), b_polar(v, u));
    ASSERT_EQ(b_polar(u + s * v, w), b_polar(u, w) + s * b_polar(v, w));
    // Polarization identity.
    ASSERT_EQ(b_polar(u, v), (q_value(u + v) - q_value(u) - q_value(v)) / 2);
  }
}

TEST(QuadraticForm, PolarMatrixAgreesWithBilinearForm) {
  const auto m = polar_matrix<Rational>();
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const Q ei = Q::monomial(4 - i), ej = Q::monomial(4 - j);
      EXPECT_EQ(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], b_polar(ei, ej));
    }
  }
}

TEST(QuadraticForm, ClosedFormsFromRootProducts) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(9), b = rng.rational(9), c = rng.rational(9), r = rng.rational(9);
    // Y^2 (a X^2 + b XY + c Y^2)
    const Q f1(Rational(0), Rational(0), a, b, c);
    ASSERT_EQ(q_value(f1), a * a / 6);
    ASSERT_EQ(q_value(testing::expand_roots({Rational(0), Rational(1), r}, {}, 1)), (r * r - r + 1) / 6);
    ASSERT_EQ(q_value(testing::expand_roots({}, {{Rational(0), Rational(1)}, {Rational(0), r}})),
              2 * r * r + (1 + r * r) * (1 + r * r) / 6);
  }
}

TEST(QuadraticForm, InvariantJOnKnownForms) {
  // XY(X - Y)(X - rY) has j = 256 (r^2 - r + 1)^3 / (r^2 (r - 1)^2).
  for (const Rational r : {Rational(1, 3), Rational(2), Rational(-5, 7)}) {
    const Q f = testing::expand_roots({Rational(0), Rational(1), r}, {}, 1);
    const Rational i = invariant_i(f), j = invariant_j(f);
    const Rational jinv = 6912 * i * i * i / (4 * i * i * i - j * j);
    const Rational s = r * r - r + 1;
    EXPECT_EQ(jinv, 256 * s * s * s / (r * r * (r - 1) * (r - 1)));
  }
}

TEST(QuarticForm, ToStringIsReadable) {
  EXPECT_EQ(to_string(Q(Rational(0), Rational(1), Rational(0), Rational(-1, 4), Rational(0))), "X^3*Y - 1/4*X*Y^3");
  EXPECT_EQ(to_string(Q::monomial(0)), "Y^4");
  EXPECT_EQ(to_string(Q()), "0");
}

TEST(QuarticForm, ProportionalityIsProjectiveEquality) {
  const Q f(Rational(1), Rational(2), Rational(0), Rational(-3), Rational(5));
  EXPECT_TRUE(proportional(f, Rational(-7, 3) * f));
  EXPECT_FALSE(proportional(f, f + Q::monomial(0)));
  EXPECT_EQ(ProjectivePoint<Rational>(f), ProjectivePoint<Rational>(Rational(4) * f));
  EXPECT_THROW(ProjectivePoint<Rational>{Q()}, InvalidInput);
  const auto fd = to_double(f);
  EXPECT_TRUE(proportional(fd, -2.5 * fd));
  EXPECT_FALSE(proportional(fd, fd + QuarticForm<double>(0, 0, 0, 0, 1e-3)));
}

TEST(QuarticForm, UnitNormalizedHasUnitNorm) {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto f = unit_normalized(to_double(rng.form(50)));
    ASSERT_NEAR(coefficient_norm(f), 1.0, 1e-15);
  }
  EXPECT_THROW(unit_normalized(QuarticForm<double>()), InvalidInput);
}

TEST(Region, ExactSignOfQ) {
  EXPECT_EQ(region_of(ProjectivePoint<Rational>(Q::monomial(0))), Region::Einstein);
  EXPECT_EQ(region_of(ProjectivePoint<Rational>(Q::monomial(2))), Region::H22);
  EXPECT_EQ(region_of(ProjectivePoint<Rational>(Q(Rational(0), Rational(1), Rational(0), Rational(1), Rational(0)))),
            Region::AdS);
  EXPECT_EQ(parse_region(to_string(Region::AdS)), Region::AdS);
}

TEST(Region, FloatDecisionIsScaleFree) {
  const QuarticForm<double> f(0, 1, 0, 1, 0);
  for (const double s : {1e-8, 1.0, 1e8}) {
    EXPECT_EQ(region_of(ProjectivePoint<double>(s * f)), Region::AdS);
  }
  EXPECT_EQ(region_of(ProjectivePoint<double>(QuarticForm<double>(1e-20, 0, 0, 0, 1))), Region::Einstein);
}

}  // namespace
}  // namespace qorbit
