#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <qorbit/group.hpp>
#include <qorbit/roots.hpp>

#include "oracles.hpp"

namespace qorbit {
namespace {

using testing::Q;
using testing::Rng;
using std::numbers::pi;

using Pairs = std::vector<std::pair<Rational, Rational>>;

// A random rational quartic with the given pattern (roots at infinity half the time).
Q random_with_pattern(Rng& rng, RootPattern pattern) {
  const auto u = rng.distinct(4, 6);
  const bool inf = rng.integer(0, 1) == 1;
  auto pair = [&](int k) { return std::pair<Rational, Rational>{u[static_cast<std::size_t>(k)], rng.positive_rational(5)}; };
  switch (pattern) {
    case RootPattern::Quadruple:
      return inf ? Q::monomial(0) : testing::expand_roots({u[0], u[0], u[0], u[0]}, {});
    case RootPattern::TripleSimple:
      return inf ? testing::expand_roots({u[0]}, {}, 3) : testing::expand_roots({u[0], u[0], u[0], u[1]}, {});
    case RootPattern::TwoDouble:
      return inf ? testing::expand_roots({u[0], u[0]}, {}, 2) : testing::expand_roots({u[0], u[0], u[1], u[1]}, {});
    case RootPattern::DoubleTwoSimple:
      return inf ? testing::expand_roots({u[0], u[1]}, {}, 2) : testing::expand_roots({u[0], u[0], u[1], u[2]}, {});
    case RootPattern::DoublePair:
      return inf ? testing::expand_roots({}, {pair(0)}, 2) : testing::expand_roots({u[0], u[0]}, {pair(1)});
    case RootPattern::TwoSimplePair:
      return inf ? testing::expand_roots({u[0]}, {pair(1)}, 1) : testing::expand_roots({u[0], u[1]}, {pair(2)});
    case RootPattern::FourSimple:
      return inf ? testing::expand_roots({u[0], u[1], u[2]}, {}, 1) : testing::expand_roots({u[0], u[1], u[2], u[3]}, {});
    case RootPattern::TwoPairs: {
      const auto p = pair(0);
      auto p2 = pair(1);
      if (rng.integer(0, 1) == 1) p2.first = p.first;  // same real part, different height
      if (p2 == p) p2.second += 1;
      return testing::expand_roots({}, {p, p2});
    }
    case RootPattern::PairSquared: {
      const auto p = pair(0);
      return testing::expand_roots({}, {p, p});
    }
  }
  return {};
}

constexpr RootPattern kPatterns[] = {
    RootPattern::Quadruple,       RootPattern::TripleSimple, RootPattern::TwoDouble,
    RootPattern::DoubleTwoSimple, RootPattern::DoublePair,   RootPattern::TwoSimplePair,
    RootPattern::FourSimple,      RootPattern::TwoPairs,     RootPattern::PairSquared,
};

TEST(RootPattern, LabelsRoundTrip) {
  for (const RootPattern p : kPatterns) EXPECT_EQ(parse_root_pattern(to_string(p)), p);
  EXPECT_EQ(to_string(RootPattern::FourSimple), "1R×4");
  EXPECT_EQ(to_string(RootPattern::TwoPairs), "pair+pair(distinct)");
  EXPECT_THROW(parse_root_pattern("5R"), ParseError);
}

TEST(RootStructureExact, ConstructedFactorizations) {
  EXPECT_EQ(root_structure_exact(testing::expand_roots({Rational(1), Rational(1), Rational(1), Rational(-2)}, {})),
            RootPattern::TripleSimple);
  EXPECT_EQ(root_structure_exact(testing::expand_roots({}, {{Rational(0), Rational(1)}}, 2)), RootPattern::DoublePair);
  EXPECT_EQ(root_structure_exact(Q(Rational(1), Rational(0), Rational(0), Rational(0), Rational(1))),
            RootPattern::TwoPairs);
  EXPECT_EQ(root_structure_exact(Q::monomial(0)), RootPattern::Quadruple);
  EXPECT_THROW(root_structure_exact(Q()), InvalidInput);
}

TEST(RootStructureExact, RecoversEveryPatternOnRandomConstructions) {
  Rng rng(51);
  for (const RootPattern p : kPatterns) {
    for (int i = 0; i < 200; ++i) {
      const Q f = random_with_pattern(rng, p);
      ASSERT_EQ(root_structure_exact(f), p) << to_string(f);
    }
  }
}

TEST(RootStructureExact, InvariantUnderTheGroup) {
  Rng rng(52);
  GroupSampler sampler(53);
  for (const RootPattern p : kPatterns) {
    for (int i = 0; i < 50; ++i) {
      const Q f = random_with_pattern(rng, p);
      ASSERT_EQ(root_structure_exact(act(sampler.next_rational(), f)), p);
    }
  }
}

TEST(Squarefree, YunDecompositionAndSturm) {
  // (x - 1)^3 (x + 2)
  const Polynomial<Rational> p = dehomogenize(testing::expand_roots({Rational(1), Rational(1), Rational(1), Rational(-2)}, {}));
  const auto factors = squarefree_decomposition(p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0].multiplicity, 1);
  EXPECT_EQ(factors[0].factor, Polynomial<Rational>({Rational(2), Rational(1)}));
  EXPECT_EQ(factors[1].multiplicity, 3);
  EXPECT_EQ(factors[1].factor, Polynomial<Rational>({Rational(-1), Rational(1)}));
  EXPECT_EQ(sturm_count(Polynomial<Rational>({Rational(-2), Rational(0), Rational(1)})), 2);
  EXPECT_EQ(sturm_count(Polynomial<Rational>({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)})), 0);
  EXPECT_EQ(gcd(Polynomial<Rational>({Rational(-1), Rational(0), Rational(1)}), Polynomial<Rational>({Rational(1), Rational(1)})),
            Polynomial<Rational>({Rational(1), Rational(1)}));
}

TEST(RootsOf, Examples) {
  const auto y4 = roots_of(Q::monomial(0));
  ASSERT_EQ(y4.entries().size(), 1u);
  EXPECT_EQ(y4.entries()[0].kind, RootKind::Infinity);
  EXPECT_EQ(y4.entries()[0].multiplicity, 4);

  const auto four = roots_of(testing::expand_roots({Rational(0), Rational(1), Rational(1, 3)}, {}, 1));
  ASSERT_EQ(four.pattern(), RootPattern::FourSimple);
  std::vector<double> finite;
  for (const auto& r : four.entries()) {
    if (r.kind == RootKind::Real) finite.push_back(r.re);
  }
  std::sort(finite.begin(), finite.end());
  ASSERT_EQ(finite.size(), 3u);
  EXPECT_NEAR(finite[0], 0.0, 1e-15);
  EXPECT_NEAR(finite[1], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(finite[2], 1.0, 1e-15);

  const auto pairs = roots_of(QuarticForm<double>(1, 0, 0, 0, 1)).pairs();
  ASSERT_EQ(pairs.size(), 2u);
  const double s = std::sqrt(0.5);
  EXPECT_NEAR(std::abs(pairs[0].upper() - std::complex<double>(-s, s)) * std::abs(pairs[0].upper() - std::complex<double>(s, s)),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(pairs[0].upper() - pairs[1].upper()), std::sqrt(2.0), 1e-12);
  EXPECT_THROW(roots_of(QuarticForm<double>()), InvalidInput);
}

TEST(RootsOf, ExactAndFloatStructuresAgreeOnRandomRationalQuartics) {
  Rng rng(54);
  int uncertain = 0;
  for (int i = 0; i < 10000; ++i) {
    // Mostly generic coefficients, with a quarter built from repeated roots.
    const Q f = (i % 4 == 3) ? random_with_pattern(rng, kPatterns[static_cast<std::size_t>(i / 4) % 9]) : rng.form(9);
    const RootPattern exact = root_structure_exact(f);
    try {
      const RootPattern numeric = roots_of(to_double(f)).pattern();
      ASSERT_EQ(numeric, exact) << to_string(f);
    } catch (const BoundaryUncertain&) {
      ++uncertain;
    }
  }
  EXPECT_EQ(uncertain, 0);
}

TEST(RootsOf, FloatModeRefusesNearCollisions) {
  // (X - Y)(X - (1 + 1e-5) Y) Y^2: two simple roots 1e-5 apart, outside the cluster tolerance but inside the band.
  const double e = 1e-5;
  const QuarticForm<double> f(0, 0, 1, -(2 + e), 1 + e);
  EXPECT_THROW(roots_of(f), BoundaryUncertain);
  EXPECT_EQ(roots_of(QuarticForm<double>(0, 0, 1, -2, 1)).pattern(), RootPattern::TwoDouble);
  // 1e-8 apart: one double root.
  EXPECT_EQ(roots_of(QuarticForm<double>(0, 0, 1, -(2 + 1e-8), 1 + 1e-8)).pattern(), RootPattern::TwoDouble);
  // 1e-3 apart: clearly distinct.
  EXPECT_EQ(roots_of(QuarticForm<double>(0, 0, 1, -(2 + 1e-3), 1 + 1e-3)).pattern(), RootPattern::DoubleTwoSimple);
}

TEST(FromRoots, ExpansionAndRoundTrip) {
  const RootMultiset<Rational> rs({Root<Rational>::infinity(), Root<Rational>::real(Rational(0)),
                                   Root<Rational>::pair(Rational(0), Rational(1))});
  EXPECT_EQ(from_roots(rs), Q(Rational(0), Rational(1), Rational(0), Rational(1), Rational(0)));
  const Rational u(2, 3);
  EXPECT_EQ(from_roots(RootMultiset<Rational>({Root<Rational>::real(u, 4)})),
            testing::expand_roots({u, u, u, u}, {}));

  Rng rng(55);
  for (const RootPattern p : kPatterns) {
    for (int i = 0; i < 100; ++i) {
      const Q f = random_with_pattern(rng, p);
      const auto back = from_roots(roots_of(to_double(f)));
      ASSERT_TRUE(proportional(back, to_double(f), 1e-8)) << to_string(f);
    }
  }
}

TEST(RootMultiset, RejectsMalformedInput) {
  using R = Root<Rational>;
  EXPECT_THROW(RootMultiset<Rational>({R::real(Rational(1), 3)}), InvalidInput);
  EXPECT_THROW(RootMultiset<Rational>({R::pair(Rational(0), Rational(-1)), R::real(Rational(0), 2)}), InvalidInput);
  EXPECT_THROW(RootMultiset<Rational>({R::infinity(2), R::infinity(2)}), InvalidInput);
  EXPECT_THROW(RootMultiset<Rational>({R::real(Rational(1), 2), R::real(Rational(1), 2)}), InvalidInput);
}

TEST(ThetaStar, Examples) {
  const double s3 = std::sqrt(3.0);
  EXPECT_NEAR(theta_star(QuarticForm<double>(0, 1, -s3, 1, 0)), pi / 6, 1e-12);
  EXPECT_NEAR(q_value(QuarticForm<double>(0, 1, -s3, 1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(theta_star(Q(Rational(0), Rational(1), Rational(0), Rational(1), Rational(0))), pi / 2, 1e-14);
  const Q f = testing::expand_roots({Rational(1)}, {{Rational(0), Rational(1)}}, 1);
  EXPECT_NEAR(theta_star(f), pi / 4, 1e-14);
  EXPECT_EQ(q_value(f), Rational(-1, 3));
  EXPECT_THROW(theta_star(Q::monomial(2)), ContractError);
}

TEST(ThetaStar, DirectFormulaAndSignOfQ) {
  // For roots x1, x2 real and z = a + bi, send x1 -> 0, x2 -> inf by w = (z - x1)/(z - x2).
  Rng rng(56);
  for (int i = 0; i < 2000; ++i) {
    const auto u = rng.distinct(3, 9);
    const Rational b = rng.positive_rational(9);
    const Q f = testing::expand_roots({u[0], u[1]}, {{u[2], b}});
    const std::complex<double> z(to_double(u[2]), to_double(b));
    const std::complex<double> w = (z - to_double(u[0])) / (z - to_double(u[1]));
    const double theta = std::arg(w);
    const double expected = std::min(std::abs(theta), pi - std::abs(theta));
    const double t = theta_star(f);
    ASSERT_NEAR(t, expected, 1e-10);
    const double c2 = std::cos(t) * std::cos(t);
    const int sq = sign(q_value(f));
    if (std::abs(c2 - 0.75) > 1e-9) ASSERT_EQ(sq, c2 > 0.75 ? 1 : -1);
  }
}

TEST(CrossRatio, ExamplesAndBruteForce) {
  using P = RealProjective<Rational>;
  const auto inf = P::infinity();
  EXPECT_EQ(canonical_cross_ratio<Rational>({P::finite(Rational(0)), P::finite(Rational(1)), P::finite(Rational(1, 4)), inf}),
            Rational(1, 4));
  EXPECT_EQ(canonical_cross_ratio<Rational>({P::finite(Rational(0)), P::finite(Rational(1)), P::finite(Rational(2)), inf}),
            Rational(1, 2));
  EXPECT_THROW(canonical_cross_ratio<Rational>({P::finite(Rational(0)), P::finite(Rational(0)), P::finite(Rational(2)), inf}),
               ContractError);

  Rng rng(57);
  for (int i = 0; i < 1000; ++i) {
    const auto u = rng.distinct(4, 20);
    const bool with_inf = i % 2 == 0;
    std::array<P, 4> pts{P::finite(u[0]), P::finite(u[1]), P::finite(u[2]), with_inf ? inf : P::finite(u[3])};
    std::array<double, 4> d{to_double(u[0]), to_double(u[1]), to_double(u[2]),
                            with_inf ? std::numeric_limits<double>::infinity() : to_double(u[3])};
    const Rational c = canonical_cross_ratio<Rational>(pts);
    ASSERT_NEAR(to_double(c), testing::brute_force_cross_ratio(d), 1e-12);
    // Exact Moebius invariance.
    GroupSampler sampler(static_cast<std::uint64_t>(i));
    const auto g = sampler.next_rational();
    std::array<P, 4> moved;
    for (std::size_t k = 0; k < 4; ++k) moved[k] = mobius(g, pts[k]);
    ASSERT_EQ(canonical_cross_ratio<Rational>(moved), c);
  }
}

TEST(CrossRatio, FromRootsOfAForm) {
  const Q f = testing::expand_roots({Rational(0), Rational(1), Rational(1, 4)}, {}, 1);
  EXPECT_NEAR(canonical_cross_ratio(roots_of(f)), 0.25, 1e-14);
  EXPECT_THROW(canonical_cross_ratio(roots_of(Q::monomial(2))), ContractError);
}

TEST(HypDistance, Examples) {
  for (const double r : {0.5, 2.0, 7.0}) {
    EXPECT_NEAR(hyp_distance({0, 1}, {0, r}), std::abs(std::log(r)), 1e-14);
  }
  EXPECT_EQ(hyp_distance({0.3, 2.0}, {0.3, 2.0}), 0.0);
  const double s = std::sqrt(0.5);
  EXPECT_NEAR(hyp_distance({s, s}, {-s, s}), std::acosh(3.0), 1e-14);
  EXPECT_THROW(hyp_distance({0, 0}, {0, 1}), DomainError);
}

TEST(HypDistance, AgreesWithArccoshFormulaAndIsInvariant) {
  Rng rng(58);
  GroupSampler sampler(59);
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> z1(rng.uniform() * 4 - 2, rng.uniform() * 3 + 0.05);
    const std::complex<double> z2(rng.uniform() * 4 - 2, rng.uniform() * 3 + 0.05);
    const double direct = std::acosh(1 + std::norm(z1 - z2) / (2 * z1.imag() * z2.imag()));
    ASSERT_NEAR(hyp_distance(z1, z2), direct, 1e-9 * std::max(1.0, direct));
    ASSERT_NEAR(hyp_distance(z1, z2), hyp_distance(z2, z1), 1e-15);
    const auto g = sampler.next(1.0);
    ASSERT_NEAR(hyp_distance(mobius(g, z1), mobius(g, z2)), hyp_distance(z1, z2), 1e-9 * std::max(1.0, direct));
  }
}

TEST(RayAngle, Examples) {
  using P = RealProjective<double>;
  EXPECT_NEAR(ray_angle({0, 1}, P::finite(0), P::infinity()), pi, 1e-14);
  const std::complex<double> z = std::polar(1.0, pi / 6);
  EXPECT_NEAR(ray_angle(z, P::finite(0), P::infinity()), pi / 3, 1e-12);
  // Reflection x -> -x is an isometry.
  const std::complex<double> w(0.4, 0.9);
  EXPECT_NEAR(ray_angle(w, P::finite(-1), P::finite(2)), ray_angle(-std::conj(w), P::finite(1), P::finite(-2)), 1e-12);
  EXPECT_THROW(ray_angle(w, P::finite(1), P::finite(1)), DomainError);
}

TEST(Invariants, UnchangedUnderRandomGroupElements) {
  Rng rng(60);
  GroupSampler sampler(61);
  for (int i = 0; i < 300; ++i) {
    const auto g = sampler.next_rational(5);
    const auto u = rng.distinct(4, 9);
    const Rational b = rng.positive_rational(5), b2 = rng.positive_rational(5) + b;
    const Q two_simple = testing::expand_roots({u[0], u[1]}, {{u[2], b}});
    ASSERT_NEAR(theta_star(act(g, two_simple)), theta_star(two_simple), 1e-9);
    const Q four = testing::expand_roots({u[0], u[1], u[2], u[3]}, {});
    ASSERT_NEAR(canonical_cross_ratio(roots_of(act(g, four))), canonical_cross_ratio(roots_of(four)), 1e-9);
    const Q pairs = testing::expand_roots({}, {{u[0], b}, {u[1], b2}});
    const auto p0 = roots_of(pairs).pairs(), p1 = roots_of(act(g, pairs)).pairs();
    ASSERT_NEAR(hyp_distance(p1[0].upper(), p1[1].upper()), hyp_distance(p0[0].upper(), p0[1].upper()), 1e-9);
  }
}

}  // namespace
}  // namespace qorbit
