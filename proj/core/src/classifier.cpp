#include "qorbit/classifier.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

namespace qorbit {

namespace {

struct StratumInfo {
  Stratum stratum;
  std::string_view name;
  int dim;
  SignatureTriple signature;
  Region region;
  RootPattern pattern;
  InvariantKind parameter;
};

// H_FOUR_REAL carries the Gram signature (2,1,0) that the tangent vectors
// actually produce; see the README.
constexpr StratumInfo kTable[] = {
    {Stratum::EinQuadruple, "EIN_QUADRUPLE", 1, {0, 0, 1}, Region::Einstein, RootPattern::Quadruple,
     InvariantKind::None},
    {Stratum::EinTriple, "EIN_TRIPLE", 2, {0, 1, 1}, Region::Einstein, RootPattern::TripleSimple,
     InvariantKind::None},
    {Stratum::EinOpen, "EIN_OPEN", 3, {1, 2, 0}, Region::Einstein, RootPattern::TwoSimplePair,
     InvariantKind::ThetaStar},
    {Stratum::AdsGeneric, "ADS_GENERIC", 3, {1, 2, 0}, Region::AdS, RootPattern::TwoSimplePair,
     InvariantKind::ThetaStar},
    {Stratum::HPairEqual, "H_PAIR_EQUAL", 2, {2, 0, 0}, Region::H22, RootPattern::PairSquared, InvariantKind::None},
    {Stratum::HPairDistinct, "H_PAIR_DISTINCT", 3, {2, 1, 0}, Region::H22, RootPattern::TwoPairs,
     InvariantKind::HypDistance},
    {Stratum::HFourReal, "H_FOUR_REAL", 3, {2, 1, 0}, Region::H22, RootPattern::FourSimple,
     InvariantKind::CrossRatio},
    {Stratum::HTwoDoubleReal, "H_TWO_DOUBLE_REAL", 2, {1, 1, 0}, Region::H22, RootPattern::TwoDouble,
     InvariantKind::None},
    {Stratum::HDoubleRealTwoSimple, "H_DOUBLE_REAL_TWO_SIMPLE", 3, {1, 1, 1}, Region::H22,
     RootPattern::DoubleTwoSimple, InvariantKind::None},
    {Stratum::HDoubleRealPair, "H_DOUBLE_REAL_PAIR", 3, {1, 1, 1}, Region::H22, RootPattern::DoublePair,
     InvariantKind::None},
    {Stratum::HTwoRealPair, "H_TWO_REAL_PAIR", 3, {1, 2, 0}, Region::H22, RootPattern::TwoSimplePair,
     InvariantKind::ThetaStar},
};

const StratumInfo& info(Stratum s) { return kTable[static_cast<std::size_t>(s)]; }

// Stratum from root pattern and sign of q; nullopt when the pair is impossible.
std::optional<Stratum> stratum_for(RootPattern pattern, int q_sign) {
  switch (pattern) {
    case RootPattern::Quadruple:
      return q_sign == 0 ? std::optional(Stratum::EinQuadruple) : std::nullopt;
    case RootPattern::TripleSimple:
      return q_sign == 0 ? std::optional(Stratum::EinTriple) : std::nullopt;
    case RootPattern::TwoSimplePair:
      return q_sign == 0 ? Stratum::EinOpen : q_sign < 0 ? Stratum::AdsGeneric : Stratum::HTwoRealPair;
    default:
      break;
  }
  if (q_sign <= 0) return std::nullopt;
  for (const StratumInfo& row : kTable) {
    if (row.region == Region::H22 && row.pattern == pattern) return row.stratum;
  }
  return std::nullopt;
}

void check_table(Stratum s, const OrbitSignature& computed) {
  if (computed.dim != info(s).dim || computed.signature != info(s).signature) {
    throw InternalConsistency("stratum " + std::string(info(s).name) + " expects dim " +
                              std::to_string(info(s).dim) + " and signature " + to_string(info(s).signature) +
                              ", computed dim " + std::to_string(computed.dim) + " and signature " +
                              to_string(computed.signature));
  }
}

// 256 (l^2 - l + 1)^3 (4 I^3 - J^2) == 6912 I^3 l^2 (l - 1)^2 characterizes the
// cross-ratio orbit of l; it is injective on (0, 1/2].
std::optional<Rational> certify_cross_ratio(const QuarticForm<Rational>& f, double approx) {
  const Rational i = invariant_i(f);
  const Rational j = invariant_j(f);
  const Rational i3 = i * i * i;
  Rational h0(0), h1(1), k0(1), k1(0);
  double x = approx;
  for (int step = 0; step < 40; ++step) {
    const double a = std::floor(x);
    const Rational ai(static_cast<long long>(a));
    const Rational h2 = ai * h1 + h0;
    const Rational k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 > Rational(1000000)) break;
    const Rational l = h1 / k1;
    if (l > 0 && l <= Rational(1, 2)) {
      const Rational w = l * l - l + 1;
      if (Rational(256) * w * w * w * (Rational(4) * i3 - j * j) == Rational(6912) * i3 * l * l * (l - 1) * (l - 1)) {
        return l;
      }
    }
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

Invariant parameter_of(Stratum s, const RootMultiset<double>& rs) {
  switch (info(s).parameter) {
    case InvariantKind::ThetaStar:
      return {InvariantKind::ThetaStar, theta_star(rs), std::nullopt};
    case InvariantKind::CrossRatio:
      return {InvariantKind::CrossRatio, canonical_cross_ratio(rs), std::nullopt};
    case InvariantKind::HypDistance: {
      const auto pairs = rs.pairs();
      return {InvariantKind::HypDistance, hyp_distance(pairs[0].upper(), pairs[1].upper()), std::nullopt};
    }
    case InvariantKind::None:
      break;
  }
  return {};
}

// theta* lies on the side of pi/6 selected by the sign of q.
void check_theta(Stratum s, double theta, double slack) {
  const double boundary = std::numbers::pi / 6.0;
  const bool ok = (s == Stratum::AdsGeneric && theta > boundary - slack) ||
                  (s == Stratum::HTwoRealPair && theta < boundary + slack) ||
                  (s == Stratum::EinOpen && std::abs(theta - boundary) <= slack);
  if (!ok) throw InternalConsistency("theta* " + std::to_string(theta) + " disagrees with the sign of q");
}

// Scaled so that the first nonzero coefficient is 1.
QuarticForm<double> leading_one(const QuarticForm<double>& f) {
  for (double x : f.c) {
    if (x != 0.0) return (1.0 / x) * f;
  }
  return f;
}

template <class T>
std::vector<QuarticForm<T>> with_form(const std::array<QuarticForm<T>, 3>& t, const QuarticForm<T>& f) {
  return {t[0], t[1], t[2], f};
}

}  // namespace

std::string_view to_string(Stratum stratum) { return info(stratum).name; }

Stratum parse_stratum(std::string_view text) {
  for (const StratumInfo& row : kTable) {
    if (row.name == text) return row.stratum;
  }
  throw ParseError("unknown stratum '" + std::string(text) + "'");
}

std::string_view to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::ThetaStar:
      return "THETA_STAR";
    case InvariantKind::CrossRatio:
      return "CROSS_RATIO";
    case InvariantKind::HypDistance:
      return "HYP_DISTANCE";
    case InvariantKind::None:
      return "NONE";
  }
  return "?";
}

InvariantKind parse_invariant_kind(std::string_view text) {
  for (InvariantKind k :
       {InvariantKind::ThetaStar, InvariantKind::CrossRatio, InvariantKind::HypDistance, InvariantKind::None}) {
    if (to_string(k) == text) return k;
  }
  throw ParseError("unknown invariant kind '" + std::string(text) + "'");
}

int expected_dimension(Stratum stratum) { return info(stratum).dim; }
SignatureTriple expected_signature(Stratum stratum) { return info(stratum).signature; }
Region expected_region(Stratum stratum) { return info(stratum).region; }
RootPattern expected_pattern(Stratum stratum) { return info(stratum).pattern; }
InvariantKind parameter_kind(Stratum stratum) { return info(stratum).parameter; }
bool claimed_free(Stratum stratum) { return info(stratum).dim == 3; }

QuarticForm<Rational> representative(Stratum stratum, const Rational& r) {
  using B = BinaryForm<Rational>;
  const Rational zero(0), one(1);
  const B x = B::root_factor(zero);
  const B y = B::infinity_factor();
  const B circle = B::pair_factor(zero, one);
  switch (stratum) {
    case Stratum::EinQuadruple:
      return QuarticForm<Rational>::from_binary(y.pow(4));
    case Stratum::EinTriple:
      return QuarticForm<Rational>::from_binary(x * y.pow(3));
    case Stratum::EinOpen:
      // X Y (X^2 + 3XY + 3Y^2): q = -3/2 + 9/6 = 0 with a non-real pair.
      return {zero, one, Rational(3), Rational(3), zero};
    case Stratum::AdsGeneric:
      if (!(r * r < 3)) throw InvalidInput("the AdS family needs r^2 < 3");
      return QuarticForm<Rational>::from_binary(y * circle * B::root_factor(r));
    case Stratum::HTwoRealPair:
      if (!(r * r > 3)) throw InvalidInput("the H_TWO_REAL_PAIR family needs r^2 > 3");
      return QuarticForm<Rational>::from_binary(y * circle * B::root_factor(r));
    case Stratum::HPairEqual:
      return QuarticForm<Rational>::from_binary(circle.pow(2));
    case Stratum::HPairDistinct:
      if (!(r > 0) || r == 1) throw InvalidInput("the H_PAIR_DISTINCT family needs r > 0, r != 1");
      return QuarticForm<Rational>::from_binary(circle * B::pair_factor(zero, r));
    case Stratum::HFourReal:
      if (r == 0 || r == 1) throw InvalidInput("the H_FOUR_REAL family needs r != 0, 1");
      return QuarticForm<Rational>::from_binary(x * y * B::root_factor(one) * B::root_factor(r));
    case Stratum::HTwoDoubleReal:
      return QuarticForm<Rational>::from_binary(x.pow(2) * y.pow(2));
    case Stratum::HDoubleRealTwoSimple:
      return QuarticForm<Rational>::from_binary(x * y.pow(2) * B::root_factor(one));
    case Stratum::HDoubleRealPair:
      return QuarticForm<Rational>::from_binary(y.pow(2) * circle);
  }
  return {};
}

QuarticForm<Rational> representative(Stratum stratum) {
  switch (stratum) {
    case Stratum::AdsGeneric:
      return representative(stratum, Rational(1, 2));
    case Stratum::HTwoRealPair:
    case Stratum::HPairDistinct:
      return representative(stratum, Rational(2));
    case Stratum::HFourReal:
      return representative(stratum, Rational(1, 4));
    default:
      return representative(stratum, Rational(0));
  }
}

OrbitSignature orbit_signature(const QuarticForm<Rational>& f) {
  if (f.is_zero()) throw InvalidInput("the zero form has no orbit");
  const auto t = orbit_tangent_basis(f);
  const std::vector<QuarticForm<Rational>> all = with_form(t, f);
  const std::span<const QuarticForm<Rational>> tangents(t.data(), t.size());
  const std::size_t rank_t = span_rank(tangents);
  const std::size_t rank_all = span_rank(std::span<const QuarticForm<Rational>>(all));
  const bool f_in_span = rank_all == rank_t;
  if (f_in_span && q_value(f) != 0) throw InternalConsistency("a non-null form lies in its own tangent span");
  const SignatureTriple sig =
      f_in_span ? gram_signature(tangents, std::optional<QuarticForm<Rational>>(f)) : gram_signature(tangents);
  const OrbitSignature out{static_cast<int>(rank_all) - 1, sig};
  if (sig.dim() != out.dim) throw InternalConsistency("signature size differs from the orbit dimension");
  return out;
}

OrbitSignature orbit_signature(const QuarticForm<double>& f0, double tol) {
  if (f0.is_zero()) throw InvalidInput("the zero form has no orbit");
  const QuarticForm<double> f = unit_normalized(f0);
  const auto t = orbit_tangent_basis(f);
  const std::vector<QuarticForm<double>> all = with_form(t, f);
  const std::span<const QuarticForm<double>> tangents(t.data(), t.size());
  const std::size_t rank_t = independent_indices(tangents, tol).size();
  const std::size_t rank_all = independent_indices(std::span<const QuarticForm<double>>(all), tol).size();
  const bool f_in_span = rank_all == rank_t;
  if (f_in_span && std::abs(q_value(f)) > tol) {
    throw InternalConsistency("a non-null form lies in its own tangent span");
  }
  const SignatureTriple sig = f_in_span ? gram_signature(tangents, std::optional<QuarticForm<double>>(f), tol)
                                        : gram_signature(tangents, std::nullopt, tol);
  const OrbitSignature out{static_cast<int>(rank_all) - 1, sig};
  if (sig.dim() != out.dim) throw InternalConsistency("signature size differs from the orbit dimension");
  return out;
}

OrbitDescriptor classify(const ProjectivePoint<Rational>& p) {
  const QuarticForm<Rational>& f = p.rep();
  const RootPattern pattern = root_structure_exact(f);
  const int q_sign = sign(q_value(f));
  const std::optional<Stratum> s = stratum_for(pattern, q_sign);
  if (!s) {
    throw InternalConsistency("root pattern " + std::string(to_string(pattern)) + " with q sign " +
                              std::to_string(q_sign) + " matches no stratum");
  }
  const OrbitSignature os = orbit_signature(f);
  check_table(*s, os);

  const RootMultiset<double> rs = roots_of(f);
  Invariant parameter = parameter_of(*s, rs);
  if (parameter.kind == InvariantKind::ThetaStar) {
    check_theta(*s, parameter.value, 1e-6);
    if (*s == Stratum::EinOpen) parameter.value = std::numbers::pi / 6.0;
  } else if (parameter.kind == InvariantKind::CrossRatio) {
    parameter.exact = certify_cross_ratio(f, parameter.value);
    if (parameter.exact) parameter.value = to_double(*parameter.exact);
  }
  const Normalization n = mobius_normalize(to_double(f), rs, natural_target(pattern));
  return {Mode::Exact, region_of(p), *s, pattern, os.dim, os.signature, parameter, leading_one(n.form), n.normalizer};
}

OrbitDescriptor classify(const ProjectivePoint<double>& p, const ClassifyOptions& options) {
  const QuarticForm<double> f = unit_normalized(p.rep());
  const RootMultiset<double> rs = roots_of(f, options.root_delta);
  const RootPattern pattern = rs.pattern();
  const double q = q_value(f);
  const int q_sign = std::abs(q) <= options.q_tol ? 0 : sign(q);
  const std::optional<Stratum> s = stratum_for(pattern, q_sign);
  if (!s) {
    throw BoundaryUncertain("root pattern " + std::string(to_string(pattern)) + " and q = " + std::to_string(q) +
                            " are inconsistent within tolerance");
  }
  if (pattern == RootPattern::TwoSimplePair && q_sign != 0 && std::abs(q) <= 10.0 * options.q_tol) {
    // Close enough to the Einstein boundary that the region is not trustworthy.
    throw BoundaryUncertain("q = " + std::to_string(q) + " is within the tolerance band of the Einstein locus");
  }
  const OrbitSignature os = orbit_signature(f, options.signature_tol);
  check_table(*s, os);
  Invariant parameter = parameter_of(*s, rs);
  if (parameter.kind == InvariantKind::ThetaStar) check_theta(*s, parameter.value, 1e-4);
  const Normalization n = mobius_normalize(f, rs, natural_target(pattern));
  return {Mode::Float, info(*s).region, *s, pattern, os.dim, os.signature, parameter, leading_one(n.form), n.normalizer};
}

bool same_orbit(const ProjectivePoint<Rational>& p1, const ProjectivePoint<Rational>& p2, double tol) {
  const OrbitDescriptor d1 = classify(p1);
  const OrbitDescriptor d2 = classify(p2);
  if (d1.stratum != d2.stratum) return false;
  switch (d1.parameter.kind) {
    case InvariantKind::None:
      return true;
    case InvariantKind::ThetaStar:
    case InvariantKind::CrossRatio: {
      const Rational i1 = invariant_i(p1.rep()), j1 = invariant_j(p1.rep());
      const Rational i2 = invariant_i(p2.rep()), j2 = invariant_j(p2.rep());
      return i1 * i1 * i1 * j2 * j2 == i2 * i2 * i2 * j1 * j1;
    }
    case InvariantKind::HypDistance:
      return std::abs(d1.parameter.value - d2.parameter.value) <= tol * std::max(1.0, d1.parameter.value);
  }
  return false;
}

bool same_orbit(const ProjectivePoint<double>& p1, const ProjectivePoint<double>& p2, double tol,
                const ClassifyOptions& options) {
  const OrbitDescriptor d1 = classify(p1, options);
  const OrbitDescriptor d2 = classify(p2, options);
  if (d1.stratum != d2.stratum) return false;
  if (d1.parameter.kind == InvariantKind::None) return true;
  return std::abs(d1.parameter.value - d2.parameter.value) <= tol * std::max(1.0, std::abs(d1.parameter.value));
}

FreeProbeResult free_action_probe(const ProjectivePoint<double>& p, std::size_t trials, std::uint64_t seed,
                                  const std::vector<GroupElement<double>>& extra, double tol) {
  const QuarticForm<double> f = unit_normalized(p.rep());
  FreeProbeResult result;
  auto test = [&](const GroupElement<double>& g) {
    if (distance_from_identity(g) < 1e-6) return false;
    ++result.tested;
    if (proportional(act(unimodular(g), f), f, tol)) {
      result.free = false;
      result.offending = unimodular(g);
      return true;
    }
    return false;
  };
  for (const auto& g : extra) {
    if (test(g)) return result;
  }

  // Lie elements x with lie_act(x, f) proportional to f span the kernel of [T_H T_P T_E -f].
  const auto t = orbit_tangent_basis(f);
  Eigen::Matrix<double, 5, 4> m;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = t[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(i)];
    m(i, 3) = -f.c[static_cast<std::size_t>(i)];
  }
  const Eigen::JacobiSVD<Eigen::Matrix<double, 5, 4>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double floor = tol * std::max(sv(0), 1.0);
  for (int k = 0; k < 4; ++k) {
    if (sv(k) > floor) continue;
    const auto v = svd.matrixV().col(k);
    // h H + p P + e E = [[h, p - e], [e, -h]]
    LieVector<double> x{v(0), v(1) - v(2), v(2)};
    const double norm = std::sqrt(x.diag * x.diag + x.upper * x.upper + x.lower * x.lower);
    if (norm == 0.0) continue;
    for (int step = 1; step <= 4; ++step) {
      const double s = 0.37 * step / norm;
      if (test(exp(LieVector<double>{s * x.diag, s * x.upper, s * x.lower}))) return result;
    }
  }

  for (std::size_t i = 0; i < trials; ++i) {
    if (test(random_element(derive_seed(seed, i), 2.0))) return result;
  }
  return result;
}

}  // namespace qorbit
