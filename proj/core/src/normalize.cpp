#include "qorbit/normalize.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qorbit {

namespace {

using G = GroupElement<double>;
using P = RealProjective<double>;

constexpr NormalTarget kAllTargets[] = {
    NormalTarget::Infinity4,        NormalTarget::ZeroInfinity3,    NormalTarget::Zero2Infinity2,
    NormalTarget::ZeroOneInfinity2, NormalTarget::PairIInfinity2,   NormalTarget::ZeroInfinityPair,
    NormalTarget::ZeroInfinityUnit, NormalTarget::ZeroROneInfinity, NormalTarget::PairIPairRI,
    NormalTarget::PairI2,
};

// Sends x1 to 0 and x2 to infinity: [[t1, -s1], [t2, -s2]], one row negated if needed.
G zero_infinity(const P& x1, const P& x2) {
  double a = x1.t, b = -x1.s, c = x2.t, d = -x2.s;
  if (a * d - b * c < 0.0) {
    a = -a;
    b = -b;
  }
  return unimodular(G(a, b, c, d));
}

// z -> lambda z for lambda > 0.
G scaling(double lambda) {
  const double s = std::sqrt(lambda);
  return G(s, 0.0, 0.0, 1.0 / s);
}

// Affine map sending z to i.
G to_i(std::complex<double> z) { return unimodular(G(1.0, -z.real(), 0.0, z.imag())); }

double value(const P& x) { return x.s / x.t; }

// z -> -1 / (z - u), or the identity when x is already infinity.
G to_infinity(const P& x) {
  if (x.is_infinite()) return G();
  return G(0.0, -1.0, 1.0, -value(x));
}

const Root<double>& find_mult(const RootMultiset<double>& rs, int m, bool real) {
  for (const auto& r : rs.entries()) {
    if (r.multiplicity == m && r.on_real_line() == real) return r;
  }
  throw InternalConsistency("root with the expected multiplicity is missing");
}

std::vector<Root<double>> simple_reals(const RootMultiset<double>& rs) {
  std::vector<Root<double>> out;
  for (const auto& r : rs.entries()) {
    if (r.on_real_line() && r.multiplicity == 1) out.push_back(r);
  }
  return out;
}

bool already_zero_r_one_infinity(const RootMultiset<double>& rs) {
  bool zero = false, one = false, inf = false, mid = false;
  for (const auto& r : rs.entries()) {
    if (r.kind == RootKind::Infinity) {
      inf = true;
    } else if (r.re == 0.0) {
      zero = true;
    } else if (r.re == 1.0) {
      one = true;
    } else if (r.re > 0.0 && r.re < 1.0) {
      mid = true;
    }
  }
  return zero && one && inf && mid;
}

Normalization normalize(const QuarticForm<double>& f, const RootMultiset<double>& rs, NormalTarget target) {
  const RootPattern pattern = rs.pattern();
  if (!admits(pattern, target)) {
    throw ContractError("root pattern " + std::string(to_string(pattern)) + " does not admit target " +
                        std::string(to_string(target)));
  }
  G g;
  std::vector<Root<double>> out;
  switch (target) {
    case NormalTarget::Infinity4: {
      g = to_infinity(rs.entries()[0].point());
      out = {Root<double>::infinity(4)};
      break;
    }
    case NormalTarget::ZeroInfinity3: {
      const Root<double>& triple = find_mult(rs, 3, true);
      const Root<double>& simple = find_mult(rs, 1, true);
      g = zero_infinity(simple.point(), triple.point());
      out = {Root<double>::real(0.0), Root<double>::infinity(3)};
      break;
    }
    case NormalTarget::Zero2Infinity2: {
      const auto reals = rs.real_roots();
      g = zero_infinity(reals[0].point(), reals[1].point());
      out = {Root<double>::real(0.0, 2), Root<double>::infinity(2)};
      break;
    }
    case NormalTarget::ZeroOneInfinity2: {
      const Root<double>& dbl = find_mult(rs, 2, true);
      const auto simples = simple_reals(rs);
      // Positive maps keep cyclic order, so only one simple root can go to 0.
      for (const auto& first : simples) {
        const G h = zero_infinity(first.point(), dbl.point());
        const Root<double>& other = (&first == &simples[0]) ? simples[1] : simples[0];
        const double v = value(mobius(h, other.point()));
        if (v > 0.0) {
          g = scaling(1.0 / v) * h;
          break;
        }
      }
      out = {Root<double>::real(0.0), Root<double>::real(1.0), Root<double>::infinity(2)};
      break;
    }
    case NormalTarget::PairIInfinity2: {
      const Root<double>& dbl = find_mult(rs, 2, true);
      const Root<double> pair = rs.pairs()[0];
      const G h = to_infinity(dbl.point());
      g = to_i(mobius(h, pair.upper())) * h;
      out = {Root<double>::pair(0.0, 1.0), Root<double>::infinity(2)};
      break;
    }
    case NormalTarget::ZeroInfinityPair:
    case NormalTarget::ZeroInfinityUnit: {
      const auto reals = rs.real_roots();
      g = zero_infinity(reals[0].point(), reals[1].point());
      std::complex<double> z = mobius(g, rs.pairs()[0].upper());
      if (target == NormalTarget::ZeroInfinityUnit) {
        g = scaling(1.0 / std::abs(z)) * g;
        z = mobius(g, rs.pairs()[0].upper());
        if (z.real() < 0.0) {
          g = G(0.0, -1.0, 1.0, 0.0) * g;  // z -> -1/z turns e^{i theta} into e^{i (pi - theta)}
          z = mobius(g, rs.pairs()[0].upper());
        }
        const double theta = std::arg(z);
        z = {std::cos(theta), std::sin(theta)};
      }
      out = {Root<double>::real(0.0), Root<double>::pair(z.real(), z.imag()), Root<double>::infinity()};
      break;
    }
    case NormalTarget::ZeroROneInfinity: {
      if (already_zero_r_one_infinity(rs)) {
        g = G();
        out = rs.entries();
        break;
      }
      const auto reals = rs.real_roots();  // finite ascending, infinity last: cyclic order
      double best_r = 2.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const P a = reals[k].point(), b = reals[(k + 1) % 4].point();
        const P c = reals[(k + 2) % 4].point(), d = reals[(k + 3) % 4].point();
        G h = zero_infinity(a, d);
        h = scaling(1.0 / value(mobius(h, c))) * h;
        const double r = value(mobius(h, b));
        if (r < best_r) {
          best_r = r;
          g = h;
        }
      }
      out = {Root<double>::real(0.0), Root<double>::real(best_r), Root<double>::real(1.0),
             Root<double>::infinity()};
      break;
    }
    case NormalTarget::PairIPairRI: {
      const auto pairs = rs.pairs();
      const G h = to_i(pairs[0].upper());
      const std::complex<double> z = mobius(h, pairs[1].upper());
      const std::complex<double> w = (z - std::complex<double>(0, 1)) / (z + std::complex<double>(0, 1));
      const double phi = std::arg(w) / 2.0;
      g = G(std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)) * h;
      const double r = std::exp(hyp_distance(pairs[0].upper(), pairs[1].upper()));
      out = {Root<double>::pair(0.0, 1.0), Root<double>::pair(0.0, r)};
      break;
    }
    case NormalTarget::PairI2: {
      g = to_i(rs.pairs()[0].upper());
      out = {Root<double>::pair(0.0, 1.0, 2)};
      break;
    }
  }
  g = unimodular(g);
  return {g, act(g, f), RootMultiset<double>(std::move(out))};
}

}  // namespace

std::string_view to_string(NormalTarget target) {
  switch (target) {
    case NormalTarget::Infinity4:
      return "inf^4";
    case NormalTarget::ZeroInfinity3:
      return "0,inf^3";
    case NormalTarget::Zero2Infinity2:
      return "0^2,inf^2";
    case NormalTarget::ZeroOneInfinity2:
      return "0,1,inf^2";
    case NormalTarget::PairIInfinity2:
      return "i,inf^2";
    case NormalTarget::ZeroInfinityPair:
      return "0,inf,z";
    case NormalTarget::ZeroInfinityUnit:
      return "0,inf,e^it";
    case NormalTarget::ZeroROneInfinity:
      return "0,r,1,inf";
    case NormalTarget::PairIPairRI:
      return "i,ri";
    case NormalTarget::PairI2:
      return "i^2";
  }
  return "?";
}

NormalTarget parse_normal_target(std::string_view text) {
  for (NormalTarget t : kAllTargets) {
    if (to_string(t) == text) return t;
  }
  throw ParseError("unknown normalization target '" + std::string(text) + "'");
}

NormalTarget natural_target(RootPattern pattern) {
  switch (pattern) {
    case RootPattern::Quadruple:
      return NormalTarget::Infinity4;
    case RootPattern::TripleSimple:
      return NormalTarget::ZeroInfinity3;
    case RootPattern::TwoDouble:
      return NormalTarget::Zero2Infinity2;
    case RootPattern::DoubleTwoSimple:
      return NormalTarget::ZeroOneInfinity2;
    case RootPattern::DoublePair:
      return NormalTarget::PairIInfinity2;
    case RootPattern::TwoSimplePair:
      return NormalTarget::ZeroInfinityUnit;
    case RootPattern::FourSimple:
      return NormalTarget::ZeroROneInfinity;
    case RootPattern::TwoPairs:
      return NormalTarget::PairIPairRI;
    case RootPattern::PairSquared:
      return NormalTarget::PairI2;
  }
  return NormalTarget::Infinity4;
}

bool admits(RootPattern pattern, NormalTarget target) {
  if (target == NormalTarget::ZeroInfinityPair) return pattern == RootPattern::TwoSimplePair;
  return natural_target(pattern) == target;
}

Normalization mobius_normalize(const QuarticForm<double>& f, NormalTarget target) {
  return normalize(f, roots_of(f), target);
}

Normalization mobius_normalize(const QuarticForm<Rational>& f, NormalTarget target) {
  return normalize(to_double(f), roots_of(f), target);
}

Normalization mobius_normalize(const QuarticForm<double>& f, const RootMultiset<double>& roots,
                               NormalTarget target) {
  return normalize(f, roots, target);
}

Normalization mobius_normalize(const QuarticForm<double>& f) {
  const RootMultiset<double> rs = roots_of(f);
  return normalize(f, rs, natural_target(rs.pattern()));
}

Normalization mobius_normalize(const QuarticForm<Rational>& f) {
  const RootMultiset<double> rs = roots_of(f);
  return normalize(to_double(f), rs, natural_target(rs.pattern()));
}

}  // namespace qorbit
