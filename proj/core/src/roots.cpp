#include "qorbit/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qorbit/group.hpp"

namespace qorbit {

namespace {

RootPattern pattern_from(std::vector<int> real_mults, std::vector<int> pair_mults) {
  std::sort(real_mults.rbegin(), real_mults.rend());
  std::sort(pair_mults.rbegin(), pair_mults.rend());
  using V = std::vector<int>;
  if (pair_mults.empty()) {
    if (real_mults == V{4}) return RootPattern::Quadruple;
    if (real_mults == V{3, 1}) return RootPattern::TripleSimple;
    if (real_mults == V{2, 2}) return RootPattern::TwoDouble;
    if (real_mults == V{2, 1, 1}) return RootPattern::DoubleTwoSimple;
    if (real_mults == V{1, 1, 1, 1}) return RootPattern::FourSimple;
  } else if (pair_mults == V{1}) {
    if (real_mults == V{2}) return RootPattern::DoublePair;
    if (real_mults == V{1, 1}) return RootPattern::TwoSimplePair;
  } else if (real_mults.empty()) {
    if (pair_mults == V{1, 1}) return RootPattern::TwoPairs;
    if (pair_mults == V{2}) return RootPattern::PairSquared;
  }
  throw InvalidInput("root multiplicities do not describe a real quartic");
}

}  // namespace

std::string_view to_string(RootPattern pattern) {
  switch (pattern) {
    case RootPattern::Quadruple:
      return "4R";
    case RootPattern::TripleSimple:
      return "3R+1R";
    case RootPattern::TwoDouble:
      return "2R+2R";
    case RootPattern::DoubleTwoSimple:
      return "2R+1R+1R";
    case RootPattern::DoublePair:
      return "2R+pair";
    case RootPattern::TwoSimplePair:
      return "1R+1R+pair";
    case RootPattern::FourSimple:
      return "1R×4";
    case RootPattern::TwoPairs:
      return "pair+pair(distinct)";
    case RootPattern::PairSquared:
      return "pair²";
  }
  return "?";
}

RootPattern parse_root_pattern(std::string_view text) {
  for (RootPattern p : {RootPattern::Quadruple, RootPattern::TripleSimple, RootPattern::TwoDouble,
                        RootPattern::DoubleTwoSimple, RootPattern::DoublePair, RootPattern::TwoSimplePair,
                        RootPattern::FourSimple, RootPattern::TwoPairs, RootPattern::PairSquared}) {
    if (to_string(p) == text) return p;
  }
  throw ParseError("unknown root pattern '" + std::string(text) + "'");
}

template <class T>
RootMultiset<T>::RootMultiset(std::vector<Root<T>> entries) : entries_(std::move(entries)) {
  int total = 0;
  int infinities = 0;
  for (const Root<T>& r : entries_) {
    if (r.multiplicity < 1) throw InvalidInput("root multiplicity must be positive");
    if (r.kind == RootKind::ConjugatePair && !(r.im > T(0))) {
      throw InvalidInput("pair representative must lie in the upper half-plane");
    }
    if (r.kind == RootKind::Infinity) ++infinities;
    total += r.weight();
  }
  if (total != 4) throw InvalidInput("root multiplicities must add up to 4");
  if (infinities > 1) throw InvalidInput("infinity listed twice; use its multiplicity");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      const Root<T>& a = entries_[i];
      const Root<T>& b = entries_[j];
      if (a.kind == b.kind && a.re == b.re && a.im == b.im) {
        throw InvalidInput("root listed twice; use its multiplicity");
      }
    }
  }
}

template <class T>
RootPattern RootMultiset<T>::pattern() const {
  std::vector<int> real_mults;
  std::vector<int> pair_mults;
  for (const Root<T>& r : entries_) {
    (r.on_real_line() ? real_mults : pair_mults).push_back(r.multiplicity);
  }
  return pattern_from(std::move(real_mults), std::move(pair_mults));
}

template <class T>
std::vector<Root<T>> RootMultiset<T>::real_roots() const {
  std::vector<Root<T>> out;
  for (const Root<T>& r : entries_) {
    if (r.on_real_line()) out.push_back(r);
  }
  return out;
}

template <class T>
std::vector<Root<T>> RootMultiset<T>::pairs() const {
  std::vector<Root<T>> out;
  for (const Root<T>& r : entries_) {
    if (!r.on_real_line()) out.push_back(r);
  }
  return out;
}

template class RootMultiset<double>;
template class RootMultiset<Rational>;

RootMultiset<double> to_double(const RootMultiset<Rational>& rs) {
  std::vector<Root<double>> out;
  for (const auto& r : rs.entries()) out.push_back({r.kind, to_double(r.re), to_double(r.im), r.multiplicity});
  return RootMultiset<double>(std::move(out));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial<Rational>& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  const Polynomial<Rational> f = p.monic();
  const Polynomial<Rational> df = f.derivative();
  const Polynomial<Rational> a0 = gcd(f, df);
  Polynomial<Rational> b = divmod(f, a0).first;
  Polynomial<Rational> c = divmod(df, a0).first;
  auto minus = [](const Polynomial<Rational>& u, const Polynomial<Rational>& v) {
    std::vector<Rational> out(std::max(u.coefficients().size(), v.coefficients().size()), Rational(0));
    for (std::size_t i = 0; i < u.coefficients().size(); ++i) out[i] += u[i];
    for (std::size_t i = 0; i < v.coefficients().size(); ++i) out[i] -= v[i];
    return Polynomial<Rational>(std::move(out));
  };
  Polynomial<Rational> d = minus(c, b.derivative());
  for (int mult = 1; b.degree() > 0; ++mult) {
    const Polynomial<Rational> a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, mult, sturm_count(a)});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = minus(c, b.derivative());
  }
  return out;
}

int sturm_count(const Polynomial<Rational>& p) {
  if (p.degree() < 1) return 0;
  std::vector<Polynomial<Rational>> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    Polynomial<Rational> r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0;
    int last = 0;
    for (const auto& q : chain) {
      if (q.is_zero()) continue;
      int s = sign(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

RootPattern root_structure_exact(const QuarticForm<Rational>& f) {
  if (f.is_zero()) throw InvalidInput("the zero form has no roots");
  const Polynomial<Rational> p = dehomogenize(f);
  std::vector<int> real_mults;
  std::vector<int> pair_mults;
  if (p.degree() < 4) real_mults.push_back(4 - p.degree());
  for (const SquarefreeFactor& sf : squarefree_decomposition(p)) {
    for (int i = 0; i < sf.real_roots; ++i) real_mults.push_back(sf.multiplicity);
    for (int i = 0; i < (sf.factor.degree() - sf.real_roots) / 2; ++i) pair_mults.push_back(sf.multiplicity);
  }
  return pattern_from(std::move(real_mults), std::move(pair_mults));
}

std::vector<std::complex<double>> numeric_roots(const std::vector<double>& ascending) {
  std::vector<double> c = ascending;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  if (n == 1) return {std::complex<double>(-c[0] / c[1], 0.0)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  // Real Schur occasionally stalls near multiple roots; its transpose or the
  // complex solver converge on the same spectrum.
  std::vector<std::complex<double>> out;
  for (const Eigen::MatrixXd& m : {companion, Eigen::MatrixXd(companion.transpose())}) {
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    if (solver.info() != Eigen::Success) continue;
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
    return out;
  }
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion.cast<std::complex<double>>(), false);
  if (solver.info() != Eigen::Success) throw InternalConsistency("companion eigenvalues did not converge");
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

namespace {

using Wide = boost::multiprecision::number<boost::multiprecision::gmp_float<50>, boost::multiprecision::et_off>;

struct WideComplex {
  Wide re;
  Wide im;
};

WideComplex horner(const std::vector<Wide>& c, const WideComplex& z) {
  WideComplex acc{0, 0};
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = {acc.re * z.re - acc.im * z.im + c[i], acc.re * z.im + acc.im * z.re};
  }
  return acc;
}

// Newton refinement in 50 digits against the unrounded coefficients, so the
// result is limited by double rounding only, not by coefficient conditioning.
std::complex<double> polish_exact(const std::vector<Rational>& c, std::complex<double> z) {
  std::vector<Wide> wc;
  std::vector<Wide> dc;
  for (std::size_t i = 0; i < c.size(); ++i) {
    wc.emplace_back(c[i]);
    if (i > 0) dc.push_back(Wide(c[i]) * static_cast<long>(i));
  }
  WideComplex w{Wide(z.real()), Wide(z.imag())};
  for (int it = 0; it < 12; ++it) {
    const WideComplex fz = horner(wc, w);
    const WideComplex dz = horner(dc, w);
    const Wide den = dz.re * dz.re + dz.im * dz.im;
    if (den == 0) break;
    const WideComplex step{(fz.re * dz.re + fz.im * dz.im) / den, (fz.im * dz.re - fz.re * dz.im) / den};
    w = {w.re - step.re, w.im - step.im};
    if (abs(step.re) + abs(step.im) <= Wide(1e-40) * (1 + abs(w.re) + abs(w.im))) break;
  }
  return {w.re.convert_to<double>(), w.im.convert_to<double>()};
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Taylor coefficients of p at c up to order m - 1 vanish relative to their
// absolute-value scale, with |c| floored at 1 so that roots near 0 are judged
// against the size of the whole coefficient vector.
bool multiple_root_at(const std::vector<double>& p, std::complex<double> c, int m, double delta) {
  const int n = static_cast<int>(p.size()) - 1;
  const double radius = std::max(std::abs(c), 1.0);
  for (int k = 0; k < m; ++k) {
    std::complex<double> t = 0.0;
    double scale = 0.0;
    for (int i = k; i <= n; ++i) {
      const double w = binomial(i, k);
      t += w * p[static_cast<std::size_t>(i)] * std::pow(c, i - k);
      scale += w * std::abs(p[static_cast<std::size_t>(i)]) * std::pow(radius, i - k);
    }
    if (std::abs(t) > delta * scale) return false;
  }
  return true;
}

// An m-fold root of p is a simple root of its (m-1)-th derivative; Newton on
// that derivative sharpens a cluster centroid far beyond the root scatter.
std::complex<double> refine_multiple(const std::vector<double>& p, std::complex<double> c, int m) {
  std::vector<double> d = p;
  for (int k = 0; k + 1 < m; ++k) {
    for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = static_cast<double>(i) * d[i];
    d.pop_back();
  }
  std::vector<double> dd;
  for (std::size_t i = 1; i < d.size(); ++i) dd.push_back(static_cast<double>(i) * d[i]);
  for (int it = 0; it < 6; ++it) {
    std::complex<double> f = 0.0;
    std::complex<double> df = 0.0;
    for (std::size_t i = d.size(); i-- > 0;) f = f * c + d[i];
    for (std::size_t i = dd.size(); i-- > 0;) df = df * c + dd[i];
    if (std::abs(df) == 0.0) break;
    c -= f / df;
  }
  return c;
}

struct Cluster {
  std::complex<double> centroid;
  int size = 1;
};

}  // namespace


RootMultiset<double> roots_of(const QuarticForm<Rational>& f) {
  if (f.is_zero()) throw InvalidInput("the zero form has no roots");
  const Polynomial<Rational> p = dehomogenize(f);
  std::vector<Root<double>> entries;
  for (const SquarefreeFactor& sf : squarefree_decomposition(p)) {
    std::vector<double> c;
    for (const Rational& x : sf.factor.coefficients()) c.push_back(to_double(x));
    std::vector<std::complex<double>> zs = numeric_roots(c);
    for (auto& z : zs) z = polish_exact(sf.factor.coefficients(), z);
    std::sort(zs.begin(), zs.end(), [](auto a, auto b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    const auto real_count = static_cast<std::size_t>(sf.real_roots);
    for (std::size_t i = 0; i < real_count; ++i) entries.push_back(Root<double>::real(zs[i].real() + 0.0, sf.multiplicity));
    // The rest are conjugate pairs; sorted by |im| they sit next to each other.
    for (std::size_t i = real_count; i + 1 < zs.size(); i += 2) {
      const std::complex<double> z = 0.5 * (zs[i] + std::conj(zs[i + 1]));
      const std::complex<double> w = zs[i].imag() > 0 ? zs[i] : zs[i + 1];
      entries.push_back(Root<double>::pair(0.5 * (z.real() + w.real()) + 0.0, std::abs(w.imag()), sf.multiplicity));
    }
  }
  if (p.degree() < 4) entries.push_back(Root<double>::infinity(4 - p.degree()));
  std::stable_sort(entries.begin(), entries.end(), [](const Root<double>& a, const Root<double>& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  return RootMultiset<double>(std::move(entries));
}

RootMultiset<double> roots_of(const QuarticForm<double>& f, double delta) {
  if (f.is_zero()) throw InvalidInput("the zero form has no roots");
  const QuarticForm<double> g = unit_normalized(f);

  // Work in the rotated chart where the leading coefficient is largest, so no
  // root sits near infinity.
  GroupElement<double> best;
  QuarticForm<double> h = g;
  for (int k = 1; k < 8; ++k) {
    const double phi = k * std::numbers::pi / 8.0;
    const GroupElement<double> rot(std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi));
    const QuarticForm<double> candidate = act(rot, g);
    if (std::abs(candidate.a4()) > std::abs(h.a4())) {
      h = candidate;
      best = rot;
    }
  }
  const std::vector<double> p{h.a0(), h.a1(), h.a2(), h.a3(), h.a4()};

  const std::vector<std::complex<double>> zs = numeric_roots(p);
  const std::size_t n = zs.size();
  const auto close = [&](std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
  };

  // Every set partition of the numeric roots, as restricted growth strings.
  // A block is one root of multiplicity |block| when its members lie within
  // delta of each other, or when p has a |block|-fold root at the centroid up
  // to backward error kMultiplicityBackwardError with members within the
  // matching reach of it. The coarsest valid partition wins; ties go to the
  // smallest spread.
  std::vector<Cluster> clusters;
  double best_spread = INFINITY;
  std::size_t best_blocks = n + 1;
  std::vector<int> label(n, 0);
  std::vector<int> chosen;
  for (;;) {
    const int blocks = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    bool valid = true;
    double spread = 0.0;
    std::vector<Cluster> candidate;
    for (int b = 0; b < blocks && valid; ++b) {
      std::complex<double> sum = 0.0;
      int m = 0;
      bool tight = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (label[i] != b) continue;
        sum += zs[i];
        ++m;
        for (std::size_t j = 0; j < i; ++j) {
          if (label[j] != b) continue;
          spread = std::max(spread, std::abs(zs[i] - zs[j]));
          tight = tight && close(zs[i], zs[j], delta);
        }
      }
      std::complex<double> centroid = sum / static_cast<double>(m);
      // Members must also sit where the backward error could have scattered them.
      double radius = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (label[i] == b) radius = std::max(radius, std::abs(zs[i] - centroid));
      }
      const double reach = 10.0 * std::pow(kMultiplicityBackwardError, 1.0 / m) * (1.0 + std::abs(centroid));
      if (m > 1) {
        const std::complex<double> sharp = refine_multiple(p, centroid, m);
        if (std::abs(sharp - centroid) <= reach) centroid = sharp;
      }
      valid = m == 1 || tight ||
              (radius <= reach && multiple_root_at(p, centroid, m, kMultiplicityBackwardError));
      candidate.push_back({centroid, m});
    }
    const auto count = static_cast<std::size_t>(blocks);
    if (valid && (count < best_blocks || (count == best_blocks && spread < best_spread))) {
      best_blocks = count;
      best_spread = spread;
      clusters = std::move(candidate);
      chosen = label;
    }
    // Next restricted growth string: bump the last position that may grow.
    std::size_t i = n;
    while (i > 1) {
      --i;
      const int cap = *std::max_element(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(i)) + 1;
      if (label[i] < cap) break;
      if (i == 1) i = 0;
    }
    if (i < 1) break;
    ++label[i];
    std::fill(label.begin() + static_cast<std::ptrdiff_t>(i) + 1, label.end(), 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (chosen[i] != chosen[j] && close(zs[i], zs[j], kRootAmbiguityBand)) {
        throw BoundaryUncertain("two roots nearly collide; multiplicity is ambiguous in float mode");
      }
    }
  }

  const GroupElement<double> back = best.inverse();
  std::vector<Root<double>> entries;
  int upper_weight = 0;
  int lower_weight = 0;
  for (const Cluster& cl : clusters) {
    const double im = cl.centroid.imag();
    const double scale = 1.0 + std::abs(cl.centroid);
    if (std::abs(im) <= delta * scale) {
      const RealProjective<double> x = mobius(back, RealProjective<double>::finite(cl.centroid.real()));
      if (std::abs(x.t) <= delta * std::abs(x.s)) {
        entries.push_back(Root<double>::infinity(cl.size));
      } else {
        entries.push_back(Root<double>::real(x.s / x.t + 0.0, cl.size));
      }
    } else if (std::abs(im) <= kRootAmbiguityBand * scale) {
      throw BoundaryUncertain("complex pair is nearly real; multiplicity is ambiguous in float mode");
    } else if (im > 0.0) {
      const std::complex<double> z = mobius(back, cl.centroid);
      entries.push_back(Root<double>::pair(z.real() + 0.0, z.imag(), cl.size));
      upper_weight += cl.size;
    } else {
      lower_weight += cl.size;
    }
  }
  if (upper_weight != lower_weight) throw BoundaryUncertain("numeric roots are not conjugation-closed");
  std::stable_sort(entries.begin(), entries.end(), [](const Root<double>& a, const Root<double>& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  try {
    return RootMultiset<double>(std::move(entries));
  } catch (const InvalidInput& e) {
    throw BoundaryUncertain(std::string("numeric root structure is inconsistent: ") + e.what());
  }
}

double theta_star(const RootMultiset<double>& rs) {
  if (rs.pattern() != RootPattern::TwoSimplePair) {
    throw ContractError("theta_star needs two simple real roots and one conjugate pair");
  }
  const auto reals = rs.real_roots();
  const RealProjective<double> x1 = reals[0].point();
  const RealProjective<double> x2 = reals[1].point();
  const std::complex<double> z = rs.pairs()[0].upper();
  // [[t1, -s1], [t2, -s2]] sends x1 to 0 and x2 to infinity.
  const std::complex<double> w = (x1.t * z - x1.s) / (x2.t * z - x2.s);
  const double theta = std::abs(std::arg(w));
  return std::min(theta, std::numbers::pi - theta);
}

double theta_star(const QuarticForm<Rational>& f) { return theta_star(roots_of(f)); }
double theta_star(const QuarticForm<double>& f) { return theta_star(roots_of(f)); }

double canonical_cross_ratio(const RootMultiset<double>& rs) {
  if (rs.pattern() != RootPattern::FourSimple) throw ContractError("cross-ratio needs four distinct real roots");
  const auto reals = rs.real_roots();
  return canonical_cross_ratio<double>({reals[0].point(), reals[1].point(), reals[2].point(), reals[3].point()});
}

double hyp_distance(std::complex<double> z1, std::complex<double> z2) {
  if (!(z1.imag() > 0.0) || !(z2.imag() > 0.0)) throw DomainError("hyp_distance needs points in the upper half-plane");
  // cosh d = 1 + 2 sinh^2(d/2), which stays accurate for nearby points.
  return 2.0 * std::asinh(std::abs(z1 - z2) / (2.0 * std::sqrt(z1.imag() * z2.imag())));
}

double ray_angle(std::complex<double> z, const RealProjective<double>& x1, const RealProjective<double>& x2) {
  if (!(z.imag() > 0.0)) throw DomainError("ray_angle needs z in the upper half-plane");
  if ((x1.s == 0.0 && x1.t == 0.0) || (x2.s == 0.0 && x2.t == 0.0) || x1 == x2) {
    throw DomainError("ray_angle needs two distinct boundary points");
  }
  auto direction = [&](const RealProjective<double>& x) -> std::complex<double> {
    if (x.is_infinite()) return {0.0, 1.0};
    const double xv = x.value();
    if (xv == z.real()) return {0.0, -1.0};
    const double center = (std::norm(z) - xv * xv) / (2.0 * (z.real() - xv));
    std::complex<double> tangent = (z - center) * std::complex<double>(0.0, 1.0);
    const std::complex<double> chord = std::complex<double>(xv, 0.0) - z;
    if ((tangent * std::conj(chord)).real() < 0.0) tangent = -tangent;
    return tangent / std::abs(tangent);
  };
  const double cosine = (direction(x1) * std::conj(direction(x2))).real();
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

}  // namespace qorbit
