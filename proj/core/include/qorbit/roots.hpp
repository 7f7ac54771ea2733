#pragma once

#include <array>
#include <complex>
#include <string_view>
#include <vector>

#include "qorbit/binary_form.hpp"
#include "qorbit/polynomial.hpp"
#include "qorbit/quartic.hpp"

namespace qorbit {

/// Relative tolerance for declaring nearby numeric roots one multiple root.
inline constexpr double kRootClusterTolerance = 1e-7;
/// Relative backward error under which a cluster of noisy numeric roots is
/// accepted as one multiple root. Float noise splits an m-fold root by about
/// eps^(1/m), far beyond kRootClusterTolerance for m >= 3.
inline constexpr double kMultiplicityBackwardError = 1e-12;
/// Roots closer than this (relative) that fail the multiplicity test make a
/// float-mode root structure ambiguous.
inline constexpr double kRootAmbiguityBand = 1e-4;

/// Multiplicity partition of the four roots on CP^1 with real/complex tags.
enum class RootPattern {
  Quadruple,        // 4R
  TripleSimple,     // 3R+1R
  TwoDouble,        // 2R+2R
  DoubleTwoSimple,  // 2R+1R+1R
  DoublePair,       // 2R+pair
  TwoSimplePair,    // 1R+1R+pair
  FourSimple,       // 1R×4
  TwoPairs,         // pair+pair(distinct)
  PairSquared,      // pair²
};

std::string_view to_string(RootPattern pattern);
RootPattern parse_root_pattern(std::string_view text);

enum class RootKind { Real, Infinity, ConjugatePair };

/// One distinct root. A ConjugatePair stands for re + i im and its conjugate
/// (im > 0), each with the given multiplicity.
template <class T>
struct Root {
  RootKind kind = RootKind::Real;
  T re{0};
  T im{0};
  int multiplicity = 1;

  static Root real(T x, int m = 1) { return {RootKind::Real, std::move(x), T(0), m}; }
  static Root infinity(int m = 1) { return {RootKind::Infinity, T(0), T(0), m}; }
  static Root pair(T re, T im, int m = 1) { return {RootKind::ConjugatePair, std::move(re), std::move(im), m}; }

  bool on_real_line() const { return kind != RootKind::ConjugatePair; }
  /// Number of the four roots this entry accounts for.
  int weight() const { return kind == RootKind::ConjugatePair ? 2 * multiplicity : multiplicity; }

  RealProjective<T> point() const {
    return kind == RootKind::Infinity ? RealProjective<T>::infinity() : RealProjective<T>::finite(re);
  }
  std::complex<double> upper() const { return {to_double(re), to_double(im)}; }

  friend bool operator==(const Root&, const Root&) = default;
};

/// The roots of a real quartic on CP^1, conjugation-closed by construction.
template <class T>
class RootMultiset {
 public:
  explicit RootMultiset(std::vector<Root<T>> entries);

  const std::vector<Root<T>>& entries() const { return entries_; }
  RootPattern pattern() const;

  /// Distinct roots on RP^1 (finite or infinite), in stored order.
  std::vector<Root<T>> real_roots() const;
  /// Upper-half-plane representatives of the conjugate pairs.
  std::vector<Root<T>> pairs() const;

 private:
  std::vector<Root<T>> entries_;
};

RootMultiset<double> to_double(const RootMultiset<Rational>& rs);

/// Factor of a squarefree decomposition: `factor` is squarefree and monic,
/// its roots have the given multiplicity, and `real_roots` of them are real.
struct SquarefreeFactor {
  Polynomial<Rational> factor;
  int multiplicity = 1;
  int real_roots = 0;
};

/// Yun's algorithm; only factors of positive degree are returned.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial<Rational>& p);

/// Number of distinct real roots via a Sturm sequence.
int sturm_count(const Polynomial<Rational>& p);

/// Exact multiplicity/real pattern; a root at infinity has multiplicity 4 - deg f(x, 1).
RootPattern root_structure_exact(const QuarticForm<Rational>& f);

/// Structure from root_structure_exact, locations refined numerically per squarefree factor.
RootMultiset<double> roots_of(const QuarticForm<Rational>& f);

/// Numeric roots clustered into multiple roots: a cluster of m roots is one
/// m-fold root when its members lie within delta of each other, or when every
/// Taylor coefficient of order < m at its centroid is within
/// kMultiplicityBackwardError of zero relative to the coefficient scale. The
/// coarsest such partition is used. Throws BoundaryUncertain when roots in
/// different clusters lie within kRootAmbiguityBand.
RootMultiset<double> roots_of(const QuarticForm<double>& f, double delta = kRootClusterTolerance);

/// Complex roots of a real polynomial (companion matrix eigenvalues).
std::vector<std::complex<double>> numeric_roots(const std::vector<double>& ascending);

/// Product of (X - uY) per real root, Y per root at infinity and
/// X^2 - 2 Re z XY + |z|^2 Y^2 per pair, each raised to its multiplicity.
template <class T>
QuarticForm<T> from_roots(const RootMultiset<T>& rs) {
  BinaryForm<T> product;
  for (const Root<T>& r : rs.entries()) {
    BinaryForm<T> factor;
    switch (r.kind) {
      case RootKind::Real:
        factor = BinaryForm<T>::root_factor(r.re);
        break;
      case RootKind::Infinity:
        factor = BinaryForm<T>::infinity_factor();
        break;
      case RootKind::ConjugatePair:
        factor = BinaryForm<T>::pair_factor(r.re, r.im);
        break;
    }
    product = product * factor.pow(r.multiplicity);
  }
  return QuarticForm<T>::from_binary(product);
}

/// Folded angle min(arg z, pi - arg z) of the pair root once the two simple
/// real roots are sent to 0 and infinity. Requires pattern 1R+1R+pair.
double theta_star(const RootMultiset<double>& rs);
double theta_star(const QuarticForm<Rational>& f);
double theta_star(const QuarticForm<double>& f);

/// Representative in (0, 1/2] of the six anharmonic values of the
/// cross-ratio of four distinct points of RP^1.
template <class T>
T canonical_cross_ratio(const std::array<RealProjective<T>, 4>& p) {
  auto det = [](const RealProjective<T>& u, const RealProjective<T>& v) { return T(u.s * v.t - u.t * v.s); };
  const T num = det(p[0], p[2]) * det(p[1], p[3]);
  const T den = det(p[1], p[2]) * det(p[0], p[3]);
  if (num == T(0) || den == T(0) || num == den) throw ContractError("cross-ratio needs four distinct points");
  const T lambda = num / den;
  const T one(1);
  const T half = one / T(2);
  const std::array<T, 6> orbit{lambda,          one - lambda,           one / lambda,
                               one / (one - lambda), lambda / (lambda - one), (lambda - one) / lambda};
  for (const T& v : orbit) {
    if (v > T(0) && v <= half) return v;
  }
  // Only reachable through rounding at the harmonic value 1/2.
  return half;
}

/// Requires pattern 1R×4.
double canonical_cross_ratio(const RootMultiset<double>& rs);

/// Hyperbolic distance arccosh(1 + |z1 - z2|^2 / (2 Im z1 Im z2)).
double hyp_distance(std::complex<double> z1, std::complex<double> z2);

/// Unsigned angle at z between the geodesic rays toward boundary points x1, x2.
double ray_angle(std::complex<double> z, const RealProjective<double>& x1, const RealProjective<double>& x2);

}  // namespace qorbit
