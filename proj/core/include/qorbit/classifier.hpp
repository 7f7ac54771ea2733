#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qorbit/group.hpp"
#include "qorbit/normalize.hpp"
#include "qorbit/quartic.hpp"
#include "qorbit/roots.hpp"
#include "qorbit/signature.hpp"

namespace qorbit {

enum class Stratum {
  EinQuadruple,
  EinTriple,
  EinOpen,
  AdsGeneric,
  HPairEqual,
  HPairDistinct,
  HFourReal,
  HTwoDoubleReal,
  HDoubleRealTwoSimple,
  HDoubleRealPair,
  HTwoRealPair,
};

inline constexpr std::array<Stratum, 11> kAllStrata{
    Stratum::EinQuadruple,  Stratum::EinTriple,      Stratum::EinOpen,
    Stratum::AdsGeneric,    Stratum::HPairEqual,     Stratum::HPairDistinct,
    Stratum::HFourReal,     Stratum::HTwoDoubleReal, Stratum::HDoubleRealTwoSimple,
    Stratum::HDoubleRealPair, Stratum::HTwoRealPair,
};

std::string_view to_string(Stratum stratum);
Stratum parse_stratum(std::string_view text);

enum class InvariantKind { ThetaStar, CrossRatio, HypDistance, None };
std::string_view to_string(InvariantKind kind);
InvariantKind parse_invariant_kind(std::string_view text);

/// Continuous orbit parameter. `exact` is set when the value is a rational
/// number certified from exact invariants.
struct Invariant {
  InvariantKind kind = InvariantKind::None;
  double value = 0.0;
  std::optional<Rational> exact;
};

/// Stratum tables; classification checks computed values against them.
int expected_dimension(Stratum stratum);
SignatureTriple expected_signature(Stratum stratum);
Region expected_region(Stratum stratum);
RootPattern expected_pattern(Stratum stratum);
InvariantKind parameter_kind(Stratum stratum);
/// The strata on which the action is (locally) free: all three-dimensional orbits.
bool claimed_free(Stratum stratum);

/// A representative of each stratum; parameterized strata take parameter `r`
/// where meaningful (ADS: Y(X^2+Y^2)(X - rY); H_FOUR_REAL: XY(X-Y)(X-rY);
/// H_PAIR_DISTINCT: (X^2+Y^2)(X^2+r^2Y^2); H_TWO_REAL_PAIR: Y(X^2+Y^2)(X-rY) with r^2 > 3).
/// InvalidInput when r is outside the family (r^2 < 3 for ADS, r > 0, r != 1 for H_PAIR_DISTINCT,
/// r != 0, 1 for H_FOUR_REAL).
QuarticForm<Rational> representative(Stratum stratum, const Rational& r);
QuarticForm<Rational> representative(Stratum stratum);

struct OrbitDescriptor {
  Mode mode = Mode::Exact;
  Region region = Region::Einstein;
  Stratum stratum = Stratum::EinQuadruple;
  RootPattern pattern = RootPattern::Quadruple;
  int dim = 0;
  SignatureTriple signature;
  Invariant parameter;
  QuarticForm<double> canonical_form;  // first nonzero coefficient 1
  GroupElement<double> normalizer;
};

struct ClassifyOptions {
  double q_tol = kDefaultQTolerance;
  double root_delta = kRootClusterTolerance;
  double signature_tol = 1e-9;
};

OrbitDescriptor classify(const ProjectivePoint<Rational>& p);
/// Throws BoundaryUncertain when q or the root structure is within tolerance of a boundary.
OrbitDescriptor classify(const ProjectivePoint<double>& p, const ClassifyOptions& options = {});

/// Tangent vectors of the H, P and E flows at f, in that order.
template <class T>
std::array<QuarticForm<T>, 3> orbit_tangent_basis(const QuarticForm<T>& f) {
  return {lie_act(generator<T>(SubgroupKind::HyperbolicH), f), lie_act(generator<T>(SubgroupKind::ParabolicP), f),
          lie_act(generator<T>(SubgroupKind::EllipticE), f)};
}

struct OrbitSignature {
  int dim = 0;
  SignatureTriple signature;
  friend bool operator==(const OrbitSignature&, const OrbitSignature&) = default;
};

/// dim = rank(tangents, f) - 1; the signature is that of the tangent span,
/// taken modulo R f when f lies in it.
OrbitSignature orbit_signature(const QuarticForm<Rational>& f);
OrbitSignature orbit_signature(const QuarticForm<double>& f, double tol = 1e-9);

/// Equal strata and, for parameterized strata, equal parameters. Exact mode
/// compares the absolute invariant I^3 : J^2 for THETA_STAR and CROSS_RATIO
/// and hyperbolic distances within tol.
bool same_orbit(const ProjectivePoint<Rational>& p1, const ProjectivePoint<Rational>& p2, double tol = 1e-9);
bool same_orbit(const ProjectivePoint<double>& p1, const ProjectivePoint<double>& p2, double tol = 1e-9,
                const ClassifyOptions& options = {});

struct FreeProbeResult {
  bool free = true;
  std::optional<GroupElement<double>> offending;
  std::size_t tested = 0;
};

/// Tests random elements (away from the identity), elements of the
/// infinitesimal stabilizer if it is nontrivial, and any `extra` candidates
/// for fixing p projectively.
FreeProbeResult free_action_probe(const ProjectivePoint<double>& p, std::size_t trials, std::uint64_t seed,
                                  const std::vector<GroupElement<double>>& extra = {}, double tol = 1e-9);

}  // namespace qorbit
