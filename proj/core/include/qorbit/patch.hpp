#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qorbit/classifier.hpp"
#include "qorbit/quartic.hpp"

namespace qorbit {

/// Coordinates of the affine chart {a4 = 1} around X^4, opposite the null
/// point Y^4: the form X^4 + b3 X^3Y + b2 X^2Y^2 + b1 XY^3 + a0 Y^4.
template <class T>
struct MinkPoint {
  T b3{0};
  T b2{0};
  T b1{0};
  friend bool operator==(const MinkPoint&, const MinkPoint&) = default;
};

/// Restriction of q to span{X^3Y, X^2Y^2, XY^3}; signature (1,2).
template <class T>
T chart_q(const MinkPoint<T>& w) {
  return -w.b1 * w.b3 / T(2) + w.b2 * w.b2 / T(6);
}

/// The unique null form with a4 = 1 over w; a0 = -chart_q(w) / 2.
template <class T>
ProjectivePoint<T> patch_embed(const MinkPoint<T>& w) {
  return ProjectivePoint<T>(QuarticForm<T>(T(1), w.b3, w.b2, w.b1, -chart_q(w) / T(2)));
}

/// Inverse of patch_embed. DomainError off Ein, OutOfChart on the lightcone of Y^4.
MinkPoint<Rational> patch_project(const ProjectivePoint<Rational>& p);
/// Float version on the unit-normalized lift: |q| <= tol counts as null and
/// |a4| <= tol as the lightcone.
MinkPoint<double> patch_project(const ProjectivePoint<double>& p, double tol = kDefaultQTolerance);

/// Chart point of (X - uY)^3 (X - u'Y).
MinkPoint<double> triple_point(double u, double u2);
/// Chart point of (X - uY)^4; identical to triple_point(u, u).
MinkPoint<double> quadruple_point(double u);

enum class GeometryKind { Curve, Surface, Cloud };
std::string_view to_string(GeometryKind kind);

struct ParamRange {
  double lo = -1.5;
  double hi = 1.5;
  /// lo + (hi - lo) i / (n - 1) for n >= 2; the end point is exact.
  double at(std::size_t i, std::size_t n) const;
};

inline constexpr ParamRange kDefaultWindow{-1.5, 1.5};
inline constexpr std::size_t kDefaultSamples = 200;

struct GeometrySet {
  GeometryKind kind = GeometryKind::Cloud;
  std::vector<MinkPoint<double>> points;
  std::vector<std::array<std::size_t, 2>> segments;
  std::vector<std::array<std::size_t, 3>> triangles;
  /// Cloud only: the full orbit form behind each kept point.
  std::vector<QuarticForm<double>> forms;
  std::optional<Stratum> stratum;
  std::vector<ParamRange> ranges;
  std::size_t requested = 0;
  std::size_t dropped = 0;
};

/// Polyline of n points on the quadruple-root curve. InvalidInput if n < 2.
GeometrySet sample_curve_N(const ParamRange& u, std::size_t n);
/// n x m grid over (u, u') with counterclockwise triangles in the (u, u')
/// parameter plane. Vertex (i, j) has index i m + j.
GeometrySet sample_surface_L(const ParamRange& u, const ParamRange& u2, std::size_t n, std::size_t m);
/// Orbit cloud: sample i is act(random_element(derive_seed(seed, i), radius), f)
/// in the chart; samples with a4 = 0 (within tol) are dropped and counted.
GeometrySet sample_orbit(const QuarticForm<double>& f, std::size_t count, std::uint64_t seed, double radius,
                         double tol = kDefaultQTolerance);

}  // namespace qorbit
