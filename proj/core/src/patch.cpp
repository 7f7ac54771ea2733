#include "qorbit/patch.hpp"

#include <cmath>

namespace qorbit {

MinkPoint<Rational> patch_project(const ProjectivePoint<Rational>& p) {
  const QuarticForm<Rational>& f = p.rep();
  if (q_value(f) != 0) throw DomainError("point is not on the Einstein universe");
  if (f.a4() == 0) throw OutOfChart("point lies on the lightcone of Y^4");
  return {f.a3() / f.a4(), f.a2() / f.a4(), f.a1() / f.a4()};
}

MinkPoint<double> patch_project(const ProjectivePoint<double>& p, double tol) {
  const QuarticForm<double> f = unit_normalized(p.rep());
  if (std::abs(q_value(f)) > tol) throw DomainError("point is not on the Einstein universe");
  if (std::abs(f.a4()) <= tol) throw OutOfChart("point lies on the lightcone of Y^4");
  return {f.a3() / f.a4(), f.a2() / f.a4(), f.a1() / f.a4()};
}

MinkPoint<double> triple_point(double u, double u2) {
  // (X - uY)^3 (X - u'Y) = X^4 - (3u + u') X^3Y + (3u^2 + 3uu') X^2Y^2 - (u^3 + 3u^2u') XY^3 + ...
  return {-(3.0 * u + u2), 3.0 * u * u + 3.0 * u * u2, -(u * u * u + 3.0 * u * u * u2)};
}

MinkPoint<double> quadruple_point(double u) { return triple_point(u, u); }

std::string_view to_string(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::Curve:
      return "curve";
    case GeometryKind::Surface:
      return "surface";
    case GeometryKind::Cloud:
      return "cloud";
  }
  return "?";
}

double ParamRange::at(std::size_t i, std::size_t n) const {
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

GeometrySet sample_curve_N(const ParamRange& u, std::size_t n) {
  if (n < 2) throw InvalidInput("a curve needs at least 2 samples");
  GeometrySet g;
  g.kind = GeometryKind::Curve;
  g.stratum = Stratum::EinQuadruple;
  g.ranges = {u};
  g.requested = n;
  for (std::size_t i = 0; i < n; ++i) {
    g.points.push_back(quadruple_point(u.at(i, n)));
    if (i > 0) g.segments.push_back({i - 1, i});
  }
  return g;
}

GeometrySet sample_surface_L(const ParamRange& u, const ParamRange& u2, std::size_t n, std::size_t m) {
  if (n < 2 || m < 2) throw InvalidInput("a surface grid needs at least 2 x 2 samples");
  GeometrySet g;
  g.kind = GeometryKind::Surface;
  g.stratum = Stratum::EinTriple;
  g.ranges = {u, u2};
  g.requested = n * m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) g.points.push_back(triple_point(u.at(i, n), u2.at(j, m)));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const std::size_t v00 = i * m + j, v10 = (i + 1) * m + j, v11 = (i + 1) * m + j + 1, v01 = i * m + j + 1;
      g.triangles.push_back({v00, v10, v11});
      g.triangles.push_back({v00, v11, v01});
    }
  }
  return g;
}

GeometrySet sample_orbit(const QuarticForm<double>& f, std::size_t count, std::uint64_t seed, double radius,
                         double tol) {
  if (count < 1) throw InvalidInput("an orbit sample needs count >= 1");
  if (f.is_zero()) throw InvalidInput("the zero form has no orbit");
  GeometrySet g;
  g.kind = GeometryKind::Cloud;
  g.requested = count;
  for (std::size_t i = 0; i < count; ++i) {
    const QuarticForm<double> h = act(random_element(derive_seed(seed, i), radius), f);
    const QuarticForm<double> unit = unit_normalized(h);
    if (std::abs(unit.a4()) <= tol) {
      ++g.dropped;
      continue;
    }
    g.points.push_back({h.a3() / h.a4(), h.a2() / h.a4(), h.a1() / h.a4()});
    g.forms.push_back(h);
  }
  return g;
}

}  // namespace qorbit
