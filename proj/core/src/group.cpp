#include "qorbit/group.hpp"

#include <algorithm>
#include <cmath>

namespace qorbit {

std::string_view to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::EllipticE:
      return "E";
    case SubgroupKind::ParabolicP:
      return "P";
    case SubgroupKind::HyperbolicH:
      return "H";
  }
  return "?";
}

GroupElement<double> to_double(const GroupElement<Rational>& g) {
  return {to_double(g.a()), to_double(g.b()), to_double(g.c()), to_double(g.d())};
}

GroupElement<double> unimodular(const GroupElement<double>& g) {
  double s = 1.0 / std::sqrt(g.determinant());
  if (g.a() < 0.0 || (g.a() == 0.0 && g.b() < 0.0)) s = -s;
  return {s * g.a(), s * g.b(), s * g.c(), s * g.d()};
}

double distance_from_identity(const GroupElement<double>& g) {
  const GroupElement<double> u = unimodular(g);
  auto dist = [&](double sgn) {
    return std::max({std::abs(u.a() - sgn), std::abs(u.b()), std::abs(u.c()), std::abs(u.d() - sgn)});
  };
  return std::min(dist(1.0), dist(-1.0));
}

std::complex<double> mobius(const GroupElement<double>& g, std::complex<double> z) {
  return (g.a() * z + g.b()) / (g.c() * z + g.d());
}

namespace {

template <class T>
T det5(Matrix5<T> m) {
  // Gaussian elimination with row swaps; exact for Rational, partial pivoting for double.
  T det(1);
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 5; ++r) {
      if (abs_value(m[r][col]) > abs_value(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == T(0)) return T(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < 5; ++r) {
      const T factor = m[r][col] / m[col][col];
      for (std::size_t j = col; j < 5; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

}  // namespace

Rational determinant(const Matrix5<Rational>& m) { return det5(m); }
double determinant(const Matrix5<double>& m) { return det5(m); }

GroupElement<double> exp(const LieVector<double>& x) {
  const double delta = x.discriminant();
  double even = 1.0;  // coefficient of I
  double odd = 1.0;   // coefficient of x
  if (std::abs(delta) < 1e-12) {
    even = 1.0 + delta / 2.0;
    odd = 1.0 + delta / 6.0;
  } else if (delta > 0.0) {
    const double s = std::sqrt(delta);
    even = std::cosh(s);
    odd = std::sinh(s) / s;
  } else {
    const double s = std::sqrt(-delta);
    even = std::cos(s);
    odd = std::sin(s) / s;
  }
  const double a = even + odd * x.diag;
  const double d = even - odd * x.diag;
  const double b = odd * x.upper;
  const double c = odd * x.lower;
  // det is exactly one mathematically; a negative rounding result would only
  // happen for pathological inputs.
  return unimodular(GroupElement<double>(a, b, c, d));
}

std::optional<GroupElement<Rational>> exact_exp(const LieVector<Rational>& x) {
  if (x.discriminant() != 0) return std::nullopt;
  return GroupElement<Rational>(Rational(1) + x.diag, x.upper, x.lower, Rational(1) - x.diag);
}

GroupElement<double> one_param(SubgroupKind kind, double t) {
  switch (kind) {
    case SubgroupKind::EllipticE:
      return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    case SubgroupKind::ParabolicP:
      return {1.0, t, 0.0, 1.0};
    case SubgroupKind::HyperbolicH:
      return {std::exp(t), 0.0, 0.0, std::exp(-t)};
  }
  return {};
}

GroupElement<Rational> parabolic(const Rational& t) { return {Rational(1), t, Rational(0), Rational(1)}; }

GroupElement<Rational> diagonal(const Rational& s) {
  if (s <= 0) throw ContractError("diagonal element needs s > 0");
  return {s, Rational(0), Rational(0), Rational(1) / s};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double GroupSampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

LieVector<double> GroupSampler::next_lie(double radius) {
  if (!(radius > 0.0)) throw ContractError("sampling radius must be positive");
  for (;;) {
    const double h = 2.0 * uniform() - 1.0;
    const double e = 2.0 * uniform() - 1.0;
    const double l = 2.0 * uniform() - 1.0;
    if (h * h + e * e + l * l <= 1.0) return {radius * h, radius * e, radius * l};
  }
}

GroupElement<double> GroupSampler::next(double radius) { return exp(next_lie(radius)); }

Rational GroupSampler::next_small_rational(int bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  const long num = static_cast<long>(engine_() % span) - bound;
  const long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(bound)) + 1;
  return Rational(num, den);
}

GroupElement<Rational> GroupSampler::next_rational(int bound) {
  Rational a;
  do {
    a = next_small_rational(bound);
  } while (a == 0);
  const Rational b = next_small_rational(bound);
  const Rational c = next_small_rational(bound);
  const Rational d = (Rational(1) + b * c) / a;
  return {a, b, c, d};
}

GroupElement<double> random_element(std::uint64_t seed, double radius) {
  return GroupSampler(seed).next(radius);
}

}  // namespace qorbit
