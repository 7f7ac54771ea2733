#include "qorbit/quartic.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace qorbit {

namespace {

constexpr std::array<const char*, 5> kMonomials = {"X^4", "X^3*Y", "X^2*Y^2", "X*Y^3", "Y^4"};

template <class T, class Format>
std::string format_form(const QuarticForm<T>& f, Format format) {
  std::string out;
  for (std::size_t k = 0; k < 5; ++k) {
    if (f.c[k] == T(0)) continue;
    const bool negative = sign(f.c[k]) < 0;
    const T magnitude = abs_value(f.c[k]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != T(1)) out += format(magnitude) + "*";
    out += kMonomials[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

double coefficient_norm(const QuarticForm<double>& f) {
  double s = 0.0;
  for (double x : f.c) s += x * x;
  return std::sqrt(s);
}

double coefficient_norm(const QuarticForm<Rational>& f) { return coefficient_norm(to_double(f)); }

QuarticForm<double> unit_normalized(const QuarticForm<double>& f) {
  const double n = coefficient_norm(f);
  if (n == 0.0 || !std::isfinite(n)) throw InvalidInput("cannot normalize a zero or non-finite form");
  return (1.0 / n) * f;
}

QuarticForm<double> to_double(const QuarticForm<Rational>& f) {
  QuarticForm<double> out;
  for (std::size_t k = 0; k < 5; ++k) out.c[k] = to_double(f.c[k]);
  return out;
}

QuarticForm<Rational> to_rational(const QuarticForm<double>& f) {
  QuarticForm<Rational> out;
  for (std::size_t k = 0; k < 5; ++k) out.c[k] = rational_from_double(f.c[k]);
  return out;
}

bool proportional(const QuarticForm<Rational>& u, const QuarticForm<Rational>& v) {
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (u.c[i] * v.c[j] != u.c[j] * v.c[i]) return false;
    }
  }
  return !u.is_zero() && !v.is_zero();
}

bool proportional(const QuarticForm<double>& u, const QuarticForm<double>& v, double tol) {
  const double scale = coefficient_norm(u) * coefficient_norm(v);
  if (scale == 0.0) return false;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (std::abs(u.c[i] * v.c[j] - u.c[j] * v.c[i]) > tol * scale) return false;
    }
  }
  return true;
}

std::string to_string(const QuarticForm<Rational>& f) {
  return format_form(f, [](const Rational& x) { return to_string(x); });
}

std::string to_string(const QuarticForm<double>& f) {
  return format_form(f, [](double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  });
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Einstein:
      return "EINSTEIN";
    case Region::AdS:
      return "ADS";
    case Region::H22:
      return "H22";
  }
  return "?";
}

Region parse_region(std::string_view text) {
  if (text == "EINSTEIN") return Region::Einstein;
  if (text == "ADS") return Region::AdS;
  if (text == "H22") return Region::H22;
  throw ParseError("unknown region '" + std::string(text) + "'");
}

Region region_of(const ProjectivePoint<Rational>& p) {
  const int s = sign(q_value(p.rep()));
  if (s == 0) return Region::Einstein;
  return s < 0 ? Region::AdS : Region::H22;
}

Region region_of(const ProjectivePoint<double>& p, double tol) {
  if (tol < 0.0) throw ContractError("tolerance must be non-negative");
  const double q = q_value(unit_normalized(p.rep()));
  if (std::abs(q) <= tol) return Region::Einstein;
  return q < 0.0 ? Region::AdS : Region::H22;
}

}  // namespace qorbit
