#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace qorbit {

/// Exact rational scalar (GMP backed, expression templates off so that the
/// same template code compiles for Rational and double).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class Mode { Exact, Float };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Mode mode = Mode::Exact;
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Mode mode = Mode::Float;
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

inline Rational abs_value(const Rational& x) { return x.sign() < 0 ? Rational(-x) : x; }
inline double abs_value(double x) { return x < 0.0 ? -x : x; }

/// "p/q", or "p" for integers.
std::string to_string(const Rational& x);

/// Accepts "p", "p/q", and decimals ("-0.125", "1e-3"); decimals are
/// converted exactly (0.1 -> 1/10).
Rational parse_rational(std::string_view text);

/// The exact rational value of a finite binary double.
Rational rational_from_double(double x);

}  // namespace qorbit
