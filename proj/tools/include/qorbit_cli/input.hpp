#pragma once

#include <string>
#include <string_view>

#include <qorbit/quartic.hpp>
#include <qorbit/roots.hpp>

namespace qorbit::cli {

enum class InputSource { Coefficients, Roots };
using qorbit::to_string;
std::string_view to_string(InputSource source);

/// A form as given on the command line; `text` is kept verbatim for the report.
struct FormInput {
  InputSource source = InputSource::Coefficients;
  std::string text;
  Mode mode = Mode::Exact;
  QuarticForm<Rational> exact;  // exact value of the input, also in float mode
};

/// "a4,a3,a2,a1,a0" with rationals or decimals. ParseError otherwise.
QuarticForm<Rational> parse_coefficients(std::string_view text);

/// Comma-separated roots: rationals, "inf", or complex "a+bi" / "bi" / "i".
/// A complex entry stands for the conjugate pair; repeats add multiplicity.
/// ParseError unless the total count is 4.
RootMultiset<Rational> parse_roots(std::string_view text);

FormInput read_form(InputSource source, std::string_view text, Mode mode);

/// Comma-separated rationals, e.g. "1/3,2/5".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace qorbit::cli
