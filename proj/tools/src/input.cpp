#include "qorbit_cli/input.hpp"

#include <algorithm>
#include <cctype>

namespace qorbit::cli {

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

// Position of the sign separating real and imaginary parts, or npos.
std::size_t imaginary_split(const std::string& s) {
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') return i;
  }
  return std::string::npos;
}

Rational imaginary_coefficient(std::string text, const std::string& whole) {
  if (text.empty() || text == "+") return Rational(1);
  if (text == "-") return Rational(-1);
  if (text.back() == '*') text.pop_back();
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw ParseError("bad imaginary part in root '" + whole + "'");
  }
}

}  // namespace

std::string_view to_string(InputSource source) {
  return source == InputSource::Coefficients ? "coeffs" : "roots";
}

QuarticForm<Rational> parse_coefficients(std::string_view text) {
  const std::vector<std::string> parts = split_commas(text);
  if (parts.size() != 5) {
    throw ParseError("expected 5 comma-separated coefficients a4,a3,a2,a1,a0, got " + std::to_string(parts.size()));
  }
  QuarticForm<Rational> f;
  for (std::size_t k = 0; k < 5; ++k) f.c[k] = parse_rational(parts[k]);
  if (f.is_zero()) throw ParseError("the zero form is not a point of P(V)");
  return f;
}

RootMultiset<Rational> parse_roots(std::string_view text) {
  std::vector<Root<Rational>> entries;
  auto add = [&](Root<Rational> r) {
    for (auto& e : entries) {
      if (e.kind == r.kind && e.re == r.re && e.im == r.im) {
        ++e.multiplicity;
        return;
      }
    }
    entries.push_back(std::move(r));
  };
  for (std::string part : split_commas(text)) {
    if (part.empty()) throw ParseError("empty root entry");
    std::string lower = part;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "inf" || lower == "infinity" || lower == "+inf") {
      add(Root<Rational>::infinity());
    } else if (lower.back() == 'i') {
      const std::string body = lower.substr(0, lower.size() - 1);
      const std::size_t split = imaginary_split(body);
      Rational re(0);
      Rational im;
      if (split == std::string::npos) {
        im = imaginary_coefficient(body, part);
      } else {
        re = parse_rational(body.substr(0, split));
        im = imaginary_coefficient(body.substr(split), part);
      }
      if (im == 0) throw ParseError("root '" + part + "' has zero imaginary part");
      add(Root<Rational>::pair(re, abs_value(im)));
    } else {
      add(Root<Rational>::real(parse_rational(part)));
    }
  }
  int total = 0;
  for (const auto& e : entries) total += e.weight();
  if (total != 4) {
    throw ParseError("roots must account for 4 roots (a complex entry counts twice), got " + std::to_string(total));
  }
  return RootMultiset<Rational>(std::move(entries));
}

FormInput read_form(InputSource source, std::string_view text, Mode mode) {
  FormInput in;
  in.source = source;
  in.text = std::string(text);
  in.mode = mode;
  in.exact = source == InputSource::Coefficients ? parse_coefficients(text) : from_roots(parse_roots(text));
  return in;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const std::string& part : split_commas(text)) out.push_back(parse_rational(part));
  return out;
}

}  // namespace qorbit::cli
