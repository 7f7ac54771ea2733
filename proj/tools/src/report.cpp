#include "qorbit_cli/report.hpp"

#include <cstdio>
#include <sstream>

#include <qorbit/signature.hpp>

namespace qorbit::cli {

namespace {

Json scalar(const Rational& x) { return to_string(x); }
Json scalar(double x) { return x; }

template <class T>
Json coefficients(const QuarticForm<T>& f) {
  Json out = Json::array();
  for (const T& x : f.c) out.push_back(scalar(x));
  return out;
}

Json roots_json(const RootMultiset<double>& rs) {
  Json out = Json::array();
  for (const auto& r : rs.entries()) {
    Json e;
    switch (r.kind) {
      case RootKind::Real:
        e["kind"] = "real";
        e["value"] = r.re;
        break;
      case RootKind::Infinity:
        e["kind"] = "infinity";
        break;
      case RootKind::ConjugatePair:
        e["kind"] = "pair";
        e["re"] = r.re;
        e["im"] = r.im;
        break;
    }
    e["multiplicity"] = r.multiplicity;
    out.push_back(e);
  }
  return out;
}

Json signature_json(const SignatureTriple& s) { return Json::array({s.n_neg, s.n_pos, s.n_rad}); }

template <class T>
Json diagnostics(const QuarticForm<T>& f, double tol = 1e-9) {
  const auto basis = orbit_tangent_basis(f);
  const DenseMatrix<T> gram = gram_matrix(std::span<const QuarticForm<T>>(basis.data(), basis.size()));
  Json d;
  Json vectors = Json::array();
  for (const auto& v : basis) vectors.push_back(coefficients(v));
  d["tangent_basis_order"] = "H,P,E";
  d["tangent_basis"] = vectors;
  Json rows = Json::array();
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < gram.cols(); ++j) row.push_back(scalar(gram(i, j)));
    rows.push_back(row);
  }
  d["tangent_gram"] = rows;
  const std::span<const QuarticForm<T>> span(basis.data(), basis.size());
  if constexpr (is_exact_v<T>) {
    d["tangent_gram_signature"] = signature_json(gram_signature(span));
  } else {
    d["tangent_gram_signature"] = signature_json(gram_signature(span, std::nullopt, tol));
  }
  return d;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json classification_report(const FormInput& input, const ClassifyOptions& options) {
  Json report;
  report["input"] = {{"source", std::string(to_string(input.source))},
                     {"text", input.text},
                     {"mode", std::string(to_string(input.mode))}};
  if (input.mode == Mode::Float) report["input"]["q_tol"] = options.q_tol;
  OrbitDescriptor d;
  Json q;
  Json form;
  Json diag;
  RootMultiset<double> roots = input.mode == Mode::Exact ? roots_of(input.exact) : roots_of(to_double(input.exact), options.root_delta);
  if (input.mode == Mode::Exact) {
    d = classify(ProjectivePoint<Rational>(input.exact));
    q = scalar(q_value(input.exact));
    form = coefficients(input.exact);
    diag = diagnostics(input.exact);
  } else {
    const QuarticForm<double> f = to_double(input.exact);
    d = classify(ProjectivePoint<double>(f), options);
    q = q_value(unit_normalized(f));
    form = coefficients(f);
    diag = diagnostics(unit_normalized(f), options.signature_tol);
  }
  report["form"] = {{"coefficients", form},
                    {"text", input.mode == Mode::Exact ? to_string(input.exact) : to_string(to_double(input.exact))}};
  report["q"] = q;
  if (input.mode == Mode::Float) report["q_note"] = "q of the unit-norm lift";
  report["region"] = std::string(to_string(d.region));
  report["stratum"] = std::string(to_string(d.stratum));
  report["root_pattern"] = std::string(to_string(d.pattern));
  report["roots"] = roots_json(roots);
  report["dim"] = d.dim;
  report["signature"] = signature_json(d.signature);
  Json param;
  param["kind"] = std::string(to_string(d.parameter.kind));
  if (d.parameter.kind != InvariantKind::None) param["value"] = d.parameter.value;
  if (d.parameter.exact) param["exact"] = to_string(*d.parameter.exact);
  report["parameter"] = param;
  report["canonical_form"] = coefficients(d.canonical_form);
  report["normalizer"] = Json::array({d.normalizer.a(), d.normalizer.b(), d.normalizer.c(), d.normalizer.d()});
  report["diagnostics"] = diag;
  return report;
}

FormInput input_from_report(const Json& report) {
  try {
    const Json& in = report.at("input");
    const std::string source = in.at("source").get<std::string>();
    InputSource src;
    if (source == "coeffs") {
      src = InputSource::Coefficients;
    } else if (source == "roots") {
      src = InputSource::Roots;
    } else {
      throw ParseError("unknown input source '" + source + "' in report");
    }
    return read_form(src, in.at("text").get<std::string>(), parse_mode(in.at("mode").get<std::string>()));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string summary_text(const Json& report) {
  std::ostringstream os;
  os << "form:      " << report["form"]["text"].get<std::string>() << "\n";
  os << "mode:      " << report["input"]["mode"].get<std::string>() << "\n";
  os << "q:         " << (report["q"].is_string() ? report["q"].get<std::string>() : format_double(report["q"].get<double>()))
     << "\n";
  os << "region:    " << report["region"].get<std::string>() << "\n";
  os << "stratum:   " << report["stratum"].get<std::string>() << "\n";
  os << "roots:     " << report["root_pattern"].get<std::string>() << "\n";
  const Json& s = report["signature"];
  os << "dim:       " << report["dim"].get<int>() << "\n";
  os << "signature: (" << s[0].get<int>() << "," << s[1].get<int>() << "," << s[2].get<int>() << ")\n";
  const Json& p = report["parameter"];
  os << "parameter: " << p["kind"].get<std::string>();
  if (p.contains("value")) os << " " << format_double(p["value"].get<double>());
  if (p.contains("exact")) os << " (" << p["exact"].get<std::string>() << ")";
  os << "\n";
  return os.str();
}

}  // namespace qorbit::cli
