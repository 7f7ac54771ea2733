#include "qorbit_cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "qorbit_cli/geometry_io.hpp"
#include "qorbit_cli/input.hpp"
#include "qorbit_cli/report.hpp"
#include "qorbit_cli/verify.hpp"

namespace qorbit::cli {

namespace {

struct Options {
  std::string coeffs;
  std::string roots;
  std::string mode = "exact";
  double tol = kDefaultQTolerance;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
  double radius = 1.0;
  std::string range = "-1.5:1.5";
  std::string out;
  std::string format;
  bool diagonal_check = false;
  std::string params;
};

FormInput form_from(const Options& o) {
  const bool has_coeffs = !o.coeffs.empty();
  const bool has_roots = !o.roots.empty();
  if (has_coeffs == has_roots) throw ParseError("give exactly one of --coeffs or --roots");
  const Mode mode = parse_mode(o.mode);
  return has_coeffs ? read_form(InputSource::Coefficients, o.coeffs, mode)
                    : read_form(InputSource::Roots, o.roots, mode);
}

ParamRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("range must be lo:hi, got '" + text + "'");
  const double lo = to_double(parse_rational(text.substr(0, colon)));
  const double hi = to_double(parse_rational(text.substr(colon + 1)));
  if (!(lo < hi)) throw ParseError("range needs lo < hi, got '" + text + "'");
  return {lo, hi};
}

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::string& content) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw Error("failed writing '" + path + "'");
}

int cmd_classify(const Options& o, std::ostream& out) {
  const FormInput in = form_from(o);
  if (!(o.tol > 0.0)) throw ParseError("--tol must be positive");
  ClassifyOptions options;
  options.q_tol = o.tol;
  const Json report = classification_report(in, options);
  const std::string format = o.format.empty() ? "text" : o.format;
  if (format == "json") {
    emit(o.out, out, report.dump(2) + "\n");
  } else if (format == "text") {
    out << summary_text(report);
    if (!o.out.empty()) emit(o.out, out, report.dump(2) + "\n");
  } else {
    throw ParseError("classify supports --format text or json");
  }
  return kSuccess;
}

std::vector<PointAudit> audit_cloud(const GeometrySet& g, double tol) {
  std::vector<PointAudit> audit;
  for (const auto& h : g.forms) {
    PointAudit a;
    try {
      ClassifyOptions options;
      options.q_tol = tol;
      const OrbitDescriptor d = classify(ProjectivePoint<double>(h), options);
      a.label = std::string(to_string(d.stratum));
      a.has_parameter = d.parameter.kind != InvariantKind::None;
      a.parameter = d.parameter.value;
    } catch (const BoundaryUncertain&) {
      a.label = "BOUNDARY_UNCERTAIN";
    }
    audit.push_back(a);
  }
  return audit;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (!o.seed) throw ParseError("sample requires --seed");
  if (!(o.radius > 0.0)) throw ParseError("--radius must be positive");
  if (!(o.tol > 0.0)) throw ParseError("--tol must be positive");
  const FormInput in = form_from(o);
  const std::size_t count = o.count == 0 ? 100 : o.count;
  GeometrySet g = sample_orbit(to_double(in.exact), count, *o.seed, o.radius, o.tol);
  const OrbitDescriptor seed_class = in.mode == Mode::Exact ? classify(ProjectivePoint<Rational>(in.exact))
                                                            : classify(ProjectivePoint<double>(to_double(in.exact)), ClassifyOptions{o.tol});
  g.stratum = seed_class.stratum;
  const GeometryFormat format = parse_geometry_format(o.format.empty() ? "csv" : o.format);
  if (format == GeometryFormat::Obj) throw ParseError("sample writes csv or json");
  std::ostringstream os;
  write_geometry(os, format, g, audit_cloud(g, o.tol));
  emit(o.out, out, os.str());
  return kSuccess;
}

int cmd_mesh(const Options& o, std::ostream& out) {
  const ParamRange range = parse_range(o.range);
  const std::size_t n = o.count == 0 ? kDefaultSamples : o.count;
  if (n < 2) throw ParseError("--count must be at least 2");
  const GeometryFormat format = parse_geometry_format(o.format.empty() ? "obj" : o.format);
  const std::string prefix = o.out.empty() ? "figure" : o.out;
  const GeometrySet curve = sample_curve_N(range, n);
  const GeometrySet surface = sample_surface_L(range, range, n, n);
  if (o.diagonal_check) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(surface.points[i * n + i] == curve.points[i])) {
        out << "diagonal check FAILED at sample " << i << "\n";
        return kVerificationFailed;
      }
    }
    out << "diagonal check passed: " << n << " surface points coincide with the curve\n";
  }
  auto write = [&](const std::string& name, const GeometrySet& g, const std::vector<PointAudit>& audit) {
    std::ostringstream os;
    write_geometry(os, format, g, audit);
    const std::string path = prefix + "_" + name + "." + std::string(extension(format));
    emit(path, out, os.str());
    out << "wrote " << path << "\n";
  };
  write("curve", curve, {});
  write("surface", surface, {});
  if (!o.coeffs.empty() || !o.roots.empty()) {
    if (!o.seed) throw ParseError("an orbit cloud in mesh requires --seed");
    const FormInput in = form_from(o);
    GeometrySet cloud = sample_orbit(to_double(in.exact), o.count == 0 ? 1000 : o.count, *o.seed, o.radius, o.tol);
    write("orbit", cloud, audit_cloud(cloud, o.tol));
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  if (!o.params.empty()) {
    std::string text = o.params;
    if (text.rfind("r=", 0) == 0) text = text.substr(2);
    vo.params = parse_rational_list(text);
  }
  const std::vector<CheckResult> results = run_verification(vo);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      out << ": computed " << r.computed << ", expected " << r.expected;
      ++failed;
    }
    out << "\n";
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of binary quartic forms under PSL(2,R)"};
  app.require_subcommand(1);
  Options o;

  auto add_form = [&](CLI::App* c) {
    c->add_option("--coeffs", o.coeffs, "a4,a3,a2,a1,a0 as rationals or decimals");
    c->add_option("--roots", o.roots, "four roots: rationals, inf, or a+bi (stands for the conjugate pair)");
    c->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  };
  auto* classify_cmd = app.add_subcommand("classify", "region, stratum, dimension, signature and parameter");
  add_form(classify_cmd);
  classify_cmd->add_option("--tol", o.tol, "q tolerance in float mode");
  classify_cmd->add_option("--out", o.out, "also write the JSON report here");
  classify_cmd->add_option("--format", o.format, "text or json");

  auto* sample_cmd = app.add_subcommand("sample", "random orbit point cloud in the Minkowski chart");
  add_form(sample_cmd);
  sample_cmd->add_option("--seed", o.seed, "random seed")->required();
  sample_cmd->add_option("--count", o.count, "number of group samples");
  sample_cmd->add_option("--radius", o.radius, "Lie-algebra ball radius");
  sample_cmd->add_option("--tol", o.tol, "lightcone tolerance for dropping samples");
  sample_cmd->add_option("--out", o.out, "output file (default stdout)");
  sample_cmd->add_option("--format", o.format, "csv or json");

  auto* mesh_cmd = app.add_subcommand("mesh", "quadruple-root curve and triple-root surface");
  mesh_cmd->add_option("--range", o.range, "parameter window lo:hi for u and u'");
  mesh_cmd->add_option("--count", o.count, "samples per parameter");
  mesh_cmd->add_option("--out", o.out, "output path prefix");
  mesh_cmd->add_option("--format", o.format, "obj, csv or json");
  mesh_cmd->add_flag("--diagonal-check", o.diagonal_check, "check that the surface diagonal is the curve");
  mesh_cmd->add_option("--coeffs", o.coeffs, "optional orbit seed form");
  mesh_cmd->add_option("--roots", o.roots, "optional orbit seed roots");
  mesh_cmd->add_option("--seed", o.seed, "seed for the optional orbit cloud");
  mesh_cmd->add_option("--radius", o.radius, "Lie-algebra ball radius for the orbit cloud");

  auto* verify_cmd = app.add_subcommand("verify", "re-derive the closed forms and tables");
  verify_cmd->add_option("--params", o.params, "rational parameters, e.g. r=1/3,2/5");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (sample_cmd->parsed()) return cmd_sample(o, out);
    if (mesh_cmd->parsed()) return cmd_mesh(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const BoundaryUncertain& e) {
    err << "boundary-uncertain: " << e.what() << "\n";
    return kBoundaryUncertain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace qorbit::cli
