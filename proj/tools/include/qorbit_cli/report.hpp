#pragma once

#include <string>

#include <json.hpp>
#include <qorbit/classifier.hpp>

#include "qorbit_cli/input.hpp"

namespace qorbit::cli {

using Json = nlohmann::ordered_json;

/// Classification report: input echo, descriptor, q, roots and tangent
/// diagnostics. Exact-mode rationals are "p/q" strings.
/// Float mode classifies with `options`; the q tolerance is echoed in the input.
Json classification_report(const FormInput& input, const ClassifyOptions& options = {});

/// The input recorded in a report.
FormInput input_from_report(const Json& report);

/// Short multi-line text for terminals.
std::string summary_text(const Json& report);

/// "%.17g"; the shortest form that round-trips is not needed, only determinism.
std::string format_double(double x);

}  // namespace qorbit::cli
