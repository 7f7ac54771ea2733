#pragma once

#include <functional>
#include <string>
#include <vector>

#include <qorbit/quartic.hpp>

namespace qorbit::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string computed;
  std::string expected;
};

using PolarFn = std::function<Rational(const QuarticForm<Rational>&, const QuarticForm<Rational>&)>;

struct VerifyOptions {
  /// Rational parameters for the parameterized identities; empty means the defaults 1/3, 1/2, 2, 5/7.
  std::vector<Rational> params;
  /// Bilinear form used by every q-value, Gram and orthogonality check.
  PolarFn polar = [](const QuarticForm<Rational>& u, const QuarticForm<Rational>& v) { return b_polar(u, v); };
};

/// Exact re-derivation of the closed forms, orthogonality relations,
/// signature and dimension tables, and tangency structure.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace qorbit::cli
