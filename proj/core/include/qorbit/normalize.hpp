#pragma once

#include <string_view>

#include "qorbit/group.hpp"
#include "qorbit/quartic.hpp"
#include "qorbit/roots.hpp"

namespace qorbit {

/// Canonical root positions reachable by a Moebius map.
enum class NormalTarget {
  Infinity4,         // inf^4
  ZeroInfinity3,     // 0, inf^3
  Zero2Infinity2,    // 0^2, inf^2
  ZeroOneInfinity2,  // 0, 1, inf^2
  PairIInfinity2,    // i, inf^2
  ZeroInfinityPair,  // 0, inf, z (z otherwise free)
  ZeroInfinityUnit,  // 0, inf, e^{i theta*}
  ZeroROneInfinity,  // 0, r, 1, inf with 0 < r <= 1/2, or the input if already 0 < r < 1
  PairIPairRI,       // i, r i with r > 1
  PairI2,            // i^2
};

std::string_view to_string(NormalTarget target);
NormalTarget parse_normal_target(std::string_view text);

/// The target used for classification: the most rigid one admitted by the pattern.
NormalTarget natural_target(RootPattern pattern);
/// Whether a pattern can be moved to the target.
bool admits(RootPattern pattern, NormalTarget target);

struct Normalization {
  GroupElement<double> normalizer;  // unimodular
  QuarticForm<double> form;         // act(normalizer, input)
  RootMultiset<double> roots;       // roots of form, snapped to their target positions
};

/// ContractError when the root pattern does not admit the target.
Normalization mobius_normalize(const QuarticForm<double>& f, NormalTarget target);
Normalization mobius_normalize(const QuarticForm<Rational>& f, NormalTarget target);
Normalization mobius_normalize(const QuarticForm<double>& f);
/// `roots` must be the roots of f; avoids recomputing them.
Normalization mobius_normalize(const QuarticForm<double>& f, const RootMultiset<double>& roots, NormalTarget target);
Normalization mobius_normalize(const QuarticForm<Rational>& f);

}  // namespace qorbit
