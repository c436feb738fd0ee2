#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hfk11/diagram.hpp"

namespace hfk11 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Decoder = std::function<OneOneDiagram(const RasmussenParams&)>;

/// Runs every published check on K_0..K_max_n: validity, Poincaré
/// polynomial, rank, gradings, Alexander polynomial, genus, verdicts, tau
/// (n <= 2), both K_0 differential tables and pairwise distinctness. The
/// decoder is injectable so a broken one can be shown to fail.
std::vector<CheckResult> verify_golden(int max_n, const Decoder& decoder = decode);

/// Prints one line per check; returns true when all pass.
bool print_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace hfk11
