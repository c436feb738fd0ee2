#pragma once

#include <string>
#include <vector>

#include "hfk11/diagram.hpp"

namespace hfk11 {

inline constexpr int kScanCeiling = 64;

/// Parameter tuples (p, q, r, s) with p <= p_max, 2q < p, 0 <= r < p, s >= 0
/// and u = s - (2q - r) in [0, p - 2q), in lexicographic order.
std::vector<RasmussenParams> scan_tuples(int p_max);

/// One compact JSON line per tuple that decodes to a valid diagram, in
/// lexicographic order whatever the thread count. Rows with trivial Conway
/// polynomial and nonzero tau carry "flagged": true. Throws
/// kParameterRange above kScanCeiling.
std::vector<std::string> scan(int p_max, unsigned threads = 0);

}  // namespace hfk11
