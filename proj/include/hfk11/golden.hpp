#pragma once

#include <utility>
#include <vector>

#include "hfk11/floer.hpp"

namespace hfk11::golden {

/// Published absolute Alexander gradings a_1..a_p of K_n, p = 64n + 31.
std::vector<int> alexander_list(int n);

/// Published absolute Maslov gradings m_1..m_p of K_n.
std::vector<int> maslov_list(int n);

/// The full differential of K_0 read mod 2, with (n_w, n_z) taken from the
/// drops of the two filtration coordinates. Sorted.
std::vector<DifferentialEntry> k0_full_table();

/// The hat differential of K_0 on the 3-sphere, as (from, to). Sorted.
std::vector<std::pair<int, int>> k0_hat_s3_table();

/// The cycle generating hat-s3 homology of K_0.
std::vector<int> k0_homology_cycle();

}  // namespace hfk11::golden
