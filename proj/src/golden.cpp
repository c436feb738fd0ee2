#include "hfk11/golden.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfk11::golden {

namespace {

// A run of identical 8-entry (or longer) blocks: entries start at index
// start_n * n + start_c and the block repeats reps_n * n + reps_c times.
struct Run {
  int start_n, start_c;
  int reps_n, reps_c;
  std::vector<int> block;
};

std::vector<int> expand(int n, const std::vector<Run>& runs) {
  if (n < 0) throw std::invalid_argument("family index must be non-negative");
  const int p = 64 * n + 31;
  std::vector<int> out(p + 1, 0);
  std::vector<bool> seen(p + 1, false);
  for (const auto& run : runs) {
    const int start = run.start_n * n + run.start_c;
    const int reps = run.reps_n * n + run.reps_c;
    for (int i = 0; i < reps; ++i) {
      for (std::size_t k = 0; k < run.block.size(); ++k) {
        const int idx = start + i * static_cast<int>(run.block.size()) + static_cast<int>(k);
        if (idx < 1 || idx > p || seen[idx]) throw std::logic_error("grading runs overlap");
        seen[idx] = true;
        out[idx] = run.block[k];
      }
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), false) != 0) throw std::logic_error("grading runs leave gaps");
  out.erase(out.begin());
  return out;
}

}  // namespace

std::vector<int> alexander_list(int n) {
  return expand(n, {
                       {0, 1, 1, 0, {-1, 0, 1, 0, 1, 0, -1, 0}},
                       {8, 1, 0, 1, {-1}},
                       {8, 2, 2, 1, {0, 1, 0, 1, 2, 1, 2, 1}},
                       {24, 10, 1, 0, {0, 1, 0, -1, 0, -1, 0, 1}},
                       {32, 10, 0, 1, {0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0}},
                       {32, 23, 1, 0, {-1, 0, 1, 0, 1, 0, -1, 0}},
                       {40, 23, 2, 1, {-1, -2, -1, -2, -1, 0, -1, 0}},
                       {56, 31, 0, 1, {1}},
                       {56, 32, 1, 0, {0, 1, 0, -1, 0, -1, 0, 1}},
                   });
}

std::vector<int> maslov_list(int n) {
  return expand(n, {
                       {0, 1, 1, 0, {-2, -1, 0, 0, 1, 0, -1, -1}},
                       {8, 1, 0, 1, {-2}},
                       {8, 2, 1, 1, {-1, 0, 0, 1, 2, 1, 1, 0}},
                       {16, 10, 1, 0, {-1, 1, 0, 1, 2, 0, 1, 0}},
                       {24, 10, 1, 0, {-1, 1, 0, -1, 0, -2, -1, 0}},
                       {32, 10, 0, 1, {-1, 1, 0, -1, 0, -2, -1, 0, 0, 1, 0, -1, -1}},
                       {32, 23, 1, 0, {-2, -1, 0, 0, 1, 0, -1, -1}},
                       {40, 23, 1, 0, {-2, -3, -2, -2, -1, 0, -1, -1}},
                       {48, 23, 1, 1, {-2, -3, -1, -2, -1, 0, -2, -1}},
                       // Printed under the Alexander letter; it is the Maslov entry.
                       {56, 31, 0, 1, {0}},
                       {56, 32, 1, 0, {-1, 1, 0, -1, 0, -2, -1, 0}},
                   });
}

std::vector<DifferentialEntry> k0_full_table() {
  std::vector<DifferentialEntry> out{
      {1,7,2,0}, {1,10,1,0}, {1,21,1,1}, {1,24,0,1}, {2,1,0,1}, {2,3,1,0}, {2,9,1,0}, {2,23,0,1},
      {3,7,1,1}, {3,8,1,0}, {3,21,0,2}, {3,22,0,1}, {4,7,1,0}, {4,21,0,1}, {5,4,0,1}, {5,6,1,0},
      {5,20,0,1}, {6,7,0,1}, {6,19,0,1}, {7,18,0,1}, {8,17,0,1}, {9,8,1,0}, {9,10,0,1}, {9,16,0,1},
      {10,15,0,1}, {11,14,0,1}, {12,11,1,0}, {12,13,0,1}, {13,14,1,0}, {16,15,0,1}, {16,17,1,0},
      {19,18,0,1}, {20,19,1,0}, {20,21,0,1}, {21,18,1,0}, {22,17,1,0}, {23,16,1,0}, {23,22,1,0},
      {23,24,0,1}, {24,15,1,0}, {25,14,1,0}, {26,13,1,0}, {26,25,1,0}, {27,12,1,0}, {27,26,0,1},
      {27,28,1,0}, {28,11,1,0}, {28,25,0,1}, {29,10,1,0}, {29,11,2,0}, {29,24,0,1}, {29,25,1,1},
      {30,9,1,0}, {30,23,0,1}, {30,29,0,1}, {30,31,1,0}, {31,8,1,0}, {31,11,1,1}, {31,22,0,1},
      {31,25,0,2}};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> k0_hat_s3_table() {
  std::vector<std::pair<int, int>> out{
      {1,24}, {2,1}, {2,23}, {3,21}, {3,22}, {4,21}, {5,4}, {5,20}, {6,7}, {6,19}, {7,18}, {8,17},
      {9,10}, {9,16}, {10,15}, {11,14}, {12,13}, {16,15}, {19,18}, {20,21}, {23,24}, {27,26},
      {28,25}, {29,24}, {30,23}, {30,29}, {31,22}, {31,25}};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> k0_homology_cycle() { return {3, 4, 28, 31}; }

}  // namespace hfk11::golden
