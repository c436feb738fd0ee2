#pragma once

// Independent reference implementations used by the tests. They work from
// the raw pair lists only and share no code with the library.

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hfk11/diagram.hpp"

namespace oracle {

struct Traversal {
  std::vector<int> slots;  // visiting order, starting at slot 1
  int closed_length = 0;   // steps until the walk returned to slot 1's bottom end
  int upward = 0;          // through strands walked bottom -> top
  int downward = 0;
};

// Walks beta: leave slot 1 through its bottom end, follow the attached arc,
// cross to the other end of the slot reached, repeat.
inline Traversal traverse(int p, const std::vector<std::pair<int, int>>& bottom,
                          const std::vector<std::pair<int, int>>& top,
                          const std::vector<std::pair<int, int>>& through) {
  // end id: 2 * (slot - 1) for bottom, + 1 for top
  std::map<int, int> partner;
  std::map<int, int> kind;  // 0 rainbow, 1 upward through (bottom -> top)
  for (auto [a, b] : bottom) {
    partner[2 * (a - 1)] = 2 * (b - 1);
    partner[2 * (b - 1)] = 2 * (a - 1);
  }
  for (auto [a, b] : top) {
    partner[2 * (a - 1) + 1] = 2 * (b - 1) + 1;
    partner[2 * (b - 1) + 1] = 2 * (a - 1) + 1;
  }
  for (auto [b, t] : through) {
    partner[2 * (b - 1)] = 2 * (t - 1) + 1;
    partner[2 * (t - 1) + 1] = 2 * (b - 1);
    kind[2 * (b - 1)] = 1;
    kind[2 * (t - 1) + 1] = -1;
  }
  Traversal out;
  int leave = 0;  // bottom end of slot 1
  for (int step = 0; step < 4 * p + 4; ++step) {
    out.slots.push_back(leave / 2 + 1);
    if (!partner.count(leave)) return out;
    if (kind.count(leave)) (kind[leave] > 0 ? out.upward : out.downward)++;
    const int arrive = partner[leave];
    leave = arrive ^ 1;
    if (leave == 0) {
      out.closed_length = step + 1;
      return out;
    }
  }
  return out;
}

inline Traversal traverse(const hfk11::OneOneDiagram& d) {
  std::vector<std::pair<int, int>> through;
  for (const auto& t : d.through_strands()) through.emplace_back(t.bottom, t.top);
  return traverse(d.p(), d.bottom_pairs(), d.top_pairs(), through);
}

// (p, q, r, s) with u in range, s >= 0 and a valid decoded diagram.
class RandomTuples {
 public:
  explicit RandomTuples(unsigned seed, int p_max) : rng_(seed), p_max_(p_max) {}

  hfk11::RasmussenParams next() {
    for (;;) {
      const int p = std::uniform_int_distribution<int>(1, p_max_)(rng_);
      const int q = std::uniform_int_distribution<int>(0, (p - 1) / 2)(rng_);
      const int r = std::uniform_int_distribution<int>(0, p - 1)(rng_);
      const int u = std::uniform_int_distribution<int>(0, p - 2 * q - 1)(rng_);
      const int s = 2 * q - r + u;
      if (s < 0) continue;
      hfk11::RasmussenParams params{p, q, r, s, std::nullopt};
      try {
        hfk11::decode(params);
        return params;
      } catch (const std::exception&) {
      }
    }
  }

 private:
  std::mt19937 rng_;
  int p_max_;
};

}  // namespace oracle
