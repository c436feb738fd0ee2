#include "hfk11/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "hfk11/error.hpp"

namespace hfk11 {

namespace {

int wrap_slot(long long m, int p) {
  long long r = (m - 1) % p;
  if (r < 0) r += p;
  return static_cast<int>(r) + 1;
}

// Number of slots strictly inside the forward cyclic interval first -> last.
int interior_length(int first, int last, int p) {
  int len = last - first;
  if (len <= 0) len += p;
  return len - 1;
}

bool strictly_inside(int slot, int first, int last, int p) {
  int offset = slot - first;
  if (offset < 0) offset += p;
  int len = last - first;
  if (len <= 0) len += p;
  return offset > 0 && offset < len;
}

bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = x;
  auto [c, d] = y;
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::string pair_text(std::pair<int, int> pr) {
  std::ostringstream os;
  os << "(" << pr.first << "," << pr.second << ")";
  return os.str();
}

std::vector<RainbowArc> place_rainbows(int p, const std::vector<std::pair<int, int>>& pairs,
                                       const std::vector<int>& through_ends,
                                       const char* side_name) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (chords_cross(pairs[i], pairs[j])) {
        throw Error(ErrorCode::kCrossingArcs, std::string(side_name) + " arcs " +
                                                  pair_text(pairs[i]) + " and " +
                                                  pair_text(pairs[j]) + " interleave");
      }
    }
  }

  std::vector<RainbowArc> arcs;
  arcs.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    auto encloses_through = [&](int first, int last) {
      return std::any_of(through_ends.begin(), through_ends.end(),
                         [&](int t) { return strictly_inside(t, first, last, p); });
    };
    RainbowArc arc;
    if (through_ends.empty()) {
      arc.first = std::min(a, b);
      arc.last = std::max(a, b);
    } else if (!encloses_through(a, b)) {
      arc.first = a;
      arc.last = b;
    } else if (!encloses_through(b, a)) {
      arc.first = b;
      arc.last = a;
    } else {
      throw Error(ErrorCode::kCrossingArcs, std::string(side_name) + " arc " +
                                                pair_text({a, b}) +
                                                " separates through strands on both sides");
    }
    arcs.push_back(arc);
  }

  // Depth: 1 + deepest arc nested strictly inside. Process by interval length.
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return interior_length(arcs[x].first, arcs[x].last, p) <
           interior_length(arcs[y].first, arcs[y].last, p);
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    RainbowArc& outer = arcs[order[k]];
    int depth = 1;
    for (std::size_t m = 0; m < k; ++m) {
      const RainbowArc& inner = arcs[order[m]];
      if (strictly_inside(inner.first, outer.first, outer.last, p)) {
        depth = std::max(depth, inner.depth + 1);
      }
    }
    outer.depth = depth;
  }

  std::sort(arcs.begin(), arcs.end(), [](const RainbowArc& x, const RainbowArc& y) {
    return std::pair(x.first, x.last) < std::pair(y.first, y.last);
  });
  return arcs;
}

int default_gap(const std::vector<RainbowArc>& arcs, int p, const char* basepoint) {
  int found = -1;
  for (const auto& arc : arcs) {
    if (arc.depth != 1) continue;
    if (found >= 0) {
      throw Error(ErrorCode::kInputFormat,
                  std::string("several innermost arcs; give the ") + basepoint + " gap explicitly");
    }
    found = arc.first % p;
  }
  return found < 0 ? 0 : found;
}

struct RawTraversal {
  std::vector<CycleStep> steps;
  bool closed = false;
};

// Follows beta from slot 1, leaving through the bottom end, until the
// starting state recurs.
RawTraversal traverse(const OneOneDiagram& d) {
  RawTraversal out;
  int slot = 1;
  Side exit_side = Side::kBottom;
  const int p = d.p();
  for (int step = 0; step <= p; ++step) {
    EndLink link = d.link(slot, exit_side);
    Side arrive;
    if (link.kind == EndLink::Kind::kRainbow) {
      arrive = exit_side;
    } else {
      arrive = exit_side == Side::kBottom ? Side::kTop : Side::kBottom;
    }
    slot = link.other_slot;
    out.steps.push_back({slot, arrive});
    exit_side = arrive == Side::kBottom ? Side::kTop : Side::kBottom;
    if (slot == 1 && exit_side == Side::kBottom) {
      out.closed = true;
      break;
    }
  }
  // Report the cycle starting at slot 1.
  if (!out.steps.empty()) {
    std::rotate(out.steps.begin(), out.steps.end() - 1, out.steps.end());
  }
  return out;
}

}  // namespace

RasmussenParams family_params(int n) {
  if (n < 0) throw Error(ErrorCode::kParameterRange, "family index must be non-negative");
  RasmussenParams params{64 * n + 31, 24 * n + 12, 16 * n + 6, 32 * n + 18, n};
  return params;
}

EndLink OneOneDiagram::link(int slot, Side side) const {
  if (slot < 1 || slot > p_) {
    throw Error(ErrorCode::kInvalidDiagram, "slot " + std::to_string(slot) + " out of range");
  }
  return side == Side::kBottom ? bottom_links_[slot - 1] : top_links_[slot - 1];
}

std::vector<std::pair<int, int>> OneOneDiagram::bottom_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : bottom_) out.emplace_back(std::min(a.first, a.last), std::max(a.first, a.last));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> OneOneDiagram::top_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : top_) out.emplace_back(std::min(a.first, a.last), std::max(a.first, a.last));
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const OneOneDiagram& a, const OneOneDiagram& b) {
  return a.p_ == b.p_ && a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.through_ == b.through_ &&
         a.anchors_ == b.anchors_;
}

OneOneDiagram assemble_matchings(int p, const std::vector<std::pair<int, int>>& bottom,
                                 const std::vector<std::pair<int, int>>& top,
                                 const std::vector<ThroughStrand>& through,
                                 std::optional<Anchors> anchors) {
  if (p < 1) throw Error(ErrorCode::kCoverage, "p must be positive");

  std::vector<int> bottom_count(p + 1, 0), top_count(p + 1, 0);
  auto in_range = [p](int s) { return s >= 1 && s <= p; };
  for (auto [a, b] : bottom) {
    if (!in_range(a) || !in_range(b) || a == b) {
      throw Error(ErrorCode::kCoverage, "bad bottom pair " + pair_text({a, b}));
    }
    ++bottom_count[a];
    ++bottom_count[b];
  }
  for (auto [a, b] : top) {
    if (!in_range(a) || !in_range(b) || a == b) {
      throw Error(ErrorCode::kCoverage, "bad top pair " + pair_text({a, b}));
    }
    ++top_count[a];
    ++top_count[b];
  }
  for (const auto& t : through) {
    if (!in_range(t.bottom) || !in_range(t.top)) {
      throw Error(ErrorCode::kCoverage, "bad through pair " + pair_text({t.bottom, t.top}));
    }
    ++bottom_count[t.bottom];
    ++top_count[t.top];
  }
  for (int s = 1; s <= p; ++s) {
    if (bottom_count[s] != 1) {
      throw Error(ErrorCode::kCoverage, "slot " + std::to_string(s) + " has " +
                                            std::to_string(bottom_count[s]) + " bottom ends");
    }
    if (top_count[s] != 1) {
      throw Error(ErrorCode::kCoverage, "slot " + std::to_string(s) + " has " +
                                            std::to_string(top_count[s]) + " top ends");
    }
  }

  std::vector<int> through_bottoms, through_tops;
  for (const auto& t : through) {
    through_bottoms.push_back(t.bottom);
    through_tops.push_back(t.top);
  }

  OneOneDiagram d;
  d.p_ = p;
  d.bottom_ = place_rainbows(p, bottom, through_bottoms, "bottom");
  d.top_ = place_rainbows(p, top, through_tops, "top");
  d.through_ = through;
  std::sort(d.through_.begin(), d.through_.end(),
            [](const ThroughStrand& x, const ThroughStrand& y) { return x.bottom < y.bottom; });

  if (anchors) {
    if (anchors->z_gap < 0 || anchors->z_gap >= p || anchors->w_gap < 0 || anchors->w_gap >= p) {
      throw Error(ErrorCode::kCoverage, "anchor gaps must lie in [0, p)");
    }
    d.anchors_ = *anchors;
  } else {
    d.anchors_.z_gap = default_gap(d.bottom_, p, "z");
    d.anchors_.w_gap = default_gap(d.top_, p, "w");
  }

  d.bottom_links_.assign(p, EndLink{});
  d.top_links_.assign(p, EndLink{});
  for (std::size_t i = 0; i < d.bottom_.size(); ++i) {
    const auto& arc = d.bottom_[i];
    int idx = static_cast<int>(i);
    d.bottom_links_[arc.first - 1] = {EndLink::Kind::kRainbow, arc.last, idx};
    d.bottom_links_[arc.last - 1] = {EndLink::Kind::kRainbow, arc.first, idx};
  }
  for (std::size_t i = 0; i < d.top_.size(); ++i) {
    const auto& arc = d.top_[i];
    int idx = static_cast<int>(i);
    d.top_links_[arc.first - 1] = {EndLink::Kind::kRainbow, arc.last, idx};
    d.top_links_[arc.last - 1] = {EndLink::Kind::kRainbow, arc.first, idx};
  }
  for (std::size_t i = 0; i < d.through_.size(); ++i) {
    const auto& t = d.through_[i];
    int idx = static_cast<int>(i);
    d.bottom_links_[t.bottom - 1] = {EndLink::Kind::kThrough, t.top, idx};
    d.top_links_[t.top - 1] = {EndLink::Kind::kThrough, t.bottom, idx};
  }
  return d;
}

OneOneDiagram from_matchings(int p, const std::vector<std::pair<int, int>>& bottom,
                             const std::vector<std::pair<int, int>>& top,
                             const std::vector<ThroughStrand>& through,
                             std::optional<Anchors> anchors) {
  OneOneDiagram d = assemble_matchings(p, bottom, top, through, anchors);
  ValidationReport report = validate(d);
  if (!report.ok) {
    std::string why;
    for (const auto& f : report.failures) why += (why.empty() ? "" : "; ") + f;
    throw Error(ErrorCode::kValidity, why);
  }
  return d;
}

OneOneDiagram decode(const RasmussenParams& params) {
  const auto [p, q, r, s, family] = params;
  if (p < 1 || q < 0 || r < 0 || s < 0) {
    throw Error(ErrorCode::kParameterRange, "parameters must be non-negative with p >= 1");
  }
  if (2 * q >= p) throw Error(ErrorCode::kParameterRange, "need 2q < p");
  if (r >= p) throw Error(ErrorCode::kParameterRange, "need r < p");
  const int u = params.twist_offset();
  const int through_count = p - 2 * q;
  if (u < 0 || u >= through_count) {
    throw Error(ErrorCode::kParameterRange,
                "twist offset u = s - (2q - r) = " + std::to_string(u) + " outside [0, " +
                    std::to_string(through_count) + ")");
  }

  std::vector<std::pair<int, int>> bottom, top;
  for (int j = 1; j <= q; ++j) {
    bottom.emplace_back(j, 2 * q + 1 - j);
    top.emplace_back(wrap_slot(r + 1 + j, p), wrap_slot(r + 2 + 2 * q - j, p));
  }
  // Top slots not used by the top rainbow, in cyclic order, starting with
  // the one immediately before the rainbow. With u = 0 the first through
  // strand (just right of the bottom rainbow) lands there.
  std::vector<int> free_tops{wrap_slot(r + 1, p)};
  for (int j = 1; j < through_count; ++j) free_tops.push_back(wrap_slot(r + 2 * q + 1 + j, p));
  std::vector<ThroughStrand> through;
  for (int k = 1; k <= through_count; ++k) {
    through.push_back({2 * q + k, free_tops[(k - 1 + u) % through_count]});
  }

  Anchors anchors;
  anchors.z_gap = q;
  anchors.w_gap = q > 0 ? wrap_slot(r + 1 + q, p) % p : 0;

  OneOneDiagram d = from_matchings(p, bottom, top, through, anchors);
  d.params_ = params;
  return d;
}

ValidationReport validate(const OneOneDiagram& d) {
  ValidationReport report;
  RawTraversal t = traverse(d);
  report.cycle_length = static_cast<int>(t.steps.size());
  for (const auto& step : t.steps) report.algebraic_intersection += step.entered == Side::kTop ? 1 : -1;
  if (!t.closed || report.cycle_length != d.p()) {
    report.failures.push_back("split-traversal: beta component through slot 1 has length " +
                              std::to_string(report.cycle_length) + ", expected " +
                              std::to_string(d.p()));
  }
  if (report.algebraic_intersection != 1 && report.algebraic_intersection != -1) {
    report.failures.push_back("intersection-not-unit: algebraic intersection " +
                              std::to_string(report.algebraic_intersection));
  }
  report.ok = report.failures.empty();
  return report;
}

std::vector<CycleStep> beta_cycle(const OneOneDiagram& d) {
  ValidationReport report = validate(d);
  if (!report.ok) throw Error(ErrorCode::kInvalidDiagram, report.failures.front());
  return traverse(d).steps;
}

}  // namespace hfk11
