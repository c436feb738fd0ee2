#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hfk11 {

/// Four-integer description K(p, q, r, s) of a (1,1)-diagram.
///
/// p is the number of intersection points of alpha and beta, q the size of
/// each rainbow, r the position of the top rainbow and s the twist. The
/// decoder supports u = s - (2q - r) in [0, p - 2q).
struct RasmussenParams {
  int p = 1;
  int q = 0;
  int r = 0;
  int s = 0;
  std::optional<int> family_index;

  int twist_offset() const { return s - (2 * q - r); }

  friend bool operator==(const RasmussenParams& a, const RasmussenParams& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
  }
};

/// K(64n+31, 24n+12, 16n+6, 32n+18).
RasmussenParams family_params(int n);

enum class Side { kBottom, kTop };

/// A rainbow arc on one side of the cut annulus. It hugs alpha over the
/// cyclic slot interval first, first+1, ..., last (indices mod p, 1-based).
struct RainbowArc {
  int first = 0;
  int last = 0;
  int depth = 1;  // 1 for an innermost arc

  friend bool operator==(const RainbowArc& a, const RainbowArc& b) {
    return a.first == b.first && a.last == b.last;
  }
};

struct ThroughStrand {
  int bottom = 0;
  int top = 0;

  friend bool operator==(const ThroughStrand& a, const ThroughStrand& b) {
    return a.bottom == b.bottom && a.top == b.top;
  }
};

/// Basepoint positions as gaps along alpha. Gap g sits between slot g and
/// slot g + 1; gap 0 is the seam between slot p and slot 1. z lies just
/// above alpha (bottom side of the annulus), w just below it (top side).
struct Anchors {
  int z_gap = 0;
  int w_gap = 0;

  friend bool operator==(const Anchors& a, const Anchors& b) {
    return a.z_gap == b.z_gap && a.w_gap == b.w_gap;
  }
};

/// What a slot end is attached to.
struct EndLink {
  enum class Kind { kRainbow, kThrough };
  Kind kind = Kind::kRainbow;
  int other_slot = 0;   // slot at the far end of the arc
  int arc_index = -1;   // index into the rainbow list of that side, or the through list
};

/// A combinatorial doubly-pointed genus-1 diagram. Immutable after
/// construction; construct through decode(), from_matchings() or
/// assemble_matchings().
class OneOneDiagram {
 public:
  int p() const { return p_; }
  const std::vector<RainbowArc>& bottom_arcs() const { return bottom_; }
  const std::vector<RainbowArc>& top_arcs() const { return top_; }
  const std::vector<ThroughStrand>& through_strands() const { return through_; }
  const Anchors& anchors() const { return anchors_; }
  const std::optional<RasmussenParams>& params() const { return params_; }

  EndLink link(int slot, Side side) const;

  /// Unordered pairs in the form (min, max), sorted.
  std::vector<std::pair<int, int>> bottom_pairs() const;
  std::vector<std::pair<int, int>> top_pairs() const;

  /// Equality of the combinatorial data; the parameter label is ignored.
  friend bool operator==(const OneOneDiagram& a, const OneOneDiagram& b);

 private:
  friend OneOneDiagram assemble_matchings(int, const std::vector<std::pair<int, int>>&,
                                          const std::vector<std::pair<int, int>>&,
                                          const std::vector<ThroughStrand>&,
                                          std::optional<Anchors>);
  friend OneOneDiagram decode(const RasmussenParams&);

  int p_ = 0;
  std::vector<RainbowArc> bottom_;
  std::vector<RainbowArc> top_;
  std::vector<ThroughStrand> through_;
  Anchors anchors_;
  std::optional<RasmussenParams> params_;
  std::vector<EndLink> bottom_links_;  // indexed by slot - 1
  std::vector<EndLink> top_links_;
};

struct ValidationReport {
  bool ok = false;
  int cycle_length = 0;
  int algebraic_intersection = 0;
  std::vector<std::string> failures;
};

struct CycleStep {
  int slot = 0;
  Side entered = Side::kBottom;

  friend bool operator==(const CycleStep& a, const CycleStep& b) {
    return a.slot == b.slot && a.entered == b.entered;
  }
};

/// Decodes Rasmussen parameters. Throws kParameterRange outside the
/// supported range and kValidity if the result is not a (1,1)-diagram.
OneOneDiagram decode(const RasmussenParams& params);

/// Builds a diagram from explicit matchings, checking coverage and that no
/// two arcs cross, but not the traversal. Without explicit anchors, z and w
/// go under the unique innermost arc of their side (gap 0 if the side has
/// no arcs).
OneOneDiagram assemble_matchings(int p, const std::vector<std::pair<int, int>>& bottom,
                                 const std::vector<std::pair<int, int>>& top,
                                 const std::vector<ThroughStrand>& through,
                                 std::optional<Anchors> anchors = std::nullopt);

/// assemble_matchings() followed by validate(); throws kValidity on failure.
OneOneDiagram from_matchings(int p, const std::vector<std::pair<int, int>>& bottom,
                             const std::vector<std::pair<int, int>>& top,
                             const std::vector<ThroughStrand>& through,
                             std::optional<Anchors> anchors = std::nullopt);

ValidationReport validate(const OneOneDiagram& d);

/// Generators in the order beta visits them, starting at slot 1 and leaving
/// it through its bottom end. Throws kInvalidDiagram unless d validates.
std::vector<CycleStep> beta_cycle(const OneOneDiagram& d);

}  // namespace hfk11
