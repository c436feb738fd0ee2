#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hfk11/diagram.hpp"

namespace hfk11 {

/// Exact rational number in lowest terms, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

/// A point of the plane on the realization lattice. Real coordinates are
/// (x / kXDenominator, y / y_den) where y_den belongs to the realization.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(LatticePoint a, LatticePoint b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(LatticePoint a, LatticePoint b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline constexpr std::int64_t kXDenominator = 2;

__extension__ using Wide = __int128;  // areas of large polygons overflow 64 bits

using Polyline = std::vector<LatticePoint>;

namespace geom {

std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b);

/// True if the closed segments share at least one point.
bool segments_meet(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d);

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint pt);

/// Twice the signed area of a closed polygon (last vertex joins the first).
Wide twice_signed_area(std::span<const LatticePoint> polygon);

/// Winding number of a closed polygon around pt; pt must not lie on it.
int winding_number(std::span<const LatticePoint> polygon, LatticePoint pt);

/// Net turning of a polyline in quarter turns, excluding its two ends.
/// Each bend must be strictly less than a half turn. Direction angles are
/// compared exactly, so the result is exact when the first and last
/// segments are axis-parallel.
std::int64_t quarter_turns(std::span<const LatticePoint> path);

}  // namespace geom

enum class ArcKind { kBottomRainbow, kTopRainbow, kThrough };

/// One beta arc inside the cut annulus, drawn in cover coordinates. Its
/// start point is the start slot's end inside the fundamental rectangle
/// [0, p] x [0, 1]; the far end may fall outside it horizontally.
struct ArcPath {
  ArcKind kind = ArcKind::kThrough;
  int start_slot = 0;
  Side start_side = Side::kBottom;
  int end_slot = 0;
  Side end_side = Side::kTop;
  Polyline points;
};

/// Exact piecewise-linear model of a diagram.
///
/// Alpha is the line y = 0. The torus is the plane modulo the deck vectors
/// (p, 0) and (0, 1). Slot i sits at x = i - 1/2. Bottom rainbows stay in
/// 0 < y <= 1/4, top rainbows in 3/4 <= y < 1, and through strands rise
/// vertically to y = 1/3, run straight to y = 2/3 and rise vertically again.
struct PlRealization {
  int p = 0;
  std::int64_t y_den = 1;
  std::vector<ArcPath> arcs;
  LatticePoint z;
  LatticePoint w;
  /// Horizontal drift (in slots) of each through strand, in bottom-slot order.
  std::vector<int> drifts;

  LatticePoint deck_x() const { return {kXDenominator * p, 0}; }
  LatticePoint deck_y() const { return {0, y_den}; }
  LatticePoint slot_point(int slot, Side side) const {
    return {kXDenominator * slot - 1, side == Side::kBottom ? 0 : y_den};
  }
  Rational real_x(std::int64_t x) const { return Rational::make(x, kXDenominator); }
  Rational real_y(std::int64_t y) const { return Rational::make(y, y_den); }

  /// Index of the arc attached to the given slot end.
  int arc_at(int slot, Side side) const;

  std::vector<int> bottom_arc_of_slot;  // indexed by slot - 1
  std::vector<int> top_arc_of_slot;
};

/// Builds the realization. `drift_shift` adds drift_shift * p to every
/// through strand, a twist in the middle of the annulus that leaves the
/// knot unchanged. Throws kRealizationFailure if two arcs meet.
PlRealization realize(const OneOneDiagram& d, int drift_shift = 0);

/// One period of a lift of beta to the plane.
struct BetaLift {
  int p = 0;
  std::int64_t y_den = 1;
  LatticePoint period;            // (p*h, v) in lattice units, v = +-1
  int h = 0;
  int v = 0;
  std::vector<int> slots;          // slot of crossing k, traversal order
  std::vector<LatticePoint> at;    // crossing k in the plane; at[0] is slot 1 on y = 0
  std::vector<Polyline> pieces;    // pieces[k] runs from crossing k to crossing k + 1

  /// Crossing with global parameter t (t = k + m p is crossing k moved by m periods).
  LatticePoint point(std::int64_t t) const;
  int slot(std::int64_t t) const;

  /// The beta path between two crossing parameters, in travel order.
  Polyline path(std::int64_t t_from, std::int64_t t_to) const;
};

/// Traces beta from slot 1 through one full period. Throws kTraceFailure if
/// the path does not close up to a deck translate.
BetaLift trace_beta(const PlRealization& real);

/// A crossing of this lift with the alpha line y = 0.
struct LineCrossing {
  std::int64_t t = 0;   // parameter along the lift
  std::int64_t x = 0;   // lattice x on y = 0
  int slot = 0;
};

/// The p crossings of the traced lift with y = 0, sorted by parameter.
std::vector<LineCrossing> crossings_on_alpha(const BetaLift& lift);

struct LiftedStrand {
  std::int64_t shift = 0;  // the strand is the traced lift moved by shift * (p, 0)
  LatticePoint period;
  Polyline piece;          // one period, starting at the shifted slot-1 crossing
};

/// All lifts of beta meeting the box [-W p, (W+1) p] x [-W, W+1].
std::vector<LiftedStrand> lift_beta(const PlRealization& real, int window);

struct BasepointLift {
  char label = 'z';
  LatticePoint at;

  friend bool operator<(const BasepointLift& a, const BasepointLift& b) {
    return a.label != b.label ? a.label < b.label : a.at < b.at;
  }
  friend bool operator==(const BasepointLift& a, const BasepointLift& b) {
    return a.label == b.label && a.at == b.at;
  }
};

/// Deck translates of z and w in the half-open box
/// [-W p, (W+1) p) x [-W, W+1), sorted.
std::vector<BasepointLift> basepoint_lifts(const PlRealization& real, int window);

/// Sum over the deck translates of a basepoint of the winding number of the
/// closed polygon around them: the basepoint's multiplicity in the domain.
int basepoint_multiplicity(const Polyline& polygon, LatticePoint base, const PlRealization& real);

}  // namespace hfk11
