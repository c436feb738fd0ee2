#include "hfk11/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hfk11/error.hpp"

namespace hfk11 {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace geom {

std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(LatticePoint d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

// Strict angle order of direction vectors in [0, 2 pi).
bool angle_less(LatticePoint a, LatticePoint b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

int axis_quadrant(LatticePoint d) {
  if (d.y == 0 && d.x > 0) return 0;
  if (d.x == 0 && d.y > 0) return 1;
  if (d.y == 0 && d.x < 0) return 2;
  if (d.x == 0 && d.y < 0) return 3;
  throw std::logic_error("quarter_turns: end segment is not axis-parallel");
}

}  // namespace

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint pt) {
  if (cross(a, b, pt) != 0) return false;
  return std::min(a.x, b.x) <= pt.x && pt.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= pt.y &&
         pt.y <= std::max(a.y, b.y);
}

bool segments_meet(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d) {
  int d1 = sign(cross(c, d, a));
  int d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c));
  int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(c, d, a)) || (d2 == 0 && on_segment(c, d, b)) ||
         (d3 == 0 && on_segment(a, b, c)) || (d4 == 0 && on_segment(a, b, d));
}

Wide twice_signed_area(std::span<const LatticePoint> polygon) {
  Wide acc = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& a = polygon[i];
    const LatticePoint& b = polygon[(i + 1) % n];
    acc += static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
  }
  return acc;
}

int winding_number(std::span<const LatticePoint> polygon, LatticePoint pt) {
  int wn = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& a = polygon[i];
    const LatticePoint& b = polygon[(i + 1) % n];
    if (a.y <= pt.y) {
      if (b.y > pt.y && cross(a, b, pt) > 0) ++wn;
    } else {
      if (b.y <= pt.y && cross(a, b, pt) < 0) --wn;
    }
  }
  return wn;
}

std::int64_t quarter_turns(std::span<const LatticePoint> path) {
  std::vector<LatticePoint> dirs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    LatticePoint d = path[i + 1] - path[i];
    if (d.x == 0 && d.y == 0) continue;
    dirs.push_back(d);
  }
  if (dirs.empty()) return 0;
  std::int64_t wraps = 0;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    const LatticePoint a = dirs[i], b = dirs[i + 1];
    std::int64_t turn = a.x * b.y - a.y * b.x;
    if (turn == 0) {
      if (a.x * b.x + a.y * b.y < 0) throw std::logic_error("quarter_turns: path reverses");
      continue;
    }
    if (turn > 0 && angle_less(b, a)) ++wraps;
    if (turn < 0 && angle_less(a, b)) --wraps;
  }
  return 4 * wraps + axis_quadrant(dirs.back()) - axis_quadrant(dirs.front());
}

}  // namespace geom

namespace {

// Lattice layout. With y_den = 96 (levels + 1): rainbow depth k sits at
// height k / (4 (levels + 1)), basepoints at 1 / (32 (levels + 1)) from
// alpha, through strands bend at 1/3 and 2/3.
struct Layout {
  std::int64_t y_den;
  std::int64_t arch_step;
  std::int64_t basepoint_offset;
  std::int64_t low_bend;
  std::int64_t high_bend;
};

Layout make_layout(const OneOneDiagram& d) {
  std::int64_t levels = static_cast<std::int64_t>(std::max(d.bottom_arcs().size(), d.top_arcs().size()));
  Layout l;
  l.y_den = 96 * (levels + 1);
  l.arch_step = 24;
  l.basepoint_offset = 3;
  l.low_bend = 32 * (levels + 1);
  l.high_bend = 64 * (levels + 1);
  return l;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int minimal_residue(int value, int p) {
  int r = value % p;
  if (r < 0) r += p;
  // Representative of least absolute value, ties toward positive.
  if (2 * r > p) r -= p;
  return r;
}

int forward_length(int first, int last, int p) {
  int len = last - first;
  if (len <= 0) len += p;
  return len;
}

void check_disjoint(const PlRealization& real) {
  const std::int64_t period = kXDenominator * real.p;
  struct Box {
    std::int64_t x0, x1;
  };
  std::vector<Box> boxes;
  for (const auto& arc : real.arcs) {
    Box b{arc.points.front().x, arc.points.front().x};
    for (auto pt : arc.points) {
      b.x0 = std::min(b.x0, pt.x);
      b.x1 = std::max(b.x1, pt.x);
    }
    boxes.push_back(b);
  }
  auto describe = [](const ArcPath& a) {
    std::ostringstream os;
    os << (a.kind == ArcKind::kThrough ? "through" : a.kind == ArcKind::kBottomRainbow ? "bottom" : "top")
       << " arc " << a.start_slot << "-" << a.end_slot;
    return os.str();
  };
  for (std::size_t i = 0; i < real.arcs.size(); ++i) {
    for (std::size_t j = i; j < real.arcs.size(); ++j) {
      // Translates of arc j that can reach arc i horizontally.
      std::int64_t kmin = (boxes[i].x0 - boxes[j].x1) / period - 1;
      std::int64_t kmax = (boxes[i].x1 - boxes[j].x0) / period + 1;
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        if (i == j && k == 0) continue;
        LatticePoint shift{k * period, 0};
        const auto& a = real.arcs[i].points;
        const auto& b = real.arcs[j].points;
        for (std::size_t s = 0; s + 1 < a.size(); ++s) {
          for (std::size_t t = 0; t + 1 < b.size(); ++t) {
            if (geom::segments_meet(a[s], a[s + 1], b[t] + shift, b[t + 1] + shift)) {
              throw Error(ErrorCode::kRealizationFailure,
                          describe(real.arcs[i]) + " meets a translate of " + describe(real.arcs[j]));
            }
          }
        }
      }
    }
    for (LatticePoint base : {real.z, real.w}) {
      std::int64_t kmin = (boxes[i].x0 - base.x) / period - 1;
      std::int64_t kmax = (boxes[i].x1 - base.x) / period + 1;
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        LatticePoint pt{base.x + k * period, base.y};
        const auto& a = real.arcs[i].points;
        for (std::size_t s = 0; s + 1 < a.size(); ++s) {
          if (geom::on_segment(a[s], a[s + 1], pt)) {
            throw Error(ErrorCode::kRealizationFailure, describe(real.arcs[i]) + " runs through a basepoint");
          }
        }
      }
    }
  }
}

}  // namespace

int PlRealization::arc_at(int slot, Side side) const {
  return side == Side::kBottom ? bottom_arc_of_slot.at(slot - 1) : top_arc_of_slot.at(slot - 1);
}

PlRealization realize(const OneOneDiagram& d, int drift_shift) {
  const int p = d.p();
  const Layout layout = make_layout(d);
  PlRealization real;
  real.p = p;
  real.y_den = layout.y_den;
  real.bottom_arc_of_slot.assign(p, -1);
  real.top_arc_of_slot.assign(p, -1);

  auto x_of = [](std::int64_t slot) { return kXDenominator * slot - 1; };

  for (const auto& arc : d.bottom_arcs()) {
    const std::int64_t h = layout.arch_step * arc.depth;
    const std::int64_t x0 = x_of(arc.first);
    const std::int64_t x1 = x_of(arc.first + forward_length(arc.first, arc.last, p));
    ArcPath path{ArcKind::kBottomRainbow, arc.first, Side::kBottom, arc.last, Side::kBottom,
                 {{x0, 0}, {x0, h}, {x1, h}, {x1, 0}}};
    real.bottom_arc_of_slot[arc.first - 1] = static_cast<int>(real.arcs.size());
    real.bottom_arc_of_slot[arc.last - 1] = static_cast<int>(real.arcs.size());
    real.arcs.push_back(std::move(path));
  }
  for (const auto& arc : d.top_arcs()) {
    const std::int64_t y = layout.y_den - layout.arch_step * arc.depth;
    const std::int64_t x0 = x_of(arc.first);
    const std::int64_t x1 = x_of(arc.first + forward_length(arc.first, arc.last, p));
    ArcPath path{ArcKind::kTopRainbow, arc.first, Side::kTop, arc.last, Side::kTop,
                 {{x0, layout.y_den}, {x0, y}, {x1, y}, {x1, layout.y_den}}};
    real.top_arc_of_slot[arc.first - 1] = static_cast<int>(real.arcs.size());
    real.top_arc_of_slot[arc.last - 1] = static_cast<int>(real.arcs.size());
    real.arcs.push_back(std::move(path));
  }

  // Through strands in bottom-slot order. The first takes the least drift;
  // later ones keep the top ends increasing so that no two strands cross.
  const auto& through = d.through_strands();
  std::int64_t previous_top = 0;
  for (std::size_t i = 0; i < through.size(); ++i) {
    const auto& t = through[i];
    std::int64_t lifted_top;
    if (i == 0) {
      lifted_top = t.bottom + minimal_residue(t.top - t.bottom, p) + static_cast<std::int64_t>(drift_shift) * p;
    } else {
      lifted_top = previous_top + 1;
      std::int64_t r = (t.top - lifted_top) % p;
      if (r < 0) r += p;
      lifted_top += r;
    }
    previous_top = lifted_top;
    const std::int64_t drift = lifted_top - t.bottom;
    real.drifts.push_back(static_cast<int>(drift));
    const std::int64_t xb = x_of(t.bottom), xt = x_of(lifted_top);
    Polyline pts;
    if (drift == 0) {
      pts = {{xb, 0}, {xb, layout.y_den}};
    } else {
      pts = {{xb, 0}, {xb, layout.low_bend}, {xt, layout.high_bend}, {xt, layout.y_den}};
    }
    real.bottom_arc_of_slot[t.bottom - 1] = static_cast<int>(real.arcs.size());
    real.top_arc_of_slot[t.top - 1] = static_cast<int>(real.arcs.size());
    real.arcs.push_back({ArcKind::kThrough, t.bottom, Side::kBottom, t.top, Side::kTop, std::move(pts)});
  }
  if (through.size() > 1) {
    const std::int64_t first_top = through.front().bottom + real.drifts.front();
    if (previous_top >= first_top + p) {
      throw Error(ErrorCode::kRealizationFailure, "through strands cannot be drawn without crossing");
    }
  }

  real.z = {kXDenominator * d.anchors().z_gap, layout.basepoint_offset};
  real.w = {kXDenominator * d.anchors().w_gap, layout.y_den - layout.basepoint_offset};

  check_disjoint(real);
  return real;
}

LatticePoint BetaLift::point(std::int64_t t) const {
  std::int64_t m = floor_div(t, p);
  std::int64_t k = t - m * p;
  return {at[k].x + m * period.x, at[k].y + m * period.y};
}

int BetaLift::slot(std::int64_t t) const {
  std::int64_t k = t % p;
  if (k < 0) k += p;
  return slots[k];
}

Polyline BetaLift::path(std::int64_t t_from, std::int64_t t_to) const {
  const bool forward = t_from <= t_to;
  const std::int64_t lo = std::min(t_from, t_to), hi = std::max(t_from, t_to);
  Polyline out;
  out.push_back(point(lo));
  for (std::int64_t t = lo; t < hi; ++t) {
    std::int64_t m = floor_div(t, p);
    std::int64_t k = t - m * p;
    LatticePoint shift{m * period.x, m * period.y};
    const Polyline& piece = pieces[k];
    for (std::size_t i = 1; i < piece.size(); ++i) out.push_back(piece[i] + shift);
  }
  if (!forward) std::reverse(out.begin(), out.end());
  return out;
}

BetaLift trace_beta(const PlRealization& real) {
  BetaLift lift;
  lift.p = real.p;
  lift.y_den = real.y_den;

  int slot = 1;
  Side exit_side = Side::kBottom;
  LatticePoint here = real.slot_point(1, Side::kBottom);
  const LatticePoint start = here;
  lift.slots.push_back(1);
  lift.at.push_back(here);

  for (int step = 0; step < real.p; ++step) {
    const ArcPath& arc = real.arcs[real.arc_at(slot, exit_side)];
    const bool from_start = arc.start_slot == slot && arc.start_side == exit_side;
    Polyline piece = arc.points;
    if (!from_start) std::reverse(piece.begin(), piece.end());
    const LatticePoint offset = here - piece.front();
    if (offset.x % (kXDenominator * real.p) != 0 || offset.y % real.y_den != 0) {
      throw Error(ErrorCode::kTraceFailure, "arc endpoint is not a deck translate of the slot");
    }
    for (auto& pt : piece) pt = pt + offset;
    here = piece.back();
    lift.pieces.push_back(std::move(piece));

    slot = from_start ? arc.end_slot : arc.start_slot;
    Side arrived = from_start ? arc.end_side : arc.start_side;
    exit_side = arrived == Side::kBottom ? Side::kTop : Side::kBottom;
    if (step + 1 < real.p) {
      lift.slots.push_back(slot);
      lift.at.push_back(here);
    }
  }
  if (slot != 1 || exit_side != Side::kBottom) {
    throw Error(ErrorCode::kTraceFailure, "beta did not return to slot 1 after p crossings");
  }
  lift.period = here - start;
  const std::int64_t px = kXDenominator * real.p;
  if (lift.period.x % px != 0 || (lift.period.y != real.y_den && lift.period.y != -real.y_den)) {
    throw Error(ErrorCode::kTraceFailure, "period is not (p h, +-1)");
  }
  lift.h = static_cast<int>(lift.period.x / px);
  lift.v = lift.period.y > 0 ? 1 : -1;
  return lift;
}

std::vector<LineCrossing> crossings_on_alpha(const BetaLift& lift) {
  std::vector<LineCrossing> out;
  for (int k = 0; k < lift.p; ++k) {
    // Move crossing k by m periods so that it lands on y = 0.
    const std::int64_t line = lift.at[k].y / lift.y_den;
    const std::int64_t m = -line * lift.v;
    const std::int64_t t = k + m * lift.p;
    out.push_back({t, lift.at[k].x + m * lift.period.x, lift.slots[k]});
  }
  std::sort(out.begin(), out.end(), [](const LineCrossing& a, const LineCrossing& b) { return a.t < b.t; });
  return out;
}

std::vector<LiftedStrand> lift_beta(const PlRealization& real, int window) {
  if (window < 0) throw Error(ErrorCode::kParameterRange, "window must be non-negative");
  const BetaLift lift = trace_beta(real);
  const std::int64_t px = kXDenominator * real.p;
  const std::int64_t box_x0 = -window * px, box_x1 = (window + 1) * px;
  const std::int64_t strip_lo = -window, strip_hi = window;  // strips [k, k+1] inside the box

  Polyline piece = lift.path(0, real.p);
  std::int64_t piece_lo = 0, piece_hi = 0;
  for (auto pt : piece) {
    piece_lo = std::min(piece_lo, floor_div(pt.y, real.y_den));
    piece_hi = std::max(piece_hi, floor_div(pt.y, real.y_den));
  }
  const std::int64_t span = piece_hi - piece_lo + 2;

  std::vector<std::int64_t> shifts;
  for (std::int64_t m = -(window + span); m <= window + span; ++m) {
    const LatticePoint base{m * lift.period.x, m * lift.period.y};
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      LatticePoint a = piece[i] + base, b = piece[i + 1] + base;
      // Every segment lies in a single strip between two alpha lines.
      const std::int64_t strip = floor_div(std::min(a.y, b.y), real.y_den);
      if (strip < strip_lo || strip > strip_hi) continue;
      std::int64_t x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
      // Shifts k with [x0, x1] + k px meeting [box_x0, box_x1].
      std::int64_t kmin = (box_x0 - x1) / px - 2, kmax = (box_x1 - x0) / px + 2;
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        if (x1 + k * px >= box_x0 && x0 + k * px <= box_x1) shifts.push_back(k);
      }
    }
  }
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

  std::vector<LiftedStrand> out;
  for (std::int64_t k : shifts) {
    LiftedStrand s;
    s.shift = k;
    s.period = lift.period;
    s.piece = piece;
    for (auto& pt : s.piece) pt.x += k * px;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<BasepointLift> basepoint_lifts(const PlRealization& real, int window) {
  if (window < 0) throw Error(ErrorCode::kParameterRange, "window must be non-negative");
  const std::int64_t px = kXDenominator * real.p;
  std::vector<BasepointLift> out;
  for (auto [label, base] : {std::pair{'w', real.w}, std::pair{'z', real.z}}) {
    for (std::int64_t a = -window; a <= window; ++a) {
      for (std::int64_t b = -window; b <= window; ++b) {
        out.push_back({label, {base.x + a * px, base.y + b * real.y_den}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int basepoint_multiplicity(const Polyline& polygon, LatticePoint base, const PlRealization& real) {
  std::int64_t x0 = polygon.front().x, x1 = x0, y0 = polygon.front().y, y1 = y0;
  for (auto pt : polygon) {
    x0 = std::min(x0, pt.x);
    x1 = std::max(x1, pt.x);
    y0 = std::min(y0, pt.y);
    y1 = std::max(y1, pt.y);
  }
  const std::int64_t px = kXDenominator * real.p;
  int total = 0;
  for (std::int64_t i = floor_div(x0 - base.x, px); base.x + i * px <= x1; ++i) {
    for (std::int64_t j = floor_div(y0 - base.y, real.y_den); base.y + j * real.y_den <= y1; ++j) {
      total += geom::winding_number(polygon, {base.x + i * px, base.y + j * real.y_den});
    }
  }
  return total;
}

}  // namespace hfk11
