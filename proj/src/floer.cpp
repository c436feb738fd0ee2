#include "hfk11/floer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <tuple>

#include "hfk11/error.hpp"

namespace hfk11 {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Bounds {
  std::int64_t x0, x1, y0, y1;
};

Bounds bounds_of(const Polyline& poly) {
  Bounds b{poly.front().x, poly.front().x, poly.front().y, poly.front().y};
  for (auto pt : poly) {
    b.x0 = std::min(b.x0, pt.x);
    b.x1 = std::max(b.x1, pt.x);
    b.y0 = std::min(b.y0, pt.y);
    b.y1 = std::max(b.y1, pt.y);
  }
  return b;
}

int slot_of_x(std::int64_t x, int p) {
  // x = 2 slot - 1 modulo 2p.
  std::int64_t s = ((x + 1) / kXDenominator) % p;
  if (s <= 0) s += p;
  return static_cast<int>(s);
}

bool fits(const Bigon& b, int window, const PlRealization& real) {
  const std::int64_t px = kXDenominator * real.p;
  const Bounds box = bounds_of(b.witness.beta);
  return box.x0 >= -window * px && box.x1 <= (window + 1) * px && box.y0 >= -window * real.y_den &&
         box.y1 <= (window + 1) * real.y_den;
}

auto bigon_key(const Bigon& b) {
  return std::tuple(b.from, b.to, b.n_w, b.n_z, b.witness.from_x, b.witness.to_x, b.witness.beta.size());
}

// The beta subarc between two consecutive crossings with alpha, closed up
// along alpha, bounds a half-disk on one side. The multiplicity of the
// whole domain is the signed sum of these half-disks, so it is tracked per
// gap between neighbouring crossings, just above and just below the line.
class GapMultiplicities {
 public:
  explicit GapMultiplicities(const std::vector<LineCrossing>& cs) : rank_(cs.size()) {
    std::vector<std::size_t> order(cs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return cs[i].x < cs[j].x; });
    for (std::size_t r = 0; r < order.size(); ++r) rank_[order[r]] = static_cast<int>(r);
    above_.assign(cs.size() + 1, 0);
    below_.assign(cs.size() + 1, 0);
  }

  void clear() {
    std::fill(above_.begin(), above_.end(), 0);
    std::fill(below_.begin(), below_.end(), 0);
  }

  // Adds the half-disk of the piece from crossing i to crossing j.
  void add_piece(int i, int j, int side) {
    const int ri = rank_[i], rj = rank_[j];
    // Above the line the piece runs counter-clockwise when it moves left;
    // below, when it moves right.
    const int sign = (side > 0) == (rj < ri) ? 1 : -1;
    auto& row = side > 0 ? above_ : below_;
    for (int g = std::min(ri, rj) + 1; g <= std::max(ri, rj); ++g) row[g] += sign;
  }

  // Gap g lies between the crossings of rank g - 1 and g.
  int at(int gap, int side) const { return side > 0 ? above_[gap] : below_[gap]; }
  int rank(int i) const { return rank_[i]; }
  std::pair<int, int> range() const {
    auto [lo1, hi1] = std::minmax_element(above_.begin(), above_.end());
    auto [lo2, hi2] = std::minmax_element(below_.begin(), below_.end());
    return {std::min(*lo1, *lo2), std::max(*hi1, *hi2)};
  }

 private:
  std::vector<int> rank_;
  std::vector<int> above_, below_;
};

struct Candidate {
  int orientation = 0;
  std::int64_t corner_quarters = 0;  // 4 (n_x + n_y)
};

// Checks the domain bounded by beta a -> b and alpha b -> a: multiplicities
// of one sign everywhere, and convex corners. At a the corner quadrant lies
// toward b on the side beta leaves to; at b, toward a on the side beta
// arrives from.
std::optional<Candidate> classify(const GapMultiplicities& gm, int a, int b, int side_a, int side_b) {
  const auto [lowest, highest] = gm.range();
  if (lowest < 0 && highest > 0) return std::nullopt;
  if (lowest == 0 && highest == 0) return std::nullopt;
  const int orientation = highest > 0 ? 1 : -1;

  std::int64_t quarters = 0;
  for (auto [x, toward, s] : {std::tuple(a, b, side_a), std::tuple(b, a, side_b)}) {
    const int rx = gm.rank(x);
    const int dir = gm.rank(toward) > rx ? 1 : -1;
    int inside = 0, base = 0;
    bool uniform = true, first = true;
    for (int dx : {1, -1}) {
      for (int dy : {1, -1}) {
        const int m = orientation * gm.at(dx > 0 ? rx + 1 : rx, dy);
        quarters += m;
        if (dx == dir && dy == s) {
          inside = m;
        } else if (first) {
          base = m;
          first = false;
        } else if (m != base) {
          uniform = false;
        }
      }
    }
    if (!uniform || inside != base + 1) return std::nullopt;
  }
  return Candidate{orientation, quarters};
}

}  // namespace

std::string_view mode_name(DifferentialMode mode) {
  switch (mode) {
    case DifferentialMode::kHatKnot: return "hat-knot";
    case DifferentialMode::kHatS3: return "hat-s3";
    case DifferentialMode::kFull: return "full";
  }
  return "unknown";
}

std::vector<DifferentialEntry> DifferentialTable::row(int from) const {
  std::vector<DifferentialEntry> out;
  auto lo = std::lower_bound(entries.begin(), entries.end(), DifferentialEntry{from, 0, 0, 0});
  for (auto it = lo; it != entries.end() && it->from == from; ++it) out.push_back(*it);
  return out;
}

std::vector<Bigon> all_bigons(const PlRealization& real) {
  const BetaLift lift = trace_beta(real);
  const std::vector<LineCrossing> cs = crossings_on_alpha(lift);
  const std::int64_t px = kXDenominator * real.p;
  const int n = static_cast<int>(cs.size());

  // Side of alpha (+1 above, -1 below) on which beta runs between
  // consecutive crossings with the line.
  std::vector<int> side(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    Polyline piece = lift.path(cs[i].t, cs[i + 1].t);
    side[i] = piece[1].y > 0 ? 1 : -1;
  }

  std::vector<Bigon> out;
  GapMultiplicities gm(cs);
  for (int a = 0; a < n; ++a) {
    gm.clear();
    for (int b = a + 1; b < n; ++b) {
      gm.add_piece(b - 1, b, side[b - 1]);
      const std::int64_t xa = cs[a].x, xb = cs[b].x;
      auto candidate = classify(gm, a, b, side[a], side[b - 1]);
      if (!candidate) continue;

      Polyline path = lift.path(cs[a].t, cs[b].t);
      const int orientation = candidate->orientation;
      const std::int64_t euler_quarters = orientation * geom::quarter_turns(path);
      if (euler_quarters + candidate->corner_quarters != 4) continue;

      Bigon bigon;
      BigonWitness& w = bigon.witness;
      if (orientation > 0) {
        // beta a -> b then alpha b -> a: beta hands over to alpha at b.
        w.from_x = xb;
        w.to_x = xa;
        w.beta = std::move(path);
        w.beta_t_from = cs[b].t;
        w.beta_t_to = cs[a].t;
      } else {
        w.from_x = xa;
        w.to_x = xb;
        std::reverse(path.begin(), path.end());
        w.beta = std::move(path);
        w.beta_t_from = cs[a].t;
        w.beta_t_to = cs[b].t;
      }
      const std::int64_t shift = -floor_div(w.from_x, px) * px;
      w.from_x += shift;
      w.to_x += shift;
      for (auto& pt : w.beta) pt.x += shift;
      bigon.from = slot_of_x(w.from_x, real.p);
      bigon.to = slot_of_x(w.to_x, real.p);
      bigon.n_w = basepoint_multiplicity(w.beta, real.w, real);
      bigon.n_z = basepoint_multiplicity(w.beta, real.z, real);
      out.push_back(std::move(bigon));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Bigon& x, const Bigon& y) { return bigon_key(x) < bigon_key(y); });
  return out;
}

std::vector<Bigon> enumerate_bigons(const PlRealization& real, int window) {
  if (window < 2) throw Error(ErrorCode::kParameterRange, "bigon window must be at least 2");
  std::vector<Bigon> all = all_bigons(real);
  std::vector<Bigon> inside;
  std::size_t wider = 0;
  for (auto& b : all) {
    if (fits(b, window + 1, real)) ++wider;
    if (fits(b, window, real)) inside.push_back(std::move(b));
  }
  if (wider != inside.size()) {
    throw Error(ErrorCode::kWindowInstability,
                "window " + std::to_string(window) + " admits " + std::to_string(inside.size()) +
                    " bigons but window " + std::to_string(window + 1) + " admits " +
                    std::to_string(wider));
  }
  return inside;
}

bool audit_bigon(const Bigon& bigon, const PlRealization& real) {
  const BigonWitness& w = bigon.witness;
  const Polyline& beta = w.beta;
  if (beta.size() < 3 || w.from_x == w.to_x) return false;
  const LatticePoint from{w.from_x, 0}, to{w.to_x, 0};
  if (!(beta.front() == to) || !(beta.back() == from)) return false;
  if (slot_of_x(w.from_x, real.p) != bigon.from || slot_of_x(w.to_x, real.p) != bigon.to) return false;
  // Right-angle corners.
  if (beta[1].x != beta[0].x || beta[beta.size() - 2].x != beta.back().x) return false;

  // Every region of the complement of the alpha lines and the beta lifts
  // touches some alpha line next to a midpoint between two slots, so the
  // domain is positive iff the winding number is at such test points.
  const Bounds box = bounds_of(beta);
  const std::int64_t k0 = floor_div(box.y0, real.y_den), k1 = floor_div(box.y1, real.y_den) + 1;
  bool nonzero = false;
  for (std::int64_t k = k0; k <= k1; ++k) {
    for (std::int64_t x = box.x0 - box.x0 % 2 - 2; x <= box.x1 + 2; x += 2) {
      for (int dy : {1, -1}) {
        const int m = geom::winding_number(beta, {x, k * real.y_den + dy});
        if (m < 0) return false;
        nonzero = nonzero || m > 0;
      }
    }
  }
  if (!nonzero) return false;

  // Convex corners: one quadrant one deeper than the other three.
  std::int64_t quarters = geom::quarter_turns(beta);
  for (LatticePoint c : {from, to}) {
    std::vector<int> q;
    for (int dx : {1, -1}) {
      for (int dy : {1, -1}) q.push_back(geom::winding_number(beta, {c.x + dx, dy}));
    }
    std::sort(q.begin(), q.end());
    if (q[0] != q[2] || q[3] != q[0] + 1) return false;
    for (int m : q) quarters += m;
  }
  if (quarters != 4) return false;
  return basepoint_multiplicity(beta, real.w, real) == bigon.n_w && basepoint_multiplicity(beta, real.z, real) == bigon.n_z;
}

DifferentialTable differential(const std::vector<Bigon>& bigons, int p, DifferentialMode mode) {
  std::map<DifferentialEntry, int> parity;
  for (const auto& b : bigons) {
    DifferentialEntry e{b.from, b.to, b.n_w, b.n_z};
    switch (mode) {
      case DifferentialMode::kHatKnot:
        if (b.n_w != 0 || b.n_z != 0) continue;
        break;
      case DifferentialMode::kHatS3:
        if (b.n_w != 0) continue;
        e.n_z = 0;
        break;
      case DifferentialMode::kFull:
        break;
    }
    parity[e] ^= 1;
  }
  DifferentialTable table;
  table.p = p;
  table.mode = mode;
  for (const auto& [e, odd] : parity) {
    if (odd) table.entries.push_back(e);
  }
  return table;
}

std::vector<DifferentialEntry> boundary_squared(const DifferentialTable& table) {
  std::map<DifferentialEntry, int> parity;
  for (const auto& first : table.entries) {
    for (const auto& second : table.row(first.to)) {
      parity[{first.from, second.to, first.n_w + second.n_w, first.n_z + second.n_z}] ^= 1;
    }
  }
  std::vector<DifferentialEntry> out;
  for (const auto& [e, odd] : parity) {
    if (odd) out.push_back(e);
  }
  return out;
}

}  // namespace hfk11
