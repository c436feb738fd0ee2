#include "hfk11/gradings.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>

#include "hfk11/error.hpp"

namespace hfk11 {

namespace {

ChainComplex complex_from(const DifferentialTable& table, std::optional<std::vector<int>> levels) {
  std::vector<int> names(table.p);
  std::vector<std::vector<int>> boundary(table.p);
  for (int i = 0; i < table.p; ++i) names[i] = i + 1;
  for (const auto& e : table.entries) boundary[e.from - 1].push_back(e.to - 1);
  return ChainComplex(std::move(names), std::move(boundary), std::move(levels));
}

}  // namespace

RelativeGrading domain_fallback(const PlRealization& real, int x, int y) {
  if (x < 1 || x > real.p || y < 1 || y > real.p) {
    throw Error(ErrorCode::kNoDomain, "generator out of range");
  }
  if (x == y) return {};
  const BetaLift lift = trace_beta(real);
  const std::vector<LineCrossing> cs = crossings_on_alpha(lift);
  const LineCrossing* cx = nullptr;
  const LineCrossing* cy = nullptr;
  for (const auto& c : cs) {
    if (c.slot == x) cx = &c;
    if (c.slot == y) cy = &c;
  }
  if (cx == nullptr || cy == nullptr) throw Error(ErrorCode::kNoDomain, "generator missing from the lift");

  // The loop beta x -> y, alpha y -> x bounds a domain from y to x.
  const Polyline loop = lift.path(cx->t, cy->t);
  auto corner_quarters = [&](std::int64_t cx_lattice) {
    int sum = 0;
    for (int dx : {-1, 1}) {
      for (int dy : {-1, 1}) sum += geom::winding_number(loop, {cx_lattice + dx, dy});
    }
    return sum;
  };
  const std::int64_t index_quarters =
      geom::quarter_turns(loop) + corner_quarters(cx->x) + corner_quarters(cy->x);
  if (index_quarters % 4 != 0) throw Error(ErrorCode::kNoDomain, "connecting domain has fractional index");
  const int index = static_cast<int>(index_quarters / 4);
  const int n_w = basepoint_multiplicity(loop, real.w, real);
  const int n_z = basepoint_multiplicity(loop, real.z, real);
  // A(y) - A(x) = n_z - n_w and M(y) - M(x) = index - 2 n_w.
  return {n_w - n_z, 2 * n_w - index};
}

Gradings relative_gradings(const std::vector<Bigon>& bigons, const PlRealization& real) {
  const int p = real.p;
  struct Edge {
    int to;
    RelativeGrading drop;  // grading(from) - grading(to)
  };
  std::vector<std::vector<Edge>> adj(p + 1);
  for (const auto& b : bigons) {
    RelativeGrading drop{b.n_z - b.n_w, 1 - 2 * b.n_w};
    adj[b.from].push_back({b.to, drop});
    adj[b.to].push_back({b.from, {-drop.alexander, -drop.maslov}});
  }

  std::vector<std::optional<RelativeGrading>> value(p + 1);
  auto spread = [&](int root) {
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      for (const auto& e : adj[u]) {
        RelativeGrading want{value[u]->alexander - e.drop.alexander, value[u]->maslov - e.drop.maslov};
        if (!value[e.to]) {
          value[e.to] = want;
          todo.push(e.to);
        } else if (!(*value[e.to] == want)) {
          throw Error(ErrorCode::kInconsistentSystem,
                      "bigon equations disagree at x_" + std::to_string(e.to));
        }
      }
    }
  };

  value[1] = RelativeGrading{};
  spread(1);
  bool checked_fallback = false;
  for (int g = 2; g <= p; ++g) {
    if (value[g]) continue;
    if (!checked_fallback) {
      // Trust the domain formula only once it agrees with a bigon.
      for (const auto& b : bigons) {
        RelativeGrading got = domain_fallback(real, b.from, b.to);
        if (!(got == RelativeGrading{b.n_z - b.n_w, 1 - 2 * b.n_w})) {
          throw Error(ErrorCode::kInconsistentSystem, "connecting-domain index disagrees with a bigon");
        }
        break;
      }
      checked_fallback = true;
    }
    RelativeGrading rel = domain_fallback(real, 1, g);  // grading(1) - grading(g)
    value[g] = RelativeGrading{-rel.alexander, -rel.maslov};
    spread(g);
  }

  Gradings out(p);
  for (int i = 1; i <= p; ++i) out[i - 1] = {i, value[i]->alexander, value[i]->maslov};
  return out;
}

ChainComplex hat_s3_complex(const DifferentialTable& hat_s3, const Gradings* gradings) {
  std::optional<std::vector<int>> levels;
  if (gradings != nullptr) {
    levels.emplace();
    for (const auto& g : *gradings) levels->push_back(g.alexander);
  }
  return complex_from(hat_s3, std::move(levels));
}

ChainComplex hat_knot_complex(const DifferentialTable& hat_knot) { return complex_from(hat_knot, std::nullopt); }

Gradings normalize(Gradings gens, const DifferentialTable& hat_s3) {
  const ChainComplex c = hat_s3_complex(hat_s3);
  std::vector<int> maslov;
  for (const auto& g : gens) maslov.push_back(g.maslov);
  const auto dims = homology_dims(c, maslov, -1);
  int total = 0;
  for (auto [m, k] : dims) total += k;
  if (total != 1) {
    throw Error(ErrorCode::kInconsistentHomology,
                "hat-s3 homology has dimension " + std::to_string(total) + ", expected 1");
  }
  const int maslov_shift = -dims.begin()->first;

  std::map<int, long long> chi;
  for (const auto& g : gens) chi[g.alexander] += (g.maslov + maslov_shift) % 2 == 0 ? 1 : -1;
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  if (chi.empty()) throw Error(ErrorCode::kNoSymmetricShift, "Euler characteristic vanishes");
  const int lo = chi.begin()->first, hi = chi.rbegin()->first;
  if ((lo + hi) % 2 != 0) throw Error(ErrorCode::kNoSymmetricShift, "Euler characteristic has even span");
  const int alexander_shift = -(lo + hi) / 2;
  long long at_one = 0;
  for (auto [a, k] : chi) {
    auto mirror = chi.find(-(a + alexander_shift) - alexander_shift);
    if (mirror == chi.end() || mirror->second != k) {
      throw Error(ErrorCode::kNoSymmetricShift, "Euler characteristic is not symmetric under any shift");
    }
    at_one += k;
  }
  if (at_one != 1) {
    throw Error(ErrorCode::kNonUnitAugmentation,
                "Euler characteristic at t = 1 is " + std::to_string(at_one) + ", expected 1");
  }

  for (auto& g : gens) {
    g.alexander += alexander_shift;
    g.maslov += maslov_shift;
  }
  return gens;
}

}  // namespace hfk11
