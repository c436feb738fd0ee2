#include "hfk11/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "hfk11/error.hpp"

namespace hfk11 {

namespace {

std::string offset_text(int k) {
  if (k == 0) return "i";
  return k > 0 ? "i+" + std::to_string(k) : "i-" + std::to_string(-k);
}

std::string monomial(long long c, const std::string& vars, bool first) {
  std::ostringstream os;
  if (!first) os << (c < 0 ? " - " : " + ");
  else if (c < 0) os << "-";
  long long mag = c < 0 ? -c : c;
  if (vars.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag << "*";
    os << vars;
  }
  return os.str();
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

HfkTable hfk_table(const DifferentialTable& hat_knot, const Gradings& gradings) {
  const int p = hat_knot.p;
  // The hat-knot differential preserves the Alexander grading, so the
  // complex splits into one block per Alexander grading.
  for (const auto& e : hat_knot.entries) {
    if (gradings[e.from - 1].alexander != gradings[e.to - 1].alexander) {
      throw Error(ErrorCode::kLabelViolation, "hat-knot entry changes the Alexander grading");
    }
  }
  std::map<int, std::vector<int>> blocks;
  for (int i = 1; i <= p; ++i) blocks[gradings[i - 1].alexander].push_back(i);

  HfkTable table;
  for (const auto& [a, slots] : blocks) {
    std::map<int, int> local;
    for (std::size_t k = 0; k < slots.size(); ++k) local[slots[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> boundary(slots.size());
    std::vector<int> labels;
    for (int s : slots) labels.push_back(gradings[s - 1].maslov);
    for (const auto& e : hat_knot.entries) {
      auto from = local.find(e.from);
      if (from == local.end()) continue;
      boundary[from->second].push_back(local.at(e.to));
    }
    ChainComplex block(slots, std::move(boundary));
    for (auto [m, dim] : homology_dims(block, labels, -1)) table[{a, m}] = dim;
  }
  return table;
}

LaurentPoly2 poincare(const HfkTable& table) {
  LaurentPoly2 out;
  for (auto [am, dim] : table) {
    if (dim != 0) out[{am.second, am.first}] += dim;
  }
  return out;
}

LaurentPoly2 family_poincare(int n) {
  // (1 + q t)^4 = sum C(4, k) q^k t^k; times (1 + q) q^-3 t^-2.
  const long long binom[5] = {1, 4, 6, 4, 1};
  LaurentPoly2 out;
  for (int k = 0; k <= 4; ++k) {
    for (int extra = 0; extra <= 1; ++extra) {
      out[{k + extra - 3, k - 2}] += (2LL * n + 1) * binom[k];
    }
  }
  out[{-1, 0}] -= 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentPoly alexander_polynomial(const LaurentPoly2& poly) {
  LaurentPoly out;
  for (auto [ma, c] : poly) out[ma.second] += (ma.first % 2 == 0) ? c : -c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  long long at_one = 0;
  for (auto [a, c] : out) {
    auto mirror = out.find(-a);
    if (mirror == out.end() || mirror->second != c) {
      throw Error(ErrorCode::kAsymmetricResult, "Alexander polynomial is not symmetric");
    }
    at_one += c;
  }
  if (at_one != 1) {
    throw Error(ErrorCode::kAsymmetricResult, "Alexander polynomial at t = 1 is " + std::to_string(at_one));
  }
  return out;
}

int seifert_genus(const HfkTable& table) {
  int top = 0;
  for (auto [am, dim] : table) {
    if (dim != 0) top = std::max(top, am.first);
  }
  return top;
}

int tau(const ChainComplex& c) {
  if (!c.filtration()) throw Error(ErrorCode::kFiltrationViolation, "tau needs an Alexander filtration");
  if (homology_total(c) != 1) {
    throw Error(ErrorCode::kInconsistentHomology, "complex does not have one-dimensional homology");
  }
  const std::size_t n = c.size();
  F2Basis image;
  for (std::size_t g = 0; g < n; ++g) {
    F2Vector row(n);
    for (int t : c.boundary(static_cast<int>(g))) row.flip(t);
    image.insert(std::move(row));
  }

  std::vector<int> levels = *c.filtration();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (int a : levels) {
    // Cycles of the sublevel: kernel of d restricted to it. Gaussian
    // elimination on rows [d(g) | e_g] leaves the kernel in rows whose
    // boundary part reduced to zero.
    const Subcomplex sub = filtered_sublevel(c, a);
    const std::size_t m = sub.embedding.size();
    std::map<long, std::pair<F2Vector, F2Vector>> pivots;
    for (std::size_t k = 0; k < m; ++k) {
      const int g = sub.embedding[k];
      F2Vector bd(n);
      for (int t : c.boundary(g)) bd.flip(t);
      F2Vector chain(n);
      chain.flip(g);
      for (long pv = bd.lowest(); pv >= 0; pv = bd.lowest()) {
        auto it = pivots.find(pv);
        if (it == pivots.end()) break;
        bd ^= it->second.first;
        chain ^= it->second.second;
      }
      if (bd.any()) {
        long pv = bd.lowest();
        pivots.emplace(pv, std::pair(std::move(bd), std::move(chain)));
      } else if (!image.contains(chain)) {
        return a;
      }
    }
  }
  throw Error(ErrorCode::kInconsistentHomology, "no filtration level carries the homology generator");
}

std::vector<std::string> cfk_table(const DifferentialTable& full, const Gradings& gradings) {
  std::vector<std::string> rows;
  for (int k = 1; k <= full.p; ++k) {
    const int ak = gradings[k - 1].alexander;
    std::ostringstream os;
    os << "[x_" << k << "," << offset_text(0) << "," << offset_text(ak) << "] -> ";
    const auto row = full.row(k);
    if (row.empty()) os << "0";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << " + ";
      os << "[x_" << row[i].to << "," << offset_text(-row[i].n_w) << "," << offset_text(ak - row[i].n_z) << "]";
    }
    rows.push_back(os.str());
  }
  return rows;
}

InvariantReport slice_report(const std::optional<RasmussenParams>& params, int generator_count,
                             const HfkTable& hfk, int tau_value) {
  InvariantReport r;
  r.params = params;
  r.generator_count = generator_count;
  r.hfk = hfk;
  r.poincare = poincare(hfk);
  r.alexander = alexander_polynomial(r.poincare);
  r.seifert_genus = seifert_genus(hfk);
  r.tau = tau_value;
  r.g4_lower_bound = tau_value < 0 ? -tau_value : tau_value;
  r.conway_trivial = r.alexander == LaurentPoly{{0, 1}};
  r.topologically_slice_certified = r.conway_trivial;
  r.smoothly_slice_obstructed = tau_value != 0;
  if (params && params->family_index) {
    r.g4_note = "g4 = 1 for this family by an explicit genus-one cobordism (not computed here)";
  }
  return r;
}

std::string format_poincare(const LaurentPoly2& poly) {
  std::ostringstream os;
  bool first = true;
  for (auto [ma, c] : poly) {
    if (c == 0) continue;
    std::string vars = power("q", ma.first);
    std::string t = power("t", ma.second);
    if (!vars.empty() && !t.empty()) vars += "*";
    vars += t;
    os << monomial(c, vars, first);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_laurent(const LaurentPoly& poly) {
  std::ostringstream os;
  bool first = true;
  for (auto [a, c] : poly) {
    if (c == 0) continue;
    os << monomial(c, power("t", a), first);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace hfk11
