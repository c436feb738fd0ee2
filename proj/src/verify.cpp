#include "hfk11/verify.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "hfk11/error.hpp"
#include "hfk11/golden.hpp"
#include "hfk11/pipeline.hpp"

namespace hfk11 {

namespace {

class Checker {
 public:
  template <typename F>
  void run(std::string name, F&& body) {
    CheckResult r{std::move(name), false, ""};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

template <typename T>
std::string first_mismatch(const std::vector<T>& got, const std::vector<T>& want) {
  if (got.size() != want.size()) {
    return "length " + std::to_string(got.size()) + ", expected " + std::to_string(want.size());
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!(got[i] == want[i])) return "first difference at index " + std::to_string(i + 1);
  }
  return "";
}

std::string label(int n, const char* what) { return "K_" + std::to_string(n) + " " + what; }

}  // namespace

std::vector<CheckResult> verify_golden(int max_n, const Decoder& decoder) {
  Checker c;
  std::map<int, Analysis> done;
  for (int n = 0; n <= max_n; ++n) {
    const RasmussenParams params = family_params(n);
    std::optional<Analysis> a;
    c.run(label(n, "diagram is a single cycle with intersection +1"), [&]() -> std::string {
      const OneOneDiagram d = decoder(params);
      const ValidationReport v = validate(d);
      a = analyze(d);
      if (!v.ok || v.cycle_length != params.p || v.algebraic_intersection != 1) return "validation failed";
      return "";
    });
    if (!a) continue;
    const InvariantReport& r = a->report;
    c.run(label(n, "Poincare polynomial"), [&]() -> std::string {
      return r.poincare == family_poincare(n) ? "" : "got " + format_poincare(r.poincare);
    });
    c.run(label(n, "total rank and zero hat-knot differential"), [&]() -> std::string {
      int total = 0;
      for (auto [am, dim] : r.hfk) total += dim;
      if (total != 64 * n + 31) return "total rank " + std::to_string(total);
      if (!a->hat_knot.entries.empty()) return "hat-knot differential is nonzero";
      return "";
    });
    c.run(label(n, "Alexander gradings"), [&]() -> std::string {
      std::vector<int> got;
      for (const auto& g : a->gradings) got.push_back(g.alexander);
      return first_mismatch(got, golden::alexander_list(n));
    });
    c.run(label(n, "Maslov gradings"), [&]() -> std::string {
      std::vector<int> got;
      for (const auto& g : a->gradings) got.push_back(g.maslov);
      return first_mismatch(got, golden::maslov_list(n));
    });
    c.run(label(n, "Alexander polynomial is 1"), [&]() -> std::string {
      return r.alexander == LaurentPoly{{0, 1}} ? "" : "got " + format_laurent(r.alexander);
    });
    c.run(label(n, "Seifert genus 2"), [&]() -> std::string {
      return r.seifert_genus == 2 ? "" : "got " + std::to_string(r.seifert_genus);
    });
    if (n <= 2) {
      c.run(label(n, "tau = 1"), [&]() -> std::string {
        return r.tau == 1 ? "" : "got " + std::to_string(r.tau);
      });
    }
    c.run(label(n, "slice verdicts"), [&]() -> std::string {
      if (!r.topologically_slice_certified) return "not certified topologically slice";
      if (!r.smoothly_slice_obstructed) return "not obstructed smoothly";
      if (r.g4_lower_bound != 1) return "g4 bound " + std::to_string(r.g4_lower_bound);
      return "";
    });
    if (n == 0) {
      c.run("K_0 full differential table", [&]() -> std::string {
        return first_mismatch(a->full.entries, golden::k0_full_table());
      });
      c.run("K_0 hat-s3 differential table", [&]() -> std::string {
        std::vector<std::pair<int, int>> got;
        for (const auto& e : a->hat_s3.entries) got.emplace_back(e.from, e.to);
        return first_mismatch(got, golden::k0_hat_s3_table());
      });
      c.run("K_0 hat-s3 homology cycle survives", [&]() -> std::string {
        const ChainComplex cx = hat_s3_complex(a->hat_s3);
        std::vector<int> cycle;
        for (int s : golden::k0_homology_cycle()) cycle.push_back(s - 1);
        return is_boundary(cycle, cx) ? "cycle is a boundary" : "";
      });
    }
    done.emplace(n, std::move(*a));
  }
  if (max_n >= 1) {
    c.run("Poincare polynomials pairwise distinct", [&]() -> std::string {
      for (auto i = done.begin(); i != done.end(); ++i) {
        for (auto j = std::next(i); j != done.end(); ++j) {
          if (i->second.report.poincare == j->second.report.poincare) {
            return "K_" + std::to_string(i->first) + " and K_" + std::to_string(j->first) + " agree";
          }
        }
      }
      return "";
    });
  }
  return c.results;
}

bool print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  bool all = true;
  for (const auto& r : checks) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.passed) out << "  (" << r.detail << ")";
    out << "\n";
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "some checks failed") << " (" << checks.size() << " checks)\n";
  return all;
}

}  // namespace hfk11
