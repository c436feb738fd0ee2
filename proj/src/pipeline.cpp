#include "hfk11/pipeline.hpp"

#include <algorithm>

#include "hfk11/error.hpp"

namespace hfk11 {

namespace {

void require_square_zero(const DifferentialTable& table) {
  const auto bad = boundary_squared(table);
  if (!bad.empty()) {
    throw Error(ErrorCode::kBoundarySquared, std::string("d∘d != 0 in ") + std::string(mode_name(table.mode)) +
                                                 " mode, from x_" + std::to_string(bad.front().from) +
                                                 " to x_" + std::to_string(bad.front().to));
  }
}

}  // namespace

int required_window(const std::vector<Bigon>& bigons, const PlRealization& real) {
  const std::int64_t px = kXDenominator * real.p;
  int need = 0;
  auto cells_below = [](std::int64_t lo, std::int64_t unit) {
    // Smallest W >= 0 with lo >= -W unit.
    return lo >= 0 ? 0 : static_cast<int>((-lo + unit - 1) / unit);
  };
  auto cells_above = [](std::int64_t hi, std::int64_t unit) {
    // Smallest W >= 0 with hi <= (W + 1) unit.
    return hi <= unit ? 0 : static_cast<int>((hi - 1) / unit);
  };
  for (const auto& b : bigons) {
    for (auto pt : b.witness.beta) {
      need = std::max({need, cells_below(pt.x, px), cells_above(pt.x, px), cells_below(pt.y, real.y_den),
                       cells_above(pt.y, real.y_den)});
    }
  }
  return need;
}

Analysis analyze(const OneOneDiagram& d, const AnalysisOptions& options) {
  Analysis a;
  a.diagram = d;
  a.realization = realize(d, options.drift_shift);
  if (options.window) {
    a.window = *options.window;
  } else {
    a.window = std::max(kDefaultWindow, required_window(all_bigons(a.realization), a.realization));
  }
  a.bigons = enumerate_bigons(a.realization, a.window);

  a.hat_knot = differential(a.bigons, d.p(), DifferentialMode::kHatKnot);
  a.hat_s3 = differential(a.bigons, d.p(), DifferentialMode::kHatS3);
  a.full = differential(a.bigons, d.p(), DifferentialMode::kFull);
  require_square_zero(a.hat_knot);
  require_square_zero(a.hat_s3);
  require_square_zero(a.full);

  a.gradings = normalize(relative_gradings(a.bigons, a.realization), a.hat_s3);
  for (const auto& b : a.bigons) {
    const auto& from = a.gradings[b.from - 1];
    const auto& to = a.gradings[b.to - 1];
    if (from.alexander - to.alexander != b.n_z - b.n_w || from.maslov - to.maslov != 1 - 2 * b.n_w) {
      throw Error(ErrorCode::kInconsistentSystem, "bigon x_" + std::to_string(b.from) + " -> x_" +
                                                      std::to_string(b.to) + " violates the grading equations");
    }
  }

  const ChainComplex filtered = hat_s3_complex(a.hat_s3, &a.gradings);
  const int tau_value = tau(filtered);
  a.report = slice_report(d.params(), d.p(), hfk_table(a.hat_knot, a.gradings), tau_value);
  return a;
}

Analysis analyze(const RasmussenParams& params, const AnalysisOptions& options) {
  return analyze(decode(params), options);
}

}  // namespace hfk11
