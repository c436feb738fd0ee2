#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfk11/diagram.hpp"
#include "hfk11/floer.hpp"
#include "hfk11/geometry.hpp"
#include "hfk11/gradings.hpp"
#include "hfk11/invariants.hpp"

namespace hfk11 {

struct AnalysisOptions {
  /// Bigon window. Without one, the smallest window of at least
  /// kDefaultWindow holding every bigon is used.
  std::optional<int> window;
  int drift_shift = 0;
};

inline constexpr int kDefaultWindow = 4;

struct Analysis {
  OneOneDiagram diagram;
  PlRealization realization;
  int window = kDefaultWindow;
  std::vector<Bigon> bigons;
  DifferentialTable hat_knot;
  DifferentialTable hat_s3;
  DifferentialTable full;
  Gradings gradings;
  InvariantReport report;
};

/// Smallest window containing the witness of every bigon.
int required_window(const std::vector<Bigon>& bigons, const PlRealization& real);

/// Runs the whole computation. Internal invariants (d∘d = 0 in every mode,
/// one-dimensional hat-s3 homology, symmetric Euler characteristic) are
/// checked and raise Error on violation.
Analysis analyze(const OneOneDiagram& d, const AnalysisOptions& options = {});

Analysis analyze(const RasmussenParams& params, const AnalysisOptions& options = {});

}  // namespace hfk11
