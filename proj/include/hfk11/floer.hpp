#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hfk11/geometry.hpp"

namespace hfk11 {

/// Exhibits a bigon in the plane: the alpha segment on y = 0 from the FROM
/// corner to the TO corner, and the beta path from the TO corner back to the
/// FROM corner. Together they bound the domain counter-clockwise.
struct BigonWitness {
  std::int64_t from_x = 0;
  std::int64_t to_x = 0;
  Polyline beta;           // starts at (to_x, 0), ends at (from_x, 0)
  std::int64_t beta_t_from = 0;  // lift parameters of the two corners
  std::int64_t beta_t_to = 0;

  /// The boundary as a closed polygon: the beta path, closed by the alpha
  /// edge from FROM back to TO.
  const Polyline& polygon() const { return beta; }
};

/// A Maslov index one Whitney disk: a possibly immersed bigon with convex
/// corners and nonnegative multiplicities.
struct Bigon {
  int from = 0;
  int to = 0;
  int n_w = 0;
  int n_z = 0;
  BigonWitness witness;
};

enum class DifferentialMode { kHatKnot, kHatS3, kFull };

std::string_view mode_name(DifferentialMode mode);

struct DifferentialEntry {
  int from = 0;
  int to = 0;
  int n_w = 0;  // meaningful in full mode only; hat modes aggregate to zero
  int n_z = 0;

  friend bool operator==(const DifferentialEntry&, const DifferentialEntry&) = default;
  friend auto operator<=>(const DifferentialEntry&, const DifferentialEntry&) = default;
};

/// Boundary map over the two-element field. Entries are sorted; each one
/// has odd multiplicity among the counted bigons.
struct DifferentialTable {
  int p = 0;
  DifferentialMode mode = DifferentialMode::kFull;
  std::vector<DifferentialEntry> entries;

  std::vector<DifferentialEntry> row(int from) const;
};

/// Every bigon between alpha and the traced beta lift, one per
/// deck class, with no window restriction. Sorted canonically.
std::vector<Bigon> all_bigons(const PlRealization& real);

/// Bigons whose witness, with the FROM corner moved into [0, p), fits in the
/// box [-W p, (W+1) p] x [-W, W+1]. Throws kWindowInstability if window+1
/// would admit more.
std::vector<Bigon> enumerate_bigons(const PlRealization& real, int window = 4);

/// Independent re-check of a witness from winding numbers alone: positive
/// multiplicities, convex corners, Maslov index one and the basepoint counts.
bool audit_bigon(const Bigon& bigon, const PlRealization& real);

DifferentialTable differential(const std::vector<Bigon>& bigons, int p, DifferentialMode mode);

/// Entries of d∘d with odd count. For full mode the weights add.
std::vector<DifferentialEntry> boundary_squared(const DifferentialTable& table);

}  // namespace hfk11
