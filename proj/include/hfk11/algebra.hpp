#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hfk11 {

/// A vector over the two-element field, bit-packed.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(std::size_t i) {
    if (!get(i)) flip(i);
  }
  bool any() const;
  /// Index of the lowest set bit, or -1.
  long lowest() const;
  F2Vector& operator^=(const F2Vector& other);
  friend bool operator==(const F2Vector&, const F2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental row-echelon basis of a subspace.
class F2Basis {
 public:
  /// Reduces v against the basis; returns true and keeps it if independent.
  bool insert(F2Vector v);
  bool contains(F2Vector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(F2Vector& v) const;
  std::map<long, F2Vector> rows_;  // keyed by pivot
};

/// A finitely generated chain complex over the two-element field.
///
/// Generators are 0..size-1; `names` records what each one stands for (a
/// slot number for complexes built from a diagram). The optional filtration
/// must not increase along the boundary.
class ChainComplex {
 public:
  ChainComplex() = default;

  /// Builds and checks the complex. Throws kBoundarySquared if d∘d != 0 and
  /// kFiltrationViolation if an entry raises the filtration level.
  ChainComplex(std::vector<int> names, std::vector<std::vector<int>> boundary,
               std::optional<std::vector<int>> filtration = std::nullopt);

  std::size_t size() const { return names_.size(); }
  const std::vector<int>& names() const { return names_; }
  /// Targets of d(g), sorted, each with odd multiplicity.
  const std::vector<int>& boundary(int g) const { return boundary_[g]; }
  const std::optional<std::vector<int>>& filtration() const { return filtration_; }
  /// Generator with the given name, or -1.
  int index_of(int name) const;

  F2Vector apply(const F2Vector& chain) const;
  std::size_t boundary_rank() const;

 private:
  std::vector<int> names_;
  std::vector<std::vector<int>> boundary_;
  std::optional<std::vector<int>> filtration_;
};

/// Homology dimension per label. Every boundary entry must change the label
/// by exactly `shift` (kLabelViolation otherwise).
std::map<int, int> homology_dims(const ChainComplex& c, const std::vector<int>& labels, int shift = -1);

/// Total homology dimension.
int homology_total(const ChainComplex& c);

/// True iff the chain (a set of generator indices) is a boundary. Throws
/// kNotACycle if it is not a cycle.
bool is_boundary(const std::vector<int>& cycle, const ChainComplex& c);

/// A subcomplex together with where its generators sit in the parent.
struct Subcomplex {
  ChainComplex complex;
  std::vector<int> embedding;  // generator of the subcomplex -> generator of the parent
};

/// Generators of filtration level at most a. Requires a filtration.
Subcomplex filtered_sublevel(const ChainComplex& c, int a);

}  // namespace hfk11
