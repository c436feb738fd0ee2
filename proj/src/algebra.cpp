#include "hfk11/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hfk11/error.hpp"

namespace hfk11 {

bool F2Vector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

long F2Vector::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<long>(i * 64 + std::countr_zero(words_[i]));
  }
  return -1;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void F2Basis::reduce(F2Vector& v) const {
  // Each row is zero at every other row's pivot, so one pass suffices.
  for (const auto& [pivot, row] : rows_) {
    if (v.get(static_cast<std::size_t>(pivot))) v ^= row;
  }
}

bool F2Basis::insert(F2Vector v) {
  reduce(v);
  long pivot = v.lowest();
  if (pivot < 0) return false;
  for (auto& [p, row] : rows_) {
    if (row.get(static_cast<std::size_t>(pivot))) row ^= v;
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool F2Basis::contains(F2Vector v) const {
  reduce(v);
  return !v.any();
}

ChainComplex::ChainComplex(std::vector<int> names, std::vector<std::vector<int>> boundary,
                           std::optional<std::vector<int>> filtration)
    : names_(std::move(names)), boundary_(std::move(boundary)), filtration_(std::move(filtration)) {
  const int n = static_cast<int>(names_.size());
  if (static_cast<int>(boundary_.size()) != n) {
    throw Error(ErrorCode::kInvalidDiagram, "boundary table size does not match generator count");
  }
  for (auto& row : boundary_) {
    std::sort(row.begin(), row.end());
    // Keep targets of odd multiplicity.
    std::vector<int> odd;
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i;
      while (j < row.size() && row[j] == row[i]) ++j;
      if ((j - i) % 2 == 1) odd.push_back(row[i]);
      i = j;
    }
    row = std::move(odd);
    for (int t : row) {
      if (t < 0 || t >= n) throw Error(ErrorCode::kInvalidDiagram, "boundary target out of range");
    }
  }
  if (filtration_) {
    if (static_cast<int>(filtration_->size()) != n) {
      throw Error(ErrorCode::kInvalidDiagram, "filtration size does not match generator count");
    }
    for (int g = 0; g < n; ++g) {
      for (int t : boundary_[g]) {
        if ((*filtration_)[t] > (*filtration_)[g]) {
          throw Error(ErrorCode::kFiltrationViolation,
                      "entry " + std::to_string(names_[g]) + " -> " + std::to_string(names_[t]) +
                          " raises the filtration");
        }
      }
    }
  }
  for (int g = 0; g < n; ++g) {
    F2Vector dd(n);
    for (int t : boundary_[g]) {
      for (int u : boundary_[t]) dd.flip(u);
    }
    if (dd.any()) {
      throw Error(ErrorCode::kBoundarySquared,
                  "d(d(" + std::to_string(names_[g]) + ")) is nonzero at " +
                      std::to_string(names_[dd.lowest()]));
    }
  }
}

int ChainComplex::index_of(int name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

F2Vector ChainComplex::apply(const F2Vector& chain) const {
  F2Vector out(size());
  for (std::size_t g = 0; g < size(); ++g) {
    if (!chain.get(g)) continue;
    for (int t : boundary_[g]) out.flip(t);
  }
  return out;
}

std::size_t ChainComplex::boundary_rank() const {
  F2Basis image;
  for (std::size_t g = 0; g < size(); ++g) {
    F2Vector v(size());
    for (int t : boundary_[g]) v.flip(t);
    image.insert(std::move(v));
  }
  return image.rank();
}

std::map<int, int> homology_dims(const ChainComplex& c, const std::vector<int>& labels, int shift) {
  const std::size_t n = c.size();
  if (labels.size() != n) throw Error(ErrorCode::kLabelViolation, "one label per generator required");
  std::map<int, int> count;
  for (std::size_t g = 0; g < n; ++g) {
    ++count[labels[g]];
    for (int t : c.boundary(static_cast<int>(g))) {
      if (labels[t] != labels[g] + shift) {
        throw Error(ErrorCode::kLabelViolation,
                    "entry " + std::to_string(c.names()[g]) + " -> " + std::to_string(c.names()[t]) +
                        " changes the label by " + std::to_string(labels[t] - labels[g]));
      }
    }
  }
  // Rank of d restricted to each source label.
  std::map<int, F2Basis> images;
  for (std::size_t g = 0; g < n; ++g) {
    F2Vector v(n);
    for (int t : c.boundary(static_cast<int>(g))) v.flip(t);
    images[labels[g]].insert(std::move(v));
  }
  std::map<int, int> dims;
  for (auto [label, k] : count) {
    int out_rank = static_cast<int>(images[label].rank());
    auto in = images.find(label - shift);
    int in_rank = in == images.end() ? 0 : static_cast<int>(in->second.rank());
    int dim = k - out_rank - in_rank;
    if (dim != 0) dims[label] = dim;
  }
  return dims;
}

int homology_total(const ChainComplex& c) {
  return static_cast<int>(c.size()) - 2 * static_cast<int>(c.boundary_rank());
}

bool is_boundary(const std::vector<int>& cycle, const ChainComplex& c) {
  F2Vector v(c.size());
  for (int g : cycle) {
    if (g < 0 || g >= static_cast<int>(c.size())) throw Error(ErrorCode::kNotACycle, "generator out of range");
    v.flip(g);
  }
  if (c.apply(v).any()) throw Error(ErrorCode::kNotACycle, "chain has nonzero boundary");
  F2Basis image;
  for (std::size_t g = 0; g < c.size(); ++g) {
    F2Vector row(c.size());
    for (int t : c.boundary(static_cast<int>(g))) row.flip(t);
    image.insert(std::move(row));
  }
  return image.contains(std::move(v));
}

Subcomplex filtered_sublevel(const ChainComplex& c, int a) {
  if (!c.filtration()) throw Error(ErrorCode::kFiltrationViolation, "complex has no filtration");
  const auto& level = *c.filtration();
  Subcomplex sub;
  std::vector<int> position(c.size(), -1);
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (level[g] <= a) {
      position[g] = static_cast<int>(sub.embedding.size());
      sub.embedding.push_back(static_cast<int>(g));
    }
  }
  std::vector<int> names, levels;
  std::vector<std::vector<int>> boundary;
  for (int g : sub.embedding) {
    names.push_back(c.names()[g]);
    levels.push_back(level[g]);
    std::vector<int> row;
    for (int t : c.boundary(g)) row.push_back(position[t]);
    boundary.push_back(std::move(row));
  }
  sub.complex = ChainComplex(std::move(names), std::move(boundary), std::move(levels));
  return sub;
}

}  // namespace hfk11
