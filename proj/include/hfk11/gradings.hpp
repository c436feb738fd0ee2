#pragma once

#include <vector>

#include "hfk11/algebra.hpp"
#include "hfk11/floer.hpp"
#include "hfk11/geometry.hpp"

namespace hfk11 {

struct GradedGenerator {
  int index = 0;  // slot, 1-based
  int alexander = 0;
  int maslov = 0;

  friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

/// Gradings indexed by slot - 1.
using Gradings = std::vector<GradedGenerator>;

/// Difference of gradings between two generators: A(x) - A(y), M(x) - M(y).
struct RelativeGrading {
  int alexander = 0;
  int maslov = 0;

  friend bool operator==(const RelativeGrading&, const RelativeGrading&) = default;
};

/// Relative gradings of x against y from a connecting domain in the cover:
/// beta from x to y along the traced lift, closed up along alpha. The index
/// is the Euler measure plus the corner point measures.
RelativeGrading domain_fallback(const PlRealization& real, int x, int y);

/// Solves A(from) - A(to) = n_z - n_w and M(from) - M(to) = 1 - 2 n_w over
/// the bigon graph, fixing slot 1 at zero. Components not reached by bigons
/// are attached through domain_fallback. Throws kInconsistentSystem when
/// the equations disagree.
Gradings relative_gradings(const std::vector<Bigon>& bigons, const PlRealization& real);

/// Shifts Maslov so the homology of the hat-s3 complex sits in degree 0,
/// and Alexander so that the sum of (-1)^m t^a is symmetric. Throws
/// kInconsistentHomology, kNoSymmetricShift or kNonUnitAugmentation.
Gradings normalize(Gradings relative, const DifferentialTable& hat_s3);

/// The hat-s3 complex on slots 1..p, filtered by Alexander grading when
/// gradings are given.
ChainComplex hat_s3_complex(const DifferentialTable& hat_s3, const Gradings* gradings = nullptr);

/// The hat-knot complex on slots 1..p.
ChainComplex hat_knot_complex(const DifferentialTable& hat_knot);

}  // namespace hfk11
