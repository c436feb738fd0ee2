#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfk11/algebra.hpp"
#include "hfk11/diagram.hpp"
#include "hfk11/floer.hpp"
#include "hfk11/gradings.hpp"

namespace hfk11 {

/// Integer coefficients indexed by (maslov exponent, alexander exponent).
using LaurentPoly2 = std::map<std::pair<int, int>, long long>;

/// One-variable Laurent polynomial, exponent -> coefficient, no zeros stored.
using LaurentPoly = std::map<int, long long>;

/// Homology dimensions of the hat-knot complex keyed by (alexander, maslov).
using HfkTable = std::map<std::pair<int, int>, int>;

HfkTable hfk_table(const DifferentialTable& hat_knot, const Gradings& gradings);

/// Generating function sum dim * q^m t^a, keyed (m, a).
LaurentPoly2 poincare(const HfkTable& table);

/// -q^-1 + (2n+1) q^-3 t^-2 (1+q) (1+qt)^4, expanded.
LaurentPoly2 family_poincare(int n);

/// Substitutes q = -1. Throws kAsymmetricResult unless the result is
/// symmetric with value 1 at t = 1.
LaurentPoly alexander_polynomial(const LaurentPoly2& poincare);

/// Top Alexander grading carrying homology.
int seifert_genus(const HfkTable& table);

/// Minimal filtration level whose sublevel contains a cycle that is not a
/// boundary in the whole complex. Throws kInconsistentHomology when the
/// complex does not have one-dimensional homology.
int tau(const ChainComplex& filtered_hat_s3);

/// Rows "[x_k,i,i+a] -> [x_j,i-nw,i+a-nz] + ..." for k = 1..p.
std::vector<std::string> cfk_table(const DifferentialTable& full, const Gradings& gradings);

struct InvariantReport {
  std::optional<RasmussenParams> params;
  int generator_count = 0;
  HfkTable hfk;
  LaurentPoly2 poincare;
  LaurentPoly alexander;
  int seifert_genus = 0;
  int tau = 0;
  int g4_lower_bound = 0;
  bool conway_trivial = false;
  bool topologically_slice_certified = false;
  bool smoothly_slice_obstructed = false;
  /// Externally proven facts attached for family members, not computed.
  std::optional<std::string> g4_note;
};

InvariantReport slice_report(const std::optional<RasmussenParams>& params, int generator_count,
                             const HfkTable& hfk, int tau_value);

std::string format_poincare(const LaurentPoly2& poly);
std::string format_laurent(const LaurentPoly& poly);

}  // namespace hfk11
