#pragma once

#include <cstdint>
#include <vector>

#include "sftglue/graph_analysis.hpp"
#include "sftglue/sft_graph.hpp"
#include "sftglue/symbolic_point.hpp"

namespace sftglue {

enum class Side { kStable, kUnstable };

/// Local stable or unstable set of `base` at scale 2^(-N):
///   stable:   { y : y_i = x_i for all i >= -(N-1) }
///   unstable: { y : y_i = x_i for all i <=  N-1 }
struct StableWindowSpec {
  SymbolicPoint base;
  Side side = Side::kStable;
  Resolution resolution{1};
};

/// Exact membership test (the constrained half-line is compared through
/// the periodic tails).
bool stable_member(const StableWindowSpec& spec, const SymbolicPoint& y);

enum class CensusVerdict { kGrowingUncountableAtDepth, kConstantCountableAtDepth };

struct StableCensus {
  /// Number of admissible left-extensions of length `depth` of the vertex
  /// x_{-(N-1)}, i.e. of the free part of the local stable set.
  BigInt count;
  BigInt previous_count;  // same at depth - 1
  CensusVerdict verdict = CensusVerdict::kConstantCountableAtDepth;
};

/// Verdicts are statements about the given depth only. Throws InputError
/// for depth < 1 or an inadmissible point.
StableCensus stable_census(const SftGraph& g, const SymbolicPoint& x,
                           Resolution n, std::size_t depth);

/// Finite-depth approximation C_0 ⊂ C_1 ⊂ ... ⊂ C_k of a Cantor set inside
/// the local unstable set of `base`.
struct CantorApproximation {
  SymbolicPoint base;
  Resolution resolution{1};
  /// levels[j] is C_j, with |C_j| = 2^j. Elements of C_{j-1} keep their
  /// position; the new points follow in the same order as their parents.
  std::vector<std::vector<SymbolicPoint>> levels;

  /// The point added at stage j for the element at index i of C_{j-1}
  /// (1 <= j <= k).
  const SymbolicPoint& child(std::size_t j, std::size_t i) const {
    return levels[j][levels[j - 1].size() + i];
  }
};

/// Builds C_0 = {x}; at stage j every y in C_{j-1} gets a partner c_j(y)
/// that agrees with y on every coordinate up to the first branching vertex
/// of y at or beyond max(N + j, last index where two existing points first
/// differ + 1), takes the least other successor there, and closes with the
/// least shortest cycle. Hence c_j(y) agrees with y on |i| <= N + j, lies
/// in the local unstable set of x, and all points stay distinct.
/// Throws HypothesisError unless `g` is irreducible with a perfect shift
/// space.
CantorApproximation cantor_construct(const SftGraph& g, const SymbolicPoint& x,
                                     Resolution n, std::size_t depth);

struct SensitivityWitness {
  SymbolicPoint y;
  /// x_tau != y_tau, so d(sigma^tau x, sigma^tau y) = 1.
  std::int64_t tau = 0;
};

/// A point y with agreement radius >= `radius` from x whose orbit separates
/// from x's at time tau: y follows x up to the first branching vertex at
/// an index >= `radius`, then leaves. Throws HypothesisError ("no branching
/// vertex") when the shift space is not perfect or `g` is not irreducible.
SensitivityWitness sensitivity_witness(const SftGraph& g,
                                       const SymbolicPoint& x,
                                       std::int64_t radius);

}  // namespace sftglue
