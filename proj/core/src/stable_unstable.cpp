#include "sftglue/stable_unstable.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "sftglue/error.hpp"

namespace sftglue {
namespace {

struct Branch {
  SymbolicPoint point;
  std::int64_t index;  // last coordinate shared with the source point
};

// Follows x rightward from `from` to the first vertex with out-degree >= 2
// and leaves x's path there through the least other successor.
std::optional<Branch> branch_away(const SftGraph& g, const SymbolicPoint& x,
                                  std::int64_t from) {
  const std::int64_t stop =
      std::max(from, x.core_end()) +
      static_cast<std::int64_t>(x.right_period().size());
  for (std::int64_t q = from; q < stop; ++q) {
    const Symbol v = x.at(q);
    if (g.out_degree(v) < 2) continue;
    const Symbol taken = x.at(q + 1);
    Symbol other = taken;
    for (Symbol w : g.successors(v)) {
      if (w != taken) {
        other = w;
        break;
      }
    }
    const std::int64_t lo = std::min(x.anchor(), q);
    Word core = x.coordinates(lo, static_cast<std::size_t>(q - lo + 1));
    core.push_back(other);
    const auto p = x.left_period().size();
    Word left = x.coordinates(lo - static_cast<std::int64_t>(p), p);
    return Branch{SymbolicPoint(std::move(left), std::move(core),
                                shortest_cycle(g, other), lo),
                  q};
  }
  return std::nullopt;
}

void require_perfect_irreducible(const SftGraph& g, const char* op) {
  if (!is_irreducible(g)) {
    throw HypothesisError(std::string(op) + " requires an irreducible graph");
  }
  if (!is_perfect(classify_space(g))) {
    throw HypothesisError(std::string(op) +
                          ": no branching vertex (the shift space is a "
                          "single periodic orbit)");
  }
}

void require_point(const SftGraph& g, const SymbolicPoint& x) {
  if (!x.is_admissible_in(g)) {
    throw InputError("point is not in the shift space of the graph");
  }
}

}  // namespace

bool stable_member(const StableWindowSpec& spec, const SymbolicPoint& y) {
  const std::int64_t r = spec.resolution.window_radius();
  if (spec.side == Side::kStable)
    return !first_disagreement_at_or_after(spec.base, y, -r).has_value();
  return !last_disagreement_at_or_before(spec.base, y, r).has_value();
}

StableCensus stable_census(const SftGraph& g, const SymbolicPoint& x,
                           Resolution n, std::size_t depth) {
  if (depth < 1) throw InputError("census depth must be >= 1");
  require_point(g, x);
  const std::size_t size = g.size();
  // walks[u] = number of walks of the current length from u to the pinned
  // vertex.
  std::vector<BigInt> walks(size, 0);
  walks[x.at(-n.window_radius())] = 1;
  auto total = [&] {
    BigInt t = 0;
    for (const auto& c : walks) t += c;
    return t;
  };
  StableCensus census;
  census.previous_count = 1;  // depth 0: the empty extension
  for (std::size_t len = 1; len <= depth; ++len) {
    std::vector<BigInt> next(size, 0);
    for (std::size_t u = 0; u < size; ++u)
      for (Symbol w : g.successors(static_cast<Symbol>(u))) next[u] += walks[w];
    walks = std::move(next);
    if (len + 1 == depth) census.previous_count = total();
    if (len == depth) census.count = total();
  }
  census.verdict = census.count > census.previous_count
                       ? CensusVerdict::kGrowingUncountableAtDepth
                       : CensusVerdict::kConstantCountableAtDepth;
  return census;
}

CantorApproximation cantor_construct(const SftGraph& g, const SymbolicPoint& x,
                                     Resolution n, std::size_t depth) {
  require_perfect_irreducible(g, "cantor_construct");
  require_point(g, x);

  CantorApproximation approx{x, n, {{x}}};
  // Largest index at which two points of the current level first differ.
  std::int64_t spread = std::numeric_limits<std::int64_t>::min();
  for (std::size_t j = 1; j <= depth; ++j) {
    const auto& prev = approx.levels.back();
    std::int64_t threshold = n.value() + static_cast<std::int64_t>(j);
    if (spread != std::numeric_limits<std::int64_t>::min())
      threshold = std::max(threshold, spread + 1);

    std::vector<SymbolicPoint> level = prev;
    level.reserve(2 * prev.size());
    std::int64_t next_spread = spread;
    for (const auto& y : prev) {
      auto branch = branch_away(g, y, threshold);
      if (!branch) {
        throw HypothesisError(
            "cantor_construct: no branching vertex reachable");
      }
      next_spread = std::max(next_spread, branch->index + 1);
      level.push_back(std::move(branch->point));
    }
    spread = next_spread;
    approx.levels.push_back(std::move(level));
  }
  return approx;
}

SensitivityWitness sensitivity_witness(const SftGraph& g,
                                       const SymbolicPoint& x,
                                       std::int64_t radius) {
  if (radius < 0) throw InputError("sensitivity radius must be >= 0");
  require_perfect_irreducible(g, "sensitivity_witness");
  require_point(g, x);
  auto branch = branch_away(g, x, radius);
  if (!branch) throw HypothesisError("sensitivity_witness: no branching vertex");
  return {std::move(branch->point), branch->index + 1};
}

}  // namespace sftglue
