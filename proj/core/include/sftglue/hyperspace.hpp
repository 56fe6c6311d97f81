#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sftglue/sft_graph.hpp"
#include "sftglue/symbolic_point.hpp"
#include "sftglue/tracing.hpp"

namespace sftglue {

/// A non-empty finite set of points: an element of the hyperspace 2^X.
/// Elements are deduplicated and kept sorted.
class CompactSet {
 public:
  /// Throws InputError on an empty list.
  explicit CompactSet(std::vector<SymbolicPoint> points);

  const std::vector<SymbolicPoint>& elements() const noexcept { return pts_; }
  std::size_t size() const noexcept { return pts_.size(); }
  auto begin() const noexcept { return pts_.begin(); }
  auto end() const noexcept { return pts_.end(); }

  bool is_admissible_in(const SftGraph& g) const;

  friend bool operator==(const CompactSet&, const CompactSet&) = default;

 private:
  std::vector<SymbolicPoint> pts_;
};

/// (2^sigma)^n(A) = sigma^n(A).
CompactSet image(const CompactSet& a, std::int64_t n);

/// Hausdorff distance as a radius: d_H(A, B) = 2^(-r) where
/// r = min over both directions of (min over a of max over b of the
/// agreement radius). Exact when r <= cap, cap + 1 when larger,
/// kIdentical when A = B.
Radius hausdorff_radius(const CompactSet& a, const CompactSet& b,
                        Radius cap);

struct HyperBlock {
  CompactSet set;
  std::int64_t length = 0;
};

/// An orbit sequence for the induced map together with the resolution and
/// the largest admissible gap.
struct HyperTraceProblem {
  SftGraph graph;
  std::vector<HyperBlock> blocks;
  Resolution resolution{1};
  std::int64_t max_gap = 1;
};

/// True iff d_H(sigma^{s_j + l}(A), sigma^l(A_j)) <= 2^(-N) for every
/// block j and l in 0..m_j. Throws InputError on a length mismatch and
/// PreconditionError when a gap lies outside 1..max_gap.
bool verify_hyper_trace(const HyperTraceProblem& p, const CompactSet& a,
                        const GapSchedule& gap);

/// Given that A traces the singleton lift {({x_j}, m_j)} at resolution N,
/// reports whether every z in A traces (c, gap) at one dyadic step coarser
/// (N - 1, or N when N = 1). Throws PreconditionError when A does not
/// trace the lifted sequence.
bool singleton_lift_check(const SftGraph& g, const OrbitSequence& c,
                          const CompactSet& a, const GapSchedule& gap,
                          Resolution n);

/// E = { sigma^{-i}(y) : i = 0..M+k }.
CompactSet build_Ek(const SftGraph& g, const SymbolicPoint& y,
                    std::int64_t max_gap, std::int64_t k);

/// First requirement of a hyper-trace that no candidate word meets.
struct UncoveredPair {
  /// 0 for the block ({x}, 0), 1 for the block (E, M + k).
  std::size_t block = 1;
  /// Time l inside the block.
  std::int64_t time = 0;
  /// The element of sigma^time(E) (or x) left uncovered.
  SymbolicPoint element;
  /// The uncovered element's 0-symbol lies in a cyclic class that no
  /// walk from x_0 reaches in the required number of steps.
  bool parity_blocked = false;
};

struct GapVerdict {
  std::int64_t gap = 1;
  bool sat = false;
  std::optional<UncoveredPair> uncovered;  // when UNSAT
  std::vector<SymbolicPoint> tracing_set;  // when SAT
};

struct ConstantVerdict {
  std::int64_t max_gap = 1;  // the candidate constant M
  bool sat = false;          // some gap in 1..M admits a tracing set
  std::vector<GapVerdict> gaps;
};

struct HyperRefutation {
  SymbolicPoint x;
  SymbolicPoint y;
  std::size_t period = 1;
  Resolution resolution{1};
  std::int64_t k = 0;
  std::vector<ConstantVerdict> verdicts;  // M = 1..M_max

  /// Every candidate constant was refuted.
  bool all_unsat() const;
};

/// Decides, for the orbit sequence ({x}, 0), (E_k(y, M, k), M + k) and
/// every gap in 1..M, whether some finite set of points traces it at
/// resolution N. x and y sit at the least vertices of distinct cyclic
/// classes (or the two least vertices when the period is 1).
///
/// All admissible words on the relevant coordinate window that are close
/// to x at time 0 and close to some element of sigma^i(E) at every time i
/// form a maximal candidate set; a tracing set exists iff that set covers
/// every element at every time. Throws HypothesisError if `g` is not
/// irreducible.
HyperRefutation refute_hyper_gluing(const SftGraph& g, Resolution n,
                                    std::int64_t max_constant, std::int64_t k);

/// The same decision for one constant M and one gap.
GapVerdict decide_hyper_gap(const SftGraph& g, const SymbolicPoint& x,
                            const SymbolicPoint& y, Resolution n,
                            std::int64_t max_constant, std::int64_t k,
                            std::int64_t gap);

}  // namespace sftglue
