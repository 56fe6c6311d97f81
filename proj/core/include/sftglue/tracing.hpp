#pragma once

#include <cstdint>
#include <vector>

#include "sftglue/sft_graph.hpp"
#include "sftglue/symbolic_point.hpp"

namespace sftglue {

/// One orbit segment x, sigma(x), ..., sigma^m(x).
struct OrbitBlock {
  SymbolicPoint point;
  std::int64_t length = 0;  // m >= 0

  friend bool operator==(const OrbitBlock&, const OrbitBlock&) = default;
};

/// A finite, non-empty list of orbit segments.
class OrbitSequence {
 public:
  /// Throws InputError if `blocks` is empty or a length is negative.
  explicit OrbitSequence(std::vector<OrbitBlock> blocks);

  const std::vector<OrbitBlock>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const OrbitBlock& operator[](std::size_t j) const { return blocks_[j]; }

  /// Every point is admissible in `g`.
  bool is_admissible_in(const SftGraph& g) const;

  friend bool operator==(const OrbitSequence&, const OrbitSequence&) = default;

 private:
  std::vector<OrbitBlock> blocks_;
};

/// Transition times t_1..t_{k-1} between consecutive segments.
class GapSchedule {
 public:
  GapSchedule() = default;
  /// Throws InputError if a gap is < 1.
  explicit GapSchedule(std::vector<std::int64_t> gaps);

  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::size_t size() const noexcept { return gaps_.size(); }
  std::int64_t max_gap() const noexcept;

  /// Start times s_1 = 0, s_j = sum_{i<j} (m_i + t_i). Throws InputError
  /// when the schedule does not fit `c`.
  std::vector<std::int64_t> starts(const OrbitSequence& c) const;

  friend bool operator==(const GapSchedule&, const GapSchedule&) = default;

 private:
  std::vector<std::int64_t> gaps_;
};

/// Which map the segments are orbits of.
enum class Direction { kForward, kInverse };

/// True iff d(sigma^{s_j + l}(z), sigma^l(x_j)) <= 2^(-N) for every block j
/// and every l in 0..m_j. With Direction::kInverse the same statement is
/// checked for sigma^{-1}. Throws InputError on a length mismatch.
bool verify_trace(const SftGraph& g, const SymbolicPoint& z,
                  const OrbitSequence& c, const GapSchedule& gap,
                  Resolution n, Direction direction = Direction::kForward);

struct Trace {
  SymbolicPoint z;
  GapSchedule gap;
};

/// Builds a tracing point by pinning each segment's radius-(N-1) window
/// and joining consecutive windows with the lexicographically least
/// shortest walk. Left of the pinned span z follows x_1, right of it the
/// last segment's point, so a single segment gives z = x_1. Every gap is at
/// most gap_bound(g, N).
/// Throws HypothesisError if `g` is not irreducible and InputError if a
/// segment point is not admissible.
Trace construct_trace(const SftGraph& g, const OrbitSequence& c,
                      Resolution n);

/// Uniform gap bound 2(N-1) + n for construct_trace on a graph with n
/// vertices. Throws HypothesisError if `g` is not irreducible.
std::int64_t gap_bound(const SftGraph& g, Resolution n);

struct ReversedTrace {
  SymbolicPoint z;
  OrbitSequence sequence;
  GapSchedule gap;
};

/// Turns a trace for one direction into a trace for the opposite one:
/// segments are visited in reverse order, each starting from its far end,
/// with the gaps reversed and z moved to the end of the last segment.
/// Applying it twice returns the original data. Throws PreconditionError
/// if the input does not verify in `direction`.
ReversedTrace reverse_trace(const SftGraph& g, const SymbolicPoint& z,
                            const OrbitSequence& c, const GapSchedule& gap,
                            Resolution n,
                            Direction direction = Direction::kForward);

/// Shadows a finite 2^(-N)-pseudo-orbit x_0..x_T by the point reading
/// z_t = (x_t)_0, with x_0's left tail and x_T's right tail. Then
/// d(sigma^t(z), x_t) <= 2^(-N) for every t. Throws InputError naming the
/// first index t with d(sigma(x_t), x_{t+1}) > 2^(-N), or the first
/// inadmissible point.
SymbolicPoint shadow(const SftGraph& g,
                     const std::vector<SymbolicPoint>& pseudo_orbit,
                     Resolution n);

}  // namespace sftglue
