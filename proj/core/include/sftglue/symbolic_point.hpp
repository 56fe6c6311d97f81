#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "sftglue/sft_graph.hpp"

namespace sftglue {

/// An eventually periodic bi-infinite sequence
///
///     ... L L L [core] R R R ...
///
/// where `core` starts at coordinate `anchor`. Coordinates left of the core
/// repeat `left_period` (its last symbol sits at anchor - 1), coordinates
/// right of the core repeat `right_period`.
///
/// Points are kept in a canonical form (primitive periods, shortest core,
/// and anchor 0 for purely periodic points), so two points are equal iff
/// all of their coordinates agree. Points do not carry a graph; use
/// `is_admissible_in` to check them against one.
class SymbolicPoint {
 public:
  /// Throws InputError if either period is empty.
  SymbolicPoint(Word left_period, Word core, Word right_period,
                std::int64_t anchor = 0);

  /// The periodic point with x_{anchor + i} = period[i mod |period|].
  static SymbolicPoint periodic(Word period, std::int64_t anchor = 0);

  Symbol at(std::int64_t k) const noexcept;

  /// Coordinates k in [first, first + count).
  Word coordinates(std::int64_t first, std::size_t count) const;

  const Word& left_period() const noexcept { return left_; }
  const Word& core() const noexcept { return core_; }
  const Word& right_period() const noexcept { return right_; }
  std::int64_t anchor() const noexcept { return anchor_; }
  std::int64_t core_end() const noexcept {
    return anchor_ + static_cast<std::int64_t>(core_.size());
  }
  bool is_periodic() const noexcept { return core_.empty() && left_ == right_; }

  /// Every consecutive pair of coordinates is an edge of `g`.
  bool is_admissible_in(const SftGraph& g) const;

  friend bool operator==(const SymbolicPoint&, const SymbolicPoint&) = default;
  friend std::strong_ordering operator<=>(const SymbolicPoint& a,
                                          const SymbolicPoint& b);

 private:
  void canonicalize();

  Word left_;
  Word core_;
  Word right_;
  std::int64_t anchor_ = 0;
};

/// sigma^n: coordinate k of the result is coordinate k + n of x.
SymbolicPoint shift(const SymbolicPoint& x, std::int64_t n);

/// Coordinate reflection k -> -k. Conjugates sigma to sigma^{-1}; the
/// reflected point is admissible in the transposed graph.
SymbolicPoint reflect(const SymbolicPoint& x);

/// Radius of agreement m = min{|k| : x_k != y_k}, so that
/// d(x, y) = 2^(-m). `kIdentical` stands for d(x, y) = 0.
using Radius = std::int64_t;
inline constexpr Radius kIdentical = std::numeric_limits<Radius>::max();

/// Exact radius of agreement.
Radius agreement_radius(const SymbolicPoint& x, const SymbolicPoint& y);

/// Radius of agreement with early exit: exact when it is <= cap, otherwise
/// cap + 1 for distinct points and kIdentical for equal ones.
Radius agreement_radius(const SymbolicPoint& x, const SymbolicPoint& y,
                        Radius cap);

/// Smallest k >= from with x_k != y_k, if any.
std::optional<std::int64_t> first_disagreement_at_or_after(
    const SymbolicPoint& x, const SymbolicPoint& y, std::int64_t from);

/// Largest k <= from with x_k != y_k, if any.
std::optional<std::int64_t> last_disagreement_at_or_before(
    const SymbolicPoint& x, const SymbolicPoint& y, std::int64_t from);

/// Scale epsilon = 2^(-N) of the dyadic shift metric. d(x, y) <= 2^(-N)
/// iff x and y agree on every |k| <= N - 1, i.e. iff the agreement radius
/// is at least N.
class Resolution {
 public:
  /// Throws InputError for N < 1.
  explicit Resolution(int n);

  int value() const noexcept { return n_; }
  /// Half-width N - 1 of the coordinate window that must agree.
  int window_radius() const noexcept { return n_ - 1; }
  double epsilon() const noexcept;
  /// d(x, y) <= epsilon.
  bool close(Radius r) const noexcept { return r >= n_; }

  friend auto operator<=>(const Resolution&, const Resolution&) = default;

 private:
  int n_;
};

/// Distance 2^(-r) as a double; 0 for identical points.
double distance_from_radius(Radius r) noexcept;

/// The point whose coordinates 0..|w|-1 spell `w`, completed on both sides
/// by the lexicographically least shortest cycle through the end vertex.
/// Throws InputError if `w` is empty or inadmissible, HypothesisError if
/// `g` is not irreducible.
SymbolicPoint point_of(const SftGraph& g, std::span<const Symbol> w);

/// Lexicographically least shortest cycle through `v`, as the vertices
/// visited after `v` (the last one is `v`). Empty if `v` lies on no cycle.
Word shortest_cycle(const SftGraph& g, Symbol v);

}  // namespace sftglue
