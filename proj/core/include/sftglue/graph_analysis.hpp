#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sftglue/sft_graph.hpp"

namespace sftglue {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Exact k-th power of the transition matrix; entry (i, j) counts the
/// walks of length k from i to j.
IntMatrix matrix_power(const SftGraph& g, std::size_t k);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// per(i) for one vertex; nullopt stands for an infinite period (no
/// closed walk through i).
using VertexPeriod = std::optional<std::size_t>;

struct PeriodInfo {
  bool irreducible = false;
  /// gcd of the finite per(i); nullopt when none is finite.
  VertexPeriod period;
  /// Indexed by the original vertex labels.
  std::vector<VertexPeriod> per_vertex;
};

/// Irreducibility of the essential subgraph and the periods of every
/// vertex. Throws HypothesisError("empty essential graph") when trimming
/// removes every vertex.
PeriodInfo irreducibility_and_period(const SftGraph& g);

/// Result of the primitivity test on the essential subgraph.
struct MixingResult {
  bool mixing = false;
  /// K = (n - 1)^2 + 1 for the essential subgraph of size n.
  std::size_t wielandt_exponent = 0;
  /// Least e >= 1 with M^e > 0, when mixing.
  std::optional<std::size_t> witness_exponent;
  /// First zero entry (i, j) of M^K in original labels, when not mixing.
  std::optional<std::pair<Symbol, Symbol>> zero_entry;
};

MixingResult is_mixing(const SftGraph& g);

struct EntropyEstimate {
  /// s_n for n = 1..n_max: the number of admissible words of length n.
  std::vector<BigInt> word_counts;
  /// (1/n_max) log s(n_max).
  double word_count_rate = 0.0;
  /// log of the spectral radius of the transition matrix.
  double spectral = 0.0;
  /// Spectral radius and the number of power iterations used.
  double spectral_radius = 1.0;
  std::size_t iterations = 0;
};

/// Topological entropy. The spectral value comes from power iteration on
/// each irreducible component (shifted by the identity to make it
/// primitive), stopped once the Collatz-Wielandt bounds bracket the
/// dominant eigenvalue to 1e-12.
EntropyEstimate entropy(const SftGraph& g, std::size_t n_max);

struct SinglePeriodicOrbit {
  std::size_t length;
  friend bool operator==(const SinglePeriodicOrbit&,
                         const SinglePeriodicOrbit&) = default;
};
struct Perfect {
  friend bool operator==(const Perfect&, const Perfect&) = default;
};
struct FiniteUnion {
  std::vector<std::size_t> orbit_lengths;  // ascending
  friend bool operator==(const FiniteUnion&, const FiniteUnion&) = default;
};
using SpaceClass = std::variant<SinglePeriodicOrbit, Perfect, FiniteUnion>;

/// The shift space is a finite union of periodic orbits iff the essential
/// graph is a disjoint union of simple cycles; otherwise it is perfect.
SpaceClass classify_space(const SftGraph& g);

bool is_perfect(const SpaceClass& c);

/// Shifts of finite type have shadowing, so gluing-orbit is equivalent to
/// transitivity, i.e. to irreducibility of the essential subgraph.
bool has_gluing_orbit(const SftGraph& g);

struct AnalysisReport {
  bool irreducible = false;
  VertexPeriod period;
  std::vector<VertexPeriod> per_vertex_periods;
  bool mixing = false;
  double entropy_spectral = 0.0;
  double entropy_word_count = 0.0;
  SpaceClass space_class;
  bool gluing_orbit = false;
  /// gluing_orbit && mixing. A necessary condition for the induced
  /// hyperspace map to have gluing-orbit, not a sufficient one.
  bool hyper_gluing_possible = false;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const SftGraph& g, std::size_t entropy_n_max = 20);

}  // namespace sftglue
