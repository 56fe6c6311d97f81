#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"

using namespace sftglue;
using namespace sftglue::testing;

namespace {

IntMatrix ints(const std::vector<std::vector<int>>& rows) {
  IntMatrix out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST_SUITE("graph-analysis") {

TEST_CASE("matrix powers of the 4-vertex path") {
  const auto m = path4();
  CHECK(matrix_power(m, 0) == ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(matrix_power(m, 1) == ints(m.rows()));
  CHECK(matrix_power(m, 2) == ints({{1, 0, 1, 0}, {0, 2, 0, 1}, {1, 0, 2, 0}, {0, 1, 0, 1}}));
  CHECK(matrix_power(m, 3) == ints({{0, 2, 0, 1}, {2, 0, 3, 0}, {0, 3, 0, 2}, {1, 0, 2, 0}}));
}

TEST_CASE("matrix powers are exact and multiplicative") {
  // Full 3-shift: every entry of M^k is 3^(k-1); 3^80 overflows 64 bits.
  const auto p = matrix_power(SftGraph::full_shift(3), 81);
  BigInt expected = 1;
  for (int i = 0; i < 80; ++i) expected *= 3;
  CHECK(p[1][2] == expected);

  for (const auto& g : all_essential_graphs(3)) {
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t b = 0; b <= 3; ++b)
        CHECK(matrix_power(g, a + b) == multiply(matrix_power(g, a), matrix_power(g, b)));
  }
  // Entry (i, j) of M^k counts length-k walks.
  const auto gm = golden_mean();
  const auto p5 = matrix_power(gm, 5);
  for (Symbol i = 0; i < 2; ++i)
    for (Symbol j = 0; j < 2; ++j) {
      std::size_t walks = 0;
      for (const auto& word : brute_force_words(gm, 6))
        if (word.front() == i && word.back() == j) ++walks;
      CHECK(p5[i][j] == walks);
    }
}

TEST_CASE("irreducibility and period") {
  const auto m = irreducibility_and_period(path4());
  CHECK(m.irreducible);
  CHECK(m.period == std::optional<std::size_t>(2));
  CHECK(m.per_vertex == std::vector<VertexPeriod>(4, 2));

  const auto id = irreducibility_and_period(identity2());
  CHECK_FALSE(id.irreducible);
  CHECK(id.period == std::optional<std::size_t>(1));
  CHECK(id.per_vertex == std::vector<VertexPeriod>(2, 1));

  const auto gm = irreducibility_and_period(golden_mean());
  CHECK(gm.irreducible);
  CHECK(gm.period == std::optional<std::size_t>(1));
  CHECK(gm.per_vertex == std::vector<VertexPeriod>(2, 1));

  // A vertex on no cycle has infinite period; the gcd ignores it.
  const SftGraph bridge({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
  const auto b = irreducibility_and_period(bridge);
  CHECK_FALSE(b.irreducible);
  CHECK(b.per_vertex[0] == std::optional<std::size_t>(1));
  CHECK_FALSE(b.per_vertex[1].has_value());
  CHECK(b.period == std::optional<std::size_t>(1));

  CHECK_THROWS_AS(irreducibility_and_period(SftGraph({{0, 1}, {0, 0}})), HypothesisError);
}

TEST_CASE("per(i) equals the gcd of cycle lengths in its component") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto graphs = all_essential_graphs(n);
    for (std::size_t gi = 0; gi < graphs.size(); gi += (n == 4 ? 7 : 1)) {
      const auto& g = graphs[gi];
      const auto info = irreducibility_and_period(g);
      for (const auto& comp : strongly_connected_components(g)) {
        const auto lengths = simple_cycle_lengths(g, comp);
        std::size_t gcd = 0;
        for (auto l : lengths) gcd = std::gcd(gcd, l);
        for (Symbol v : comp) {
          if (lengths.empty()) {
            CHECK_FALSE(info.per_vertex[v].has_value());
          } else {
            CHECK(info.per_vertex[v] == std::optional<std::size_t>(gcd));
          }
          if (info.per_vertex[v] && info.period) CHECK(*info.per_vertex[v] % *info.period == 0);
        }
      }
    }
  }
}

TEST_CASE("mixing") {
  const auto m = is_mixing(path4());
  CHECK_FALSE(m.mixing);
  CHECK(m.wielandt_exponent == 10);
  REQUIRE(m.zero_entry);
  CHECK(*m.zero_entry == std::pair<Symbol, Symbol>{0, 1});  // (M^10)(1,2) = 0

  const auto loop = is_mixing(single_loop());
  CHECK(loop.mixing);
  CHECK(loop.witness_exponent == std::optional<std::size_t>(1));

  const auto gm = is_mixing(golden_mean());
  CHECK(gm.mixing);
  CHECK(gm.witness_exponent == std::optional<std::size_t>(2));
  CHECK(matrix_power(golden_mean(), 2) == ints({{2, 1}, {1, 1}}));

  CHECK_FALSE(is_mixing(identity2()).mixing);
}

TEST_CASE("mixing iff irreducible with period 1, on every essential graph with n <= 3") {
  std::size_t checked = 0;
  for (const auto& g : all_essential_graphs_up_to(3)) {
    const auto info = irreducibility_and_period(g);
    const bool expected = info.irreducible && info.period == std::optional<std::size_t>(1);
    CHECK(is_mixing(g).mixing == expected);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("entropy") {
  const auto loop = entropy(single_loop(), 10);
  CHECK(loop.spectral == 0.0);
  CHECK(loop.word_count_rate == 0.0);
  for (const auto& s : loop.word_counts) CHECK(s == 1);

  const auto full = entropy(full2(), 16);
  CHECK(full.spectral == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  for (std::size_t n = 1; n <= 16; ++n) CHECK(full.word_counts[n - 1] == (BigInt(1) << n));

  const auto gm = entropy(golden_mean(), 20);
  const double golden = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  CHECK(std::abs(gm.spectral - golden) < 1e-10);
  CHECK(std::abs(gm.word_count_rate - gm.spectral) < 0.05);
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(gm.word_counts[n - 1] == brute_force_words(golden_mean(), n).size());

  // Period-2 components still converge: spectral radius of the path is the
  // golden ratio.
  const auto p = entropy(path4(), 10);
  CHECK(std::abs(p.spectral - golden) < 1e-10);
}

TEST_CASE("word-count rate bounds the entropy from above") {
  for (const auto& g : all_essential_graphs_up_to(3)) {
    const auto est = entropy(g, 12);
    for (std::size_t n = 1; n <= 12; ++n) {
      const double rate = std::log(est.word_counts[n - 1].convert_to<double>()) / static_cast<double>(n);
      CHECK(rate >= est.spectral - 1e-9);
    }
  }
}

TEST_CASE("classify_space") {
  CHECK(classify_space(single_loop()) == SpaceClass{SinglePeriodicOrbit{1}});
  CHECK(classify_space(two_cycle()) == SpaceClass{SinglePeriodicOrbit{2}});
  CHECK(classify_space(path4()) == SpaceClass{Perfect{}});
  CHECK(classify_space(identity2()) == SpaceClass{FiniteUnion{{1, 1}}});
  CHECK(classify_space(SftGraph({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) ==
        SpaceClass{FiniteUnion{{1, 2}}});
  // The dead vertex is trimmed away first.
  CHECK(classify_space(SftGraph({{1, 0}, {1, 0}})) == SpaceClass{SinglePeriodicOrbit{1}});
  CHECK_THROWS_AS(classify_space(SftGraph({{0, 1}, {0, 0}})), HypothesisError);
}

TEST_CASE("entropy vanishes exactly on the irreducible graphs that are single orbits") {
  for (const auto& g : all_essential_graphs_up_to(3)) {
    if (!is_irreducible(g)) continue;
    const bool perfect = is_perfect(classify_space(g));
    CHECK((entropy(g, 4).spectral > 1e-6) == perfect);
  }
}

TEST_CASE("gluing-orbit on shifts of finite type") {
  CHECK(has_gluing_orbit(path4()));
  CHECK_FALSE(has_gluing_orbit(identity2()));
  CHECK(has_gluing_orbit(golden_mean()));
  CHECK(has_gluing_orbit(SftGraph({{1, 0}, {1, 0}})));
}

TEST_CASE("analysis report invariants") {
  for (const auto& g : all_essential_graphs_up_to(3)) {
    const auto r = analyze(g, 8);
    if (r.mixing) {
      CHECK(r.irreducible);
      CHECK(r.period == std::optional<std::size_t>(1));
    }
    if (r.gluing_orbit) CHECK(r.irreducible);
    CHECK(r.hyper_gluing_possible == (r.gluing_orbit && r.mixing));
  }
  const auto m = analyze(path4());
  CHECK(m.irreducible);
  CHECK_FALSE(m.mixing);
  CHECK(m.gluing_orbit);
  CHECK_FALSE(m.hyper_gluing_possible);
}

}  // TEST_SUITE
