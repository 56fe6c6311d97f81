#pragma once

// Shared fixtures, seeded generators and brute-force oracles for the test
// suites. Oracles here deliberately avoid the library's own algorithms
// beyond point construction and coordinate access.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "sftglue/sftglue.hpp"

namespace sftglue::testing {

/// The 4-vertex path graph 1 <-> 2 <-> 3 <-> 4: irreducible, period 2.
inline SftGraph path4() {
  return SftGraph({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
}
inline SftGraph golden_mean() { return SftGraph({{1, 1}, {1, 0}}); }
inline SftGraph full2() { return SftGraph::full_shift(2); }
inline SftGraph two_cycle() { return SftGraph({{0, 1}, {1, 0}}); }
inline SftGraph single_loop() { return SftGraph(std::vector<std::vector<int>>{{1}}); }
inline SftGraph identity2() { return SftGraph({{1, 0}, {0, 1}}); }

inline Word w(std::initializer_list<int> labels) {
  Word out;
  for (int l : labels) out.push_back(static_cast<Symbol>(l - 1));
  return out;
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Symbol random_successor(const SftGraph& g, Symbol v, Rng& rng) {
  const auto s = g.successors(v);
  return s[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(s.size()) - 1))];
}

/// Random closed walk through v of length >= 1, listed as the vertices
/// after v (ending at v).
inline Word random_closed_walk(const SftGraph& g, Symbol v, Rng& rng) {
  Word walk;
  Symbol cur = v;
  const auto wander = uniform(rng, 0, 3);
  for (std::int64_t i = 0; i < wander; ++i) {
    cur = random_successor(g, cur, rng);
    walk.push_back(cur);
  }
  const Word back = shortest_walk(g, cur, v);
  if (!walk.empty() && cur == v && uniform(rng, 0, 1) == 0) return walk;
  walk.insert(walk.end(), back.begin(), back.end());
  return walk;
}

/// Random point of an irreducible graph with random periodic tails, a
/// random core of length 0..max_core and a random anchor.
inline SymbolicPoint random_point(const SftGraph& g, Rng& rng,
                                  std::int64_t max_core = 5) {
  const auto v = static_cast<Symbol>(
      uniform(rng, 0, static_cast<std::int64_t>(g.size()) - 1));
  const Word loop = random_closed_walk(g, v, rng);
  Word left{v};
  left.insert(left.end(), loop.begin(), loop.end() - 1);
  Word core{v};
  const auto m = uniform(rng, 0, max_core);
  for (std::int64_t i = 0; i < m; ++i)
    core.push_back(random_successor(g, core.back(), rng));
  Word right = random_closed_walk(g, core.back(), rng);
  return SymbolicPoint(std::move(left), std::move(core), std::move(right),
                       uniform(rng, -4, 4));
}

/// Random orbit sequence with 1..max_blocks blocks of length 0..max_len.
inline OrbitSequence random_orbit_sequence(const SftGraph& g, Rng& rng,
                                           std::int64_t max_blocks,
                                           std::int64_t max_len) {
  std::vector<OrbitBlock> blocks;
  const auto k = uniform(rng, 1, max_blocks);
  for (std::int64_t j = 0; j < k; ++j)
    blocks.push_back({random_point(g, rng), uniform(rng, 0, max_len)});
  return OrbitSequence(std::move(blocks));
}

/// Oracle: radius of agreement by scanning the symmetric window [-cap, cap].
inline Radius window_scan_radius(const SymbolicPoint& x, const SymbolicPoint& y,
                                 Radius cap) {
  for (Radius r = 0; r <= cap; ++r)
    if (x.at(r) != y.at(r) || x.at(-r) != y.at(-r)) return r;
  return cap + 1;
}

/// Oracle: equality on the window anchor-span + 2 * lcm(periods).
inline bool window_equal(const SymbolicPoint& x, const SymbolicPoint& y) {
  const std::int64_t lo = std::min(x.anchor(), y.anchor());
  const std::int64_t hi = std::max(x.core_end(), y.core_end());
  const auto l = static_cast<std::int64_t>(
      std::lcm(std::lcm(x.left_period().size(), y.left_period().size()),
               std::lcm(x.right_period().size(), y.right_period().size())));
  for (std::int64_t k = lo - 2 * l; k < hi + 2 * l; ++k)
    if (x.at(k) != y.at(k)) return false;
  return true;
}

/// Oracle: every word of length n over the alphabet, filtered by the
/// transition matrix.
inline std::vector<Word> brute_force_words(const SftGraph& g, std::size_t n) {
  std::vector<Word> out;
  Word cur(n, 0);
  const std::size_t a = g.size();
  const auto rows = g.rows();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= a;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      cur[i] = static_cast<Symbol>(c % a);
      c /= a;
    }
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = rows[cur[i - 1]][cur[i]] == 1;
    if (ok) out.push_back(cur);
  }
  return out;
}

/// Oracle: lengths of every simple cycle through vertices of `comp`,
/// restricted to edges inside `comp`, by exhaustive DFS.
inline std::vector<std::size_t> simple_cycle_lengths(
    const SftGraph& g, const std::vector<Symbol>& comp) {
  std::vector<std::size_t> lengths;
  std::vector<bool> inside(g.size(), false), used(g.size(), false);
  for (Symbol v : comp) inside[v] = true;
  for (Symbol start : comp) {
    // Cycles whose least vertex is `start`.
    std::function<void(Symbol, std::size_t)> dfs = [&](Symbol v, std::size_t len) {
      for (Symbol w : g.successors(v)) {
        if (!inside[w] || w < start) continue;
        if (w == start) {
          lengths.push_back(len + 1);
        } else if (!used[w]) {
          used[w] = true;
          dfs(w, len + 1);
          used[w] = false;
        }
      }
    };
    used[start] = true;
    dfs(start, 0);
    used[start] = false;
  }
  return lengths;
}

/// Every essential graph on n states.
inline std::vector<SftGraph> all_essential_graphs(std::size_t n) {
  std::vector<SftGraph> out;
  const std::size_t cells = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (std::size_t c = 0; c < cells; ++c)
      rows[c / n][c % n] = static_cast<int>((mask >> c) & 1U);
    SftGraph g(rows);
    if (is_essential(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<SftGraph> all_essential_graphs_up_to(std::size_t n_max) {
  std::vector<SftGraph> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto graphs = all_essential_graphs(n);
    out.insert(out.end(), graphs.begin(), graphs.end());
  }
  return out;
}

/// Points x = point_of(g, w) for every admissible word w of length `len`.
inline std::vector<SymbolicPoint> cylinder_points(const SftGraph& g,
                                                  std::size_t len) {
  std::vector<SymbolicPoint> out;
  for (const auto& word : brute_force_words(g, len)) out.push_back(point_of(g, word));
  return out;
}

/// Oracle: coordinate-wise trace check. Forward: z agrees with x_j on the
/// window of radius N-1 around s_j + l versus l. Inverse: around s_j - l
/// versus -l.
inline bool oracle_traces(const SymbolicPoint& z, const OrbitSequence& c,
                          const std::vector<std::int64_t>& gaps, int n,
                          bool inverse = false) {
  std::int64_t s = 0;
  const std::int64_t sign = inverse ? -1 : 1;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::int64_t l = 0; l <= c[j].length; ++l)
      for (std::int64_t k = -(n - 1); k <= n - 1; ++k)
        if (z.at(sign * (s + l) + k) != c[j].point.at(sign * l + k)) return false;
    if (j + 1 < c.size()) s += c[j].length + gaps[j];
  }
  return true;
}

/// Random 2^(-N)-pseudo-orbit of length T+1: each next point copies the
/// radius-(N-1) window of the shifted previous one and continues with a
/// random walk to the right.
inline std::vector<SymbolicPoint> random_pseudo_orbit(const SftGraph& g, Rng& rng,
                                                      int n, std::int64_t length) {
  std::vector<SymbolicPoint> out{random_point(g, rng)};
  for (std::int64_t t = 0; t < length; ++t) {
    const auto next = shift(out.back(), 1);
    Word word = next.coordinates(-(n - 1), static_cast<std::size_t>(2 * n - 1));
    const auto extra = uniform(rng, 0, 3);
    for (std::int64_t i = 0; i < extra; ++i)
      word.push_back(random_successor(g, word.back(), rng));
    out.push_back(shift(point_of(g, word), n - 1));
  }
  return out;
}

/// BFS levels from vertex `from`, computed directly from the matrix rows.
inline std::vector<int> bfs_levels(const SftGraph& g, Symbol from) {
  const auto rows = g.rows();
  std::vector<int> level(g.size(), -1);
  std::vector<Symbol> queue{from};
  level[from] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (rows[queue[i]][v] == 1 && level[v] < 0) {
        level[v] = level[queue[i]] + 1;
        queue.push_back(static_cast<Symbol>(v));
      }
  return level;
}

/// A point agreeing with z on coordinates lo .. lo+len-1, continued to the
/// right by a random walk and closed off by point_of.
inline SymbolicPoint random_window_variant(const SftGraph& g, const SymbolicPoint& z,
                                           std::int64_t lo, std::size_t len, Rng& rng) {
  Word word = z.coordinates(lo, len);
  const auto extra = uniform(rng, 0, 4);
  for (std::int64_t i = 0; i < extra; ++i)
    word.push_back(random_successor(g, word.back(), rng));
  return shift(point_of(g, word), -lo);
}

}  // namespace sftglue::testing
