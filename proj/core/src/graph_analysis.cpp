#include "sftglue/graph_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "sftglue/error.hpp"

namespace sftglue {
namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

IntMatrix to_int_matrix(const SftGraph& g) {
  const std::size_t n = g.size();
  IntMatrix out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (Symbol j : g.successors(static_cast<Symbol>(i))) out[i][j] = 1;
  return out;
}

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix bool_multiply(const BoolMatrix& a, const SftGraph& g) {
  const std::size_t n = g.size();
  BoolMatrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (Symbol j : g.successors(static_cast<Symbol>(k))) out[i][j] = true;
  return out;
}

bool all_positive(const BoolMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
  });
}

const SftGraph& require_essential(const EssentialSubgraph& ess) {
  if (!ess.graph) throw HypothesisError("empty essential graph");
  return *ess.graph;
}

// Dominant eigenvalue of one irreducible component, via the primitive
// matrix (M + I).
std::pair<double, std::size_t> component_radius(
    const SftGraph& g, const std::vector<Symbol>& comp) {
  constexpr double kTolerance = 1e-12;
  constexpr std::size_t kMaxIterations = 1'000'000;
  const std::size_t c = comp.size();
  std::vector<std::size_t> local(g.size(), c);
  for (std::size_t i = 0; i < c; ++i) local[comp[i]] = i;

  std::vector<double> v(c, 1.0), w(c);
  double estimate = 0.0;
  std::size_t it = 0;
  while (it < kMaxIterations) {
    ++it;
    for (std::size_t i = 0; i < c; ++i) {
      double sum = v[i];
      for (Symbol j : g.successors(comp[i]))
        if (local[j] < c) sum += v[local[j]];
      w[i] = sum;
    }
    double lo = w[0] / v[0], hi = lo, top = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, w[i]);
    }
    estimate = 0.5 * (lo + hi) - 1.0;
    if (hi - lo < kTolerance) break;
    for (std::size_t i = 0; i < c; ++i) v[i] = w[i] / top;
  }
  return {estimate, it};
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntMatrix matrix_power(const SftGraph& g, std::size_t k) {
  IntMatrix result = identity(g.size());
  IntMatrix base = to_int_matrix(g);
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

PeriodInfo irreducibility_and_period(const SftGraph& g) {
  const auto ess = essential_subgraph(g);
  PeriodInfo info;
  info.irreducible = is_irreducible(require_essential(ess));
  info.per_vertex.assign(g.size(), std::nullopt);

  // Within a strongly connected component every vertex has the same
  // period: the gcd of level(u) + 1 - level(v) over the component's edges,
  // for BFS levels taken from any root.
  for (const auto& comp : strongly_connected_components(g)) {
    std::vector<bool> inside(g.size(), false);
    for (Symbol v : comp) inside[v] = true;
    std::vector<long> level(g.size(), -1);
    std::deque<Symbol> queue{comp.front()};
    level[comp.front()] = 0;
    while (!queue.empty()) {
      const Symbol u = queue.front();
      queue.pop_front();
      for (Symbol w : g.successors(u)) {
        if (inside[w] && level[w] < 0) {
          level[w] = level[u] + 1;
          queue.push_back(w);
        }
      }
    }
    std::size_t gcd = 0;
    bool has_cycle = false;
    for (Symbol u : comp)
      for (Symbol w : g.successors(u)) {
        if (!inside[w]) continue;
        has_cycle = true;
        gcd = std::gcd(gcd, static_cast<std::size_t>(
                                std::labs(level[u] + 1 - level[w])));
      }
    if (!has_cycle) continue;
    for (Symbol v : comp) info.per_vertex[v] = gcd;
  }

  std::size_t period = 0;
  for (const auto& p : info.per_vertex)
    if (p) period = std::gcd(period, *p);
  if (period > 0) info.period = period;
  return info;
}

MixingResult is_mixing(const SftGraph& g) {
  const auto ess = essential_subgraph(g);
  const SftGraph& h = require_essential(ess);
  const std::size_t n = h.size();
  MixingResult result;
  result.wielandt_exponent = (n - 1) * (n - 1) + 1;

  BoolMatrix power(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = true;
  for (std::size_t e = 1; e <= result.wielandt_exponent; ++e) {
    power = bool_multiply(power, h);
    if (!result.witness_exponent && all_positive(power)) {
      result.witness_exponent = e;
      result.mixing = true;
    }
  }
  if (!result.mixing) {
    for (std::size_t i = 0; i < n && !result.zero_entry; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!power[i][j]) {
          result.zero_entry = {ess.original[i], ess.original[j]};
          break;
        }
  }
  return result;
}

EntropyEstimate entropy(const SftGraph& g, std::size_t n_max) {
  if (n_max < 1) throw InputError("entropy needs n_max >= 1");
  EntropyEstimate est;
  const std::size_t n = g.size();

  // s(len) = number of admissible words of length len, by counting walks.
  std::vector<BigInt> ending(n, 1);
  est.word_counts.reserve(n_max);
  for (std::size_t len = 1; len <= n_max; ++len) {
    if (len > 1) {
      std::vector<BigInt> next(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (Symbol j : g.successors(static_cast<Symbol>(i)))
          next[j] += ending[i];
      ending = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : ending) total += c;
    est.word_counts.push_back(total);
  }
  const BigInt& last = est.word_counts.back();
  est.word_count_rate =
      last > 0 ? std::log(last.convert_to<double>()) / static_cast<double>(n_max)
               : 0.0;

  double radius = 0.0;
  for (const auto& comp : strongly_connected_components(g)) {
    const bool cyclic =
        comp.size() > 1 || g.has_edge(comp.front(), comp.front());
    if (!cyclic) continue;
    const auto [r, it] = component_radius(g, comp);
    radius = std::max(radius, r);
    est.iterations += it;
  }
  est.spectral_radius = radius;
  est.spectral = radius > 0.0 ? std::max(0.0, std::log(radius)) : 0.0;
  return est;
}

SpaceClass classify_space(const SftGraph& g) {
  const auto ess = essential_subgraph(g);
  const SftGraph& h = require_essential(ess);
  for (std::size_t v = 0; v < h.size(); ++v) {
    const auto s = static_cast<Symbol>(v);
    if (h.out_degree(s) != 1 || h.in_degree(s) != 1) return Perfect{};
  }
  std::vector<std::size_t> lengths;
  for (const auto& comp : strongly_connected_components(h))
    lengths.push_back(comp.size());
  std::sort(lengths.begin(), lengths.end());
  if (lengths.size() == 1) return SinglePeriodicOrbit{lengths.front()};
  return FiniteUnion{std::move(lengths)};
}

bool is_perfect(const SpaceClass& c) {
  return std::holds_alternative<Perfect>(c);
}

bool has_gluing_orbit(const SftGraph& g) {
  const auto ess = essential_subgraph(g);
  return ess.graph && is_irreducible(*ess.graph);
}

AnalysisReport analyze(const SftGraph& g, std::size_t entropy_n_max) {
  AnalysisReport r;
  const auto periods = irreducibility_and_period(g);
  r.irreducible = periods.irreducible;
  r.period = periods.period;
  r.per_vertex_periods = periods.per_vertex;
  r.mixing = is_mixing(g).mixing;
  const auto h = entropy(g, entropy_n_max);
  r.entropy_spectral = h.spectral;
  r.entropy_word_count = h.word_count_rate;
  r.space_class = classify_space(g);
  r.gluing_orbit = has_gluing_orbit(g);
  r.hyper_gluing_possible = r.gluing_orbit && r.mixing;
  return r;
}

}  // namespace sftglue
