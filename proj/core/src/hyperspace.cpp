#include "sftglue/hyperspace.hpp"

#include <algorithm>
#include <functional>

#include "sftglue/error.hpp"
#include "sftglue/graph_analysis.hpp"

namespace sftglue {

CompactSet::CompactSet(std::vector<SymbolicPoint> points)
    : pts_(std::move(points)) {
  if (pts_.empty()) throw InputError("a compact set needs at least one point");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool CompactSet::is_admissible_in(const SftGraph& g) const {
  return std::all_of(pts_.begin(), pts_.end(), [&](const SymbolicPoint& p) {
    return p.is_admissible_in(g);
  });
}

CompactSet image(const CompactSet& a, std::int64_t n) {
  std::vector<SymbolicPoint> out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(shift(p, n));
  return CompactSet(std::move(out));
}

Radius hausdorff_radius(const CompactSet& a, const CompactSet& b,
                        Radius cap) {
  auto one_sided = [cap](const CompactSet& from, const CompactSet& to) {
    Radius worst = kIdentical;
    for (const auto& p : from) {
      Radius best = 0;
      for (const auto& q : to) best = std::max(best, agreement_radius(p, q, cap));
      worst = std::min(worst, best);
    }
    return worst;
  };
  return std::min(one_sided(a, b), one_sided(b, a));
}

namespace {

// sigma^ta(a) and sigma^tb(b) agree on |k| <= r.
bool close_at(const SymbolicPoint& a, std::int64_t ta, const SymbolicPoint& b,
              std::int64_t tb, std::int64_t r) {
  for (std::int64_t k = -r; k <= r; ++k)
    if (a.at(ta + k) != b.at(tb + k)) return false;
  return true;
}

// d_H(sigma^ta(A), sigma^tb(B)) <= 2^-(r+1).
bool sets_close_at(const CompactSet& a, std::int64_t ta, const CompactSet& b,
                   std::int64_t tb, std::int64_t r) {
  auto covered = [&](const CompactSet& from, std::int64_t tf,
                     const CompactSet& to, std::int64_t tt) {
    return std::all_of(from.begin(), from.end(), [&](const SymbolicPoint& p) {
      return std::any_of(to.begin(), to.end(), [&](const SymbolicPoint& q) {
        return close_at(p, tf, q, tt, r);
      });
    });
  };
  return covered(a, ta, b, tb) && covered(b, tb, a, ta);
}

// Cyclic class of each vertex (BFS level mod period) of an irreducible graph.
std::vector<std::size_t> cyclic_classes(const SftGraph& g, std::size_t period) {
  const auto dist = bfs_distances(g, 0);
  std::vector<std::size_t> cls(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    cls[v] = static_cast<std::size_t>(dist[v]) % period;
  return cls;
}

}  // namespace

bool verify_hyper_trace(const HyperTraceProblem& p, const CompactSet& a,
                        const GapSchedule& gap) {
  if (gap.size() + 1 != p.blocks.size()) {
    throw InputError("gap schedule has " + std::to_string(gap.size()) +
                     " entries for " + std::to_string(p.blocks.size()) +
                     " blocks");
  }
  for (auto t : gap.gaps()) {
    if (t < 1 || t > p.max_gap) {
      throw PreconditionError("gap " + std::to_string(t) +
                              " outside 1.." + std::to_string(p.max_gap));
    }
  }
  if (!a.is_admissible_in(p.graph)) return false;
  const std::int64_t r = p.resolution.window_radius();
  std::int64_t start = 0;
  for (std::size_t j = 0; j < p.blocks.size(); ++j) {
    const auto& block = p.blocks[j];
    for (std::int64_t l = 0; l <= block.length; ++l)
      if (!sets_close_at(a, start + l, block.set, l, r)) return false;
    if (j + 1 < p.blocks.size()) start += block.length + gap.gaps()[j];
  }
  return true;
}

bool singleton_lift_check(const SftGraph& g, const OrbitSequence& c,
                          const CompactSet& a, const GapSchedule& gap,
                          Resolution n) {
  HyperTraceProblem lifted{g, {}, n, std::max<std::int64_t>(1, gap.max_gap())};
  for (const auto& b : c.blocks())
    lifted.blocks.push_back({CompactSet({b.point}), b.length});
  if (!verify_hyper_trace(lifted, a, gap)) {
    throw PreconditionError(
        "singleton_lift_check: the set does not trace the singleton lift");
  }
  const Resolution coarser(std::max(1, n.value() - 1));
  return std::all_of(a.begin(), a.end(), [&](const SymbolicPoint& z) {
    return verify_trace(g, z, c, gap, coarser);
  });
}

CompactSet build_Ek(const SftGraph& g, const SymbolicPoint& y,
                    std::int64_t max_gap, std::int64_t k) {
  if (max_gap < 1) throw InputError("E_k needs M >= 1");
  if (k < 0) throw InputError("E_k needs k >= 0");
  if (!y.is_admissible_in(g)) {
    throw InputError("E_k base point is not in the shift space");
  }
  std::vector<SymbolicPoint> pts;
  pts.reserve(static_cast<std::size_t>(max_gap + k + 1));
  for (std::int64_t i = 0; i <= max_gap + k; ++i) pts.push_back(shift(y, -i));
  return CompactSet(std::move(pts));
}

bool HyperRefutation::all_unsat() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const ConstantVerdict& v) { return v.sat; });
}

GapVerdict decide_hyper_gap(const SftGraph& g, const SymbolicPoint& x,
                            const SymbolicPoint& y, Resolution n,
                            std::int64_t max_constant, std::int64_t k,
                            std::int64_t gap) {
  if (!is_irreducible(g)) {
    throw HypothesisError("hyperspace refutation requires an irreducible graph");
  }
  const CompactSet e = build_Ek(g, y, max_constant, k);
  const std::int64_t r = n.window_radius();
  const std::int64_t span = max_constant + k;  // block length M + k
  // Coordinates -r .. gap + span + r of a candidate point matter.
  const std::int64_t first = -r;
  const auto width = static_cast<std::size_t>(gap + span + 2 * r + 1);

  // Window of sigma^time(candidate) at index `t` is close to sigma^l(e).
  auto window_matches = [&](const Word& w, std::int64_t t,
                            const SymbolicPoint& p, std::int64_t l) {
    for (std::int64_t kk = -r; kk <= r; ++kk)
      if (w[static_cast<std::size_t>(t + kk - first)] != p.at(l + kk))
        return false;
    return true;
  };

  // Maximal candidate set: depth-first over admissible words, pruning as
  // soon as a time window is complete.
  std::vector<Word> candidates;
  Word w(width);
  std::function<void(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == width) {
      candidates.push_back(w);
      return;
    }
    const std::int64_t pos = first + static_cast<std::int64_t>(idx);
    auto place = [&](Symbol s) {
      w[idx] = s;
      const std::int64_t i = pos - r - gap;  // time whose window just closed
      if (i >= 0 && i <= span) {
        const bool near_some = std::any_of(
            e.begin(), e.end(),
            [&](const SymbolicPoint& el) { return window_matches(w, gap + i, el, i); });
        if (!near_some) return;
      }
      extend(idx + 1);
    };
    if (pos <= r) {
      const Symbol s = x.at(pos);
      if (idx == 0 || g.has_edge(w[idx - 1], s)) place(s);
      return;
    }
    for (Symbol s : g.successors(w[idx - 1])) place(s);
  };
  extend(0);

  GapVerdict verdict;
  verdict.gap = gap;
  if (candidates.empty()) {
    verdict.uncovered = UncoveredPair{0, 0, x, false};
    return verdict;
  }

  const auto info = irreducibility_and_period(g);
  const std::size_t period = info.period.value_or(1);
  const auto cls = cyclic_classes(g, period);
  for (std::int64_t i = 0; i <= span; ++i) {
    for (const auto& el : e) {
      const bool covered = std::any_of(
          candidates.begin(), candidates.end(),
          [&](const Word& c) { return window_matches(c, gap + i, el, i); });
      if (covered) continue;
      const std::size_t steps = static_cast<std::size_t>(gap + i);
      const bool blocked =
          (cls[x.at(0)] + steps) % period != cls[el.at(i)] % period;
      verdict.uncovered = UncoveredPair{1, i, shift(el, i), blocked};
      return verdict;
    }
  }

  verdict.sat = true;
  verdict.tracing_set.reserve(candidates.size());
  for (const auto& c : candidates)
    verdict.tracing_set.push_back(shift(point_of(g, c), r));
  return verdict;
}

HyperRefutation refute_hyper_gluing(const SftGraph& g, Resolution n,
                                    std::int64_t max_constant, std::int64_t k) {
  if (!is_irreducible(g)) {
    throw HypothesisError("hyperspace refutation requires an irreducible graph");
  }
  if (max_constant < 1) throw InputError("M_max must be >= 1");
  if (k < 0) throw InputError("k must be >= 0");

  const auto info = irreducibility_and_period(g);
  const std::size_t period = info.period.value_or(1);
  const auto cls = cyclic_classes(g, period);
  const Symbol x_vertex = 0;
  Symbol y_vertex = x_vertex;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const bool distinct = period > 1 ? cls[v] != cls[x_vertex] : v != x_vertex;
    if (distinct) {
      y_vertex = static_cast<Symbol>(v);
      break;
    }
  }

  HyperRefutation out{point_of(g, Word{x_vertex}), point_of(g, Word{y_vertex}),
                      period, n, k, {}};
  for (std::int64_t m = 1; m <= max_constant; ++m) {
    ConstantVerdict cv;
    cv.max_gap = m;
    for (std::int64_t t = 1; t <= m; ++t) {
      cv.gaps.push_back(decide_hyper_gap(g, out.x, out.y, n, m, k, t));
      cv.sat = cv.sat || cv.gaps.back().sat;
    }
    out.verdicts.push_back(std::move(cv));
  }
  return out;
}

}  // namespace sftglue
