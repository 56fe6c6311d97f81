#include "sftglue/sft_graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <limits>

#include "sftglue/error.hpp"

namespace sftglue {

SftGraph::SftGraph(const std::vector<std::vector<int>>& rows)
    : n_(rows.size()) {
  if (n_ == 0) throw InputError("transition matrix must have at least one row");
  if (n_ > std::numeric_limits<Symbol>::max()) {
    throw InputError("transition matrix is too large");
  }
  adjacency_.assign(n_ * n_, 0);
  succ_.resize(n_);
  pred_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw InputError("transition matrix must be square: row " +
                       std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n_));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const int e = rows[i][j];
      if (e != 0 && e != 1) {
        throw InputError("transition matrix entry (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ") is " +
                         std::to_string(e) + ", expected 0 or 1");
      }
      if (e == 1) {
        adjacency_[i * n_ + j] = 1;
        succ_[i].push_back(static_cast<Symbol>(j));
        pred_[j].push_back(static_cast<Symbol>(i));
      }
    }
  }
}

SftGraph SftGraph::full_shift(std::size_t symbols) {
  return SftGraph(std::vector<std::vector<int>>(symbols,
                                                std::vector<int>(symbols, 1)));
}

std::size_t SftGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(adjacency_.begin(), adjacency_.end(), std::uint8_t{1}));
}

std::vector<std::vector<int>> SftGraph::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = adjacency_[i * n_ + j];
  return out;
}

bool SftGraph::admits(std::span<const Symbol> w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= n_) return false;
    if (i > 0 && !has_edge(w[i - 1], w[i])) return false;
  }
  return true;
}

EssentialSubgraph essential_subgraph(const SftGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> out(n), in(n);
  std::deque<Symbol> dead;
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = g.out_degree(static_cast<Symbol>(v));
    in[v] = g.in_degree(static_cast<Symbol>(v));
    if (out[v] == 0 || in[v] == 0) {
      alive[v] = false;
      dead.push_back(static_cast<Symbol>(v));
    }
  }
  while (!dead.empty()) {
    const Symbol v = dead.front();
    dead.pop_front();
    for (Symbol w : g.successors(v)) {
      if (alive[w] && --in[w] == 0) {
        alive[w] = false;
        dead.push_back(w);
      }
    }
    for (Symbol u : g.predecessors(v)) {
      if (alive[u] && --out[u] == 0) {
        alive[u] = false;
        dead.push_back(u);
      }
    }
  }

  EssentialSubgraph result;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) result.original.push_back(static_cast<Symbol>(v));
  if (result.original.empty()) return result;

  const std::size_t m = result.original.size();
  std::vector<std::vector<int>> rows(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      rows[i][j] = g.has_edge(result.original[i], result.original[j]) ? 1 : 0;
  result.graph.emplace(rows);
  return result;
}

bool is_essential(const SftGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto s = static_cast<Symbol>(v);
    if (g.out_degree(s) == 0 || g.in_degree(s) == 0) return false;
  }
  return true;
}

std::vector<std::vector<Symbol>> strongly_connected_components(
    const SftGraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.size();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Symbol> stack;
  std::vector<std::vector<Symbol>> components;
  int counter = 0;

  struct Frame {
    Symbol v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{static_cast<Symbol>(root), 0}};
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<Symbol>(root));
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto succ = g.successors(f.v);
      if (f.next < succ.size()) {
        const Symbol w = succ[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Symbol v = f.v;
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Symbol> comp;
        Symbol w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

bool is_irreducible(const SftGraph& g) {
  return g.edge_count() > 0 && strongly_connected_components(g).size() == 1;
}

std::vector<Word> admissible_words(const SftGraph& g, std::size_t length) {
  std::vector<Word> out;
  if (length == 0) return out;
  Word w;
  w.reserve(length);
  std::function<void()> extend = [&] {
    if (w.size() == length) {
      out.push_back(w);
      return;
    }
    const auto next = w.empty() ? std::span<const Symbol>{}
                                : g.successors(w.back());
    if (w.empty()) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        w.push_back(static_cast<Symbol>(v));
        extend();
        w.pop_back();
      }
      return;
    }
    for (Symbol v : next) {
      w.push_back(v);
      extend();
      w.pop_back();
    }
  };
  extend();
  return out;
}

std::vector<int> bfs_distances(const SftGraph& g, Symbol from) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Symbol> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Symbol v = queue.front();
    queue.pop_front();
    for (Symbol w : g.successors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

// Distances to `to` along reversed edges.
std::vector<int> distances_to(const SftGraph& g, Symbol to) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Symbol> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    const Symbol v = queue.front();
    queue.pop_front();
    for (Symbol u : g.predecessors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

Word shortest_walk(const SftGraph& g, Symbol from, Symbol to) {
  const auto dist = distances_to(g, to);
  // The first step is forced to be an edge even when from == to.
  int best = -1;
  for (Symbol w : g.successors(from)) {
    if (dist[w] >= 0 && (best < 0 || dist[w] < best)) best = dist[w];
  }
  if (best < 0) return {};
  Word walk;
  Symbol cur = from;
  int remaining = best;
  for (Symbol w : g.successors(cur)) {
    if (dist[w] == remaining) {
      cur = w;
      break;
    }
  }
  walk.push_back(cur);
  while (remaining > 0) {
    --remaining;
    for (Symbol w : g.successors(cur)) {
      if (dist[w] == remaining) {
        cur = w;
        break;
      }
    }
    walk.push_back(cur);
  }
  return walk;
}

std::string format_word(std::span<const Symbol> w) {
  const bool compact = std::all_of(w.begin(), w.end(),
                                   [](Symbol s) { return s < 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(static_cast<unsigned>(w[i]) + 1);
  }
  return out;
}

Word parse_word(const std::string& text) {
  if (text.empty()) throw InputError("empty word");
  Word w;
  auto push_label = [&](std::string_view label) {
    unsigned value = 0;
    const auto [ptr, ec] =
        std::from_chars(label.data(), label.data() + label.size(), value);
    if (ec != std::errc{} || ptr != label.data() + label.size() ||
        label.empty()) {
      throw InputError("invalid symbol '" + std::string(label) +
                       "' in word \"" + text + "\"");
    }
    if (value == 0 || value > std::numeric_limits<Symbol>::max()) {
      throw InputError("symbol labels are 1-based; got " +
                       std::string(label) + " in word \"" + text + "\"");
    }
    w.push_back(static_cast<Symbol>(value - 1));
  };
  if (text.find(',') == std::string::npos) {
    for (char c : text) push_label(std::string_view(&c, 1));
  } else {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      push_label(std::string_view(text).substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return w;
}

}  // namespace sftglue
