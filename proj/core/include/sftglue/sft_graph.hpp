#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sftglue {

/// A vertex of the transition graph. Internally 0-based; literals and
/// reports use the 1-based labels {1..n}.
using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

/// Transition graph of a vertex shift: entry (i, j) is 1 iff i -> j is an
/// admissible transition. The shift space is the set of bi-infinite walks.
class SftGraph {
 public:
  /// Throws InputError unless `rows` is a non-empty square 0/1 matrix.
  explicit SftGraph(const std::vector<std::vector<int>>& rows);

  static SftGraph full_shift(std::size_t symbols);

  std::size_t size() const noexcept { return n_; }
  bool has_edge(Symbol from, Symbol to) const noexcept {
    return adjacency_[static_cast<std::size_t>(from) * n_ + to] != 0;
  }
  std::span<const Symbol> successors(Symbol v) const { return succ_[v]; }
  std::span<const Symbol> predecessors(Symbol v) const { return pred_[v]; }
  std::size_t out_degree(Symbol v) const { return succ_[v].size(); }
  std::size_t in_degree(Symbol v) const { return pred_[v].size(); }
  std::size_t edge_count() const noexcept;

  std::vector<std::vector<int>> rows() const;

  /// True iff every consecutive pair of `w` is an edge and every symbol is
  /// a vertex. The empty word is admissible.
  bool admits(std::span<const Symbol> w) const;

  friend bool operator==(const SftGraph&, const SftGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Symbol>> succ_;
  std::vector<std::vector<Symbol>> pred_;
};

/// The subgraph left after iteratively deleting vertices with no
/// successor or no predecessor, together with the original labels of the
/// surviving vertices (ascending).
struct EssentialSubgraph {
  std::optional<SftGraph> graph;  // empty when every vertex was trimmed
  std::vector<Symbol> original;
};

EssentialSubgraph essential_subgraph(const SftGraph& g);

/// Every vertex has in-degree >= 1 and out-degree >= 1.
bool is_essential(const SftGraph& g);

/// Strongly connected with at least one edge. Irreducible graphs are
/// essential.
bool is_irreducible(const SftGraph& g);

/// Strongly connected components, each listed in ascending order; the list
/// of components is ordered by smallest member.
std::vector<std::vector<Symbol>> strongly_connected_components(
    const SftGraph& g);

/// Every admissible word of length `length`, in lexicographic order.
/// `length` must be >= 1.
std::vector<Word> admissible_words(const SftGraph& g, std::size_t length);

/// Lexicographically least among the shortest walks of length >= 1 from
/// `from` to `to`. The result lists the vertices after `from`, ending with
/// `to`. Empty when `to` is unreachable.
Word shortest_walk(const SftGraph& g, Symbol from, Symbol to);

/// BFS distances (edge count) from `from`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const SftGraph& g, Symbol from);

/// Renders a word with 1-based labels: "121" when every label is a single
/// digit, "10,11,3" otherwise.
std::string format_word(std::span<const Symbol> w);

/// Inverse of format_word. Throws InputError on an empty string, a label
/// of 0, or non-numeric text.
Word parse_word(const std::string& text);

}  // namespace sftglue
