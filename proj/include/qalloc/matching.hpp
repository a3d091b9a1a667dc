#ifndef QALLOC_MATCHING_HPP
#define QALLOC_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qalloc {

struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 1;
};

/// Simple undirected graph with non-negative integer weights and an optional
/// bipartition. No self-loops, at most one edge per unordered pair.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);
  /// Bipartite graph: `left[v]` tells which side v is on; every edge must cross.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<bool> left);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_bipartition() const { return left_.has_value(); }
  bool on_left(int v) const { return (*left_)[v]; }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::optional<std::vector<bool>> left_;
};

/// Indices into Graph::edges(), ascending.
struct Matching {
  std::vector<int> edges;
  std::int64_t weight = 0;

  int size() const { return static_cast<int>(edges.size()); }
};

bool is_matching(const Graph& graph, std::span<const int> edge_ids);
std::int64_t total_weight(const Graph& graph, std::span<const int> edge_ids);

/// mate[v] = partner vertex or -1.
std::vector<int> mates(const Graph& graph, const Matching& matching);

/// Hopcroft-Karp. Requires a bipartition.
Matching max_cardinality_bipartite(const Graph& graph);

/// Maximum total weight (not necessarily perfect). Requires a bipartition.
/// Among optimal matchings returns the one that greedily prefers the smallest
/// edge indices: edge e is kept iff some optimum agrees with every decision
/// taken for edges 0..e-1 and contains e.
Matching max_weight_bipartite(const Graph& graph);

/// Maximum total weight on an arbitrary graph (Edmonds' blossom algorithm with
/// integer duals), with the same tie-break as max_weight_bipartite.
Matching max_weight_general(const Graph& graph);

namespace detail {

/// Optimal matching weight via the Hungarian method. Bipartite only.
std::int64_t hungarian_value(int vertex_count, std::span<const Edge> edges,
                             const std::vector<bool>& left);

/// Maximum weight matching on a general graph; returns mate per vertex.
std::vector<int> blossom_mates(int vertex_count, std::span<const Edge> edges);

}  // namespace detail

}  // namespace qalloc

#endif  // QALLOC_MATCHING_HPP
