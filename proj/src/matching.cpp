#include "qalloc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <utility>

#include "qalloc/errors.hpp"

namespace qalloc {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InvalidInput("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("self-loop on vertex " + std::to_string(e.u));
    if (e.weight < 0) throw InvalidInput("negative edge weight");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InvalidInput("parallel edge between " + std::to_string(e.u) + " and " +
                         std::to_string(e.v));
    }
  }
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<bool> left)
    : Graph(vertex_count, std::move(edges)) {
  if (static_cast<int>(left.size()) != vertex_count_) {
    throw InvalidInput("bipartition must label every vertex");
  }
  for (const Edge& e : edges_) {
    if (left[e.u] == left[e.v]) throw InvalidInput("edge does not cross the bipartition");
  }
  left_ = std::move(left);
}

bool is_matching(const Graph& graph, std::span<const int> edge_ids) {
  std::vector<bool> used(graph.vertex_count(), false);
  std::set<int> ids;
  for (int id : edge_ids) {
    if (id < 0 || id >= graph.edge_count() || !ids.insert(id).second) return false;
    const Edge& e = graph.edges()[id];
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

std::int64_t total_weight(const Graph& graph, std::span<const int> edge_ids) {
  std::int64_t w = 0;
  for (int id : edge_ids) w += graph.edges()[id].weight;
  return w;
}

std::vector<int> mates(const Graph& graph, const Matching& matching) {
  std::vector<int> mate(graph.vertex_count(), -1);
  for (int id : matching.edges) {
    const Edge& e = graph.edges()[id];
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

Matching max_cardinality_bipartite(const Graph& graph) {
  if (!graph.has_bipartition()) {
    throw InvalidInput("max_cardinality_bipartite needs a bipartition");
  }
  const int n = graph.vertex_count();
  // adjacency of left vertices: (right vertex, edge id), in edge order
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int id = 0; id < graph.edge_count(); ++id) {
    const Edge& e = graph.edges()[id];
    const int l = graph.on_left(e.u) ? e.u : e.v;
    const int r = l == e.u ? e.v : e.u;
    adj[l].emplace_back(r, id);
  }

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate(n, -1), via(n, -1), dist(n, kInf);
  std::vector<std::size_t> cursor(n, 0);

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int v = 0; v < n; ++v) {
      if (!graph.on_left(v)) continue;
      if (mate[v] < 0) {
        dist[v] = 0;
        q.push(v);
      } else {
        dist[v] = kInf;
      }
    }
    while (!q.empty()) {
      const int l = q.front();
      q.pop();
      for (auto [r, id] : adj[l]) {
        const int next = mate[r];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int l) -> bool {
    for (; cursor[l] < adj[l].size(); ++cursor[l]) {
      auto [r, id] = adj[l][cursor[l]];
      const int next = mate[r];
      if (next < 0 || (dist[next] == dist[l] + 1 && self(self, next))) {
        mate[l] = r;
        mate[r] = l;
        via[l] = id;
        ++cursor[l];
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int v = 0; v < n; ++v) {
      if (graph.on_left(v) && mate[v] < 0) dfs(dfs, v);
    }
  }

  Matching out;
  for (int v = 0; v < n; ++v) {
    if (graph.on_left(v) && mate[v] >= 0) out.edges.push_back(via[v]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.weight = total_weight(graph, out.edges);
  return out;
}

namespace detail {

std::int64_t hungarian_value(int vertex_count, std::span<const Edge> edges,
                             const std::vector<bool>& left) {
  // Compress to vertices that carry an edge; rows are the smaller side.
  std::vector<int> row_of(vertex_count, -1), col_of(vertex_count, -1);
  int rows = 0, cols = 0;
  for (const Edge& e : edges) {
    const int l = left[e.u] ? e.u : e.v;
    const int r = l == e.u ? e.v : e.u;
    if (row_of[l] < 0) row_of[l] = rows++;
    if (col_of[r] < 0) col_of[r] = cols++;
  }
  if (rows == 0) return 0;
  const bool transpose = rows > cols;
  const int n = transpose ? cols : rows;
  const int m = transpose ? rows : cols;

  // 1-based cost matrix, cost = -weight; absent pairs cost 0 (= unmatched).
  std::vector<std::vector<std::int64_t>> cost(n + 1, std::vector<std::int64_t>(m + 1, 0));
  for (const Edge& e : edges) {
    const int l = left[e.u] ? e.u : e.v;
    const int r = l == e.u ? e.v : e.u;
    int i = row_of[l] + 1, j = col_of[r] + 1;
    if (transpose) std::swap(i, j);
    cost[i][j] = -e.weight;
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      std::int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::int64_t best = 0;
  for (int j = 1; j <= m; ++j) {
    if (p[j] != 0) best -= cost[p[j]][j];
  }
  return best;
}

}  // namespace detail

namespace {

// Walks edges in index order and keeps e whenever an optimum consistent with
// the earlier decisions contains it. `optimum` maps an edge list to the best
// matching weight on it.
template <class Optimum>
Matching canonical_matching(const Graph& graph, Optimum optimum) {
  const auto& edges = graph.edges();
  std::vector<bool> blocked(graph.vertex_count(), false);

  auto pending = [&](int from, int skip_u, int skip_v) {
    std::vector<Edge> out;
    for (int id = from; id < graph.edge_count(); ++id) {
      const Edge& e = edges[id];
      if (blocked[e.u] || blocked[e.v]) continue;
      if (e.u == skip_u || e.u == skip_v || e.v == skip_u || e.v == skip_v) continue;
      out.push_back(e);
    }
    return out;
  };

  std::int64_t target = optimum(pending(0, -1, -1));
  Matching out;
  for (int id = 0; id < graph.edge_count() && target >= 0; ++id) {
    const Edge& e = edges[id];
    if (blocked[e.u] || blocked[e.v]) continue;
    if (e.weight + optimum(pending(id + 1, e.u, e.v)) == target) {
      out.edges.push_back(id);
      target -= e.weight;
      blocked[e.u] = blocked[e.v] = true;
    }
  }
  out.weight = total_weight(graph, out.edges);
  return out;
}

}  // namespace

Matching max_weight_bipartite(const Graph& graph) {
  if (!graph.has_bipartition()) throw InvalidInput("max_weight_bipartite needs a bipartition");
  std::vector<bool> left(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) left[v] = graph.on_left(v);
  return canonical_matching(graph, [&](const std::vector<Edge>& edges) {
    return detail::hungarian_value(graph.vertex_count(), edges, left);
  });
}

Matching max_weight_general(const Graph& graph) {
  return canonical_matching(graph, [&](const std::vector<Edge>& edges) {
    const auto mate = detail::blossom_mates(graph.vertex_count(), edges);
    std::int64_t w = 0;
    for (const Edge& e : edges) {
      if (mate[e.u] == e.v) w += e.weight;
    }
    return w;
  });
}

}  // namespace qalloc
