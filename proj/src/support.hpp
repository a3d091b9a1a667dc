// Helpers shared by the solver translation units.
#ifndef QALLOC_SRC_SUPPORT_HPP
#define QALLOC_SRC_SUPPORT_HPP

#include <string>
#include <vector>

#include "qalloc/errors.hpp"
#include "qalloc/instance.hpp"
#include "qalloc/matching.hpp"

namespace qalloc::support {

inline void require_kind(const Instance& instance, Kind kind, const std::string& who) {
  if (instance.kind() != kind) {
    throw InvalidInput(who + " needs a " + to_string(kind) + " instance");
  }
}

inline void require_binary(const Instance& instance, const std::string& who) {
  if (!instance.is_binary()) throw InvalidInput(who + " needs a 0/1 matrix");
}

inline void require_quantile(const Instance& instance, const Quantile& tau,
                             const std::string& who) {
  for (const Quantile& q : instance.quantiles()) {
    if (q != tau) {
      throw InvalidInput(who + " needs every agent at tau = " + tau.to_string() + " (found " +
                         q.to_string() + ")");
    }
  }
}

/// Deals unowned items (owner -1), ascending, round-robin to agents holding
/// fewer than k items.
inline void pad_round_robin(Allocation& alloc, int agents, int k) {
  std::vector<int> size(agents, 0);
  for (int a : alloc.owner) {
    if (a >= 0) ++size[a];
  }
  int next = 0;
  for (int& a : alloc.owner) {
    if (a >= 0) continue;
    while (size[next] >= k) next = (next + 1) % agents;
    a = next;
    ++size[next];
    next = (next + 1) % agents;
  }
}

/// First agent with entry `entry` for item g, or -1.
inline int first_agent_with(const Instance& instance, int g, Value entry) {
  for (int i = 0; i < instance.agents(); ++i) {
    if (instance.value(i, g) == entry) return i;
  }
  return -1;
}

/// Maximum cardinality matching between agents and the items for which the
/// agent's entry equals `entry`. Returns the matched item per agent (-1 if none).
inline std::vector<int> agent_matching(const Instance& instance, Value entry) {
  const int n = instance.agents();
  const int m = instance.items();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < m; ++g) {
      if (instance.value(i, g) == entry) edges.push_back({i, n + g, 1});
    }
  }
  std::vector<bool> left(n + m, false);
  std::fill(left.begin(), left.begin() + n, true);
  const Graph graph(n + m, std::move(edges), std::move(left));
  std::vector<int> item(n, -1);
  for (int id : max_cardinality_bipartite(graph).edges) {
    item[graph.edges()[id].u] = graph.edges()[id].v - n;
  }
  return item;
}

/// Balanced decision shared by goods (edges on entry 1) and chores (edges on
/// entry 0): k_i copies per agent, saturation decides.
SolveReport balanced_copies_decision(const Instance& instance, Value entry);

}  // namespace qalloc::support

#endif  // QALLOC_SRC_SUPPORT_HPP
