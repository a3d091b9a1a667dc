#include "qalloc/usw.hpp"

#include <algorithm>
#include <numeric>

#include "qalloc/errors.hpp"
#include "qalloc/esw.hpp"
#include "qalloc/matching.hpp"
#include "qalloc/welfare.hpp"

namespace qalloc {

namespace {

void require_goods(const Instance& instance, const char* who) {
  if (instance.kind() != Kind::goods) {
    throw InvalidInput(std::string(who) + " needs a goods instance");
  }
}

SolveReport finish(const Instance& instance, Allocation allocation, std::string algorithm) {
  SolveReport report;
  report.welfare = usw(instance, allocation);
  report.allocation = std::move(allocation);
  report.algorithm = std::move(algorithm);
  return report;
}

// Agents on the left (vertices 0..n-1), items on the right (n..n+m-1); one
// edge per (agent, item) pair, agent-major.
Graph agent_item_graph(const Instance& instance, const std::vector<int>& agents) {
  const int n = instance.agents();
  const int m = instance.items();
  std::vector<Edge> edges;
  for (int a : agents) {
    for (int g = 0; g < m; ++g) edges.push_back({a, n + g, instance.value(a, g)});
  }
  std::vector<bool> left(n + m, false);
  std::fill(left.begin(), left.begin() + n, true);
  return Graph(n + m, std::move(edges), std::move(left));
}

// Item each agent is matched to (-1 if none).
std::vector<int> matched_items(const Instance& instance, const Graph& graph,
                               const Matching& matching) {
  std::vector<int> item(instance.agents(), -1);
  for (int id : matching.edges) {
    const Edge& e = graph.edges()[id];
    item[e.u] = e.v - instance.agents();
  }
  return item;
}

}  // namespace

int demand_quota(const Quantile& tau, int bundle_size) {
  const auto idx = tau.is_zero() ? 0 : quantile_index(tau, bundle_size);
  return static_cast<int>(std::min<std::int64_t>(bundle_size, bundle_size - idx + 1));
}

SolveReport greedy_balanced_usw(const Instance& instance) {
  require_goods(instance, "greedy_balanced_usw");
  const int n = instance.agents();
  const int m = instance.items();
  const int k = instance.balanced_size();

  Allocation alloc{std::vector<int>(m, -1)};
  std::vector<bool> assigned(n, false);
  std::vector<int> size(n, 0);

  for (int round = 0; round < n; ++round) {
    int best_agent = -1;
    Value best_score = -1;
    std::vector<int> best_demand;
    for (int i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      std::vector<int> pool;
      for (int g = 0; g < m; ++g) {
        if (alloc.owner[g] < 0) pool.push_back(g);
      }
      const int quota = demand_quota(instance.quantile(i), k);
      std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
        return instance.value(i, a) > instance.value(i, b);
      });
      pool.resize(quota);
      const Value score = instance.value(i, pool.back());
      if (score > best_score) {
        best_score = score;
        best_agent = i;
        best_demand = std::move(pool);
      }
    }
    assigned[best_agent] = true;
    for (int g : best_demand) alloc.owner[g] = best_agent;
    size[best_agent] = static_cast<int>(best_demand.size());
  }

  int next = 0;
  for (int g = 0; g < m; ++g) {
    if (alloc.owner[g] >= 0) continue;
    while (size[next] >= k) next = (next + 1) % n;
    alloc.owner[g] = next;
    ++size[next];
    next = (next + 1) % n;
  }
  return finish(instance, std::move(alloc), "greedy");
}

SolveReport scapegoat_usw(const Instance& instance) {
  require_goods(instance, "scapegoat_usw");
  const int n = instance.agents();
  if (n < 2) throw InvalidInput("scapegoat_usw needs at least two agents");

  SolveReport best;
  bool have = false;
  for (int goat = 0; goat < n; ++goat) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j != goat) others.push_back(j);
    }
    const Graph graph = agent_item_graph(instance, others);
    const auto item = matched_items(instance, graph, max_weight_bipartite(graph));

    Allocation alloc{std::vector<int>(instance.items(), goat)};
    for (int j : others) {
      if (item[j] >= 0) alloc.owner[item[j]] = j;
    }
    const Value w = usw(instance, alloc);
    if (!have || w > best.welfare) {
      best = finish(instance, std::move(alloc), "scapegoat");
      have = true;
    }
  }
  return best;
}

SolveReport optimistic_exact_usw(const Instance& instance) {
  require_goods(instance, "optimistic_exact_usw");
  const auto& qs = instance.quantiles();
  const auto it = std::find_if(qs.begin(), qs.end(), [](const Quantile& q) { return q.is_one(); });
  if (it == qs.end()) throw InvalidInput("optimistic_exact_usw needs an agent with tau = 1");
  const int optimist = static_cast<int>(it - qs.begin());

  std::vector<int> all(instance.agents());
  std::iota(all.begin(), all.end(), 0);
  const Graph graph = agent_item_graph(instance, all);
  const auto item = matched_items(instance, graph, max_weight_bipartite(graph));

  Allocation alloc{std::vector<int>(instance.items(), optimist)};
  for (int j = 0; j < instance.agents(); ++j) {
    if (item[j] >= 0) alloc.owner[item[j]] = j;
  }
  return finish(instance, std::move(alloc), "optimistic");
}

SolveReport identical_binary_usw_unbalanced(const Instance& instance) {
  require_goods(instance, "identical_binary_usw_unbalanced");
  if (!instance.has_identical_rows() || !instance.is_homogeneous()) {
    throw InvalidInput("identical_binary_usw_unbalanced needs identical rows and quantiles");
  }
  if (!instance.is_binary()) {
    throw InvalidInput("identical_binary_usw_unbalanced needs a 0/1 value matrix");
  }
  const int n = instance.agents();

  const SolveReport egal = identical_unbalanced_esw_binary(instance);
  if (egal.feasible) return finish(instance, egal.allocation, "identical");

  std::vector<int> ones, zeros;
  for (int g = 0; g < instance.items(); ++g) {
    (instance.value(0, g) == 1 ? ones : zeros).push_back(g);
  }
  Allocation alloc{std::vector<int>(instance.items(), n - 1)};
  const int r = static_cast<int>(ones.size());
  if (r > n - 1) {
    // n-1 agents get a single 1-item; the last agent takes everything else.
    for (int i = 0; i < n - 1; ++i) alloc.owner[ones[i]] = i;
  } else {
    // r agents get a single 1-item; zeros are dealt among the remaining n-r.
    for (int i = 0; i < r; ++i) alloc.owner[ones[i]] = i;
    for (std::size_t z = 0; z < zeros.size(); ++z) {
      alloc.owner[zeros[z]] = r + static_cast<int>(z % (n - r));
    }
  }
  return finish(instance, std::move(alloc), "identical");
}

}  // namespace qalloc
