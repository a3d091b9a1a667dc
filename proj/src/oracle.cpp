#include "qalloc/oracle.hpp"

#include <limits>

#include "qalloc/errors.hpp"

namespace qalloc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Visits balanced allocations by choosing an owner for each item in turn,
// skipping agents already holding k items.
void balanced_rec(int g, int k, std::vector<int>& load, Allocation& alloc,
                  const std::function<void(const Allocation&)>& visit) {
  if (g == static_cast<int>(alloc.owner.size())) {
    visit(alloc);
    return;
  }
  for (int a = 0; a < static_cast<int>(load.size()); ++a) {
    if (load[a] == k) continue;
    ++load[a];
    alloc.owner[g] = a;
    balanced_rec(g + 1, k, load, alloc, visit);
    --load[a];
  }
}

}  // namespace

std::uint64_t count_allocations(int agents, int items, bool balanced) {
  if (!balanced) {
    std::uint64_t total = 1;
    for (int g = 0; g < items; ++g) total = saturating_mul(total, agents);
    return total;
  }
  if (items % agents != 0) throw InvalidInput("balanced enumeration needs n | m");
  // Product over agents of C(remaining, k).
  const int k = items / agents;
  std::uint64_t total = 1;
  int remaining = items;
  for (int a = 0; a < agents; ++a) {
    std::uint64_t c = 1;
    for (int j = 1; j <= k; ++j) {
      c = saturating_mul(c, remaining - k + j);
      if (c == kSaturated) return kSaturated;
      c /= j;
    }
    total = saturating_mul(total, c);
    remaining -= k;
  }
  return total;
}

void for_each_allocation(int agents, int items, bool balanced,
                         const std::function<void(const Allocation&)>& visit,
                         EnumerationBudget budget) {
  if (agents < 1 || items < 1) throw InvalidInput("enumeration needs n, m >= 1");
  const std::uint64_t count = count_allocations(agents, items, balanced);
  if (count > budget.max_allocations) {
    throw BudgetExceeded("exhaustive search over " +
                         (count == kSaturated ? std::string("more than 2^64")
                                              : std::to_string(count)) +
                         " allocations exceeds the cap of " +
                         std::to_string(budget.max_allocations));
  }

  Allocation alloc{std::vector<int>(items, 0)};
  if (balanced) {
    std::vector<int> load(agents, 0);
    balanced_rec(0, items / agents, load, alloc, visit);
    return;
  }
  while (true) {
    visit(alloc);
    int g = items - 1;
    while (g >= 0 && alloc.owner[g] == agents - 1) alloc.owner[g--] = 0;
    if (g < 0) return;
    ++alloc.owner[g];
  }
}

OracleResult opt_welfare(const Instance& instance, Objective objective, bool balanced,
                         EnumerationBudget budget) {
  if (instance.kind() != kind_of(objective)) {
    throw InvalidInput(to_string(objective) + " is not defined on " +
                       to_string(instance.kind()));
  }
  const bool minimise = is_cost(objective);
  OracleResult best;
  bool have = false;
  for_each_allocation(
      instance.agents(), instance.items(), balanced,
      [&](const Allocation& alloc) {
        const Value w = evaluate(instance, alloc, objective);
        if (!have || (minimise ? w < best.welfare : w > best.welfare)) {
          best.welfare = w;
          best.witness = alloc;
          have = true;
        }
      },
      budget);
  return best;
}

Matching brute_matching(const Graph& graph, bool weighted) {
  const int e = graph.edge_count();
  if (e > 20) throw BudgetExceeded("brute_matching handles at most 20 edges");

  Matching best;
  std::int64_t best_score = -1;
  std::vector<int> chosen;
  std::vector<bool> used(graph.vertex_count(), false);
  auto rec = [&](auto&& self, int id, std::int64_t score) -> void {
    if (id == e) {
      if (score > best_score) {
        best_score = score;
        best.edges = chosen;
      }
      return;
    }
    const Edge& edge = graph.edges()[id];
    if (!used[edge.u] && !used[edge.v]) {
      used[edge.u] = used[edge.v] = true;
      chosen.push_back(id);
      self(self, id + 1, score + (weighted ? edge.weight : 1));
      chosen.pop_back();
      used[edge.u] = used[edge.v] = false;
    }
    self(self, id + 1, score);
  };
  rec(rec, 0, 0);
  best.weight = total_weight(graph, best.edges);
  return best;
}

}  // namespace qalloc
