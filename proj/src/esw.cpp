#include "qalloc/esw.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "qalloc/matching.hpp"
#include "qalloc/threshold_search.hpp"
#include "qalloc/usw.hpp"
#include "qalloc/welfare.hpp"
#include "support.hpp"

namespace qalloc {

namespace support {

SolveReport balanced_copies_decision(const Instance& instance, Value entry) {
  const int n = instance.agents();
  const int m = instance.items();
  const int k = instance.balanced_size();

  std::vector<int> copy_owner;
  for (int i = 0; i < n; ++i) {
    copy_owner.insert(copy_owner.end(), demand_quota(instance.quantile(i), k), i);
  }
  const int copies = static_cast<int>(copy_owner.size());
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c) {
    for (int g = 0; g < m; ++g) {
      if (instance.value(copy_owner[c], g) == entry) edges.push_back({c, copies + g, 1});
    }
  }
  std::vector<bool> left(copies + m, false);
  std::fill(left.begin(), left.begin() + copies, true);
  const Graph graph(copies + m, std::move(edges), std::move(left));
  const Matching matching = max_cardinality_bipartite(graph);

  SolveReport report;
  report.feasible = matching.size() == copies;
  if (report.feasible) {
    report.allocation.owner.assign(m, -1);
    for (int id : matching.edges) {
      const Edge& e = graph.edges()[id];
      report.allocation.owner[e.v - copies] = copy_owner[e.u];
    }
    pad_round_robin(report.allocation, n, k);
  } else {
    report.allocation = block_allocation(n, m);
  }
  report.welfare = instance.kind() == Kind::goods ? esw(instance, report.allocation)
                                                  : esc(instance, report.allocation);
  return report;
}

}  // namespace support

using support::first_agent_with;

ZeroOnePartition zero_one_partition(const Instance& instance) {
  ZeroOnePartition part;
  for (int g = 0; g < instance.items(); ++g) {
    (first_agent_with(instance, g, 1) < 0 ? part.zeros : part.ones).push_back(g);
  }
  return part;
}

namespace {

SolveReport infeasible(const Instance& instance, std::string algorithm) {
  SolveReport report;
  report.allocation = single_owner_allocation(instance.items());
  report.welfare = esw(instance, report.allocation);
  report.algorithm = std::move(algorithm);
  report.feasible = false;
  return report;
}

SolveReport feasible(const Instance& instance, Allocation alloc, std::string algorithm) {
  SolveReport report;
  report.welfare = esw(instance, alloc);
  report.allocation = std::move(alloc);
  report.algorithm = std::move(algorithm);
  report.feasible = true;
  return report;
}

void check_binary_goods(const Instance& instance, const std::string& who) {
  support::require_kind(instance, Kind::goods, who);
  support::require_binary(instance, who);
}

// Matched items first, then every remaining 1-item to the first agent valuing it.
Allocation matched_then_valuing(const Instance& instance, const std::vector<int>& item) {
  Allocation alloc{std::vector<int>(instance.items(), -1)};
  for (int i = 0; i < instance.agents(); ++i) alloc.owner[item[i]] = i;
  for (int g = 0; g < instance.items(); ++g) {
    if (alloc.owner[g] < 0) alloc.owner[g] = std::max(0, first_agent_with(instance, g, 1));
  }
  return alloc;
}

bool saturates(const std::vector<int>& item) {
  return std::none_of(item.begin(), item.end(), [](int g) { return g < 0; });
}

}  // namespace

SolveReport balanced_esw_binary(const Instance& instance) {
  check_binary_goods(instance, "balanced_esw_binary");
  SolveReport report = support::balanced_copies_decision(instance, 1);
  report.algorithm = "matching";
  return report;
}

SolveReport balanced_esw(const Instance& instance) {
  support::require_kind(instance, Kind::goods, "balanced_esw");
  instance.balanced_size();
  return maximize_by_threshold(instance, balanced_esw_binary, "matching");
}

SolveReport unbalanced_esw_binary_frac(const Instance& instance, int t) {
  const std::string who = "unbalanced_esw_binary_frac";
  if (t < 1) throw InvalidInput(who + " needs t >= 1");
  check_binary_goods(instance, who);
  support::require_quantile(instance, Quantile(t, t + 1), who);

  const int n = instance.agents();
  const auto part = zero_one_partition(instance);
  const auto item = support::agent_matching(instance, 1);
  const auto zeros = static_cast<std::int64_t>(part.zeros.size());
  const auto ones = static_cast<std::int64_t>(part.ones.size());
  if (!saturates(item) || zeros > t * ones - n) return infeasible(instance, "frac");

  Allocation alloc{std::vector<int>(instance.items(), -1)};
  for (int i = 0; i < n; ++i) alloc.owner[item[i]] = i;
  std::deque<int> rest1, rest0(part.zeros.begin(), part.zeros.end());
  for (int g : part.ones) {
    if (alloc.owner[g] < 0) rest1.push_back(g);
  }

  // Each spare 1-item carries up to t zeros to an agent that values it.
  while (!rest1.empty() && !rest0.empty()) {
    const int g = rest1.front();
    rest1.pop_front();
    const int i = first_agent_with(instance, g, 1);
    alloc.owner[g] = i;
    for (int c = 0; c < t && !rest0.empty(); ++c) {
      alloc.owner[rest0.front()] = i;
      rest0.pop_front();
    }
  }
  // At most t-1 more zeros per agent; the gate bounds what is left by n(t-1).
  for (int i = 0; i < n && !rest0.empty(); ++i) {
    for (int c = 0; c < t - 1 && !rest0.empty(); ++c) {
      alloc.owner[rest0.front()] = i;
      rest0.pop_front();
    }
  }
  if (!rest0.empty()) throw std::logic_error("frac: zeros left after the final spread");
  for (int g : rest1) alloc.owner[g] = first_agent_with(instance, g, 1);

  return feasible(instance, std::move(alloc), "frac");
}

SolveReport unbalanced_esw_binary_third(const Instance& instance) {
  const std::string who = "unbalanced_esw_binary_third";
  check_binary_goods(instance, who);
  support::require_quantile(instance, Quantile(1, 3), who);

  const int n = instance.agents();
  const auto part = zero_one_partition(instance);
  const int x = static_cast<int>(part.ones.size());
  const std::int64_t heavy = x + n + 1;

  // Vertices: 1-items 0..x-1, agents x..x+n-1. Agent-item edges outweigh any
  // set of item-item edges, so a maximum weight matching first saturates as
  // many agents as possible, then maximises the number of item pairs.
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < x; ++a) {
      if (instance.value(i, part.ones[a]) == 1) edges.push_back({x + i, a, heavy});
    }
  }
  for (int a = 0; a < x; ++a) {
    for (int b = a + 1; b < x; ++b) {
      for (int i = 0; i < n; ++i) {
        if (instance.value(i, part.ones[a]) == 1 && instance.value(i, part.ones[b]) == 1) {
          edges.push_back({a, b, 1});
          break;
        }
      }
    }
  }
  const Graph graph(x + n, std::move(edges));
  const Matching matching = max_weight_general(graph);
  const auto zeros = static_cast<std::int64_t>(part.zeros.size());
  if (matching.weight < zeros + n * heavy) return infeasible(instance, "third");

  Allocation alloc{std::vector<int>(instance.items(), -1)};
  std::vector<std::pair<int, int>> pairs;
  for (int id : matching.edges) {
    const Edge& e = graph.edges()[id];
    if (e.u >= x) {
      alloc.owner[part.ones[e.v]] = e.u - x;
    } else {
      pairs.emplace_back(part.ones[e.u], part.ones[e.v]);
    }
  }
  // Each zero rides with one matched pair, handed to an agent valuing both.
  for (std::size_t z = 0; z < part.zeros.size(); ++z) {
    const auto [g, h] = pairs[z];
    int owner = -1;
    for (int i = 0; i < n && owner < 0; ++i) {
      if (instance.value(i, g) == 1 && instance.value(i, h) == 1) owner = i;
    }
    alloc.owner[part.zeros[z]] = alloc.owner[g] = alloc.owner[h] = owner;
  }
  for (int g : part.ones) {
    if (alloc.owner[g] < 0) alloc.owner[g] = first_agent_with(instance, g, 1);
  }
  return feasible(instance, std::move(alloc), "third");
}

SolveReport unbalanced_esw_binary_tau0(const Instance& instance) {
  const std::string who = "unbalanced_esw_binary_tau0";
  check_binary_goods(instance, who);
  support::require_quantile(instance, Quantile::zero(), who);

  const auto item = support::agent_matching(instance, 1);
  if (!zero_one_partition(instance).zeros.empty() || !saturates(item)) {
    return infeasible(instance, "tau0");
  }
  return feasible(instance, matched_then_valuing(instance, item), "tau0");
}

SolveReport unbalanced_esw_binary_tau1(const Instance& instance) {
  const std::string who = "unbalanced_esw_binary_tau1";
  check_binary_goods(instance, who);
  support::require_quantile(instance, Quantile::one(), who);

  const auto item = support::agent_matching(instance, 1);
  if (!saturates(item)) return infeasible(instance, "tau1");
  return feasible(instance, matched_then_valuing(instance, item), "tau1");
}

EswFamily esw_family(const Instance& instance) {
  if (!instance.is_homogeneous()) {
    throw Unsupported("unbalanced ESW needs a homogeneous quantile");
  }
  const Quantile& tau = instance.quantile(0);
  if (tau.is_zero()) return EswFamily::tau0;
  if (tau.is_one()) return EswFamily::tau1;
  if (tau == Quantile(1, 3)) return EswFamily::third;
  if (tau.denominator() == tau.numerator() + 1) return EswFamily::frac;
  throw Unsupported("intractable quantile " + tau.to_string() +
                    ": unbalanced ESW is only solved for tau in {0, 1/3, 1} and t/(t+1)");
}

SolveReport unbalanced_esw(const Instance& instance) {
  support::require_kind(instance, Kind::goods, "unbalanced_esw");
  switch (esw_family(instance)) {
    case EswFamily::tau0:
      return maximize_by_threshold(instance, unbalanced_esw_binary_tau0, "tau0");
    case EswFamily::tau1:
      return maximize_by_threshold(instance, unbalanced_esw_binary_tau1, "tau1");
    case EswFamily::third:
      return maximize_by_threshold(instance, unbalanced_esw_binary_third, "third");
    case EswFamily::frac: {
      const int t = static_cast<int>(instance.quantile(0).numerator());
      return maximize_by_threshold(
          instance, [t](const Instance& bin) { return unbalanced_esw_binary_frac(bin, t); },
          "frac");
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

void check_identical(const Instance& instance, const std::string& who) {
  support::require_kind(instance, Kind::goods, who);
  if (!instance.has_identical_rows() || !instance.is_homogeneous()) {
    throw InvalidInput(who + " needs identical rows and quantiles");
  }
}

// Fewest 1-items a bundle holding `zeros` zeros needs to be worth 1:
// the smallest size s with ceil(tau s) > zeros, minus the zeros.
std::int64_t ones_needed(const Quantile& tau, std::int64_t zeros) {
  return zeros * tau.denominator() / tau.numerator() + 1 - zeros;
}

}  // namespace

SolveReport identical_unbalanced_esw_binary(const Instance& instance) {
  const std::string who = "identical_unbalanced_esw_binary";
  check_identical(instance, who);
  support::require_binary(instance, who);

  const int n = instance.agents();
  const Quantile& tau = instance.quantile(0);
  std::vector<int> ones, zeros;
  for (int g = 0; g < instance.items(); ++g) {
    (instance.value(0, g) == 1 ? ones : zeros).push_back(g);
  }
  const auto r = static_cast<std::int64_t>(ones.size());
  const auto z = static_cast<std::int64_t>(zeros.size());

  // Per agent: how many zeros and ones it receives.
  std::vector<std::int64_t> zero_quota(n), one_quota(n);
  if (tau.is_zero()) {
    if (z > 0 || r < n) return infeasible(instance, "identical");
    std::fill(one_quota.begin(), one_quota.end(), 1);
  } else {
    // ones_needed is a step function, so an even spread of zeros is not
    // always cheapest. cost[i][j]: fewest ones for agents i.. to hold j zeros.
    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max() / 2;
    std::vector<std::vector<std::int64_t>> cost(n + 1, std::vector<std::int64_t>(z + 1, kNone));
    cost[n][0] = 0;
    for (int i = n - 1; i >= 0; --i) {
      for (std::int64_t j = 0; j <= z; ++j) {
        for (std::int64_t l = 0; l <= j; ++l) {
          if (cost[i + 1][j - l] == kNone) continue;
          cost[i][j] = std::min(cost[i][j], ones_needed(tau, l) + cost[i + 1][j - l]);
        }
      }
    }
    if (cost[0][z] > r) return infeasible(instance, "identical");
    std::int64_t left = z;
    for (int i = 0; i < n; ++i) {
      for (std::int64_t l = 0; l <= left; ++l) {
        if (cost[i + 1][left - l] != kNone &&
            ones_needed(tau, l) + cost[i + 1][left - l] == cost[i][left]) {
          zero_quota[i] = l;
          one_quota[i] = ones_needed(tau, l);
          left -= l;
          break;
        }
      }
    }
  }

  Allocation alloc{std::vector<int>(instance.items(), 0)};
  std::size_t zi = 0, oi = 0;
  for (int i = 0; i < n; ++i) {
    for (std::int64_t c = 0; c < zero_quota[i]; ++c) alloc.owner[zeros[zi++]] = i;
    for (std::int64_t c = 0; c < one_quota[i]; ++c) alloc.owner[ones[oi++]] = i;
  }
  // Spare 1-items stay with agent 0; extra ones never lower a bundle's value.
  return feasible(instance, std::move(alloc), "identical");
}

SolveReport identical_unbalanced_esw(const Instance& instance) {
  check_identical(instance, "identical_unbalanced_esw");
  return maximize_by_threshold(instance, identical_unbalanced_esw_binary, "identical");
}

}  // namespace qalloc
