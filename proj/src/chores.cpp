#include "qalloc/chores.hpp"

#include <algorithm>
#include <numeric>

#include "qalloc/threshold_search.hpp"
#include "qalloc/welfare.hpp"
#include "support.hpp"

namespace qalloc {

SolveReport balanced_esc_binary(const Instance& instance) {
  support::require_kind(instance, Kind::chores, "balanced_esc_binary");
  support::require_binary(instance, "balanced_esc_binary");
  SolveReport report = support::balanced_copies_decision(instance, 0);
  report.algorithm = "matching";
  return report;
}

SolveReport balanced_esc(const Instance& instance) {
  support::require_kind(instance, Kind::chores, "balanced_esc");
  instance.balanced_size();
  return minimize_by_threshold(instance, balanced_esc_binary, "matching");
}

std::vector<CoverCandidate> cover_candidates(const Instance& instance) {
  std::vector<CoverCandidate> out;
  const int m = instance.items();
  for (int i = 0; i < instance.agents(); ++i) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return instance.value(i, a) < instance.value(i, b);
    });
    for (int len = 1; len <= m; ++len) {
      CoverCandidate c;
      c.agent = i;
      c.length = len;
      c.items.assign(order.begin(), order.begin() + len);
      c.weight = instance.value(i, order[len - 1]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

SolveReport usc_tau0_setcover(const Instance& instance) {
  support::require_kind(instance, Kind::chores, "usc_tau0_setcover");
  support::require_quantile(instance, Quantile::zero(), "usc_tau0_setcover");
  const int n = instance.agents();
  const int m = instance.items();

  const auto candidates = cover_candidates(instance);
  std::vector<bool> covered(m, false);
  int uncovered = m;
  // Longest chosen prefix per agent, and the order agents were first chosen.
  std::vector<int> longest(n, -1);
  std::vector<int> pick_order;

  while (uncovered > 0) {
    int best = -1;
    Value best_w = 0;
    int best_new = 0;
    for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
      int fresh = 0;
      for (int g : candidates[c].items) fresh += covered[g] ? 0 : 1;
      if (fresh == 0) continue;
      // weight/fresh < best_w/best_new, cross-multiplied
      const Value w = candidates[c].weight;
      if (best < 0 || w * best_new < best_w * fresh) {
        best = c;
        best_w = w;
        best_new = fresh;
      }
    }
    const CoverCandidate& pick = candidates[best];
    for (int g : pick.items) {
      if (!covered[g]) {
        covered[g] = true;
        --uncovered;
      }
    }
    if (longest[pick.agent] < 0) pick_order.push_back(pick.agent);
    if (longest[pick.agent] < best) longest[pick.agent] = best;
  }

  Allocation alloc{std::vector<int>(m, -1)};
  for (int agent : pick_order) {
    for (int g : candidates[longest[agent]].items) {
      if (alloc.owner[g] < 0) alloc.owner[g] = agent;
    }
  }
  SolveReport report;
  report.welfare = usc(instance, alloc);
  report.allocation = std::move(alloc);
  report.algorithm = "setcover";
  return report;
}

namespace {

SolveReport chores_report(const Instance& instance, Allocation alloc, bool ok,
                          std::string algorithm) {
  SolveReport report;
  report.welfare = esc(instance, alloc);
  report.allocation = std::move(alloc);
  report.algorithm = std::move(algorithm);
  report.feasible = ok;
  return report;
}

}  // namespace

SolveReport esc_tau0_binary(const Instance& instance) {
  const std::string who = "esc_tau0_binary";
  support::require_kind(instance, Kind::chores, who);
  support::require_binary(instance, who);
  support::require_quantile(instance, Quantile::zero(), who);

  Allocation alloc{std::vector<int>(instance.items(), 0)};
  for (int g = 0; g < instance.items(); ++g) {
    const int taker = support::first_agent_with(instance, g, 0);
    if (taker < 0) {
      return chores_report(instance, single_owner_allocation(instance.items()), false, "tau0");
    }
    alloc.owner[g] = taker;
  }
  return chores_report(instance, std::move(alloc), true, "tau0");
}

SolveReport esc_tau1_binary(const Instance& instance) {
  const std::string who = "esc_tau1_binary";
  support::require_kind(instance, Kind::chores, who);
  support::require_binary(instance, who);
  support::require_quantile(instance, Quantile::one(), who);

  for (int i = 0; i < instance.agents(); ++i) {
    const auto row = instance.row(i);
    if (std::find(row.begin(), row.end(), 0) != row.end()) {
      return chores_report(instance, Allocation{std::vector<int>(instance.items(), i)}, true,
                           "tau1");
    }
  }
  return chores_report(instance, single_owner_allocation(instance.items()), false, "tau1");
}

SolveReport esc_tau0(const Instance& instance) {
  support::require_kind(instance, Kind::chores, "esc_tau0");
  support::require_quantile(instance, Quantile::zero(), "esc_tau0");
  return minimize_by_threshold(instance, esc_tau0_binary, "tau0");
}

SolveReport esc_tau1(const Instance& instance) {
  support::require_kind(instance, Kind::chores, "esc_tau1");
  support::require_quantile(instance, Quantile::one(), "esc_tau1");
  return minimize_by_threshold(instance, esc_tau1_binary, "tau1");
}

}  // namespace qalloc
