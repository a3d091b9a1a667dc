#ifndef QALLOC_USW_HPP
#define QALLOC_USW_HPP

#include <vector>

#include "qalloc/instance.hpp"

namespace qalloc {

/// Per-agent demand in the balanced greedy: k_i = min(k, k - ceil(tau_i k) + 1),
/// the number of items valued at least x that force a k-bundle's quantile
/// value to be at least x.
int demand_quota(const Quantile& tau, int bundle_size);

/// Greedy balanced USW. Each round every unassigned agent demands its k_i best
/// remaining items (ties to the lower item index) and is scored by the smallest
/// value in that demand; the top scorer (ties to the lower agent index) takes
/// its demand. Leftover items are then dealt round-robin to agents below k
/// items. USW(A) * min(k + 1, n) >= optimal balanced USW.
SolveReport greedy_balanced_usw(const Instance& instance);

/// Scapegoat algorithm for unbalanced USW (n >= 2): for each candidate i, a
/// maximum weight matching of the other agents to single items, with every
/// unmatched item going to i. Returns the best candidate (ties to lower i).
/// n * USW(A) >= (n - 1) * OPT.
SolveReport scapegoat_usw(const Instance& instance);

/// Exact unbalanced USW when some agent has tau = 1: one maximum weight
/// matching of all agents to items; the first tau = 1 agent also absorbs every
/// unmatched item.
SolveReport optimistic_exact_usw(const Instance& instance);

/// Exact unbalanced USW for identical binary valuations.
SolveReport identical_binary_usw_unbalanced(const Instance& instance);

}  // namespace qalloc

#endif  // QALLOC_USW_HPP
