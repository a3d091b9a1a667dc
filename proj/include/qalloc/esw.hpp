#ifndef QALLOC_ESW_HPP
#define QALLOC_ESW_HPP

#include <vector>

#include "qalloc/instance.hpp"

namespace qalloc {

/// M_0: items every agent values 0. M_1: the rest.
struct ZeroOnePartition {
  std::vector<int> zeros;
  std::vector<int> ones;
};

ZeroOnePartition zero_one_partition(const Instance& instance);

// --- balanced -------------------------------------------------------------

/// Binary goods, n | m. Each agent needs k_i = min(k, k - ceil(tau_i k) + 1)
/// items it values 1; a bipartite matching with k_i copies per agent decides
/// whether every agent can get them. Heterogeneous quantiles are fine.
SolveReport balanced_esw_binary(const Instance& instance);

/// Maximum balanced ESW for arbitrary goods via threshold search.
SolveReport balanced_esw(const Instance& instance);

// --- unbalanced, homogeneous quantile, binary goods --------------------------

/// tau = t/(t+1). Feasible iff every agent can be matched to an item it values
/// 1 and |M_0| <= t|M_1| - n; every extra 1-item then carries up to t zeros.
SolveReport unbalanced_esw_binary_frac(const Instance& instance, int t);

/// tau = 1/3. A zero must be offset by two 1-items valued by the same agent;
/// decided by one maximum weight matching on a non-bipartite graph.
SolveReport unbalanced_esw_binary_third(const Instance& instance);

/// tau = 0: feasible iff M_0 is empty and an agent-saturating matching exists.
SolveReport unbalanced_esw_binary_tau0(const Instance& instance);

/// tau = 1: feasible iff an agent-saturating matching exists.
SolveReport unbalanced_esw_binary_tau1(const Instance& instance);

/// Which binary routine handles the instance's (homogeneous) quantile.
enum class EswFamily { tau0, third, frac, tau1 };

/// Throws Unsupported ("intractable quantile") outside {0, 1/3, 1} and
/// {t/(t+1)}, and for heterogeneous quantiles.
EswFamily esw_family(const Instance& instance);

/// Maximum unbalanced ESW for goods with a homogeneous tractable quantile.
SolveReport unbalanced_esw(const Instance& instance);

// --- identical valuations ------------------------------------------------------

/// Identical binary rows and quantiles, unbalanced. An agent holding l zeros
/// needs the smallest s with ceil(tau s) > l items in total; the zeros are
/// split among agents (small DP) to minimise the 1-items this uses.
SolveReport identical_unbalanced_esw_binary(const Instance& instance);

/// Threshold-search wrapper for arbitrary identical values.
SolveReport identical_unbalanced_esw(const Instance& instance);

}  // namespace qalloc

#endif  // QALLOC_ESW_HPP
