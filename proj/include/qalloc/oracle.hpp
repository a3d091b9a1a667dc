#ifndef QALLOC_ORACLE_HPP
#define QALLOC_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "qalloc/instance.hpp"
#include "qalloc/matching.hpp"
#include "qalloc/welfare.hpp"

namespace qalloc {

/// Hard cap on exhaustive enumeration; exceeding it throws BudgetExceeded.
struct EnumerationBudget {
  std::uint64_t max_allocations = 10'000'000;
};

/// n^m, or m! / (k!)^n when balanced. Saturates at UINT64_MAX.
std::uint64_t count_allocations(int agents, int items, bool balanced);

/// Visits every allocation (or every balanced one) exactly once, in
/// lexicographic order of the owner vector.
void for_each_allocation(int agents, int items, bool balanced,
                         const std::function<void(const Allocation&)>& visit,
                         EnumerationBudget budget = {});

struct OracleResult {
  Value welfare = 0;
  Allocation witness;
};

/// Exact optimum of `objective` (max for usw/esw, min for usc/esc). The
/// witness is the first optimal allocation in enumeration order.
OracleResult opt_welfare(const Instance& instance, Objective objective, bool balanced,
                         EnumerationBudget budget = {});

/// Exhaustive best matching by cardinality or weight; at most 20 edges.
Matching brute_matching(const Graph& graph, bool weighted);

}  // namespace qalloc

#endif  // QALLOC_ORACLE_HPP
