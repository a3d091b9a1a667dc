#include "qalloc/threshold_search.hpp"

#include <algorithm>

#include "qalloc/errors.hpp"
#include "qalloc/welfare.hpp"

namespace qalloc {

std::vector<Value> threshold_candidates(const Instance& instance) {
  std::vector<Value> out;
  for (Value v : instance.values()) {
    if (v > 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SolveReport maximize_by_threshold(const Instance& instance, const BinaryDecider& decide,
                                  std::string algorithm) {
  if (instance.kind() != Kind::goods) throw InvalidInput("ESW search needs goods");
  const auto nus = threshold_candidates(instance);

  // Invariant: candidates below lo are feasible, from hi on infeasible.
  std::size_t lo = 0, hi = nus.size();
  SolveReport best;
  bool found = false;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    SolveReport probe = decide(threshold_binary(instance, nus[mid]));
    if (probe.feasible) {
      best = std::move(probe);
      found = true;
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (!found) best = decide(threshold_binary(instance, nus.empty() ? 1 : nus.front()));

  best.welfare = esw(instance, best.allocation);
  best.algorithm = std::move(algorithm);
  best.feasible = true;
  return best;
}

SolveReport minimize_by_threshold(const Instance& instance, const BinaryDecider& decide,
                                  std::string algorithm) {
  if (instance.kind() != Kind::chores) throw InvalidInput("ESC search needs chores");
  std::vector<Value> costs = threshold_candidates(instance);
  costs.insert(costs.begin(), 0);

  // Invariant: costs below lo are infeasible, from hi on feasible.
  std::size_t lo = 0, hi = costs.size() - 1;
  SolveReport best = decide(threshold_binary(instance, costs.back() + 1));
  if (!best.feasible) throw std::logic_error("ESC decider rejected an all-zero instance");
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    SolveReport probe = decide(threshold_binary(instance, costs[mid] + 1));
    if (probe.feasible) {
      best = std::move(probe);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  best.welfare = esc(instance, best.allocation);
  best.algorithm = std::move(algorithm);
  best.feasible = true;
  return best;
}

}  // namespace qalloc
