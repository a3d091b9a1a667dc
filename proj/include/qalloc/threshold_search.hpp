#ifndef QALLOC_THRESHOLD_SEARCH_HPP
#define QALLOC_THRESHOLD_SEARCH_HPP

#include <functional>
#include <string>
#include <vector>

#include "qalloc/instance.hpp"

namespace qalloc {

/// Decision procedure on a 0/1 instance; sets SolveReport::feasible when the
/// target (ESW 1 for goods, ESC 0 for chores) is reached.
using BinaryDecider = std::function<SolveReport(const Instance&)>;

/// Distinct positive matrix entries, ascending.
std::vector<Value> threshold_candidates(const Instance& instance);

/// Max ESW by binary search over candidate thresholds nu: the largest nu whose
/// thresholded instance the decider accepts. Feasibility is monotone in nu.
SolveReport maximize_by_threshold(const Instance& instance, const BinaryDecider& decide,
                                  std::string algorithm);

/// Min ESC by binary search over candidate costs c in {0} and the distinct
/// entries: the smallest c with ESC 0 on threshold_binary(instance, c + 1).
SolveReport minimize_by_threshold(const Instance& instance, const BinaryDecider& decide,
                                  std::string algorithm);

}  // namespace qalloc

#endif  // QALLOC_THRESHOLD_SEARCH_HPP
