#ifndef QALLOC_SOLVE_HPP
#define QALLOC_SOLVE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qalloc/instance.hpp"
#include "qalloc/welfare.hpp"

namespace qalloc {

/// Names accepted by `solve`: auto, greedy, scapegoat, optimistic, matching,
/// frac, third, tau0, tau1, setcover, identical.
const std::vector<std::string>& algorithm_names();

/// Runs `algorithm` on the instance. `auto` picks
///   usw, balanced          greedy
///   usw, unbalanced        optimistic if some tau = 1, else scapegoat
///                          (greedy when n = 1)
///   esw, balanced          matching
///   esw, unbalanced        the quantile-family routine
///   esc, balanced          matching
///   esc, unbalanced        tau0 / tau1
///   usc, unbalanced        setcover (tau = 0)
/// Unknown names, kind mismatches and n not dividing m under `balanced`
/// throw InvalidInput; combinations no algorithm covers throw Unsupported.
SolveReport solve(const Instance& instance, Objective objective, bool balanced,
                  std::string_view algorithm = "auto");

/// Whether `alg` against the exact optimum `opt` meets the guarantee of the
/// algorithm that produced it (equality for exact solvers).
bool within_guarantee(const std::string& algorithm, Objective objective, const Instance& instance,
                      Value alg, Value opt);

}  // namespace qalloc

#endif  // QALLOC_SOLVE_HPP
