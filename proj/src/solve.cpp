#include "qalloc/solve.hpp"

#include <algorithm>
#include <cmath>

#include "qalloc/chores.hpp"
#include "qalloc/errors.hpp"
#include "qalloc/esw.hpp"
#include "qalloc/usw.hpp"

namespace qalloc {

namespace {

[[noreturn]] void not_covered(std::string_view algorithm, Objective objective, bool balanced) {
  throw Unsupported("algorithm " + std::string(algorithm) + " does not solve " +
                    (balanced ? "balanced " : "unbalanced ") + to_string(objective));
}

bool has_tau_one(const Instance& instance) {
  return std::ranges::any_of(instance.quantiles(), [](const Quantile& q) { return q.is_one(); });
}

SolveReport solve_usw(const Instance& instance, bool balanced, std::string_view alg) {
  if (balanced) {
    if (alg == "auto" || alg == "greedy") return greedy_balanced_usw(instance);
    not_covered(alg, Objective::usw, balanced);
  }
  if (alg == "auto") {
    if (has_tau_one(instance)) return optimistic_exact_usw(instance);
    if (instance.agents() == 1) return greedy_balanced_usw(instance);
    return scapegoat_usw(instance);
  }
  if (alg == "scapegoat") return scapegoat_usw(instance);
  if (alg == "optimistic") return optimistic_exact_usw(instance);
  if (alg == "identical") return identical_binary_usw_unbalanced(instance);
  not_covered(alg, Objective::usw, balanced);
}

SolveReport solve_esw(const Instance& instance, bool balanced, std::string_view alg) {
  if (balanced) {
    if (alg == "auto" || alg == "matching") return balanced_esw(instance);
    not_covered(alg, Objective::esw, balanced);
  }
  if (alg == "identical") return identical_unbalanced_esw(instance);
  if (alg == "auto") return unbalanced_esw(instance);
  static constexpr std::pair<std::string_view, EswFamily> families[] = {
      {"tau0", EswFamily::tau0}, {"third", EswFamily::third},
      {"frac", EswFamily::frac}, {"tau1", EswFamily::tau1}};
  for (const auto& [name, family] : families) {
    if (alg != name) continue;
    if (esw_family(instance) != family) {
      throw InvalidInput("algorithm " + std::string(alg) + " does not match tau = " +
                         instance.quantile(0).to_string());
    }
    return unbalanced_esw(instance);
  }
  not_covered(alg, Objective::esw, balanced);
}

SolveReport solve_esc(const Instance& instance, bool balanced, std::string_view alg) {
  if (balanced) {
    if (alg == "auto" || alg == "matching") return balanced_esc(instance);
    not_covered(alg, Objective::esc, balanced);
  }
  if (alg == "tau0") return esc_tau0(instance);
  if (alg == "tau1") return esc_tau1(instance);
  if (alg == "auto") {
    if (instance.is_homogeneous() && instance.quantile(0).is_zero()) return esc_tau0(instance);
    if (instance.is_homogeneous() && instance.quantile(0).is_one()) return esc_tau1(instance);
    throw Unsupported("no algorithm for unbalanced esc at these quantiles (only tau = 0 or 1)");
  }
  not_covered(alg, Objective::esc, balanced);
}

SolveReport solve_usc(const Instance& instance, bool balanced, std::string_view alg) {
  if (balanced) not_covered(alg, Objective::usc, balanced);
  if (alg == "setcover") return usc_tau0_setcover(instance);
  if (alg == "auto") {
    if (instance.is_homogeneous() && instance.quantile(0).is_zero()) {
      return usc_tau0_setcover(instance);
    }
    throw Unsupported("no algorithm for usc at these quantiles (only tau = 0)");
  }
  not_covered(alg, Objective::usc, balanced);
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"auto",  "greedy", "scapegoat", "optimistic",
                                                 "matching", "frac", "third",   "tau0",
                                                 "tau1",  "setcover", "identical"};
  return names;
}

SolveReport solve(const Instance& instance, Objective objective, bool balanced,
                  std::string_view algorithm) {
  if (std::ranges::find(algorithm_names(), algorithm) == algorithm_names().end()) {
    throw InvalidInput("unknown algorithm '" + std::string(algorithm) + "'");
  }
  if (instance.kind() != kind_of(objective)) {
    throw InvalidInput(to_string(objective) + " needs a " + to_string(kind_of(objective)) +
                       " instance");
  }
  if (balanced) instance.balanced_size();
  switch (objective) {
    case Objective::usw: return solve_usw(instance, balanced, algorithm);
    case Objective::esw: return solve_esw(instance, balanced, algorithm);
    case Objective::usc: return solve_usc(instance, balanced, algorithm);
    case Objective::esc: return solve_esc(instance, balanced, algorithm);
  }
  throw std::logic_error("unreachable objective");
}

bool within_guarantee(const std::string& algorithm, Objective objective, const Instance& instance,
                      Value alg, Value opt) {
  const Value n = instance.agents();
  const Value m = instance.items();
  if (algorithm == "greedy") {
    const Value k = m / n;
    return alg * std::min(k + 1, n) >= opt;
  }
  if (algorithm == "scapegoat") return n * alg >= (n - 1) * opt;
  if (algorithm == "setcover") {
    return static_cast<long double>(alg) <=
           (std::log(static_cast<long double>(m)) + 1.0L) * static_cast<long double>(opt);
  }
  (void)objective;
  return alg == opt;
}

}  // namespace qalloc
