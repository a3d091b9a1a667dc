#ifndef QALLOC_WELFARE_HPP
#define QALLOC_WELFARE_HPP

#include <span>
#include <string>

#include "qalloc/instance.hpp"

namespace qalloc {

/// Quantile value of `bundle` for `agent`.
///
/// Goods: the quantile_index(tau, |S|)-th lowest item value.
/// Chores: the quantile is read on v = -d, so the result (a disutility
/// magnitude) is the (|S| - index + 1)-th lowest disutility. tau = 0 gives the
/// worst chore, tau = 1 the mildest one.
/// An empty bundle is worth 0 in both cases.
Value bundle_value(const Instance& instance, int agent, std::span<const int> bundle);

Value usw(const Instance& instance, const Allocation& allocation);
Value esw(const Instance& instance, const Allocation& allocation);
Value usc(const Instance& instance, const Allocation& allocation);
Value esc(const Instance& instance, const Allocation& allocation);

enum class Objective { usw, esw, usc, esc };

std::string to_string(Objective objective);
Objective parse_objective(std::string_view text);

/// usw/esw are maximised, usc/esc minimised.
bool is_cost(Objective objective);
/// The item kind an objective is defined on.
Kind kind_of(Objective objective);

/// Dispatches to usw/esw/usc/esc; throws InvalidInput on a kind mismatch.
Value evaluate(const Instance& instance, const Allocation& allocation, Objective objective);

/// 0/1 instance with entry 1 iff the original entry is >= nu (for goods: value
/// at least nu; for chores: disutility at least nu). Kind and quantiles are
/// kept, so for goods esw >= nu under v iff esw == 1 under the result, and for
/// chores esc <= nu - 1 under d iff esc == 0 under the result.
Instance threshold_binary(const Instance& instance, Value nu);

}  // namespace qalloc

#endif  // QALLOC_WELFARE_HPP
