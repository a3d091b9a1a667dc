#include "qalloc/welfare.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "qalloc/errors.hpp"

namespace qalloc {

Value bundle_value(const Instance& instance, int agent, std::span<const int> bundle) {
  if (agent < 0 || agent >= instance.agents()) {
    throw InvalidInput("agent index " + std::to_string(agent) + " out of range");
  }
  if (bundle.empty()) return 0;
  std::vector<Value> vals;
  vals.reserve(bundle.size());
  for (int g : bundle) vals.push_back(instance.value(agent, g));

  const auto size = static_cast<std::int64_t>(vals.size());
  std::int64_t index = quantile_index(instance.quantile(agent), size);
  if (instance.kind() == Kind::chores) index = size - index + 1;
  auto nth = vals.begin() + (index - 1);
  std::nth_element(vals.begin(), nth, vals.end());
  return *nth;
}

namespace {

void require_kind(const Instance& instance, Kind kind, const char* what) {
  if (instance.kind() != kind) {
    throw InvalidInput(std::string(what) + " is defined on " + to_string(kind) +
                       " but the instance holds " + to_string(instance.kind()));
  }
}

template <class Fold>
Value fold_bundles(const Instance& instance, const Allocation& allocation, Value init,
                   Fold fold) {
  validate(instance, allocation);
  const auto bundles = allocation.bundles(instance.agents());
  Value acc = init;
  for (int i = 0; i < instance.agents(); ++i) {
    acc = fold(acc, bundle_value(instance, i, bundles[i]));
  }
  return acc;
}

}  // namespace

Value usw(const Instance& instance, const Allocation& allocation) {
  require_kind(instance, Kind::goods, "USW");
  return fold_bundles(instance, allocation, 0, [](Value a, Value b) { return a + b; });
}

Value esw(const Instance& instance, const Allocation& allocation) {
  require_kind(instance, Kind::goods, "ESW");
  return fold_bundles(instance, allocation, std::numeric_limits<Value>::max(),
                      [](Value a, Value b) { return std::min(a, b); });
}

Value usc(const Instance& instance, const Allocation& allocation) {
  require_kind(instance, Kind::chores, "USC");
  return fold_bundles(instance, allocation, 0, [](Value a, Value b) { return a + b; });
}

Value esc(const Instance& instance, const Allocation& allocation) {
  require_kind(instance, Kind::chores, "ESC");
  return fold_bundles(instance, allocation, 0, [](Value a, Value b) { return std::max(a, b); });
}

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::usw: return "usw";
    case Objective::esw: return "esw";
    case Objective::usc: return "usc";
    case Objective::esc: return "esc";
  }
  return "?";
}

Objective parse_objective(std::string_view text) {
  if (text == "usw") return Objective::usw;
  if (text == "esw") return Objective::esw;
  if (text == "usc") return Objective::usc;
  if (text == "esc") return Objective::esc;
  throw InvalidInput("unknown objective \"" + std::string(text) + "\"");
}

bool is_cost(Objective objective) {
  return objective == Objective::usc || objective == Objective::esc;
}

Kind kind_of(Objective objective) { return is_cost(objective) ? Kind::chores : Kind::goods; }

Value evaluate(const Instance& instance, const Allocation& allocation, Objective objective) {
  switch (objective) {
    case Objective::usw: return usw(instance, allocation);
    case Objective::esw: return esw(instance, allocation);
    case Objective::usc: return usc(instance, allocation);
    case Objective::esc: return esc(instance, allocation);
  }
  throw InvalidInput("unknown objective");
}

Instance threshold_binary(const Instance& instance, Value nu) {
  if (nu <= 0) throw InvalidInput("threshold must be positive");
  std::vector<Value> bin(instance.values().size());
  std::transform(instance.values().begin(), instance.values().end(), bin.begin(),
                 [nu](Value v) -> Value { return v >= nu ? 1 : 0; });
  return Instance(instance.kind(), instance.quantiles(), std::move(bin), instance.items());
}

}  // namespace qalloc
