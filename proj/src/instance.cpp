#include "qalloc/instance.hpp"

#include <algorithm>

#include "qalloc/errors.hpp"

namespace qalloc {

std::string to_string(Kind kind) { return kind == Kind::goods ? "goods" : "chores"; }

Kind parse_kind(std::string_view text) {
  if (text == "goods") return Kind::goods;
  if (text == "chores") return Kind::chores;
  throw InvalidInput("unknown item kind \"" + std::string(text) + "\"");
}

Instance::Instance(Kind kind, std::vector<Quantile> quantiles, std::vector<Value> values,
                   int items)
    : kind_(kind), quantiles_(std::move(quantiles)), values_(std::move(values)), items_(items) {
  if (quantiles_.empty()) throw InvalidInput("instance needs at least one agent");
  if (items_ < 1) throw InvalidInput("instance needs at least one item");
  if (values_.size() != quantiles_.size() * static_cast<std::size_t>(items_)) {
    throw InvalidInput("value matrix is not " + std::to_string(quantiles_.size()) + " x " +
                       std::to_string(items_));
  }
  if (std::any_of(values_.begin(), values_.end(), [](Value v) { return v < 0; })) {
    throw InvalidInput("value matrix entries must be non-negative");
  }
}

namespace {

std::vector<Value> flatten(const std::vector<std::vector<Value>>& rows, std::size_t agents) {
  if (rows.size() != agents) throw InvalidInput("one value row per agent required");
  std::vector<Value> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InvalidInput("ragged value matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

}  // namespace

Instance::Instance(Kind kind, std::vector<Quantile> quantiles,
                   const std::vector<std::vector<Value>>& rows)
    : Instance(kind, quantiles, flatten(rows, quantiles.size()),
               rows.empty() ? 0 : static_cast<int>(rows.front().size())) {}

bool Instance::is_binary() const {
  return std::all_of(values_.begin(), values_.end(), [](Value v) { return v <= 1; });
}

bool Instance::has_identical_rows() const {
  for (int i = 1; i < agents(); ++i) {
    if (!std::ranges::equal(row(i), row(0))) return false;
  }
  return true;
}

bool Instance::is_homogeneous() const {
  return std::all_of(quantiles_.begin(), quantiles_.end(),
                     [&](const Quantile& q) { return q == quantiles_.front(); });
}

int Instance::balanced_size() const {
  if (items_ % agents() != 0) {
    throw InvalidInput("balanced allocation needs n | m (n=" + std::to_string(agents()) +
                       ", m=" + std::to_string(items_) + ")");
  }
  return items_ / agents();
}

std::vector<std::vector<int>> Allocation::bundles(int agents) const {
  std::vector<std::vector<int>> out(agents);
  for (int g = 0; g < static_cast<int>(owner.size()); ++g) out[owner[g]].push_back(g);
  return out;
}

std::vector<int> Allocation::bundle(int agent) const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(owner.size()); ++g) {
    if (owner[g] == agent) out.push_back(g);
  }
  return out;
}

void validate(const Instance& instance, const Allocation& allocation) {
  if (static_cast<int>(allocation.owner.size()) != instance.items()) {
    throw InvalidInput("allocation lists " + std::to_string(allocation.owner.size()) +
                       " owners for " + std::to_string(instance.items()) + " items");
  }
  for (int g = 0; g < instance.items(); ++g) {
    const int a = allocation.owner[g];
    if (a < 0 || a >= instance.agents()) {
      throw InvalidInput("item " + std::to_string(g) + " has owner " + std::to_string(a) +
                         " outside [0," + std::to_string(instance.agents()) + ")");
    }
  }
}

bool is_balanced(const Allocation& allocation, int agents) {
  const int m = static_cast<int>(allocation.owner.size());
  if (agents < 1 || m % agents != 0) return false;
  std::vector<int> count(agents, 0);
  for (int a : allocation.owner) {
    if (a < 0 || a >= agents) return false;
    ++count[a];
  }
  return std::all_of(count.begin(), count.end(), [&](int c) { return c == m / agents; });
}

Allocation block_allocation(int agents, int items) {
  Allocation out;
  out.owner.resize(items);
  const int k = items / agents;
  for (int g = 0; g < items; ++g) out.owner[g] = g / k;
  return out;
}

Allocation single_owner_allocation(int items) {
  return Allocation{std::vector<int>(items, 0)};
}

}  // namespace qalloc
