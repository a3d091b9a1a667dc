#ifndef QALLOC_INSTANCE_HPP
#define QALLOC_INSTANCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qalloc/quantile.hpp"

namespace qalloc {

/// Item values, disutilities and welfare are exact signed integers.
using Value = std::int64_t;

enum class Kind { goods, chores };

std::string to_string(Kind kind);
Kind parse_kind(std::string_view text);

/// An allocation problem: n agents with quantiles, m items, and an n x m matrix
/// of non-negative integers. For chores the matrix holds disutility magnitudes
/// d = -v; the sign lives in `kind`.
class Instance {
 public:
  Instance(Kind kind, std::vector<Quantile> quantiles, std::vector<Value> values,
           int items);

  /// Row-per-agent convenience constructor.
  Instance(Kind kind, std::vector<Quantile> quantiles,
           const std::vector<std::vector<Value>>& rows);

  int agents() const { return static_cast<int>(quantiles_.size()); }
  int items() const { return items_; }
  Kind kind() const { return kind_; }

  const Quantile& quantile(int agent) const { return quantiles_.at(agent); }
  const std::vector<Quantile>& quantiles() const { return quantiles_; }

  Value value(int agent, int item) const {
    return values_[static_cast<std::size_t>(agent) * items_ + item];
  }
  std::span<const Value> row(int agent) const {
    return {values_.data() + static_cast<std::size_t>(agent) * items_,
            static_cast<std::size_t>(items_)};
  }
  const std::vector<Value>& values() const { return values_; }

  bool is_binary() const;
  bool has_identical_rows() const;
  /// True when every agent shares one quantile.
  bool is_homogeneous() const;
  /// Items per agent in a balanced allocation; throws unless n divides m.
  int balanced_size() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Kind kind_;
  std::vector<Quantile> quantiles_;
  std::vector<Value> values_;
  int items_;
};

/// Total assignment: owner[g] is the agent receiving item g.
struct Allocation {
  std::vector<int> owner;

  /// Items of each agent in ascending index order.
  std::vector<std::vector<int>> bundles(int agents) const;
  std::vector<int> bundle(int agent) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Throws InvalidInput unless `allocation` assigns every item of `instance`
/// to an agent in range.
void validate(const Instance& instance, const Allocation& allocation);

bool is_balanced(const Allocation& allocation, int agents);

/// Result of a solver. `welfare` is always the recomputed objective of
/// `allocation`; `feasible` tells decision procedures' callers whether the
/// target level was reached.
struct SolveReport {
  Allocation allocation;
  Value welfare = 0;
  std::string algorithm;
  bool feasible = true;
};

/// Balanced allocation giving consecutive blocks of k items to agents 0..n-1.
Allocation block_allocation(int agents, int items);
/// Every item to agent 0.
Allocation single_owner_allocation(int items);

}  // namespace qalloc

#endif  // QALLOC_INSTANCE_HPP
