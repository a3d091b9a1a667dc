#ifndef QALLOC_IO_HPP
#define QALLOC_IO_HPP

#include <optional>
#include <string>

#include "qalloc/instance.hpp"

namespace qalloc {

/// Instance JSON:
///   {"kind": "goods"|"chores", "agents": n, "items": m,
///    "quantiles": ["p/q", ...], "values": [[...], ...]}
/// Quantiles must be in lowest terms; values non-negative integers.
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& instance);

/// Allocation JSON: {"owner": [agent per item, 0-based]} plus the optional
/// "welfare", "algorithm" and "feasible" written by solvers.
struct AllocationFile {
  Allocation allocation;
  std::optional<Value> welfare;
  std::optional<std::string> algorithm;
  std::optional<bool> feasible;

  friend bool operator==(const AllocationFile&, const AllocationFile&) = default;
};

AllocationFile parse_allocation(const std::string& text);
std::string format_allocation(const AllocationFile& file);
AllocationFile to_file(const SolveReport& report);

/// Whole-file helpers; throw InvalidInput when the file cannot be read.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qalloc

#endif  // QALLOC_IO_HPP
