#ifndef QALLOC_GENERATOR_HPP
#define QALLOC_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qalloc/instance.hpp"

namespace qalloc {

struct GeneratorOptions {
  int agents = 2;
  int items = 4;
  Kind kind = Kind::goods;
  Quantile tau = Quantile(1, 2);
  /// Per-agent quantiles; overrides `tau` when set.
  std::optional<std::vector<Quantile>> hetero_taus;
  Value max_value = 9;
  bool binary = false;
  bool identical = false;
};

/// Deterministic random instance. The stream is std::mt19937_64 seeded with
/// `seed`; each entry is drawn uniformly from [0, max_value] ([0, 1] when
/// binary) by rejection sampling on the raw 64-bit output, row by row. With
/// `identical`, only row 0 is drawn and copied to every agent.
Instance generate_instance(const GeneratorOptions& options, std::uint64_t seed);

}  // namespace qalloc

#endif  // QALLOC_GENERATOR_HPP
