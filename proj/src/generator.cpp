#include "qalloc/generator.hpp"

#include <limits>
#include <random>

#include "qalloc/errors.hpp"

namespace qalloc {

namespace {

// Uniform on [0, bound] without the implementation-defined distributions of
// <random>, so output is identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t range = bound + 1;
  if (range == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

}  // namespace

Instance generate_instance(const GeneratorOptions& options, std::uint64_t seed) {
  if (options.agents < 1 || options.items < 1) {
    throw InvalidInput("generator needs at least one agent and one item");
  }
  if (options.max_value < 1) throw InvalidInput("--max-value must be at least 1");

  std::vector<Quantile> taus(options.agents, options.tau);
  if (options.hetero_taus) {
    if (static_cast<int>(options.hetero_taus->size()) != options.agents) {
      throw InvalidInput("--hetero-taus needs one quantile per agent");
    }
    taus = *options.hetero_taus;
  }

  const auto bound = static_cast<std::uint64_t>(options.binary ? 1 : options.max_value);
  std::mt19937_64 rng(seed);
  std::vector<Value> values(static_cast<std::size_t>(options.agents) * options.items);
  const int drawn_rows = options.identical ? 1 : options.agents;
  for (int i = 0; i < drawn_rows; ++i) {
    for (int g = 0; g < options.items; ++g) {
      values[static_cast<std::size_t>(i) * options.items + g] = static_cast<Value>(draw(rng, bound));
    }
  }
  for (int i = drawn_rows; i < options.agents; ++i) {
    std::copy_n(values.begin(), options.items,
                values.begin() + static_cast<std::ptrdiff_t>(i) * options.items);
  }
  return Instance(options.kind, std::move(taus), std::move(values), options.items);
}

}  // namespace qalloc
