#ifndef QALLOC_BENCH_HPP
#define QALLOC_BENCH_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qalloc/errors.hpp"
#include "qalloc/generator.hpp"
#include "qalloc/oracle.hpp"
#include "qalloc/welfare.hpp"

namespace qalloc {

/// alg / opt kept as an exact fraction. opt = 0 gives 1 when alg = 0 and an
/// infinite ratio otherwise.
struct Ratio {
  Value num = 1;
  Value den = 1;

  bool infinite() const { return den == 0; }
  /// Six fractional digits, rounded half up; "inf" when infinite.
  std::string to_string() const;
  long double approx() const;
  friend bool operator<(const Ratio& a, const Ratio& b);
};

Ratio make_ratio(Value alg, Value opt);

struct BenchOptions {
  GeneratorOptions generator;
  Objective objective = Objective::usw;
  bool balanced = false;
  std::string algorithm = "auto";
  int trials = 10;
  std::uint64_t seed = 0;
  EnumerationBudget budget;
};

struct BenchRow {
  std::uint64_t seed = 0;
  std::string algorithm;
  Objective objective = Objective::usw;
  bool balanced = false;
  Value alg_value = 0;
  Value oracle_value = 0;
  Ratio ratio;
};

struct BenchSummary {
  std::string algorithm;
  Objective objective = Objective::usw;
  bool balanced = false;
  int trials = 0;
  Ratio min_ratio;
  long double mean_ratio = 0;
};

/// A trial whose value breaks the producing algorithm's guarantee.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kBenchHeader =
    "seed,algorithm,objective,balanced,alg_value,oracle_value,ratio";

/// Trial i uses generator seed `seed + i`. Every row is checked against the
/// algorithm's guarantee; the first violation throws BoundViolation naming
/// the trial seed.
std::vector<BenchRow> run_bench(const BenchOptions& options);
BenchSummary summarize(const std::vector<BenchRow>& rows);

/// Header, one line per row, then
/// `summary,<algorithm>,<objective>,<balanced>,<trials>,<min_ratio>,<mean_ratio>`.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace qalloc

#endif  // QALLOC_BENCH_HPP
