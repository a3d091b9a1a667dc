#include "qalloc/bench.hpp"

#include <cstdio>
#include <numeric>

#include "qalloc/solve.hpp"

namespace qalloc {

namespace {

std::string fixed6(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", x);
  return buf;
}

}  // namespace

Ratio make_ratio(Value alg, Value opt) {
  if (opt == 0) return alg == 0 ? Ratio{1, 1} : Ratio{1, 0};
  const Value g = std::gcd(alg, opt);
  return Ratio{alg / g, opt / g};
}

std::string Ratio::to_string() const {
  if (infinite()) return "inf";
  using Wide = __int128;
  const Wide scaled = (Wide(num) * 2'000'000 + den) / (Wide(den) * 2);
  const auto whole = static_cast<long long>(scaled / 1'000'000);
  const auto frac = static_cast<long long>(scaled % 1'000'000);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld.%06lld", whole, frac);
  return buf;
}

long double Ratio::approx() const {
  return static_cast<long double>(num) / static_cast<long double>(den);
}

bool operator<(const Ratio& a, const Ratio& b) {
  if (a.infinite() || b.infinite()) return !a.infinite() && b.infinite();
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.trials < 1) throw InvalidInput("--trials must be at least 1");
  std::vector<BenchRow> rows;
  rows.reserve(options.trials);
  for (int t = 0; t < options.trials; ++t) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
    const Instance instance = generate_instance(options.generator, seed);
    const SolveReport report =
        solve(instance, options.objective, options.balanced, options.algorithm);
    const OracleResult best =
        opt_welfare(instance, options.objective, options.balanced, options.budget);
    if (!within_guarantee(report.algorithm, options.objective, instance, report.welfare,
                          best.welfare)) {
      throw BoundViolation("seed " + std::to_string(seed) + ": " + report.algorithm + " reached " +
                           to_string(options.objective) + " " + std::to_string(report.welfare) +
                           " against optimum " + std::to_string(best.welfare) +
                           ", outside its guarantee");
    }
    rows.push_back(BenchRow{seed, report.algorithm, options.objective, options.balanced,
                            report.welfare, best.welfare, make_ratio(report.welfare, best.welfare)});
  }
  return rows;
}

BenchSummary summarize(const std::vector<BenchRow>& rows) {
  BenchSummary s;
  if (rows.empty()) return s;
  s.algorithm = rows.front().algorithm;
  s.objective = rows.front().objective;
  s.balanced = rows.front().balanced;
  s.trials = static_cast<int>(rows.size());
  s.min_ratio = rows.front().ratio;
  long double total = 0;
  for (const BenchRow& r : rows) {
    if (r.ratio < s.min_ratio) s.min_ratio = r.ratio;
    if (r.algorithm != s.algorithm) s.algorithm = "mixed";
    total += r.ratio.approx();
  }
  s.mean_ratio = total / static_cast<long double>(rows.size());
  return s;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.seed << ',' << r.algorithm << ',' << to_string(r.objective) << ','
        << (r.balanced ? 1 : 0) << ',' << r.alg_value << ',' << r.oracle_value << ','
        << r.ratio.to_string() << '\n';
  }
  const BenchSummary s = summarize(rows);
  out << "summary," << s.algorithm << ',' << to_string(s.objective) << ','
      << (s.balanced ? 1 : 0) << ',' << s.trials << ',' << s.min_ratio.to_string() << ','
      << fixed6(s.mean_ratio) << '\n';
}

}  // namespace qalloc
