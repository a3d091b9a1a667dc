#include "qalloc/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "qalloc/bench.hpp"
#include "qalloc/errors.hpp"
#include "qalloc/generator.hpp"
#include "qalloc/io.hpp"
#include "qalloc/oracle.hpp"
#include "qalloc/solve.hpp"

namespace qalloc {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

struct ObjectiveFlags {
  std::string objective;
  bool balanced = false;
};

void add_objective_flags(CLI::App* cmd, ObjectiveFlags& flags) {
  cmd->add_option("--objective", flags.objective, "usw, esw, usc or esc")
      ->required()
      ->check(CLI::IsMember({"usw", "esw", "usc", "esc"}));
  cmd->add_flag("--balanced", flags.balanced, "restrict to balanced allocations (n | m)");
}

struct GenFlags {
  int agents = 0;
  int items = 0;
  std::string tau = "1/2";
  std::string kind;
  Value max_value = 9;
  std::uint64_t seed = 0;
  bool binary = false;
  bool identical = false;
  std::string hetero_taus;
};

void add_generator_flags(CLI::App* cmd, GenFlags& flags, bool kind_required) {
  cmd->add_option("--agents", flags.agents, "number of agents")->required();
  cmd->add_option("--items", flags.items, "number of items")->required();
  cmd->add_option("--tau", flags.tau, "common quantile p/q in lowest terms")->capture_default_str();
  auto* kind = cmd->add_option("--kind", flags.kind, "goods or chores")
                   ->check(CLI::IsMember({"goods", "chores"}));
  if (kind_required) kind->required();
  cmd->add_option("--max-value", flags.max_value, "largest drawn value")->capture_default_str();
  cmd->add_option("--seed", flags.seed, "PRNG seed")->required();
  cmd->add_flag("--binary", flags.binary, "draw values from {0, 1}");
  cmd->add_flag("--identical", flags.identical, "draw one row and copy it to every agent");
  cmd->add_option("--hetero-taus", flags.hetero_taus,
                  "comma-separated per-agent quantiles, overriding --tau");
}

GeneratorOptions to_generator_options(const GenFlags& flags, Kind kind) {
  GeneratorOptions g;
  g.agents = flags.agents;
  g.items = flags.items;
  g.kind = kind;
  g.tau = Quantile::parse(flags.tau);
  g.max_value = flags.max_value;
  g.binary = flags.binary;
  g.identical = flags.identical;
  if (!flags.hetero_taus.empty()) {
    std::vector<Quantile> taus;
    std::istringstream list(flags.hetero_taus);
    for (std::string part; std::getline(list, part, ',');) taus.push_back(Quantile::parse(part));
    g.hetero_taus = std::move(taus);
  }
  return g;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

const char* kBenchFooter =
    "CSV on stdout, one row per trial:\n"
    "  seed,algorithm,objective,balanced,alg_value,oracle_value,ratio\n"
    "seed is the generator seed of the trial (--seed + trial index), balanced is 0/1,\n"
    "ratio is alg_value/oracle_value with 6 fractional digits (\"inf\" when a cost\n"
    "optimum of 0 is missed). A final row\n"
    "  summary,<algorithm>,<objective>,<balanced>,<trials>,<min_ratio>,<mean_ratio>\n"
    "closes the table. A trial breaking its algorithm's guarantee aborts with exit 1.";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Allocations of indivisible items under quantile valuations", "qalloc"};
  app.require_subcommand(1);

  ObjectiveFlags solve_obj;
  std::string solve_alg = "auto", solve_in, solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "run a polynomial-time algorithm");
  add_objective_flags(solve_cmd, solve_obj);
  solve_cmd->add_option("--algorithm", solve_alg, "algorithm name")
      ->check(CLI::IsMember(algorithm_names()))
      ->capture_default_str();
  solve_cmd->add_option("-i", solve_in, "instance JSON")->required();
  solve_cmd->add_option("-o", solve_out, "allocation JSON (default stdout)");

  ObjectiveFlags oracle_obj;
  std::string oracle_in, oracle_out;
  std::uint64_t oracle_budget = EnumerationBudget{}.max_allocations;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by exhaustive enumeration");
  add_objective_flags(oracle_cmd, oracle_obj);
  oracle_cmd->add_option("-i", oracle_in, "instance JSON")->required();
  oracle_cmd->add_option("-o", oracle_out, "allocation JSON (default stdout)");
  oracle_cmd->add_option("--budget", oracle_budget, "maximum allocations to enumerate")
      ->capture_default_str();

  GenFlags gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "write a seeded random instance");
  add_generator_flags(gen_cmd, gen, true);
  gen_cmd->add_option("-o", gen_out, "instance JSON (default stdout)");

  GenFlags bench_gen;
  ObjectiveFlags bench_obj;
  std::string bench_alg = "auto";
  int bench_trials = 10;
  std::uint64_t bench_budget = EnumerationBudget{}.max_allocations;
  auto* bench_cmd = app.add_subcommand("bench", "compare an algorithm with the oracle");
  add_generator_flags(bench_cmd, bench_gen, false);
  add_objective_flags(bench_cmd, bench_obj);
  bench_cmd->add_option("--algorithm", bench_alg, "algorithm name")
      ->check(CLI::IsMember(algorithm_names()))
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_trials, "number of instances")->capture_default_str();
  bench_cmd->add_option("--budget", bench_budget, "oracle enumeration cap")->capture_default_str();
  bench_cmd->footer(kBenchFooter);

  ObjectiveFlags check_obj;
  std::string check_in, check_alloc;
  auto* check_cmd = app.add_subcommand("check", "recompute the objective of an allocation");
  add_objective_flags(check_cmd, check_obj);
  check_cmd->add_option("-i", check_in, "instance JSON")->required();
  check_cmd->add_option("-a", check_alloc, "allocation JSON")->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*solve_cmd) {
      const Instance instance = parse_instance(read_text_file(solve_in));
      const Objective objective = parse_objective(solve_obj.objective);
      const SolveReport report = solve(instance, objective, solve_obj.balanced, solve_alg);
      err << "solve: " << report.algorithm << ", " << to_string(objective) << " = "
          << report.welfare << (report.feasible ? "" : " (infeasible)") << '\n';
      emit(solve_out, format_allocation(to_file(report)), out);
    } else if (*oracle_cmd) {
      const Instance instance = parse_instance(read_text_file(oracle_in));
      const Objective objective = parse_objective(oracle_obj.objective);
      if (instance.kind() != kind_of(objective)) {
        throw InvalidInput(to_string(objective) + " needs a " + to_string(kind_of(objective)) +
                           " instance");
      }
      const OracleResult best =
          opt_welfare(instance, objective, oracle_obj.balanced, EnumerationBudget{oracle_budget});
      err << "oracle: " << to_string(objective) << " = " << best.welfare << '\n';
      emit(oracle_out, format_allocation({best.witness, best.welfare, "oracle", true}), out);
    } else if (*gen_cmd) {
      const Instance instance =
          generate_instance(to_generator_options(gen, parse_kind(gen.kind)), gen.seed);
      emit(gen_out, format_instance(instance), out);
    } else if (*bench_cmd) {
      BenchOptions options;
      options.objective = parse_objective(bench_obj.objective);
      const Kind kind = bench_gen.kind.empty() ? kind_of(options.objective)
                                               : parse_kind(bench_gen.kind);
      options.generator = to_generator_options(bench_gen, kind);
      options.balanced = bench_obj.balanced;
      options.algorithm = bench_alg;
      options.trials = bench_trials;
      options.seed = bench_gen.seed;
      options.budget = EnumerationBudget{bench_budget};
      const std::vector<BenchRow> rows = run_bench(options);
      write_bench_csv(out, rows);
    } else if (*check_cmd) {
      const Instance instance = parse_instance(read_text_file(check_in));
      const AllocationFile file = parse_allocation(read_text_file(check_alloc));
      const Objective objective = parse_objective(check_obj.objective);
      const Value value = evaluate(instance, file.allocation, objective);
      if (check_obj.balanced && !is_balanced(file.allocation, instance.agents())) {
        throw InvalidInput("allocation is not balanced");
      }
      if (file.welfare && *file.welfare != value) {
        throw InvalidInput("allocation states welfare " + std::to_string(*file.welfare) +
                           " but " + to_string(objective) + " is " + std::to_string(value));
      }
      out << to_string(objective) << ' ' << value << '\n';
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}

}  // namespace qalloc
