#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "qalloc/bench.hpp"
#include "qalloc/cli.hpp"
#include "qalloc/errors.hpp"
#include "qalloc/generator.hpp"
#include "qalloc/io.hpp"
#include "random_instances.hpp"

using namespace qalloc;
namespace fs = std::filesystem;

namespace {

const char* kGreedyExample = R"({"kind": "goods", "agents": 2, "items": 4,
  "quantiles": ["1/2", "1/2"], "values": [[5, 4, 1, 0], [5, 1, 3, 2]]})";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qalloc_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text = "") {
    const std::string path = (dir_ / name).string();
    if (!text.empty()) write_text_file(path, text);
    return path;
  }

  int run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  fs::path dir_;
  std::string out_, err_;
};

}  // namespace

TEST(InstanceFile, ParsesAndRoundTrips) {
  const Instance inst = parse_instance(kGreedyExample);
  EXPECT_EQ(inst.agents(), 2);
  EXPECT_EQ(inst.value(1, 2), 3);
  EXPECT_EQ(parse_instance(format_instance(inst)), inst);
}

TEST(InstanceFile, RejectsMalformedDocuments) {
  for (const char* bad : {
           "{",
           R"({"kind": "goods", "agents": 1, "items": 1, "quantiles": ["1/2"]})",
           R"({"kind": "stuff", "agents": 1, "items": 1, "quantiles": ["1/2"], "values": [[1]]})",
           R"({"kind": "goods", "agents": 2, "items": 1, "quantiles": ["1/2"], "values": [[1]]})",
           R"({"kind": "goods", "agents": 1, "items": 2, "quantiles": ["1/2"], "values": [[1]]})",
           R"({"kind": "goods", "agents": 1, "items": 1, "quantiles": [0.5], "values": [[1]]})",
           R"({"kind": "goods", "agents": 1, "items": 1, "quantiles": ["2/4"], "values": [[1]]})",
           R"({"kind": "goods", "agents": 1, "items": 1, "quantiles": ["1/2"], "values": [[1.5]]})",
           R"({"kind": "goods", "agents": 1, "items": 1, "quantiles": ["1/2"], "values": [[-1]]})",
           R"({"kind": "goods", "agents": 0, "items": 1, "quantiles": [], "values": []})"}) {
    EXPECT_THROW(parse_instance(bad), InvalidInput) << bad;
  }
}

TEST(AllocationFile, RoundTrips) {
  const AllocationFile full{Allocation{{0, 1, 1}}, 7, "greedy", true};
  EXPECT_EQ(parse_allocation(format_allocation(full)), full);
  const AllocationFile bare{Allocation{{2, 0}}, std::nullopt, std::nullopt, std::nullopt};
  EXPECT_EQ(parse_allocation(format_allocation(bare)), bare);
  EXPECT_THROW(parse_allocation(R"({"owner": [0, -1]})"), InvalidInput);
  EXPECT_THROW(parse_allocation(R"({"owner": [0], "welfare": "x"})"), InvalidInput);
  EXPECT_THROW(parse_allocation(R"({"welfare": 1})"), InvalidInput);
}

TEST(FileProperty, RandomInstancesRoundTrip) {
  fuzz::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 4);
    const Instance inst = fuzz::random_instance(
        rng, trial % 2 ? Kind::goods : Kind::chores, fuzz::random_quantiles(rng, n),
        rng.uniform(1, 9), 1000);
    ASSERT_EQ(parse_instance(format_instance(inst)), inst);
  }
}

TEST(Generator, DeterministicAndShaped) {
  GeneratorOptions g;
  g.agents = 3;
  g.items = 5;
  g.max_value = 4;
  const Instance a = generate_instance(g, 99);
  EXPECT_EQ(a, generate_instance(g, 99));
  EXPECT_NE(a, generate_instance(g, 100));
  for (Value v : a.values()) {
    EXPECT_GE(v, 0);
    EXPECT_LE(v, 4);
  }
  g.binary = true;
  g.identical = true;
  const Instance b = generate_instance(g, 5);
  EXPECT_TRUE(b.is_binary());
  EXPECT_TRUE(b.has_identical_rows());
  g.max_value = 0;
  EXPECT_THROW(generate_instance(g, 5), InvalidInput);
}

TEST(Generator, FrozenStream) {
  // Pins the documented stream (mt19937_64 + rejection sampling) so that
  // seeds stay meaningful across releases.
  GeneratorOptions g;
  g.agents = 2;
  g.items = 4;
  g.max_value = 9;
  EXPECT_EQ(format_instance(generate_instance(g, 1)), format_instance(generate_instance(g, 1)));
  const std::vector<Value> frozen = generate_instance(g, 1).values();
  std::mt19937_64 rng(1);
  std::vector<Value> expected;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % 10;
  while (expected.size() < 8) {
    const std::uint64_t x = rng();
    if (x < limit) expected.push_back(static_cast<Value>(x % 10));
  }
  EXPECT_EQ(frozen, expected);
}

TEST(Ratio, Rendering) {
  EXPECT_EQ(make_ratio(2, 3).to_string(), "0.666667");
  EXPECT_EQ(make_ratio(1, 2).to_string(), "0.500000");
  EXPECT_EQ(make_ratio(0, 0).to_string(), "1.000000");
  EXPECT_EQ(make_ratio(3, 0).to_string(), "inf");
  EXPECT_EQ(make_ratio(7, 3).to_string(), "2.333333");
  EXPECT_TRUE(make_ratio(1, 3) < make_ratio(1, 2));
  EXPECT_TRUE(make_ratio(5, 1) < make_ratio(1, 0));
}

TEST(Bench, RowsAndSummary) {
  BenchOptions o;
  o.generator.agents = 2;
  o.generator.items = 4;
  o.objective = Objective::usw;
  o.balanced = true;
  o.trials = 20;
  o.seed = 7;
  const auto rows = run_bench(o);
  ASSERT_EQ(rows.size(), 20u);
  EXPECT_EQ(rows[3].seed, 10u);
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string first, line, last;
  std::getline(lines, first);
  EXPECT_EQ(first, kBenchHeader);
  int count = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++count;
  }
  EXPECT_EQ(count, 21);
  EXPECT_EQ(last.rfind("summary,greedy,usw,1,20,", 0), 0u) << last;
  EXPECT_FALSE(make_ratio(1, 1) < summarize(rows).min_ratio);
  EXPECT_FALSE(summarize(rows).min_ratio < make_ratio(1, 2));
}

TEST_F(CliTest, SolveGreedyExample) {
  const std::string in = file("g.json", kGreedyExample);
  const std::string out = file("a.json");
  EXPECT_EQ(run({"solve", "--objective", "usw", "--balanced", "-i", in, "-o", out}), 0);
  const AllocationFile a = parse_allocation(read_text_file(out));
  EXPECT_EQ(a.welfare, 6);
  EXPECT_EQ(a.algorithm, "greedy");
  EXPECT_EQ(run({"check", "--objective", "usw", "--balanced", "-i", in, "-a", out}), 0);
  EXPECT_EQ(out_, "usw 6\n");
}

TEST_F(CliTest, IntractableQuantileExitsOne) {
  const std::string in = file("q.json", R"({"kind": "goods", "agents": 2, "items": 2,
      "quantiles": ["1/4", "1/4"], "values": [[1, 2], [3, 4]]})");
  EXPECT_EQ(run({"solve", "--objective", "esw", "-i", in}), 1);
  EXPECT_NE(err_.find("intractable quantile"), std::string::npos) << err_;
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  const std::string odd = file("odd.json", R"({"kind": "goods", "agents": 2, "items": 3,
      "quantiles": ["1/2", "1/2"], "values": [[1, 2, 3], [3, 4, 5]]})");
  EXPECT_EQ(run({"solve", "--objective", "usw", "--balanced", "-i", odd}), 2);
  EXPECT_EQ(run({"solve", "--objective", "esc", "-i", odd}), 2);
  EXPECT_EQ(run({"solve", "--objective", "usw", "--algorithm", "nope", "-i", odd}), 2);
  EXPECT_EQ(run({"solve", "--objective", "usw", "-i", file("missing.json")}), 2);
  EXPECT_EQ(run({"solve", "-i", odd}), 2);
  EXPECT_EQ(run({}), 2);
}

TEST_F(CliTest, UnsupportedCombinationExitsOne) {
  const std::string in = file("g.json", kGreedyExample);
  EXPECT_EQ(run({"solve", "--objective", "usw", "--balanced", "--algorithm", "scapegoat", "-i", in}),
            1);
}

TEST_F(CliTest, Oracle) {
  const std::string in = file("s.json", R"({"kind": "goods", "agents": 3, "items": 4,
      "quantiles": ["0", "0", "0"], "values": [[10, 0, 0, 0], [0, 8, 0, 0], [0, 0, 6, 5]]})");
  EXPECT_EQ(run({"oracle", "--objective", "usw", "-i", in}), 0);
  EXPECT_EQ(parse_allocation(out_).welfare, 23);

  const std::string single = file("one.json", R"({"kind": "goods", "agents": 1, "items": 3,
      "quantiles": ["1/2"], "values": [[4, 9, 1]]})");
  EXPECT_EQ(run({"oracle", "--objective", "usw", "-i", single}), 0);
  EXPECT_EQ(parse_allocation(out_).welfare, 4);

  EXPECT_EQ(run({"gen", "--agents", "4", "--items", "12", "--kind", "goods", "--seed", "1", "-o",
                 file("big.json")}),
            0);
  EXPECT_EQ(run({"oracle", "--objective", "usw", "-i", file("big.json")}), 1);
}

TEST_F(CliTest, GenIsByteIdentical) {
  const std::vector<std::string> args = {"gen",  "--agents", "3",   "--items",  "6",
                                         "--tau", "2/3",     "--kind", "chores", "--seed",
                                         "12"};
  ASSERT_EQ(run(args), 0);
  const std::string first = out_;
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(first, out_);
  EXPECT_EQ(run({"gen", "--agents", "2", "--items", "2", "--kind", "goods", "--seed", "1", "--tau",
                 "3/3"}),
            2);
  EXPECT_EQ(run({"gen", "--agents", "2", "--items", "2", "--kind", "goods", "--seed", "1",
                 "--max-value", "0"}),
            2);
  EXPECT_EQ(run({"gen", "--agents", "3", "--items", "4", "--kind", "goods", "--seed", "1",
                 "--binary", "--identical"}),
            0);
  const Instance shared = parse_instance(out_);
  EXPECT_TRUE(shared.is_binary());
  EXPECT_TRUE(shared.has_identical_rows());
  EXPECT_EQ(run({"gen", "--agents", "2", "--items", "2", "--kind", "goods", "--seed", "1",
                 "--hetero-taus", "0,1/3"}),
            0);
  EXPECT_EQ(parse_instance(out_).quantile(1), Quantile(1, 3));
}

TEST_F(CliTest, CheckRejectsInconsistentFiles) {
  const std::string in = file("g.json", kGreedyExample);
  EXPECT_EQ(run({"check", "--objective", "usw", "-i", in, "-a",
                 file("bad.json", R"({"owner": [0, 1, 2, 0]})")}),
            2);
  EXPECT_EQ(run({"check", "--objective", "usw", "--balanced", "-i", in, "-a",
                 file("lop.json", R"({"owner": [0, 1, 1, 1]})")}),
            2);
  EXPECT_EQ(run({"check", "--objective", "usw", "-i", in, "-a",
                 file("short.json", R"({"owner": [0, 1]})")}),
            2);
  EXPECT_EQ(run({"check", "--objective", "usw", "-i", in, "-a",
                 file("lie.json", R"({"owner": [0, 0, 1, 1], "welfare": 9})")}),
            2);
  EXPECT_EQ(run({"check", "--objective", "usw", "-i", in, "-a",
                 file("ok.json", R"({"owner": [0, 1, 1, 1]})")}),
            0);
}

TEST_F(CliTest, BenchHelpDocumentsColumns) {
  EXPECT_EQ(run({"bench", "--help"}), 0);
  EXPECT_NE(out_.find(kBenchHeader), std::string::npos);
}

TEST_F(CliTest, BenchExactSolverRatiosAreOne) {
  EXPECT_EQ(run({"bench", "--agents", "2", "--items", "4", "--objective", "esw", "--balanced",
                 "--trials", "30", "--seed", "3"}),
            0);
  std::istringstream lines(out_);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary", 0) == 0) {
      EXPECT_NE(line.find(",30,1.000000,1.000000"), std::string::npos) << line;
    } else {
      EXPECT_EQ(line.substr(line.rfind(',') + 1), "1.000000") << line;
      ++rows;
    }
  }
  EXPECT_EQ(rows, 30);
}
