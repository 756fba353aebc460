#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "nlft/io/cli.hpp"
#include "nlft/io/generate.hpp"
#include "nlft/io/json.hpp"
#include "test_support.hpp"

using namespace nlft;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nlft");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("nlft_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Json, DistributionRoundTripIsExact) {
  const DeltaDistribution d = io::gen_delta(7, 1);
  const DeltaDistribution r = io::distribution_from_json(io::json::parse(io::to_json(d).dump()));
  ASSERT_EQ(r.size(), d.size());
  for (std::size_t n = 0; n < d.size(); ++n) {
    EXPECT_EQ(r.poles[n].x, d.poles[n].x);
    EXPECT_EQ(r.poles[n].u, d.poles[n].u);
  }
}

TEST(Json, ExpMatRoundTripIsExact) {
  const ExpMat m = forward_reduced_d(io::gen_delta(4, 2));
  const ExpMat r = io::expmat_from_json(io::json::parse(io::to_json(m).dump()));
  EXPECT_EQ(em_max_coeff_diff(m, r), 0.0);
  ASSERT_EQ(r.b.size(), m.b.size());
  for (std::size_t i = 0; i < m.b.size(); ++i) EXPECT_EQ(r.b.terms()[i].freq, m.b.terms()[i].freq);
}

TEST(Json, GridSignalAndGapsRoundTrip) {
  const DiscreteSignal s = io::gen_signal(5, 3);
  EXPECT_EQ(io::signal_from_json(io::json::parse(io::to_json(s).dump())).u, s.u);
  const GridMat g = forward_e(s);
  EXPECT_EQ(max_abs_diff(io::grid_from_json(io::json::parse(io::to_json(g).dump())), g), 0.0);
  const GapVector xi = io::gen_gaps(6, 4);
  EXPECT_EQ(io::gaps_from_json(io::json::parse(io::to_json(xi).dump())).xi, xi.xi);
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_THROW(io::distribution_from_json(io::json::parse(R"({"poles":[{"x":0.5,"re":0.2,"im":0},{"x":0.4,"re":0.2,"im":0}]})")), Error);
  EXPECT_THROW(io::grid_from_json(io::json::parse(R"({"N":2,"samples":[]})")), Error);
  EXPECT_THROW(io::signal_from_json(io::json::parse(R"({"u":[]})")), Error);
  EXPECT_THROW(io::read_json("/nonexistent/nlft.json"), Error);
}

TEST(Generate, SameSeedSameInstance) {
  const auto a = io::gen_delta(9, 77), b = io::gen_delta(9, 77), c = io::gen_delta(9, 78);
  for (std::size_t n = 0; n < 9; ++n) {
    EXPECT_EQ(a.poles[n].x, b.poles[n].x);
    EXPECT_EQ(a.poles[n].u, b.poles[n].u);
  }
  EXPECT_NE(a.poles[0].x, c.poles[0].x);
}

TEST(Generate, DeltaConstraints) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int N = 1 + static_cast<int>(seed % 12);
    const DeltaDistribution d = io::gen_delta(N, seed);
    ASSERT_EQ(d.size(), static_cast<std::size_t>(N));
    EXPECT_GE(d.poles.front().x, 0.25 / N);
    EXPECT_LE(d.poles.back().x, 1.0 - 0.25 / N);
    for (std::size_t n = 0; n < d.size(); ++n) {
      EXPECT_GE(std::abs(d.poles[n].u), 0.05);
      EXPECT_LE(std::abs(d.poles[n].u), 1.2);
      if (n > 0) {
        EXPECT_GE(d.poles[n].x - d.poles[n - 1].x, 0.5 / N * (1.0 - 1e-12));
      }
    }
  }
  EXPECT_THROW(io::gen_delta(0, 1), Error);
}

TEST(Generate, SignalAndGapConstraints) {
  for (Complex u : io::gen_signal(64, 5).u) EXPECT_LE(std::abs(u), 2.0);
  const GapVector g = io::gen_gaps(16, 5);
  EXPECT_NO_THROW(validate(g));
}

TEST(Cli, ApproximateMagnitude) {
  EXPECT_EQ(cli::approx_magnitude(stratum_count(100, 10, 25)), "≈2.3e17");
  EXPECT_EQ(cli::approx_magnitude(BigInt(7)), "≈7");
  EXPECT_EQ(cli::approx_magnitude(BigInt(996)), "≈1.0e3");
}

TEST_F(CliTest, DeltaRoundTrip) {
  ASSERT_EQ(run_cli({"gen", "--kind", "delta", "--N", "6", "--seed", "3", "-o", path("d.json")}).code, 0);
  ASSERT_EQ(run_cli({"forward-d", "-i", path("d.json"), "-o", path("m.json")}).code, 0);
  ASSERT_EQ(run_cli({"inverse-d", "-i", path("m.json"), "-o", path("r.json")}).code, 0);
  const auto d = io::distribution_from_json(io::read_json(path("d.json")));
  const auto r = io::distribution_from_json(io::read_json(path("r.json")));
  ASSERT_EQ(r.size(), d.size());
  for (std::size_t n = 0; n < d.size(); ++n) EXPECT_LT(std::abs(r.poles[n].u - d.poles[n].u), 1e-9);

  const auto member = run_cli({"check-d", "-i", path("m.json"), "--N", "6"});
  EXPECT_EQ(member.code, 0);
  EXPECT_EQ(member.out, "member\n");
  EXPECT_EQ(run_cli({"check-d", "-i", path("m.json"), "--N", "5"}).code, 2);
}

TEST_F(CliTest, WeightedAndFullForms) {
  ASSERT_EQ(run_cli({"gen", "--kind", "delta", "--N", "4", "--seed", "8", "-o", path("d.json")}).code, 0);
  ASSERT_EQ(run_cli({"forward-d", "--weighted", "-i", path("d.json"), "-o", path("m.json")}).code, 0);
  ASSERT_EQ(run_cli({"inverse-d", "--weighted", "-i", path("m.json"), "-o", path("r.json")}).code, 0);
  const auto d = io::distribution_from_json(io::read_json(path("d.json")));
  const auto r = io::distribution_from_json(io::read_json(path("r.json")));
  for (std::size_t n = 0; n < d.size(); ++n) EXPECT_LT(std::abs(r.poles[n].u - d.poles[n].u), 1e-9);

  ASSERT_EQ(run_cli({"forward-d", "--full", "-i", path("d.json"), "-o", path("f.json")}).code, 0);
  const ExpMat full = io::expmat_from_json(io::read_json(path("f.json")));
  EXPECT_LT(em_max_coeff_diff(full, forward_d(d)), 1e-15);
}

TEST_F(CliTest, EulerRoundTripAndNonImage) {
  ASSERT_EQ(run_cli({"gen", "--kind", "signal", "--N", "16", "--seed", "2", "-o", path("s.json")}).code, 0);
  ASSERT_EQ(run_cli({"forward-e", "-i", path("s.json"), "-o", path("g.json")}).code, 0);
  ASSERT_EQ(run_cli({"inverse-e", "-i", path("g.json"), "-o", path("r.json")}).code, 0);
  EXPECT_EQ(run_cli({"check-e", "-i", path("g.json")}).code, 0);

  io::json g = io::read_json(path("g.json"));
  g["samples"][5]["b"]["re"] = g["samples"][5]["b"]["re"].get<double>() * 1.1;
  g["samples"][5]["b"]["im"] = g["samples"][5]["b"]["im"].get<double>() * 1.1;
  io::write_json(path("bad.json"), g);
  EXPECT_EQ(run_cli({"check-e", "-i", path("bad.json")}).code, 2);
  const auto rejected = run_cli({"inverse-e", "-i", path("bad.json"), "-o", path("x.json")});
  EXPECT_EQ(rejected.code, 2);
  EXPECT_NE(rejected.err.find("NotInImage"), std::string::npos) << rejected.err;
}

TEST_F(CliTest, DualRoundTrip) {
  ASSERT_EQ(run_cli({"gen", "--kind", "constmass", "--M", "9", "--seed", "4", "-o", path("x.json")}).code, 0);
  ASSERT_EQ(run_cli({"dual-forward", "-i", path("x.json"), "-o", path("c.json")}).code, 0);
  ASSERT_EQ(run_cli({"dual-inverse", "-i", path("c.json"), "-o", path("r.json")}).code, 0);
  const auto x = io::gaps_from_json(io::read_json(path("x.json")));
  const auto r = io::gaps_from_json(io::read_json(path("r.json")));
  for (std::size_t n = 0; n < x.size(); ++n) EXPECT_LT(std::abs(r.xi[n] - x.xi[n]), 1e-8);
}

TEST_F(CliTest, SampleWritesCsv) {
  ASSERT_EQ(run_cli({"gen", "--kind", "delta", "--N", "2", "--seed", "1", "-o", path("d.json")}).code, 0);
  ASSERT_EQ(run_cli({"forward-d", "-i", path("d.json"), "-o", path("m.json")}).code, 0);
  ASSERT_EQ(run_cli({"sample", "-i", path("m.json"), "--count", "3", "-o", path("s.csv")}).code, 0);
  std::ifstream in(path("s.csv"));
  std::string line;
  int lines = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "z,re_a,im_a,re_b,im_b");
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 3);
}

TEST(Cli, StrataAndComplexity) {
  const auto strata = run_cli({"strata", "--N", "100", "--k", "10", "--l", "25"});
  EXPECT_EQ(strata.code, 0);
  EXPECT_NE(strata.out.find("225798070267414150"), std::string::npos);
  EXPECT_NE(strata.out.find("≈2.3e17"), std::string::npos);
  const auto cx = run_cli({"complexity", "--N", "1000"});
  EXPECT_EQ(cx.code, 0);
  EXPECT_NEAR(io::json::parse(cx.out).at("difference").get<double>(), 3.7e6, 0.05 * 3.7e6);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("NLFT_TOL_EPS_MEMBER", "1e-30", 1);
  const DiscreteSignal s = io::gen_signal(32, 9);
  const std::string file = (fs::temp_directory_path() / ("nlft_env_" + std::to_string(::getpid()) + ".json")).string();
  io::write_json(file, io::to_json(forward_e(s)));
  const int strict = run_cli({"check-e", "-i", file}).code;
  ::unsetenv("NLFT_TOL_EPS_MEMBER");
  const int relaxed = run_cli({"check-e", "-i", file}).code;
  fs::remove(file);
  EXPECT_EQ(strict, 2);
  EXPECT_EQ(relaxed, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"bogus"}).code, 1);
  EXPECT_EQ(run_cli({"strata", "--N", "10", "--k", "1", "--l", "10"}).code, 1);
  EXPECT_EQ(run_cli({"inverse-d", "-i", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, OracleChecks) {
  const auto stratum = run_cli({"oracle", "--kind", "stratum", "--N", "12", "--k", "2", "--l", "5"});
  EXPECT_EQ(stratum.code, 0);
  EXPECT_TRUE(io::json::parse(stratum.out).at("match").get<bool>());
}
