#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bspec/cli/app.hpp"
#include "bspec/json_io.hpp"

using namespace bspec::cli;

namespace {

RunConfig space_config(const std::string& construction, std::size_t n, const std::string& pred) {
  RunConfig c;
  c.construction = construction;
  c.n = n;
  c.pred = pred;
  return c;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bspec_test_" + name)).string();
}

}  // namespace

TEST(Cli, VerifyHoldsWithExpectedDimension) {
  const CommandResult r = cmd_verify(space_config("sl2-join-nt", 4, "1bar*-spec"));
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report.at("artifact"), "bspec");
  EXPECT_EQ(r.report.at("schema"), kSchemaVersion);
  EXPECT_EQ(r.report.at("space").at("dim"), 8);
  EXPECT_EQ(r.report.at("space").at("expected_dim"), 8);
  EXPECT_EQ(r.report.at("verdict").at("outcome"), "holds");
  EXPECT_EQ(r.report.at("verdict").at("mode"), "exhaustive");
}

TEST(Cli, VerifyB2mByHalfSize) {
  RunConfig c;
  c.construction = "b2m";
  c.m = 2;
  c.pred = "2bar-spec";
  const CommandResult r = cmd_verify(c);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report.at("space").at("dim"), 10);
}

TEST(Cli, FailingWitnessReverifiesInIsolation) {
  const CommandResult r = cmd_verify(space_config("full-mat", 2, "1-spec"));
  ASSERT_EQ(r.exit_code, kCheckFailed);
  const auto& witness = r.report.at("verdict").at("witness").at("matrix");
  const std::string path = temp_path("witness.json");
  {
    std::ofstream out(path);
    out << bspec::json{{"rows", 2}, {"cols", 2}, {"basis", bspec::json::array({witness})}}.dump();
  }
  RunConfig c;
  c.space_file = path;
  c.pred = "1-spec";
  const CommandResult again = cmd_verify(c);
  std::remove(path.c_str());
  EXPECT_EQ(again.exit_code, kCheckFailed);
  EXPECT_EQ(again.report.at("verdict").at("outcome"), "fails");
}

TEST(Cli, KOverridesPredicate) {
  RunConfig c = space_config("zero_diag", 3, "2-spec");
  c.k = 3;
  const CommandResult r = cmd_verify(c);
  EXPECT_EQ(r.report.at("config").at("pred"), "3-spec");
}

TEST(Cli, ScanAdaptedHurdle) {
  const CommandResult r = cmd_scan_adapted(space_config("hurdle", 4, ""));
  EXPECT_EQ(r.report.at("scan").at("projective_points"), 85);
  EXPECT_EQ(r.report.at("scan").at("adapted"), 0);
}

TEST(Cli, DetectHurdleAndTrk) {
  EXPECT_EQ(cmd_detect_hurdle(space_config("hurdle", 4, "")).report.at("hurdle").at("status"), "found");
  EXPECT_EQ(cmd_detect_hurdle(space_config("nt", 3, "")).report.at("hurdle").at("status"), "none");
  RunConfig tight = space_config("hurdle", 5, "");
  tight.budget = 10;
  EXPECT_EQ(cmd_detect_hurdle(tight).exit_code, kCheckFailed);
  const CommandResult t = cmd_trk(space_config("nt", 4, ""));
  EXPECT_EQ(t.report.at("result").at("trk"), 3);
  EXPECT_EQ(t.report.at("result").at("intransitive"), true);
}

TEST(Cli, Choice) {
  RunConfig c;
  c.matrix = "0,0;1,1";
  c.target = "t^2 + t + 1";
  const CommandResult r = cmd_choice(c);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report.at("result").at("r"), bspec::json::parse("[[1]]"));
  EXPECT_EQ(r.report.at("result").at("verified"), true);
  c.target = "t^2 + 1";
  EXPECT_THROW(cmd_choice(c), std::invalid_argument);
  c.matrix = "0,x;1,1";
  EXPECT_THROW(cmd_choice(c), std::invalid_argument);
}

TEST(Cli, LemmaReports) {
  RunConfig c;
  c.lemma = "diagonal-zero";
  c.n = 3;
  c.trials = 10;
  const CommandResult r = cmd_lemma(c);
  EXPECT_EQ(r.exit_code, kOk);
  const auto& scans = r.report.at("harness").at("extra").at("zero_diagonal_scans");
  ASSERT_EQ(scans.size(), 1u);
  EXPECT_EQ(scans[0].at("outcome"), "fails");
}

TEST(Cli, UsageErrors) {
  EXPECT_THROW(cmd_verify(space_config("nosuch", 3, "1-spec")), std::invalid_argument);
  EXPECT_THROW(cmd_verify(space_config("nt", 3, "weird")), std::invalid_argument);
  RunConfig c = space_config("nt", 3, "1-spec");
  c.field = "gf6";
  EXPECT_THROW(cmd_verify(c), std::invalid_argument);
  RunConfig missing;
  missing.space_file = temp_path("does_not_exist.json");
  EXPECT_THROW(cmd_verify(missing), std::invalid_argument);
}

TEST(Cli, ReportsDeterministicModuloTiming) {
  RunConfig c = space_config("joint(sl(2),nt(3))", 5, "1bar*-spec");
  c.budget = 1 << 12;
  c.samples = 20000;
  c.workers = 1;
  const auto a = bspec::strip_timing(cmd_verify(c).report);
  c.workers = 4;
  const auto b = bspec::strip_timing(cmd_verify(c).report);
  EXPECT_EQ(a.at("verdict"), b.at("verdict"));
  EXPECT_EQ(a.at("verdict").at("mode"), "sampled");
  EXPECT_FALSE(a.contains("timing_ms"));
}
