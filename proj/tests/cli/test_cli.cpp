#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "dddp/bound_states.hpp"
#include "dddp/scattering.hpp"
#include "json.hpp"
#include "table.hpp"
#include "table1.hpp"

using namespace dddp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Numeric CSV (no quoted fields): header plus rows of cells.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : split(text, '\n')) {
    if (!line.empty()) rows.push_back(split(line, ','));
  }
  return rows;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST(Cli, BoundCsv) {
  const Result r = call({"bound", "--u1", "11", "--u2", "12", "--a", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"level", "energy", "p", "residual", "count", "threshold"}));
  EXPECT_NEAR(num(rows[1][1]), -36.0, 1e-3);
  EXPECT_NEAR(num(rows[2][1]), -30.25, 1e-3);
  EXPECT_EQ(rows[1][4], "2");
  EXPECT_NEAR(num(rows[1][5]), 23.0 / 132.0, 1e-14);
}

TEST(Cli, BoundSymmetricAndBelowThreshold) {
  auto rows = parse_csv(call({"bound", "--u1", "5", "--u2", "5", "--a", "1"}).out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(num(rows[1][1]), -7.14, 0.01);
  EXPECT_NEAR(num(rows[2][1]), -4.98, 0.01);
  rows = parse_csv(call({"bound", "--u1", "1", "--u2", "1", "--a", "0.5"}).out);
  EXPECT_EQ(rows.size(), 2u);
}

TEST(Cli, BoundSignedStrengths) {
  const auto rows = parse_csv(call({"bound", "--v1", "-5", "--v2", "5", "--a", "1"}).out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(num(rows[1][1]), -6.20, 0.01);
  EXPECT_EQ(rows[1][5], "");
}

TEST(Cli, JsonOutput) {
  const Result r = call({"bound", "--u1", "5", "--u2", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"level", "energy", "p", "residual", "count", "threshold"}));
  EXPECT_NEAR(j[0]["energy"].get<double>(), -7.14, 0.01);
}

TEST(Cli, JsonComplexAndBlank) {
  auto j = nlohmann::json::parse(call({"resonances", "--v1", "3", "--v2", "3", "--n", "1", "--format", "json"}).out);
  EXPECT_NEAR(j[0]["energy"]["re"].get<double>(), 4.01, 0.01);
  EXPECT_NEAR(j[0]["energy"]["im"].get<double>(), -1.77, 0.01);
  j = nlohmann::json::parse(call({"scan", "--v1", "-5", "--v2", "-5", "--emin", "-1", "--emax", "1", "--n", "2",
                                  "--format", "json"})
                                .out);
  EXPECT_TRUE(j[0]["R"].is_null());
  EXPECT_TRUE(j[1]["R"].is_number());
}

TEST(Cli, ScanFreeParticle) {
  const Result r = call({"scan", "--v1", "0", "--v2", "0", "--a", "1", "--emin", "0.1", "--emax", "50", "--n", "50"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 51u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(num(rows[i][2]), 1.0);
}

TEST(Cli, ScanShowsBoundStatePeaks) {
  const Result r = call({"scan", "--v1", "-5", "--v2", "-5", "--a", "1", "--emin", "-10", "--emax", "50", "--n", "600"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 601u);
  EXPECT_EQ(num(rows[1][0]), -10.0);
  EXPECT_EQ(num(rows[600][0]), 50.0);
  std::vector<double> peaks;
  for (std::size_t i = 2; i + 1 < rows.size(); ++i) {
    const double e = num(rows[i][0]);
    const double t = num(rows[i][2]);
    if (e < 0.0 && t > num(rows[i - 1][2]) && t > num(rows[i + 1][2])) peaks.push_back(e);
    if (e < 0.0) {
      EXPECT_EQ(rows[i][1], "");
    }
  }
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_NEAR(peaks[0], -7.14, 0.1);
  EXPECT_NEAR(peaks[1], -4.98, 0.1);
}

TEST(Cli, ScanMarksPoleHits) {
  // Single well of strength 2: bound state exactly at E = -1.
  const auto rows = parse_csv(call({"scan", "--v1", "-2", "--v2", "0", "--emin", "-2", "--emax", "0", "--n", "3"}).out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2][2], "inf");
  EXPECT_EQ(rows[3][1], "1");
}

TEST(Cli, ScanStrongBarrierPeaksAtPtEnergies) {
  const auto rows = parse_csv(call({"scan", "--v1", "30", "--v2", "30", "--a", "1", "--emin", "0.1", "--emax", "160",
                                    "--n", "1000"})
                                  .out);
  std::vector<double> peaks;
  for (std::size_t i = 2; i + 1 < rows.size(); ++i) {
    const double t = num(rows[i][2]);
    if (t > num(rows[i - 1][2]) && t > num(rows[i + 1][2])) peaks.push_back(num(rows[i][0]));
  }
  ASSERT_EQ(peaks.size(), 4u);
  const double pt[] = {8.6880, 34.9042, 79.0282, 141.5120};
  const double step = (160.0 - 0.1) / 999.0;
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(peaks[n], pt[n], step);
}

TEST(Cli, CsvRoundTrip) {
  const Result r = call({"scan", "--v1", "3", "--v2", "-1.7", "--a", "0.8", "--emin", "0.3", "--emax", "40", "--n", "97"});
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 98u);
  const DeltaPair pot{3.0, -1.7, 0.8};
  const double step = (40.0 - 0.3) / 96.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double e = i == 97 ? 40.0 : 0.3 + (i - 1) * step;
    const ScanRow want = coefficients(pot, e);
    EXPECT_EQ(rows[i][0], cli::format_number(e));
    EXPECT_EQ(rows[i][1], cli::format_number(want.reflection));
    EXPECT_EQ(rows[i][2], cli::format_number(want.transmission));
    EXPECT_NEAR(num(rows[i][2]), want.transmission, 5e-15 * want.transmission);
    EXPECT_EQ(cli::format_number(num(rows[i][2])), rows[i][2]);
  }
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"resonances", "--v1", "3", "--v2", "2.9", "--n", "4"};
  EXPECT_EQ(call(args).out, call(args).out);
  const std::vector<std::string> sweep = {"sweep", "--u1", "10", "--a", "1", "--param", "u2",
                                          "--lo", "1", "--hi", "30", "--n", "50"};
  EXPECT_EQ(call(sweep).out, call(sweep).out);
}

TEST(Cli, OutFile) {
  const std::string path = std::string(DDDP_TEST_TMPDIR) + "/cli_out.csv";
  const Result r = call({"hardbox", "--v0", "3", "--a", "1", "--n", "4", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  const auto rows = parse_csv(buf.str());
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NEAR(num(rows[1][1]), 4.72899836465117, 1e-12);
  EXPECT_NEAR(num(rows[4][1]), 123.866736940071, 1e-10);
}

TEST(Cli, Resonances) {
  const auto rows = parse_csv(call({"resonances", "--v1", "3", "--v2", "3", "--a", "1", "--n", "4"}).out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "energy_re", "energy_im", "width", "k_re", "k_im", "t",
                                               "residual"}));
  const double want[4][2] = {{4.01, -1.77}, {21.52, -11.11}, {58.64, -25.90}, {115.96, -43.56}};
  for (int n = 0; n < 4; ++n) {
    EXPECT_NEAR(num(rows[n + 1][1]), want[n][0], 0.01);
    EXPECT_NEAR(num(rows[n + 1][2]), want[n][1], 0.01);
  }
}

TEST(Cli, PerfectTransmission) {
  auto rows = parse_csv(call({"pt", "--v1", "-3", "--v2", "3", "--a", "1", "--n", "4"}).out);
  ASSERT_EQ(rows.size(), 5u);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_NEAR(num(rows[n][1]), n * n * M_PI * M_PI, 1e-10);
    EXPECT_EQ(rows[n][6], "antisymmetric");
  }
  rows = parse_csv(call({"pt", "--v1", "3", "--v2", "2.9", "--a", "1", "--n", "1"}).out);
  EXPECT_NEAR(num(rows[1][1]), 4.70, 0.01);
  EXPECT_NEAR(num(rows[1][2]), -0.04, 0.01);
  EXPECT_NEAR(num(rows[1][5]), 0.9996, 5e-4);
}

TEST(Cli, ZeroEnergyReflection) {
  auto rows = parse_csv(call({"r0", "--u1", "2", "--u2", "2", "--a", "1"}).out);
  EXPECT_EQ(rows[1][0], "critical_symmetric");
  EXPECT_EQ(num(rows[1][2]), 0.0);
  rows = parse_csv(call({"r0", "--u1", "2", "--u2", "1", "--a", "1.5"}).out);
  EXPECT_EQ(rows[1][0], "critical_sum_rule");
  EXPECT_NEAR(num(rows[1][2]), 0.36, 1e-12);
  rows = parse_csv(call({"r0", "--u1", "2", "--u2", "3", "--a", "1"}).out);
  EXPECT_EQ(rows[1][0], "generic");
  EXPECT_EQ(num(rows[1][2]), 1.0);
  rows = parse_csv(call({"r0", "--u1", "2", "--u2", "2", "--a", "1.001", "--tol-crit", "1e-2"}).out);
  EXPECT_EQ(rows[1][0], "critical_symmetric");
}

TEST(Cli, SweepOnsets) {
  auto rows = parse_csv(call({"sweep", "--u1", "11", "--u2", "11", "--param", "a", "--lo", "0.05", "--hi", "2", "--n",
                              "200"})
                            .out);
  ASSERT_EQ(rows.size(), 201u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"sweep_value", "E0", "E1"}));
  double onset = 0.0;
  for (std::size_t i = 1; i < rows.size() && onset == 0.0; ++i) {
    if (!rows[i][2].empty()) onset = num(rows[i][0]);
  }
  EXPECT_GT(onset, 2.0 / 11.0);
  EXPECT_LT(onset, 2.0 / 11.0 + 0.01);

  rows = parse_csv(call({"sweep", "--u1", "10", "--a", "0.9", "--param", "u2", "--lo", "0.5", "--hi", "3", "--n", "26"})
                       .out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double u2 = num(rows[i][0]);
    if (std::abs(u2 - 1.25) < 1e-9) continue;
    EXPECT_EQ(rows[i][2].empty(), u2 < 1.25) << u2;
  }
}

TEST(Cli, SweepAvoidedCrossing) {
  const auto rows = parse_csv(call({"sweep", "--u1", "10", "--a", "1", "--param", "u2", "--lo", "1", "--hi", "30",
                                    "--n", "300"})
                                  .out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!rows[i][2].empty()) {
      EXPECT_GT(num(rows[i][2]) - num(rows[i][1]), 0.0);
    }
  }
}

TEST(Cli, Table1Passes) {
  const Result r = call({"table1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"30,30,1\""), std::string::npos);
}

TEST(Cli, Table1ReportsFailures) {
  cli::Table1Tolerances strict;
  strict.resonance_energy = 1e-9;
  const auto result = cli::reproduce_table1(strict);
  EXPECT_FALSE(result.all_gating_pass);
  const auto loose = cli::reproduce_table1();
  EXPECT_TRUE(loose.all_gating_pass);
  // 8 rows x 4 columns x 5 gating quantities; the 4 asymmetric rows add the
  // non-gating half-width of the zero.
  EXPECT_EQ(loose.cells.size(), 8u * 4u * 5u + 4u * 4u);
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({"scan", "--v1", "1"}).code, 2);
  EXPECT_EQ(call({"scan", "--v1", "1", "--emin", "2", "--emax", "1", "--n", "5"}).code, 2);
  EXPECT_EQ(call({"scan", "--v1", "1", "--emin", "0", "--emax", "1", "--n", "1"}).code, 2);
  EXPECT_EQ(call({"bound", "--u1", "1", "--a", "-1"}).code, 2);
  EXPECT_EQ(call({"bound", "--u1", "1", "--v1", "-1"}).code, 2);
  EXPECT_EQ(call({"bound", "--u1", "abc"}).code, 2);
  EXPECT_EQ(call({"bound", "--u1", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"resonances", "--v1", "0", "--v2", "0"}).code, 2);
  EXPECT_EQ(call({"resonances", "--v1", "1", "--v2", "1", "--n", "0"}).code, 2);
  EXPECT_EQ(call({"sweep", "--u1", "1", "--param", "b", "--lo", "0.1", "--hi", "1", "--n", "5"}).code, 2);
  EXPECT_EQ(call({"r0", "--u1", "0", "--u2", "1"}).code, 2);
  EXPECT_EQ(call({"bound", "--u1", "1", "--tol-x", "0"}).code, 2);
  EXPECT_EQ(call({"hardbox", "--v0", "1", "--a", "0"}).code, 2);
  const Result r = call({"bound", "--a", "1", "--out", "/nonexistent/dir/x.csv", "--u1", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, HelpIsSuccess) { EXPECT_EQ(call({"--help"}).code, 0); }

TEST(Cli, IncompleteSearch) {
  const Result r = call({"resonances", "--v1", "3", "--v2", "3", "--max-iter", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("incomplete"), std::string::npos);
}

TEST(Cli, CsvQuotesTextWithCommas) {
  cli::Table t;
  t.columns = {{"label"}, {"x"}};
  t.add_row({std::string("a,b"), 1.5});
  t.add_row({std::string("say \"hi\""), cli::Cell{}});
  std::ostringstream out;
  cli::write_csv(t, out);
  EXPECT_EQ(out.str(), "label,x\n\"a,b\",1.5\n\"say \"\"hi\"\"\",\n");
}

TEST(Cli, NumberFormatting) {
  EXPECT_EQ(cli::format_number(0.1), "0.1");
  EXPECT_EQ(cli::format_number(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(cli::format_number(INFINITY), "inf");
  EXPECT_EQ(cli::format_number(-INFINITY), "-inf");
  EXPECT_EQ(cli::format_number(NAN), "nan");
}
