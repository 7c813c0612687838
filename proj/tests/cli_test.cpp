// End-to-end checks of the command-line tool. The binary path arrives via
// the QHS_CLI environment variable (set by CTest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "test_util.hpp"

namespace qhs {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QHS_CLI");
  if (bin == nullptr) throw std::runtime_error("QHS_CLI not set");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

TEST(Cli, DecomposeGhzShowsTheFullTable) {
  const RunResult r = run_cli("decompose --state ghz:3");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("IZZ  +1.000000  (t33)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ZIZ  +1.000000  (o33)"), std::string::npos);
  EXPECT_NE(r.out.find("ZZI  +1.000000  (f33)"), std::string::npos);
  EXPECT_NE(r.out.find("XXX  +1.000000  (G111)"), std::string::npos);
  EXPECT_NE(r.out.find("XYY  -1.000000  (G122)"), std::string::npos);
  EXPECT_NE(r.out.find("YXY  -1.000000  (G212)"), std::string::npos);
  EXPECT_NE(r.out.find("YYX  -1.000000  (G221)"), std::string::npos);
}

TEST(Cli, DecomposeWernerAndBasis) {
  const RunResult w = run_cli("decompose --state werner:0.4");
  EXPECT_EQ(w.exit_code, 0);
  EXPECT_NE(w.out.find("XX  -0.400000  (t11)"), std::string::npos) << w.out;
  EXPECT_NE(w.out.find("YY  -0.400000  (t22)"), std::string::npos);
  EXPECT_NE(w.out.find("ZZ  -0.400000  (t33)"), std::string::npos);

  const RunResult b = run_cli("decompose --state basis:2:1");
  EXPECT_EQ(b.exit_code, 0);
  for (const char* line : {"II  +1.000000", "IZ  +1.000000  (s3)",
                           "ZI  +1.000000  (r3)", "ZZ  +1.000000  (t33)"})
    EXPECT_NE(b.out.find(line), std::string::npos) << b.out << "\nmissing: " << line;
}

TEST(Cli, DecomposeJsonIsStableUnderReserialization) {
  const RunResult r = run_cli("decompose --state ghz:3 --json");
  EXPECT_EQ(r.exit_code, 0);
  const json parsed = json::parse(r.out);
  EXPECT_EQ(parsed["n"], 3);
  EXPECT_NEAR(parsed["coeffs"]["XYY"].get<double>(), -1.0, 1e-12);
  EXPECT_EQ(json::parse(parsed.dump(2)).dump(2), parsed.dump(2));
}

TEST(Cli, SeparabilityVerdicts) {
  const RunResult w = run_cli("separability --state werner:0.3");
  EXPECT_EQ(w.exit_code, 0);
  EXPECT_NE(w.out.find("+0.900000"), std::string::npos) << w.out;
  EXPECT_NE(w.out.find("verdict: separable"), std::string::npos);
  EXPECT_NE(w.out.find("no entanglement detected"), std::string::npos);

  const RunResult s = run_cli("separability --state singlet");
  EXPECT_EQ(s.exit_code, 0);  // the verdict never changes the exit status
  EXPECT_NE(s.out.find("+3.000000"), std::string::npos);
  EXPECT_NE(s.out.find("verdict: entangled_by_criterion"), std::string::npos);
  EXPECT_NE(s.out.find("negative partial transpose"), std::string::npos);

  const RunResult g = run_cli("separability --state ghz:3 --json");
  EXPECT_EQ(g.exit_code, 0);
  const json parsed = json::parse(g.out);
  EXPECT_EQ(parsed["verdict"], "entangled_by_criterion");
  EXPECT_NEAR(parsed["sum_abs"].get<double>(), 4.0, 1e-12);
}

TEST(Cli, SeparabilityCertificate) {
  const RunResult r = run_cli("separability --state werner:0.2 --certificate");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("certificate (7 product terms"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(I-X)/2"), std::string::npos);
  EXPECT_NE(r.out.find("I/2 (x) I/2"), std::string::npos);  // remainder term
}

TEST(Cli, ReportPatterns) {
  const RunResult g = run_cli("report --state ghz:3");
  EXPECT_EQ(g.exit_code, 0);
  EXPECT_NE(g.out.find("{0,1}: sum = +1.000000, separable"), std::string::npos) << g.out;
  EXPECT_NE(g.out.find("{0,1,2}: sum = +4.000000, entangled_by_criterion"),
            std::string::npos);

  const RunResult b = run_cli("report --state bell:3:1 --json");
  EXPECT_EQ(b.exit_code, 0);
  const json parsed = json::parse(b.out);
  for (const auto& e : parsed["entries"])
    EXPECT_EQ(e["verdict"],
              e["kept"].size() == 3 ? "entangled_by_criterion" : "separable");

  const RunResult p = run_cli("report --state basis:3:1");
  EXPECT_EQ(p.exit_code, 0);
  EXPECT_EQ(p.out.find("entangled"), std::string::npos) << p.out;
}

TEST(Cli, BraidCheckPassesAndReportsDeviations) {
  const RunResult r = run_cli("braid-check --n 4");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("commuting family"), std::string::npos);
  EXPECT_NE(r.out.find("yang-baxter"), std::string::npos);
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, BellStatesOrthonormalityAndTables) {
  const RunResult r = run_cli("bell-states --n 3 --json --tol 1e-12");
  EXPECT_EQ(r.exit_code, 0);
  const json parsed = json::parse(r.out);
  EXPECT_TRUE(parsed["orthonormal"].get<bool>());
  EXPECT_LT(parsed["gram_deviation"].get<double>(), 1e-12);
  ASSERT_EQ(parsed["states"].size(), 8u);
  EXPECT_NEAR(parsed["states"][0]["coeffs"]["ZZZ"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(parsed["states"][0]["coeffs"]["XXZ"].get<double>(), -1.0, 1e-12);
}

TEST(Cli, WernerScanFlipsBetweenGridPoints) {
  const RunResult r = run_cli("werner-scan --steps 11");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("+0.300000 +0.900000  separable"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("+0.400000 +1.200000  entangled_by_criterion"), std::string::npos);
  EXPECT_NE(r.out.find("agree at every grid point"), std::string::npos);
}

TEST(Cli, FileStatesRoundTripThroughTheSharedFormat) {
  const std::string path = ::testing::TempDir() + "qhs_cli_state.json";
  {
    std::ofstream out(path);
    out << matrix_to_json(werner_state(0.5)).dump();
  }
  const RunResult r = run_cli("separability --state file:" + path);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("+1.500000"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("decompose --state nosuch:1").exit_code, 2);
  EXPECT_EQ(run_cli("decompose").exit_code, 2);          // missing --state
  EXPECT_EQ(run_cli("separability --state werner:7").exit_code, 2);
  EXPECT_EQ(run_cli("report --state ghz:7").exit_code, 2);  // above the cap
  EXPECT_EQ(run_cli("braid-check --n 12").exit_code, 2);
  EXPECT_EQ(run_cli("separability --state file:/nonexistent.json").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

}  // namespace
}  // namespace qhs
