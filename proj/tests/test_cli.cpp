// End-to-end CLI tests: exit codes, report formats, and byte-for-byte
// comparison against golden files.  Regenerate goldens by running the listed
// commands manually and reviewing the diff.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CACTI_CLI_PATH
#define CACTI_CLI_PATH "./cacti"
#endif
#ifndef CACTI_DATA_DIR
#define CACTI_DATA_DIR "./data"
#endif
#ifndef CACTI_GOLDEN_DIR
#define CACTI_GOLDEN_DIR "./golden"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CACTI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult res;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data(const std::string& name) { return std::string(CACTI_DATA_DIR) + "/" + name; }

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(CACTI_GOLDEN_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void expect_golden(const std::string& args, const std::string& golden_name, int expected_exit) {
    RunResult r = run_cli(args);
    EXPECT_EQ(r.exit_code, expected_exit) << r.output;
    std::string want = read_golden(golden_name);
    ASSERT_FALSE(want.empty()) << "missing golden " << golden_name;
    EXPECT_EQ(r.output, want) << "report drifted from golden " << golden_name;
}

} // namespace

TEST(Cli, CheckSweedler) {
    expect_golden("check " + data("sweedler4.bia"), "check_sweedler4.txt", 0);
}

TEST(Cli, CheckBrokenFailsWithWitness) {
    expect_golden("check " + data("broken.bia"), "check_broken.txt", 1);
}

TEST(Cli, CheckMorphism) {
    expect_golden("check " + data("rescale_h4.mor") + " --kind morphism", "check_morphism.txt", 0);
}

TEST(Cli, CheckActions) {
    expect_golden("check " + data("action_h4_trunc2.act") + " --kind action", "check_action_trunc2.txt", 0);
    expect_golden("check " + data("action_h4_superline.act") + " --kind action",
                  "check_action_superline.txt", 0);
}

TEST(Cli, CobarCohomologySweedler) {
    expect_golden("cobar-cohomology " + data("sweedler4.bia") + " --max-ext 6",
                  "cobar_sweedler4.txt", 0);
}

TEST(Cli, CobarCohomologySweedlerModular) {
    expect_golden("cobar-cohomology " + data("sweedler4.bia") + " --max-ext 5 --field 5",
                  "cobar_sweedler4_f5.txt", 0);
}

TEST(Cli, CobarCohomologyZ2) {
    expect_golden("cobar-cohomology " + data("z2.bia") + " --max-ext 4", "cobar_z2.txt", 0);
}

TEST(Cli, CobarCohomologyTaft3) {
    expect_golden("cobar-cohomology " + data("taft3_f7.bia") + " --max-ext 3", "cobar_taft3.txt", 0);
}

TEST(Cli, HochschildCohomologyTruncPoly) {
    expect_golden("hochschild-cohomology " + data("trunc_poly2.alg") + " --max-q 3",
                  "hochschild_trunc2.txt", 0);
}

TEST(Cli, IdentitiesCobar) {
    expect_golden("identities " + data("sweedler4.bia") + " --side cobar --samples 25 --seed 42",
                  "identities_cobar_sweedler4.txt", 0);
}

TEST(Cli, IdentitiesHochschild) {
    expect_golden("identities " + data("trunc_poly2.alg") + " --side hochschild --samples 25 --seed 42",
                  "identities_hochschild_trunc2.txt", 0);
}

TEST(Cli, IdentitiesDeterministic) {
    std::string args = "identities " + data("sweedler4.bia") + " --side cobar --samples 10 --seed 7";
    RunResult a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
}

TEST(Cli, Induced) {
    expect_golden("induced " + data("action_h4_trunc2.act") + " --verify --image 3 --samples 20 --seed 42",
                  "induced_trunc2.txt", 0);
}

TEST(Cli, DualSweedler) {
    expect_golden("dual " + data("sweedler4.bia"), "dual_sweedler4.txt", 0);
}

TEST(Cli, ExtractRoundTrip) {
    expect_golden("extract " + data("sweedler4.bia"), "extract_sweedler4.txt", 0);
    expect_golden("extract " + data("z3.bia"), "extract_z3.txt", 0);
}

TEST(Cli, ExtractRejectsBroken) {
    RunResult r = run_cli("extract " + data("broken.bia"));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("d^2"), std::string::npos);
}

TEST(Cli, Lift) {
    expect_golden("lift " + data("rescale_h4.mor") + " --samples 15 --seed 7", "lift_rescale.txt", 0);
}

TEST(Cli, SkewCocycle) {
    expect_golden("skew-cocycle " + data("skew_psi.chain"), "skew_psi.txt", 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli("identities " + data("sweedler4.bia") + " --side cobar --samples 5").exit_code, 2);
    EXPECT_EQ(run_cli("check " + data("no_such_file.bia")).exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("cobar-cohomology " + data("sweedler4.bia") + " --max-ext 40").exit_code, 2);
}

TEST(Cli, StructuredFormat) {
    RunResult r = run_cli("identities " + data("sweedler4.bia") +
                          " --side cobar --samples 5 --seed 3 --format structured");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"axiom\""), std::string::npos);
    EXPECT_NE(r.output.find("\"pass\": true"), std::string::npos);
}
