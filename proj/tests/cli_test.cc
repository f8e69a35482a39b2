#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

extern std::string g_cli_path;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool have_cli() { return !g_cli_path.empty(); }

}  // namespace

TEST(Cli, SymbolicStateMatchesTrajectory1001) {
    if (!have_cli()) GTEST_SKIP() << "pass --cli=<path>";
    auto res = run_cli("state --distance 2 --trajectory 1001 --symbolic");
    ASSERT_EQ(res.exit_code, 0);
    auto j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["A_coeffs"], nlohmann::json({0, 1, 1, -1, -1, 0}));
    EXPECT_EQ(j["B_coeffs"], nlohmann::json({0, -1, 1, 1, -1, 0}));
    EXPECT_EQ(j["frame"]["rep0"], "00001");
}

TEST(Cli, UsageErrorsExitTwo) {
    if (!have_cli()) GTEST_SKIP();
    EXPECT_EQ(run_cli("state --distance 2 --trajectory 10010 --symbolic").exit_code, 2);
    EXPECT_EQ(run_cli("state --distance 2 --trajectory 1001").exit_code, 2);  // no chi
    EXPECT_EQ(run_cli("state --distance 2 --trajectory 1021 --symbolic").exit_code, 2);
    EXPECT_EQ(run_cli("state --distance 2 --trajectory 1001 --theta 1 --alpha-re 1 ").exit_code, 2);
    EXPECT_EQ(run_cli("--no-such-flag").exit_code, 2);
    EXPECT_EQ(run_cli("coset --distance 4 --z-outcomes 000000000000").exit_code, 2);
    EXPECT_EQ(run_cli("enumerate --distance 2 --theta 0.5 --phi 0").exit_code, 2);  // no mode
    EXPECT_EQ(run_cli("layout --distance 1").exit_code, 2);
}

TEST(Cli, ZeroProbabilityStrictContract) {
    if (!have_cli()) GTEST_SKIP();
    // chi = .0>: trajectory 1001 can never be heralded
    std::string flags = "state --distance 2 --trajectory 1001 --alpha-re 1 --beta-re 0";
    auto lax = run_cli(flags);
    ASSERT_EQ(lax.exit_code, 0);
    auto j = nlohmann::json::parse(lax.out);
    EXPECT_TRUE(j["alpha_L"].is_null());
    EXPECT_EQ(j["probability"].get<double>(), 0.0);
    EXPECT_EQ(run_cli(flags + " --strict").exit_code, 1);
}

TEST(Cli, LayoutSchema) {
    if (!have_cli()) GTEST_SKIP();
    auto res = run_cli("layout --distance 3");
    ASSERT_EQ(res.exit_code, 0);
    auto j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["distance"], 3);
    EXPECT_EQ(j["num_data"], 13);
    EXPECT_EQ(j["x_stabs"].size(), 6u);
    EXPECT_EQ(j["z_stabs"].size(), 6u);
    EXPECT_EQ(j["logical_z"], nlohmann::json({0, 1, 2}));
    EXPECT_TRUE(j["logical_x"].is_array());
}

TEST(Cli, CosetSubcommand) {
    if (!have_cli()) GTEST_SKIP();
    auto res = run_cli("coset --distance 2 --z-outcomes 01");
    ASSERT_EQ(res.exit_code, 0);
    auto j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["coset"].size(), 8u);
}

TEST(Cli, DeterministicBytesAcrossRunsAndWorkers) {
    if (!have_cli()) GTEST_SKIP();
    std::string args = "enumerate --distance 3 --sample 20 --seed 9 --theta 0.7 --phi 0.1";
    auto a = run_cli(args + " --workers 1");
    auto b = run_cli(args + " --workers 1");
    auto c = run_cli(args + " --workers 8");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Cli, CsvFormat) {
    if (!have_cli()) GTEST_SKIP();
    auto res = run_cli("enumerate --distance 2 --trivial-x --theta 0.5 --phi 0.2 --format csv");
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.out.substr(0, res.out.find('\n')),
              "trajectory,prob,alphaL_re,alphaL_im,betaL_re,betaL_im,bloch_x,bloch_y,bloch_z");
}

TEST(Cli, OracleCheckPasses) {
    if (!have_cli()) GTEST_SKIP();
    auto res = run_cli("oracle-check --distance 2 --trajectories all --chis random:20 --seed 7");
    ASSERT_EQ(res.exit_code, 0);
    auto j = nlohmann::json::parse(res.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_LT(j["max_state_deviation"].get<double>(), 1e-9);
}
