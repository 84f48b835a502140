#include "cli_run.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace hpsum;

namespace {

struct cli_output {
    int code;
    std::string out;
    std::string err;
};

cli_output run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hpsum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

complex_t json_value(const std::string& text, const char* key = "value") {
    return complex_from_json(nlohmann::json::parse(text).at(key));
}

}  // namespace

TEST(CliHp, ExponentialMatchesDirect) {
    const auto r = run_cli({"hp", "--a", "1", "--b", "0.5", "--k", "2", "--n", "10", "--method", "exp"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LE(std::abs(json_value(r.out) - hp_direct(1, 0.5, 2, 10)), 1e-9);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("method"), "exp");
    EXPECT_TRUE(j.at("quad_error").is_number());
    EXPECT_TRUE(j.at("evals").is_number());
}

TEST(CliHp, AutoRoutesIntegerCase) {
    const auto r = run_cli({"hp", "--a", "1", "--b", "0", "--k", "1", "--n", "10", "--method", "auto"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double h10 = 7381.0 / 2520.0;
    // sum 1/(i j) = -i H_10
    EXPECT_LE(std::abs(json_value(r.out) - complex_t(0.0, -h10)), 1e-8);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("method"), "integer_odd");
    EXPECT_FALSE(j.at("notes").empty());
}

TEST(CliHp, ForbiddenParameterExitsTwo) {
    const auto r = run_cli({"hp", "--a", "1", "--bi", "1", "--b", "0", "--k", "1", "--n", "5", "--method", "exp"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(CliHp, BadArgumentsExitTwo) {
    EXPECT_EQ(run_cli({"hp", "--a", "0", "--b", "0.5", "--k", "1", "--n", "5"}).code, 2);
    EXPECT_EQ(run_cli({"hp", "--a", "1", "--b", "0.5", "--k", "0", "--n", "5"}).code, 2);
    EXPECT_NE(run_cli({"hp", "--a", "1", "--b", "0.5", "--k", "1", "--n", "5", "--method", "bogus"}).code, 0);
    EXPECT_NE(run_cli({"hp", "--a", "1", "--b", "0.5", "--k", "1"}).code, 0);
}

TEST(CliHp, ShiftMethods) {
    const complex_t ref = hp_direct(2, complex_t(0.3, 0.7), 3, 6);
    for (const char* m : {"direct", "real_shift", "cos", "sin"}) {
        const auto r = run_cli({"hp", "--a", "2", "--b", "0.3", "--bi", "0.7", "--k", "3", "--n", "6", "--method", m});
        ASSERT_EQ(r.code, 0) << m << ' ' << r.err;
        EXPECT_LE(std::abs(json_value(r.out) - ref), 1e-8) << m;
    }
}

TEST(CliHp, OutputFormats) {
    const auto csv = run_cli({"hp", "--a", "1", "--b", "0.5", "--k", "1", "--n", "4", "--output", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("value_re,value_im,method", 0), 0u);
    const auto plain = run_cli({"hp", "--a", "1", "--b", "0.5", "--k", "1", "--n", "4", "--output", "plain"});
    ASSERT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("method = exp"), std::string::npos);
}

TEST(CliHp, Deterministic) {
    const std::vector<std::string> args{"hp", "--a", "3", "--b", "0.2", "--bi", "0.4", "--k", "4", "--n", "17"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(CliHp, JsonRoundTrip) {
    const auto r = run_cli({"hp", "--a", "2", "--b", "0.3", "--k", "2", "--n", "9"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    const method_report back = report_from_json(j);
    EXPECT_EQ(to_json(back), j);
}

TEST(CliVerify, Suites) {
    for (const char* s : {"series", "lagrange", "singular"}) {
        const auto r = run_cli({"verify", "--suite", s, "--output", "plain"});
        EXPECT_EQ(r.code, 0) << s << '\n' << r.out;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    }
    const auto j = run_cli({"verify", "--suite", "series"});
    ASSERT_EQ(j.code, 0);
    for (const auto& row : nlohmann::json::parse(j.out)) {
        EXPECT_TRUE(row.at("passed").get<bool>());
        EXPECT_LT(row.at("max_residual").get<double>(), row.at("bound").get<double>());
    }
}

TEST(CliDecompose, Examples) {
    const auto r1 = run_cli({"decompose", "--coeffs", "1,0,1", "--n", "10"});
    ASSERT_EQ(r1.code, 0) << r1.err;
    const auto j1 = nlohmann::json::parse(r1.out);
    EXPECT_EQ(j1.at("roots").size(), 2u);
    EXPECT_EQ(j1.at("weights").size(), 2u);
    EXPECT_LE(std::abs(json_value(r1.out, "sum") - reciprocal_poly_direct(polynomial{1.0, 0.0, 1.0}, 10)), 1e-8);

    const auto r2 = run_cli({"decompose", "--coeffs", "2,2,1", "--n", "10"});
    ASSERT_EQ(r2.code, 0);
    EXPECT_LE(std::abs(json_value(r2.out, "sum") - reciprocal_poly_direct(polynomial{2.0, 2.0, 1.0}, 10)), 1e-8);

    // 1/(j + 1) for j = 1..3
    const auto r3 = run_cli({"decompose", "--coeffs", "1,1", "--n", "3"});
    ASSERT_EQ(r3.code, 0);
    EXPECT_LE(std::abs(json_value(r3.out, "sum") - 13.0 / 12.0), 1e-9);
}

TEST(CliDecompose, Errors) {
    EXPECT_EQ(run_cli({"decompose", "--coeffs", "1,2,1", "--n", "5"}).code, 2);
    EXPECT_EQ(run_cli({"decompose", "--coeffs", "4", "--n", "5"}).code, 2);
    EXPECT_EQ(run_cli({"decompose", "--coeffs", "-2,1", "--n", "5"}).code, 2);
    EXPECT_EQ(run_cli({"decompose", "--coeffs", "-2,1", "--n", "5", "--skip-singular"}).code, 0);
    EXPECT_EQ(run_cli({"decompose", "--coeffs", "1,x", "--n", "5"}).code, 2);
}

TEST(CliSeries, Routes) {
    const auto closed = run_cli({"series", "--k", "3", "--b", "0.3", "--route", "closed"});
    const auto rec = run_cli({"series", "--k", "3", "--b", "0.3", "--route", "recurrence"});
    ASSERT_EQ(closed.code, 0);
    ASSERT_EQ(rec.code, 0);
    const auto c1 = nlohmann::json::parse(closed.out).at("coefficients");
    const auto c2 = nlohmann::json::parse(rec.out).at("coefficients");
    ASSERT_EQ(c1.size(), c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i)
        EXPECT_LE(std::abs(complex_from_json(c1[i]) - complex_from_json(c2[i])), 1e-10);
    EXPECT_EQ(run_cli({"series", "--k", "2", "--b", "0.5", "--route", "cos_f"}).code, 0);
    EXPECT_EQ(run_cli({"series", "--k", "2", "--b", "0", "--bi", "0", "--route", "closed"}).code, 2);
}
