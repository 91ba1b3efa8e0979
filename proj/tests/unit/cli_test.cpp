#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = domkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Ratio) {
    auto r = run({"ratio", "--d", "4", "--s", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["ratio"], "1/3");
    EXPECT_EQ(r.json()["case"], "CASE_E_EQ_1");

    r = run({"ratio", "--d", "4", "--s", "7"});
    EXPECT_EQ(r.json()["ratio"], "1/4");
    EXPECT_EQ(r.json()["case"], "EDS_MOD");

    r = run({"ratio", "--d", "4", "--s", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("degenerate S"), std::string::npos);

    r = run({"ratio", "--d", "4", "--s", "-4", "--format", "plain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2/7\n");
}

TEST(Cli, Construct) {
    auto r = run({"construct", "--d", "3", "--s", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["period"], 5);
    EXPECT_EQ(r.json()["residues"], nlohmann::json({0, 3}));
    EXPECT_EQ(r.json()["density"], "2/5");

    r = run({"construct", "--d", "4", "--s", "8", "--verify"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["period"], 14);
    EXPECT_EQ(r.json()["verified"], true);
    EXPECT_EQ(r.json()["block_lemma"], true);

    r = run({"construct", "--d", "2", "--s", "3"});
    EXPECT_EQ(r.json()["period"], 2);
    EXPECT_EQ(r.json()["residues"], nlohmann::json({0}));
    EXPECT_EQ(r.json()["density"], "1/2");
}

TEST(Cli, Gamma) {
    auto r = run({"gamma", "--n", "14", "--set", "1,2,8"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["gamma"], 4);

    r = run({"gamma", "--n", "5", "--set", "1,2", "--oracle"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["gamma"], 2);
    EXPECT_EQ(r.json()["oracle_agrees"], true);

    EXPECT_EQ(run({"gamma", "--n", "0", "--set", "1"}).code, 2);
    EXPECT_EQ(run({"gamma", "--n", "30", "--set", "1", "--oracle"}).code, 2);
    EXPECT_EQ(run({"gamma", "--n", "5", "--set", "1,x"}).code, 2);
    EXPECT_EQ(run({"gamma", "--n", "3"}).json()["gamma"], 3);
}

TEST(Cli, PerfectAndCheck) {
    auto r = run({"perfect", "--n", "6", "--set", "2,4"});
    EXPECT_EQ(r.json()["perfect_code"], nlohmann::json({0, 1}));
    r = run({"perfect", "--n", "5", "--set", "1,4"});
    EXPECT_TRUE(r.json()["perfect_code"].is_null());

    r = run({"check", "--d", "4", "--s", "8", "--max-period", "20"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["consistent"], true);
    EXPECT_EQ(run({"check", "--d", "4", "--s", "8", "--max-period", "5"}).code, 2);
}

TEST(Cli, Search) {
    auto r = run({"search", "--set", "1,4", "--max-period", "10"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["best_ratio"], "2/5");
    EXPECT_EQ(r.json()["best_period"], 5);
    EXPECT_EQ(r.json()["bound"], "upper");

    r = run({"search", "--set", "1,4,9", "--max-period", "12"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["per_period"].size(), 12U);

    r = run({"search", "--set", "3,12", "--max-period", "20", "--normalize"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["set"], nlohmann::json({1, 4}));
    EXPECT_EQ(r.json()["best_ratio"], "2/5");

    r = run({"search", "--set=-1,-4", "--max-period", "10"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["best_ratio"], "2/5");
}

TEST(Cli, Tables) {
    auto r = run({"table", "--which", "d4", "--k-max", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("\tno"), std::string::npos);
    EXPECT_NE(r.out.find("4k\t1\t4\t1/3\t1/3\tyes"), std::string::npos);
    EXPECT_NE(r.out.find("4k\t2\t8\t2/7\t2/7\tyes"), std::string::npos);

    r = run({"table", "--which", "d5", "--k-max", "2", "--check"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("\tno"), std::string::npos);
    EXPECT_NE(r.out.find("5k\t2\t10\t4/17\t4/17\tyes"), std::string::npos);

    r = run({"table", "--which", "circulant", "--k-max", "3", "--check"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("\tno"), std::string::npos);
    EXPECT_NE(r.out.find("long\t4\t2\t1\t14\t1,2,8\t4\t4\tyes"), std::string::npos);

    EXPECT_EQ(run({"table", "--which", "d9"}).code, 2);
}

TEST(Cli, UsageErrorsAndDeterminism) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"ratio", "--d", "4"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const auto a = run({"search", "--set", "1,2,5", "--max-period", "15"});
    const auto b = run({"search", "--set", "1,2,5", "--max-period", "15"});
    EXPECT_EQ(a.out, b.out);
}
