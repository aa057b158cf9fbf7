#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "meshpat");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = meshpat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Count)
{
    const auto r = run({"count", "231;1,2 2,1", "24531"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3\n");
    EXPECT_EQ(run({"count", "Z", "21", "--json"}).out, R"({"count":2,"pattern":"1;0,0 1,1","perm":"21"})" "\n");
}

TEST(Cli, Occurrences)
{
    EXPECT_EQ(run({"occurrences", "231;1,2 2,1", "24531"}).out, "1 2 5\n1 4 5\n2 3 4\n");
}

TEST(Cli, DistAndAvoid)
{
    EXPECT_EQ(run({"dist", "1;", "--max-n", "2"}).out, "0\t1\n1\t0 1\n2\t0 0 2\n");
    EXPECT_EQ(run({"avoid", "Z", "--max-n", "4"}).out, "0\t1\n1\t0\n2\t1\n3\t3\n4\t14\n");
    EXPECT_EQ(run({"avoid", "Z", "--max-n", "3", "--json"}).out, R"({"avoiders":["1","0","1","3"]})" "\n");
}

TEST(Cli, Formula)
{
    const auto r = run({"formula", "19", "--inner", "1;", "--order", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "family\t19 [1;]\n"
                     "inner\t1; <- closed form: unshaded point\n"
                     "avoidance\n0\t1\n1\t1\n2\t2\n3\t5\n"
                     "distribution\n0\t1\n1\t1\n2\t2\n3\t5 1\n");
    const auto a = run({"formula", "28-2", "--inner", "1;", "--inner", "empty", "--order", "2", "--json"});
    EXPECT_NE(a.out.find(R"("distribution":null)"), std::string::npos);
}

TEST(Cli, Build)
{
    EXPECT_EQ(run({"build", "Y", "--inner", "1;"}).out, "12;0,0 0,1 0,2 1,0 2,0\n");
    EXPECT_EQ(run({"build", "34-2:2", "--inner", "1;", "--json"}).code, 0);
}

TEST(Cli, VerifyExitCodes)
{
    EXPECT_EQ(run({"verify", "figure1", "--max-n", "9"}).code, 0);
    EXPECT_EQ(run({"verify", "19", "--inner", "66", "--max-n", "6"}).code, 0);
    const auto bad = run({"verify", "20", "--inner", "1;", "--inner", "1;", "--max-n", "5"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, Catalog)
{
    EXPECT_EQ(run({"catalog", "X"}).out, "X\t1;0,1 1,0\n");
    const auto a = run({"catalog", "--json"});
    EXPECT_EQ(a.out, run({"catalog", "--json"}).out);
    EXPECT_NE(a.out.find(R"("66":{"perm":[1,2])"), std::string::npos);
    EXPECT_EQ(run({"catalog", "99"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"count", "231;9,9", "123"}).code, 2);
    EXPECT_EQ(run({"count", "1;", "1x"}).code, 2);
    EXPECT_EQ(run({"dist", "1;", "--max-n", "21"}).code, 2);
    EXPECT_EQ(run({"formula", "nope"}).code, 2);
    EXPECT_EQ(run({"build", "30", "--inner", "Z"}).code, 0);
    EXPECT_EQ(run({"formula", "30", "--inner", "Z"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EnvironmentOverridesDefaults)
{
    ::setenv("MESHPAT_MAX_N", "2", 1);
    const auto r = run({"dist", "1;"});
    ::unsetenv("MESHPAT_MAX_N");
    EXPECT_EQ(r.out, "0\t1\n1\t0 1\n2\t0 0 2\n");
    EXPECT_EQ(run({"dist", "1;"}).out.substr(0, 4), "0\t1\n");
}
