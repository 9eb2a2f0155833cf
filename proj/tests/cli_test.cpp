#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"

namespace threebox::cli {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(THREEBOX_FIXTURE_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixture_path(const std::string& name) { return std::string(THREEBOX_FIXTURE_DIR) + "/" + name; }

TEST(Cli, StatsJsonMatchesFixture) {
    const auto r = invoke({"--format", "json", "three-box", "stats"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, fixture("three_box_table.json"));
}

TEST(Cli, StatsMarkdown) {
    const auto r = invoke({"three-box", "stats"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("| 3 | 2/9 | 4/9 | 2/9 | 1/9 |"), std::string::npos);
}

TEST(Cli, AblAndSuccess) {
    EXPECT_EQ(invoke({"three-box", "abl", "--choice", "1"}).out, "P(M1=1|M2=1,C=1) = 1\n");
    EXPECT_EQ(invoke({"three-box", "abl", "--choice", "3"}).out, "P(M1=1|M2=1,C=3) = 1/5\n");
    EXPECT_EQ(invoke({"three-box", "success", "--choice", "2"}).out, "P(M2=1|C=2) = 1/9\n");
    EXPECT_EQ(invoke({"three-box", "success", "--without-intermediate"}).out, "P(M2=1|no M1) = 1/9\n");
}

TEST(Cli, ScmRunCatalogCases) {
    const auto a = invoke({"--format", "json", "scm", "run", "a", "--choices", "1,2"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, fixture("three_box_restricted_12.json"));
    const auto d = invoke({"--format", "json", "scm", "run", "d", "--choices", "1,2,3"});
    EXPECT_EQ(d.out, fixture("three_box_table.json"));
}

TEST(Cli, DsepWitnessPaths) {
    const auto open = invoke({"dag", "dsep", "--variant", "realist+p", "--x", "V", "--y", "C", "--given", "M2"});
    EXPECT_EQ(open.code, kExitOk);
    EXPECT_NE(open.out.find("open path: V←Λ→M2←C"), std::string::npos);
    const auto closed = invoke(
        {"dag", "dsep", "--variant", "realist", "--x", "C", "--y", "V", "--given", "M2", "--expect", "separated"});
    EXPECT_EQ(closed.code, kExitOk);
    EXPECT_NE(closed.out.find("d-separated"), std::string::npos);
}

TEST(Cli, ExpectFailsWithDomainCode) {
    EXPECT_EQ(invoke({"iq", "check", "--form", "pairwise", "--expect", "violated"}).code, kExitOk);
    EXPECT_EQ(invoke({"iq", "check", "--form", "compact", "--restrict", "1,2", "--expect", "violated"}).code,
              kExitDomain);
    EXPECT_EQ(invoke({"feasibility", "decide", "--variant", "realist", "--restrict", "1,2", "--expect", "infeasible"})
                  .code,
              kExitOk);
    EXPECT_EQ(invoke({"feasibility", "decide", "--variant", "pure+p", "--expect", "feasible"}).code, kExitOk);
    EXPECT_EQ(invoke({"feasibility", "decide", "--variant", "pure", "--expect", "feasible"}).code, kExitDomain);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
    EXPECT_EQ(invoke({"--format", "yaml", "three-box", "stats"}).code, kExitUsage);
    EXPECT_EQ(invoke({"feasibility", "decide", "--variant", "classical"}).code, kExitUsage);
    EXPECT_EQ(invoke({"iq", "check", "--restrict", "1,x"}).code, kExitUsage);
    const auto bad = invoke({"iq", "check", "--behavior", fixture_path("unnormalized.json")});
    EXPECT_NE(bad.code, kExitOk);
    EXPECT_NE(bad.err.find("C=2"), std::string::npos);
}

TEST(Cli, Figure4IsByteStableAndExact) {
    const auto first = invoke({"report", "figure4"});
    const auto second = invoke({"report", "figure4"});
    EXPECT_EQ(first.code, kExitOk);
    EXPECT_EQ(first.out, second.out);
    EXPECT_NE(first.out.find("| realist | infeasible"), std::string::npos);
    const auto json = invoke({"--format", "json", "report", "figure4"});
    EXPECT_EQ(json.out, invoke({"--format", "json", "report", "figure4"}).out);
    // Probabilities are printed as fractions, never as decimals.
    EXPECT_FALSE(std::regex_search(json.out, std::regex("[0-9]\\.[0-9]")));
    EXPECT_FALSE(std::regex_search(first.out, std::regex("[0-9]\\.[0-9]")));
}

}  // namespace
}  // namespace threebox::cli
