#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles/fuzz.hpp"
#include "threebox/behavior.hpp"
#include "threebox/error.hpp"
#include "threebox/pps.hpp"

namespace threebox {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(THREEBOX_FIXTURE_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Column col(long a, long b, long c, long d, long den) { return {q(a, den), q(b, den), q(c, den), q(d, den)}; }

TEST(Behavior, ThreeBoxTable) {
    const auto b = three_box_behavior();
    EXPECT_EQ(b.choices(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(b.at(0, 0, 2), q(2, 3));
    EXPECT_EQ(b.at(0, 1, 3), q(4, 9));
    EXPECT_EQ(b.column(1), col(6, 0, 2, 1, 9));
    EXPECT_EQ(b.column(2), col(6, 0, 2, 1, 9));
    EXPECT_EQ(b.column(3), col(2, 4, 2, 1, 9));
}

TEST(Behavior, ThreeBoxTableEqualsQuantumComputation) {
    EXPECT_EQ(three_box_behavior(), pps::joint_behavior(pps::three_box_scenario()));
}

TEST(Behavior, Restrict) {
    const auto full = three_box_behavior();
    const auto r12 = restrict(full, {1, 2});
    EXPECT_EQ(r12.choices(), (std::vector<int>{1, 2}));
    EXPECT_EQ(r12.column(1), col(6, 0, 2, 1, 9));
    EXPECT_EQ(r12.column(2), col(6, 0, 2, 1, 9));
    EXPECT_EQ(restrict(full, {1, 2, 3}), full);
    const auto r3 = restrict(full, {3});
    EXPECT_EQ(r3.choices(), std::vector<int>{3});
    EXPECT_EQ(r3.column(3), col(2, 4, 2, 1, 9));
}

TEST(Behavior, RestrictRejectsEmptyOrForeignChoices) {
    EXPECT_THROW(restrict(three_box_behavior(), {}), ContractViolation);
    EXPECT_THROW(restrict(three_box_behavior(), {1, 4}), ContractViolation);
}

TEST(Behavior, M2Marginal) {
    const auto b = three_box_behavior();
    EXPECT_EQ(m2_marginal(b, 1), q(1, 9));
    EXPECT_EQ(m2_marginal(b, 3), q(5, 9));
    const Behavior uniform({{1, col(1, 1, 1, 1, 4)}, {2, col(1, 1, 1, 1, 4)}});
    EXPECT_EQ(m2_marginal(uniform, 2), q(1, 2));
    EXPECT_THROW(m2_marginal(b, 5), ContractViolation);
}

TEST(Behavior, Signalling) {
    const auto full = is_signalling(three_box_behavior());
    EXPECT_TRUE(full.signalling);
    ASSERT_TRUE(full.witness);
    EXPECT_EQ(*full.witness, (std::pair{1, 3}));

    EXPECT_FALSE(is_signalling(restrict(three_box_behavior(), {1, 2})).signalling);

    const auto c = col(1, 2, 3, 4, 10);
    EXPECT_FALSE(is_signalling(Behavior({{1, c}, {2, c}, {3, c}})).signalling);

    EXPECT_THROW(is_signalling(restrict(three_box_behavior(), {3})), ContractViolation);
}

TEST(Behavior, ConstructorRejectsBadColumns) {
    try {
        Behavior({{1, col(1, 1, 1, 1, 4)}, {7, col(1, 1, 1, 0, 4)}});
        FAIL() << "expected ContractViolation";
    } catch (const ContractViolation& e) {
        EXPECT_NE(std::string(e.what()).find("C=7"), std::string::npos);
    }
    EXPECT_THROW(Behavior({{1, col(-1, 2, 0, 3, 4)}}), ContractViolation);
    EXPECT_THROW(Behavior(std::map<int, Column>{}), ContractViolation);
}

TEST(BehaviorJson, CanonicalFormMatchesFixture) {
    EXPECT_EQ(to_json(three_box_behavior()), fixture("three_box_table.json"));
    EXPECT_EQ(to_json(restrict(three_box_behavior(), {1, 2})), fixture("three_box_restricted_12.json"));
}

TEST(BehaviorJson, ParserRejectsUnnormalizedColumnNamingIt) {
    try {
        behavior_from_json(fixture("unnormalized.json"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("C=2"), std::string::npos) << e.what();
    }
}

TEST(BehaviorJson, ParserRejectsNegativeEntryNamingColumn) {
    try {
        behavior_from_json(fixture("negative.json"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("C=3"), std::string::npos) << e.what();
    }
}

TEST(BehaviorJson, ParserRejectsMalformedInput) {
    EXPECT_THROW(behavior_from_json("{"), ParseError);
    EXPECT_THROW(behavior_from_json(R"({"choices":[1],"table":{}})"), ParseError);
    EXPECT_THROW(behavior_from_json(R"({"choices":[1],"table":{"C=1":{"00":0.5,"01":"1/2","10":"0","11":"0"}}})"),
                 ParseError);
    EXPECT_THROW(behavior_from_json(R"({"choices":[1],"table":{"C=1":{"00":"1/0","01":"1","10":"0","11":"0"}}})"),
                 ParseError);
    EXPECT_THROW(
        behavior_from_json(
            R"({"choices":[1],"table":{"C=1":{"00":"1","01":"0","10":"0","11":"0"},"C=2":{"00":"1","01":"0","10":"0","11":"0"}}})"),
        ParseError);
}

TEST(BehaviorJson, ParserReducesFractions) {
    const auto b = behavior_from_json(R"({"choices":[2],"table":{"C=2":{"00":"2/4","01":"1/2","10":"0","11":"0/7"}}})");
    EXPECT_EQ(b.at(0, 0, 2), q(1, 2));
    EXPECT_EQ(to_fraction_string(b.at(1, 1, 2)), "0/1");
}

TEST(BehaviorProperty, SerializationRoundTripIsByteIdentical) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto b = fuzz::random_behavior(rng, trial % 2 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 3}, 9);
        const auto text = to_json(b);
        const auto parsed = behavior_from_json(text);
        EXPECT_EQ(parsed, b);
        EXPECT_EQ(to_json(parsed), text);
    }
}

TEST(BehaviorProperty, RestrictCommutesWithMarginal) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto b = fuzz::random_behavior(rng, {1, 2, 3});
        const std::vector<int> keep = trial % 3 == 0 ? std::vector<int>{2} : std::vector<int>{1, 3};
        const auto r = restrict(b, keep);
        for (int k : keep) {
            EXPECT_EQ(m2_marginal(r, k), m2_marginal(b, k));
        }
    }
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("10/9"), q(10, 9));
    EXPECT_EQ(parse_rational("-3/6"), q(-1, 2));
    EXPECT_EQ(parse_rational("4"), 4);
    EXPECT_EQ(to_fraction_string(q(0)), "0/1");
    EXPECT_EQ(to_display_string(q(0)), "0");
    EXPECT_EQ(to_display_string(q(1, 5)), "1/5");
    for (const char* bad : {"", "/", "1/", "a/2", "1/-2", "1.5", "1/0"}) {
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
    }
}

}  // namespace
}  // namespace threebox
