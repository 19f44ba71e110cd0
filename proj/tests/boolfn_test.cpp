#include <gtest/gtest.h>

#include <random>

#include "gctri/boolfn.hpp"
#include "gctri/problems.hpp"
#include "oracles.hpp"

using namespace gctri;

TEST(BitString, ParseUsesFirstCharacterAsLowBit) {
    EXPECT_EQ(BitString::parse("10").index(), 1U);
    EXPECT_EQ(BitString::parse("01").index(), 2U);
    EXPECT_EQ(BitString::parse("1101").index(), 0b1011U);
    EXPECT_EQ(BitString::from_index(0b1011, 4).str(), "1101");
    EXPECT_THROW(BitString::parse("102"), InputError);
}

TEST(Eval, OrTwoBits) {
    const auto f = or_n(2);
    EXPECT_FALSE(eval(f, BitString::parse("00")));
    EXPECT_TRUE(eval(f, BitString::parse("10")));
}

TEST(Eval, ArityMismatchIsRejected) {
    EXPECT_THROW((void)eval(or_n(2), BitString::parse("101")), InputError);
    EXPECT_THROW((void)eval(or_n(3), BitString::parse("1")), InputError);
}

TEST(OrN, Identity) { EXPECT_EQ(or_n(1), identity_fn()); }

TEST(OrN, TableForTwoBits) { EXPECT_EQ(or_n(2).table_string(), "0111"); }

TEST(OrN, SingleZero) {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto f = or_n(n);
        EXPECT_EQ(f.count_ones(), f.table_size() - 1) << n;
        EXPECT_FALSE(f.at(0));
    }
}

TEST(OrN, SizeLimits) {
    EXPECT_THROW(or_n(0), SizeLimitError);
    EXPECT_THROW(or_n(21), SizeLimitError);
    EXPECT_EQ(or_n(20).table_size(), std::uint64_t{1} << 20);
}

TEST(Compose, IdentityOuterGivesInner) {
    for (const auto& g : {or_n(3), and_n(2), triangle_fn(4), graph_collision_fn(oracle::figure_graph())}) {
        EXPECT_EQ(compose(identity_fn(), g), g);
    }
}

TEST(Compose, OrOfAndOnForcedInput) {
    const auto h = compose(or_n(2), and_n(2));
    EXPECT_EQ(h.arity(), 4U);
    EXPECT_TRUE(eval(h, BitString::parse("1101")));
    EXPECT_FALSE(eval(h, BitString::parse("1001")));
}

TEST(Compose, OrOfAndMatchesNestedEvaluation) {
    const auto f = or_n(2);
    const auto g = and_n(2);
    const auto h = compose(f, g);
    for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(h.at(x), oracle::nested_eval(f, g, x)) << x;
    // frozen from the nested-evaluation oracle
    EXPECT_EQ(h.table_string(), "0001000100011111");
}

TEST(Compose, ArityLimit) {
    EXPECT_THROW(compose(or_n(5), or_n(5)), SizeLimitError);
    EXPECT_NO_THROW(compose(or_n(4), or_n(5)));
}

TEST(Compose, ExhaustiveAgainstNestedOracleOnSmallArities) {
    std::mt19937_64 rng(7);
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; n * m <= 12; ++m) {
            for (int trial = 0; trial < 3; ++trial) {
                const auto f = BooleanFunction::tabulate(n, [&](std::uint64_t) { return (rng() & 1U) != 0; });
                const auto g = BooleanFunction::tabulate(m, [&](std::uint64_t) { return (rng() & 1U) != 0; });
                const auto h = compose(f, g);
                for (std::uint64_t x = 0; x < h.table_size(); ++x) {
                    ASSERT_EQ(h.at(x), oracle::nested_eval(f, g, x)) << n << "x" << m << " at " << x;
                }
            }
        }
    }
}

TEST(GraphCollisionFn, SingleEdgeIsAnd) {
    const Graph k2(2, {{0, 1}});
    EXPECT_EQ(graph_collision_fn(k2).table_string(), "0001");
    EXPECT_EQ(graph_collision_fn(k2), and_n(2));
}

TEST(GraphCollisionFn, FigureGraphMarkings) {
    const auto f = graph_collision_fn(oracle::figure_graph());
    // vertex order a,b,c,d,e
    EXPECT_FALSE(eval(f, BitString::parse("10100")));  // {a,c}
    EXPECT_TRUE(eval(f, BitString::parse("00011")));   // {d,e}
}

TEST(GraphCollisionFn, MatchesPairScanOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(1 + trial % 8, 0.4, rng);
        const auto f = graph_collision_fn(g);
        for (std::uint64_t x = 0; x < f.table_size(); ++x) ASSERT_EQ(f.at(x), oracle::collision_by_pairs(g, x));
    }
}

TEST(GraphCollisionFn, SizeLimit) { EXPECT_THROW(graph_collision_fn(Graph(21)), SizeLimitError); }

TEST(TriangleFn, ThreeVerticesIsAnd) { EXPECT_EQ(triangle_fn(3), and_n(3)); }

TEST(TriangleFn, CompleteGraphOnFour) {
    const auto f = triangle_fn(4);
    EXPECT_EQ(f.arity(), 6U);
    EXPECT_TRUE(eval(f, BitString::parse("111111")));
}

TEST(TriangleFn, FourVerticesMatchesTripleEnumeration) {
    const auto f = triangle_fn(4);
    for (std::uint64_t x = 0; x < 64; ++x) EXPECT_EQ(f.at(x), oracle::triangle_by_triples(4, x)) << x;
    // 23 of the 64 labelled graphs on 4 vertices contain a triangle
    EXPECT_EQ(f.count_ones(), 23U);
}

TEST(TriangleFn, UpToSixVerticesMatchesTripleEnumeration) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto f = triangle_fn(n);
        for (std::uint64_t x = 0; x < f.table_size(); ++x) ASSERT_EQ(f.at(x), oracle::triangle_by_triples(n, x));
    }
    EXPECT_THROW(triangle_fn(7), SizeLimitError);
}

TEST(Monotone, ProblemFunctions) {
    EXPECT_TRUE(graph_collision_fn(oracle::figure_graph()).is_monotone());
    EXPECT_TRUE(triangle_fn(5).is_monotone());
    EXPECT_TRUE(or_n(4).is_monotone());
    EXPECT_FALSE(BooleanFunction::from_table_string("0110").is_monotone());
}

TEST(Monotone, OrOfGraphCollisionKeepsArityAndMonotonicity) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_graph(2 + trial % 3, 0.6, rng);
        const unsigned n = 1 + trial % 4;
        const auto h = compose(or_n(n), graph_collision_fn(g));
        EXPECT_EQ(h.arity(), n * g.vertex_count());
        EXPECT_TRUE(h.is_monotone());
    }
}

TEST(TruthTable, StringRoundTripAndValidation) {
    const auto f = triangle_fn(4);
    EXPECT_EQ(BooleanFunction::from_table_string(f.table_string()), f);
    EXPECT_THROW(BooleanFunction::from_table_string("011"), InputError);
    EXPECT_THROW(BooleanFunction::from_table_string("01x1"), InputError);
}

TEST(Dual, AndIsDualOfOr) { EXPECT_EQ(or_n(3).dual(), and_n(3)); }
