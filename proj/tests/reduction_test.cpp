#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gctri/reduction.hpp"
#include "oracles.hpp"

using namespace gctri;

namespace {

std::vector<Coloring> figure_colorings() {
    std::vector<Coloring> c(5, Coloring::from_code(5, 0));
    c[0] = Coloring::of_vertices(5, {3, 4});  // f_1 = {d, e}
    return c;
}

}  // namespace

TEST(BuildReduction, FigureInstance) {
    const auto inst = build_reduction(oracle::figure_graph(), figure_colorings());
    EXPECT_EQ(inst.gadget.vertex_count(), 15U);
    EXPECT_EQ(inst.gadget.edge_count(), 10U + 4U);
    const Vertex z1 = inst.z(0);
    EXPECT_EQ(inst.gadget.degree(z1), 4U);
    const std::vector<Vertex> expected{inst.left(3), inst.left(4), inst.right(3), inst.right(4)};
    EXPECT_EQ(inst.gadget.neighbors(z1), expected);
    EXPECT_EQ(inst.gadget.label(z1), "z1");
    EXPECT_EQ(inst.gadget.label(inst.right(3)), "d2");
    EXPECT_NO_THROW(check_instance(inst));
}

TEST(BuildReduction, EdgeCountFormulaWithOtherColorings) {
    auto colorings = figure_colorings();
    colorings[1] = Coloring::of_vertices(5, {0, 1});
    colorings[2] = Coloring::of_vertices(5, {0, 1, 2});
    const auto inst = build_reduction(oracle::figure_graph(), colorings);
    // 10 doubled edges + 2*(2 + 2 + 3) gadget edges, counted directly
    std::size_t z_edges = 0;
    for (Vertex i = 0; i < 5; ++i) z_edges += inst.gadget.degree(inst.z(i));
    EXPECT_EQ(z_edges, 14U);
    EXPECT_EQ(inst.gadget.edge_count(), 24U);
    EXPECT_EQ(inst.gadget.edge_count(), inst.expected_edge_count());
}

TEST(BuildReduction, ZeroColoringsLeaveZIsolated) {
    const auto base = oracle::figure_graph();
    const auto inst = build_reduction(base, std::vector<Coloring>(5, Coloring::from_code(5, 0)));
    for (Vertex i = 0; i < 5; ++i) EXPECT_EQ(inst.gadget.degree(inst.z(i)), 0U);
    const auto doubled = bipartite_double(base);
    EXPECT_EQ(inst.gadget.edges(), doubled.edges());
}

TEST(BuildReduction, RejectsWrongColoringShape) {
    const auto base = oracle::figure_graph();
    EXPECT_THROW(build_reduction(base, std::vector<Coloring>(4, Coloring::from_code(5, 0))), InputError);
    EXPECT_THROW(build_reduction(base, std::vector<Coloring>(6, Coloring::from_code(5, 0))), InputError);
    auto bad = std::vector<Coloring>(5, Coloring::from_code(5, 0));
    bad[2] = Coloring::from_code(4, 0);
    EXPECT_THROW(build_reduction(base, bad), InputError);
}

TEST(BuildReduction, InvariantsOnRandomInstances) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const auto inst = build_reduction(oracle::random_graph(n, 0.5, rng), oracle::random_colorings(n, rng));
        ASSERT_NO_THROW(check_instance(inst));
        // restriction to Left u Right is the double cover, and is triangle-free
        std::vector<Edge> lr;
        for (auto [u, v] : inst.gadget.edges()) {
            if (u < 2 * n && v < 2 * n) lr.push_back({u, v});
        }
        EXPECT_EQ(lr, bipartite_double(inst.base).edges());
        EXPECT_TRUE(oracle::cubic_triangles(Graph(2 * n, lr)).empty());
    }
}

TEST(CheckInstance, DetectsTampering) {
    auto inst = build_reduction(oracle::figure_graph(), figure_colorings());
    auto tampered = inst;
    auto edges = tampered.gadget.edges();
    edges.push_back({tampered.z(0), tampered.z(1)});
    tampered.gadget = Graph(15, edges);
    EXPECT_THROW(check_instance(tampered), InvariantViolation);

    tampered = inst;
    edges = tampered.gadget.edges();
    edges.push_back({tampered.z(1), tampered.left(0)});
    edges.push_back({tampered.z(1), tampered.right(0)});
    tampered.gadget = Graph(15, edges);
    EXPECT_THROW(check_instance(tampered), InvariantViolation);

    tampered = inst;
    std::swap(tampered.roles[0], tampered.roles[1]);
    EXPECT_THROW(check_instance(tampered), InvariantViolation);
}

TEST(TriangleWitnesses, FigureInstance) {
    const auto inst = build_reduction(oracle::figure_graph(), figure_colorings());
    const auto w = triangle_witnesses(inst);
    // {z1, d1, e2} and {z1, e1, d2}
    const std::vector<Witness> expected{{0, 3, 4}, {0, 4, 3}};
    EXPECT_EQ(w, expected);
}

TEST(TriangleWitnesses, ZeroColoringsHaveNone) {
    const auto inst = build_reduction(oracle::figure_graph(), std::vector<Coloring>(5, Coloring::from_code(5, 0)));
    EXPECT_TRUE(triangle_witnesses(inst).empty());
}

TEST(TriangleWitnesses, SoundAndCompleteAgainstBruteForce) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto inst = build_reduction(oracle::random_graph(n, 0.6, rng), oracle::random_colorings(n, rng));
        const auto witnesses = triangle_witnesses(inst);
        for (const auto& w : witnesses) ASSERT_TRUE(witness_sound(inst, w));

        // completeness: every brute-force gadget triangle maps to a listed witness
        const auto brute = oracle::cubic_triangles(inst.gadget);
        ASSERT_EQ(brute.size(), witnesses.size());
        for (const auto& t : brute) {
            // with the [Left | Right | Z] layout a sorted triple is (left, right, z)
            const Witness w{static_cast<Vertex>(t[2] - 2 * n), t[0], static_cast<Vertex>(t[1] - n)};
            ASSERT_TRUE(std::binary_search(witnesses.begin(), witnesses.end(), w));
        }

        // and every sound (i, v, w) appears
        std::size_t expected = 0;
        for (Vertex i = 0; i < n; ++i) {
            for (auto [u, v] : inst.base.edges()) {
                if (inst.colorings[i].marked(u) && inst.colorings[i].marked(v)) expected += 2;
            }
        }
        ASSERT_EQ(witnesses.size(), expected);
    }
}

TEST(TriangleWitnesses, ShapeViolationIsReported) {
    auto inst = build_reduction(Graph(1), {Coloring::from_code(1, 0)});
    // hand-built malformed gadget: a triangle inside the Z block
    inst.base = Graph(3);
    inst.colorings = std::vector<Coloring>(3, Coloring::from_code(3, 0));
    inst.gadget = Graph(9, {{6, 7}, {7, 8}, {6, 8}});
    inst.roles.clear();
    for (Vertex k = 0; k < 9; ++k) inst.roles.push_back(role_of(k, 3));
    EXPECT_THROW(triangle_witnesses(inst), InvariantViolation);
}

TEST(CheckEquivalence, FigureInstance) {
    const auto r = check_equivalence(oracle::figure_graph(), figure_colorings(), 7);
    EXPECT_EQ(r.id, 7U);
    EXPECT_TRUE(r.triangle_found);
    EXPECT_TRUE(r.or_of_collisions);
    EXPECT_TRUE(r.agreement);
    EXPECT_EQ(r.witnesses.size(), 2U);
}

TEST(CheckEquivalence, ZeroColorings) {
    const auto r = check_equivalence(oracle::figure_graph(), std::vector<Coloring>(5, Coloring::from_code(5, 0)));
    EXPECT_FALSE(r.triangle_found);
    EXPECT_FALSE(r.or_of_collisions);
    EXPECT_TRUE(r.agreement);
}

TEST(CheckEquivalence, ExhaustiveOnThreeVertices) {
    std::size_t cases = 0;
    std::size_t positives = 0;
    for (std::uint64_t code = 0; code < 8; ++code) {
        const auto g = Graph::from_upper_triangle(3, code);
        for (std::uint64_t t = 0; t < 512; ++t) {
            std::vector<Coloring> c;
            for (unsigned i = 0; i < 3; ++i) c.push_back(Coloring::from_code(3, (t >> (3 * i)) & 7U));
            const auto r = check_equivalence(g, c);
            ASSERT_TRUE(r.agreement) << code << " " << t;
            // independent oracle for the OR side
            bool any = false;
            for (const auto& ci : c) any = any || oracle::collision_by_pairs(g, ci.code());
            ASSERT_EQ(r.or_of_collisions, any);
            ++cases;
            positives += r.triangle_found ? 1 : 0;
        }
    }
    EXPECT_EQ(cases, 4096U);
    EXPECT_GT(positives, 0U);
}

TEST(CheckEquivalence, RandomLargerInstances) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t n = 4 + trial % 5;
        const auto g = oracle::random_graph(n, 0.3, rng);
        const auto c = oracle::random_colorings(n, rng);
        ASSERT_TRUE(check_equivalence(g, c).agreement);
    }
}
