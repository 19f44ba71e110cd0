#include <gtest/gtest.h>

#include <random>
#include <string>

#include "gctri/io.hpp"
#include "oracles.hpp"

using namespace gctri;

namespace {
std::string fixture(const std::string& name) { return std::string(GCTRI_FIXTURE_DIR) + "/" + name; }
}  // namespace

TEST(GraphJson, LoadsFigureFixture) {
    const auto g = io::load_graph(fixture("figure_graph.json"));
    EXPECT_EQ(g, oracle::figure_graph());
    EXPECT_EQ(g.label(3), "d");
}

TEST(GraphJson, RejectsInvalidGraphs) {
    EXPECT_THROW(io::load_graph(fixture("bad_graph_selfloop.json")), InputError);
    EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InputError);
    EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n": 2, "edges": [[0, 1], [1, 0]]})")), InputError);
    EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"edges": []})")), InputError);
    EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n": 2, "edges": [[0]]})")), InputError);
    EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n": -1, "edges": []})")), InputError);
    EXPECT_THROW(io::load_graph(fixture("does_not_exist.json")), InputError);
}

TEST(ColoringsJson, LoadsAndValidates) {
    const auto c = io::load_colorings(fixture("figure_colorings.json"));
    ASSERT_EQ(c.size(), 5U);
    EXPECT_EQ(c[0], Coloring::of_vertices(5, {3, 4}));
    EXPECT_THROW(io::colorings_from_json(io::json::parse(R"({"colorings": [[0, 2]]})")), InputError);
    EXPECT_THROW(io::colorings_from_json(io::json::parse(R"({"colorings": 3})")), InputError);
}

TEST(InstanceJson, RoundTripPreservesInvariants) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto inst = build_reduction(oracle::random_graph(n, 0.5, rng), oracle::random_colorings(n, rng));
        const auto text = io::to_json(inst).dump();
        const auto back = io::instance_from_json(io::json::parse(text));
        EXPECT_NO_THROW(check_instance(back));
        EXPECT_EQ(back.gadget, inst.gadget);
        EXPECT_EQ(back.roles, inst.roles);
        EXPECT_EQ(back.colorings, inst.colorings);
        EXPECT_EQ(io::to_json(back).dump(), text);
    }
}

TEST(ReportJson, RoundTrip) {
    const auto r = check_equivalence(oracle::figure_graph(), io::load_colorings(fixture("figure_colorings.json")), 3);
    EXPECT_EQ(io::report_from_json(io::json::parse(io::to_json(r).dump())), r);
}

TEST(FunctionJson, TableFormat) {
    const auto f = io::function_from_json(io::read_json_file(fixture("and2_table.json")));
    EXPECT_EQ(f, and_n(2));
    EXPECT_EQ(io::function_from_json(io::to_json(triangle_fn(4))), triangle_fn(4));
    EXPECT_THROW(io::function_from_json(io::json::parse(R"({"arity": 2, "table": "011"})")), InputError);
    EXPECT_THROW(io::function_from_json(io::json::parse(R"({"arity": 21, "table": "0"})")), SizeLimitError);
}

TEST(FunctionSpec, Builtins) {
    EXPECT_EQ(io::parse_function_spec("or_n:3"), or_n(3));
    EXPECT_EQ(io::parse_function_spec("and_n:2"), and_n(2));
    EXPECT_EQ(io::parse_function_spec("tri:4"), triangle_fn(4));
    EXPECT_EQ(io::parse_function_spec("gc:" + fixture("k2_graph.json")), and_n(2));
    EXPECT_EQ(io::parse_function_spec(fixture("and2_table.json")), and_n(2));
    EXPECT_THROW(io::parse_function_spec("or_n:x"), InputError);
    EXPECT_THROW(io::parse_function_spec("or_n:"), InputError);
    EXPECT_THROW(io::parse_function_spec("or_n:99"), SizeLimitError);
    EXPECT_THROW(io::parse_function_spec("nonexistent-file.json"), InputError);
}

TEST(CertificateJson, RoundTripVerifies) {
    SolverOptions o;
    o.restarts = 4;
    const auto est = adversary_bound(or_n(3), AdversaryMode::NegativeWeight, o);
    const auto j = io::to_json(est);
    // only nonzero upper-triangle entries are listed
    for (const auto& e : j["entries"]) EXPECT_LE(e[0].get<int>(), e[1].get<int>());
    const auto back = io::estimate_from_json(io::json::parse(j.dump()));
    EXPECT_TRUE(back.certificate.entries == est.certificate.entries);
    EXPECT_EQ(back.value, est.value);
    EXPECT_TRUE(verify_certificate(back).passed(back.mode));
}

TEST(CertificateJson, MinimalFormatNeedsFunction) {
    const auto minimal = io::json::parse(
        R"({"mode": "neg", "arity": 2, "value": 1.4142135623730951, "entries": [[0, 1, 1.0], [0, 2, 1.0]]})");
    EXPECT_THROW(io::estimate_from_json(minimal), InputError);
    const auto f = or_n(2);
    const auto est = io::estimate_from_json(minimal, &f);
    EXPECT_TRUE(verify_certificate(est).passed(est.mode));
}
