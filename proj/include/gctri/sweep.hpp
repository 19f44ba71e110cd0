#pragma once

// Batch equivalence checking over (graph, coloring tuple) space.
//
// For each n the case space has 2^(n(n-1)/2) graphs times 2^(n*n) coloring
// tuples. Spaces of at most kExhaustiveLimit cases are enumerated in full,
// larger ones are sampled from a seeded mt19937_64. Output is JSON lines, one
// report per case, followed by one summary line.

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "gctri/graph.hpp"
#include "gctri/io.hpp"
#include "gctri/reduction.hpp"

namespace gctri {

inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

struct SweepConfig {
    unsigned n_min = 2;
    unsigned n_max = 4;
    std::uint64_t samples = 1000;  // per sampled n; 0 disables every case
    std::uint64_t seed = 1;
};

struct SweepSummary {
    std::uint64_t cases = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t unsound_witnesses = 0;
    std::vector<unsigned> exhaustive;
    std::vector<unsigned> sampled;

    [[nodiscard]] bool clean() const noexcept { return disagreements == 0 && unsound_witnesses == 0; }
};

/// One case of the sweep: graph given by upper-triangle code, coloring i by code i.
struct SweepCase {
    std::uint64_t id;
    Graph graph;
    std::vector<Coloring> colorings;
};

/// log2 of the case count for n, i.e. n(n-1)/2 + n*n.
inline unsigned case_space_bits(unsigned n) { return static_cast<unsigned>(Graph::pair_count(n) + std::size_t{n} * n); }

inline bool is_exhaustive(unsigned n) {
    const unsigned bits = case_space_bits(n);
    return bits < 64 && (std::uint64_t{1} << bits) <= kExhaustiveLimit;
}

/// Draws a case from `rng`: graph bits first, then each coloring in order.
inline SweepCase random_case(unsigned n, std::mt19937_64& rng, std::uint64_t id) {
    const std::size_t pairs = Graph::pair_count(n);
    const std::uint64_t graph_mask = pairs >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs) - 1;
    const std::uint64_t coloring_mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    SweepCase c{id, Graph::from_upper_triangle(n, rng() & graph_mask), {}};
    c.colorings.reserve(n);
    for (unsigned i = 0; i < n; ++i) c.colorings.push_back(Coloring::from_code(n, rng() & coloring_mask));
    return c;
}

/// Visits every case of the configured sweep in a fixed order.
inline void for_each_case(const SweepConfig& config, const std::function<void(unsigned, const SweepCase&)>& visit) {
    if (config.n_min < 2 || config.n_min > config.n_max || config.n_max > 8) {
        throw InputError("sweep requires 2 <= n_min <= n_max <= 8");
    }
    if (config.samples == 0) return;
    std::uint64_t id = 0;
    for (unsigned n = config.n_min; n <= config.n_max; ++n) {
        if (is_exhaustive(n)) {
            const std::uint64_t graphs = std::uint64_t{1} << Graph::pair_count(n);
            const std::uint64_t tuples = std::uint64_t{1} << (n * n);
            const std::uint64_t coloring_mask = (std::uint64_t{1} << n) - 1;
            for (std::uint64_t gcode = 0; gcode < graphs; ++gcode) {
                SweepCase c{0, Graph::from_upper_triangle(n, gcode), {}};
                for (std::uint64_t t = 0; t < tuples; ++t) {
                    c.id = id++;
                    c.colorings.clear();
                    for (unsigned i = 0; i < n; ++i) c.colorings.push_back(Coloring::from_code(n, (t >> (i * n)) & coloring_mask));
                    visit(n, c);
                }
            }
        } else {
            // per-n stream so a shard covering a single n reproduces the full run
            std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * n));
            for (std::uint64_t s = 0; s < config.samples; ++s) visit(n, random_case(n, rng, id++));
        }
    }
}

inline nlohmann::json case_to_json(const SweepCase& c, const EquivalenceReport& r) {
    auto j = io::to_json(r);
    j["graph"] = c.graph.upper_triangle_code();
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& col : c.colorings) codes.push_back(col.code());
    j["colorings"] = std::move(codes);
    return j;
}

inline nlohmann::json to_json(const SweepSummary& s, const SweepConfig& config) {
    return nlohmann::json{{"summary",
                           {{"cases", s.cases},
                            {"disagreements", s.disagreements},
                            {"unsound_witnesses", s.unsound_witnesses},
                            {"exhaustive_n", s.exhaustive},
                            {"sampled_n", s.sampled},
                            {"samples", config.samples},
                            {"seed", config.seed}}}};
}

/// Runs the sweep, writing one JSON line per case (when `out` is non-null)
/// and a final summary line. InvariantViolation propagates.
inline SweepSummary run_sweep(const SweepConfig& config, std::ostream* out) {
    SweepSummary summary;
    if (config.samples != 0) {
        for (unsigned n = config.n_min; n <= config.n_max && n <= 8; ++n) {
            (is_exhaustive(n) ? summary.exhaustive : summary.sampled).push_back(n);
        }
    }
    for_each_case(config, [&](unsigned, const SweepCase& c) {
        const EquivalenceReport r = check_equivalence(c.graph, c.colorings, c.id);
        ++summary.cases;
        if (!r.agreement) ++summary.disagreements;
        for (const auto& w : r.witnesses) {
            if (!witness_sound(c.graph, c.colorings, w)) ++summary.unsound_witnesses;
        }
        if (out != nullptr) *out << case_to_json(c, r).dump() << '\n';
    });
    if (out != nullptr) *out << to_json(summary, config).dump() << '\n';
    return summary;
}

}  // namespace gctri
