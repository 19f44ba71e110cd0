#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gctri/errors.hpp"
#include "gctri/graph.hpp"

namespace gctri {

/// A gadget triangle {z_i, v_1, w_2}; equivalently the collision (v, w) in instance i.
struct Witness {
    Vertex instance;
    Vertex left;
    Vertex right;

    friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Base graph G, colorings f_0 .. f_{n-1}, and the 3n-vertex gadget built from them.
struct ReductionInstance {
    Graph base;
    std::vector<Coloring> colorings;
    Graph gadget;
    std::vector<VertexRole> roles;

    [[nodiscard]] std::size_t n() const noexcept { return base.vertex_count(); }
    [[nodiscard]] Vertex left(Vertex v) const noexcept { return v; }
    [[nodiscard]] Vertex right(Vertex v) const noexcept { return static_cast<Vertex>(n() + v); }
    [[nodiscard]] Vertex z(Vertex i) const noexcept { return static_cast<Vertex>(2 * n() + i); }

    /// 2|E(base)| + 2 * sum_i |f_i|.
    [[nodiscard]] std::size_t expected_edge_count() const {
        std::size_t marks = 0;
        for (const auto& c : colorings) marks += c.popcount();
        return 2 * base.edge_count() + 2 * marks;
    }
};

inline void check_coloring_tuple(const Graph& base, const std::vector<Coloring>& colorings) {
    const std::size_t n = base.vertex_count();
    if (colorings.size() != n) {
        throw InputError("expected exactly " + std::to_string(n) + " colorings, got " + std::to_string(colorings.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (colorings[i].size() != n) {
            throw InputError("coloring " + std::to_string(i) + " has length " + std::to_string(colorings[i].size()) +
                             ", expected " + std::to_string(n));
        }
    }
}

/// Double cover of `base` plus z_0 .. z_{n-1}, with z_i joined to v_1 and v_2 iff f_i(v) = 1.
/// Layout: Left = [0, n), Right = [n, 2n), Z = [2n, 3n).
inline ReductionInstance build_reduction(Graph base, std::vector<Coloring> colorings) {
    check_coloring_tuple(base, colorings);
    const std::size_t n = base.vertex_count();

    std::vector<Edge> edges;
    edges.reserve(2 * base.edge_count() + 2 * n * n);
    for (auto [x, y] : base.edges()) {
        edges.emplace_back(x, static_cast<Vertex>(n + y));
        edges.emplace_back(y, static_cast<Vertex>(n + x));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto zi = static_cast<Vertex>(2 * n + i);
        for (std::size_t v = 0; v < n; ++v) {
            if (!colorings[i].marked(static_cast<Vertex>(v))) continue;
            edges.emplace_back(static_cast<Vertex>(v), zi);
            edges.emplace_back(static_cast<Vertex>(n + v), zi);
        }
    }

    std::vector<std::string> labels;
    if (!base.labels().empty()) {
        labels.reserve(3 * n);
        for (const auto& l : base.labels()) labels.push_back(l + "1");
        for (const auto& l : base.labels()) labels.push_back(l + "2");
        for (std::size_t i = 0; i < n; ++i) labels.push_back("z" + std::to_string(i + 1));
    }

    std::vector<VertexRole> roles;
    roles.reserve(3 * n);
    for (std::size_t k = 0; k < 3 * n; ++k) roles.push_back(role_of(static_cast<Vertex>(k), n));

    Graph gadget(3 * n, std::move(edges), std::move(labels));
    return ReductionInstance{std::move(base), std::move(colorings), std::move(gadget), std::move(roles)};
}

/// Checks the structural invariants of an instance (used on reloaded files).
/// Throws InvariantViolation naming the first failed property.
inline void check_instance(const ReductionInstance& inst) {
    check_coloring_tuple(inst.base, inst.colorings);
    const std::size_t n = inst.n();
    if (inst.gadget.vertex_count() != 3 * n) throw InvariantViolation("gadget does not have 3n vertices");
    if (inst.roles.size() != 3 * n) throw InvariantViolation("role map does not cover 3n vertices");
    for (std::size_t k = 0; k < 3 * n; ++k) {
        if (!(inst.roles[k] == role_of(static_cast<Vertex>(k), n))) {
            throw InvariantViolation("role map deviates from the [Left | Right | Z] layout at vertex " + std::to_string(k));
        }
    }
    if (inst.gadget.edge_count() != inst.expected_edge_count()) {
        throw InvariantViolation("gadget edge count " + std::to_string(inst.gadget.edge_count()) + " != expected " +
                                 std::to_string(inst.expected_edge_count()));
    }
    const Graph doubled = bipartite_double(inst.base);
    for (auto [u, v] : inst.gadget.edges()) {
        const auto ru = inst.roles[u].kind;
        const auto rv = inst.roles[v].kind;
        if (ru == VertexRole::Kind::Z && rv == VertexRole::Kind::Z) throw InvariantViolation("Z-Z edge in gadget");
        if (ru == rv) throw InvariantViolation("edge inside one side of the double cover");
        if (ru != VertexRole::Kind::Z && rv != VertexRole::Kind::Z) {
            if (!doubled.has_edge(u, v)) throw InvariantViolation("Left-Right edge not present in the double cover");
        } else {
            const Vertex z = ru == VertexRole::Kind::Z ? u : v;
            const Vertex side = ru == VertexRole::Kind::Z ? v : u;
            const Vertex i = inst.roles[z].origin;
            if (!inst.colorings[i].marked(inst.roles[side].origin)) {
                throw InvariantViolation("z" + std::to_string(i) + " joined to an unmarked vertex");
            }
        }
    }
    for (auto [u, v] : doubled.edges()) {
        if (!inst.gadget.has_edge(u, v)) throw InvariantViolation("double-cover edge missing from gadget");
    }
}

/// All gadget triangles as directional witnesses (i, v, w) for {z_i, v_1, w_2}, sorted.
/// Throws InvariantViolation if a triangle does not take one vertex from each role class.
inline std::vector<Witness> triangle_witnesses(const ReductionInstance& inst) {
    std::vector<Witness> out;
    for (const auto& t : enumerate_triangles(inst.gadget)) {
        int seen[3] = {0, 0, 0};
        Witness w{0, 0, 0};
        for (Vertex k : t) {
            const VertexRole r = inst.roles[k];
            ++seen[static_cast<int>(r.kind)];
            switch (r.kind) {
                case VertexRole::Kind::Left: w.left = r.origin; break;
                case VertexRole::Kind::Right: w.right = r.origin; break;
                case VertexRole::Kind::Z: w.instance = r.origin; break;
            }
        }
        if (seen[0] != 1 || seen[1] != 1 || seen[2] != 1) {
            throw InvariantViolation("gadget triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                     std::to_string(t[2]) + "} is not of the form {z_i, v_1, w_2}");
        }
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// (v, w) is an edge of the base graph and both ends are marked by f_i.
inline bool witness_sound(const Graph& base, const std::vector<Coloring>& colorings, const Witness& w) {
    return w.instance < colorings.size() && base.has_edge(w.left, w.right) && colorings[w.instance].marked(w.left) &&
           colorings[w.instance].marked(w.right);
}

inline bool witness_sound(const ReductionInstance& inst, const Witness& w) {
    return witness_sound(inst.base, inst.colorings, w);
}

struct EquivalenceReport {
    std::uint64_t id = 0;
    std::size_t n = 0;
    bool triangle_found = false;
    bool or_of_collisions = false;
    std::vector<Witness> witnesses;
    bool agreement = false;

    friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

/// Builds the gadget and compares "gadget has a triangle" with OR_i has_collision(G, f_i).
/// Disagreement is reported in the result, not thrown.
inline EquivalenceReport check_equivalence(const Graph& base, const std::vector<Coloring>& colorings,
                                           std::uint64_t id = 0) {
    const ReductionInstance inst = build_reduction(base, colorings);
    EquivalenceReport report;
    report.id = id;
    report.n = inst.n();
    report.witnesses = triangle_witnesses(inst);
    report.triangle_found = has_triangle(inst.gadget);
    report.or_of_collisions =
        std::any_of(colorings.begin(), colorings.end(), [&](const Coloring& c) { return has_collision(base, c); });
    report.agreement = report.triangle_found == report.or_of_collisions;
    return report;
}

}  // namespace gctri
