#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gctri/errors.hpp"

namespace gctri {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Triple = std::array<Vertex, 3>;

/// Simple undirected graph on vertices 0 .. n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency is kept as one
/// bitset row per vertex so neighbourhood intersections are word-parallel.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n, std::vector<Edge> edges = {}, std::vector<std::string> labels = {})
        : n_(n), stride_((n + 63) / 64), adjacency_(n * stride_, 0), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != n_) {
            throw InputError("label count " + std::to_string(labels_.size()) + " does not match vertex count " +
                             std::to_string(n_));
        }
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) add_edge(u, v);
        std::sort(edges_.begin(), edges_.end());
    }

    /// Graph whose edge set is encoded by `code`: bit k set iff the k-th pair of
    /// the row-major upper triangle (0,1),(0,2),...,(n-2,n-1) is an edge.
    static Graph from_upper_triangle(std::size_t n, std::uint64_t code) {
        std::vector<Edge> edges;
        unsigned k = 0;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v, ++k) {
                if ((code >> k) & 1U) edges.emplace_back(u, v);
            }
        }
        return Graph(n, std::move(edges));
    }

    [[nodiscard]] std::uint64_t upper_triangle_code() const {
        if (pair_count(n_) > 64) throw SizeLimitError("graph too large for a 64-bit upper-triangle code");
        std::uint64_t code = 0;
        unsigned k = 0;
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = u + 1; v < n_; ++v, ++k) {
                if (has_edge(u, v)) code |= std::uint64_t{1} << k;
            }
        }
        return code;
    }

    static constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    [[nodiscard]] std::string label(Vertex v) const {
        return labels_.empty() ? std::to_string(v) : labels_.at(v);
    }

    [[nodiscard]] std::optional<Vertex> find_label(const std::string& name) const {
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (labels_[v] == name) return static_cast<Vertex>(v);
        }
        return std::nullopt;
    }

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept {
        if (u >= n_ || v >= n_) return false;
        return (row(u)[v >> 6] >> (v & 63U)) & 1U;
    }

    [[nodiscard]] std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < stride_; ++w) d += static_cast<std::size_t>(__builtin_popcountll(row(v)[w]));
        return d;
    }

    [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w = 0; w < n_; ++w) {
            if (has_edge(v, w)) out.push_back(w);
        }
        return out;
    }

    [[nodiscard]] const std::uint64_t* row(Vertex v) const noexcept { return adjacency_.data() + v * stride_; }
    [[nodiscard]] std::size_t row_words() const noexcept { return stride_; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void add_edge(Vertex u, Vertex v) {
        if (u >= n_ || v >= n_) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0, " +
                             std::to_string(n_) + ")");
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) {
            throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        adjacency_[u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63U);
        adjacency_[v * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63U);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Marks f: V -> {0,1}, one entry per vertex of the base graph.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<std::uint8_t> marks) : marks_(std::move(marks)) {
        for (auto m : marks_) {
            if (m > 1) throw InputError("coloring entries must be 0 or 1");
        }
    }

    /// Vertex v is marked iff bit v of `code` is set.
    static Coloring from_code(std::size_t n, std::uint64_t code) {
        std::vector<std::uint8_t> marks(n);
        for (std::size_t v = 0; v < n; ++v) marks[v] = static_cast<std::uint8_t>((code >> v) & 1U);
        return Coloring(std::move(marks));
    }

    static Coloring of_vertices(std::size_t n, std::initializer_list<Vertex> marked) {
        std::vector<std::uint8_t> marks(n, 0);
        for (auto v : marked) marks.at(v) = 1;
        return Coloring(std::move(marks));
    }

    [[nodiscard]] std::size_t size() const noexcept { return marks_.size(); }
    [[nodiscard]] bool marked(Vertex v) const { return marks_.at(v) != 0; }
    [[nodiscard]] const std::vector<std::uint8_t>& marks() const noexcept { return marks_; }

    [[nodiscard]] std::size_t popcount() const noexcept {
        return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), std::uint8_t{1}));
    }

    [[nodiscard]] std::uint64_t code() const {
        if (marks_.size() > 64) throw SizeLimitError("coloring too long for a 64-bit code");
        std::uint64_t c = 0;
        for (std::size_t v = 0; v < marks_.size(); ++v) c |= std::uint64_t{marks_[v]} << v;
        return c;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<std::uint8_t> marks_;
};

/// Where a vertex of the 3n-vertex gadget comes from.
struct VertexRole {
    enum class Kind { Left, Right, Z };
    Kind kind;
    Vertex origin;  // base vertex for Left/Right, instance index for Z

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// [Left | Right | Z] block layout over 3n vertices.
inline VertexRole role_of(Vertex k, std::size_t n) {
    if (k < n) return {VertexRole::Kind::Left, k};
    if (k < 2 * n) return {VertexRole::Kind::Right, static_cast<Vertex>(k - n)};
    if (k < 3 * n) return {VertexRole::Kind::Z, static_cast<Vertex>(k - 2 * n)};
    throw InputError("vertex " + std::to_string(k) + " outside the 3n-vertex gadget");
}

inline const char* role_name(VertexRole::Kind kind) {
    switch (kind) {
        case VertexRole::Kind::Left: return "left";
        case VertexRole::Kind::Right: return "right";
        case VertexRole::Kind::Z: return "z";
    }
    return "?";
}

/// Bipartite double cover: v -> (v, n+v); each edge {x,y} -> {x_1,y_2} and {y_1,x_2}.
inline Graph bipartite_double(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (auto [x, y] : g.edges()) {
        edges.emplace_back(x, static_cast<Vertex>(n + y));
        edges.emplace_back(y, static_cast<Vertex>(n + x));
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.reserve(2 * n);
        for (const auto& l : g.labels()) labels.push_back(l + "1");
        for (const auto& l : g.labels()) labels.push_back(l + "2");
    }
    return Graph(2 * n, std::move(edges), std::move(labels));
}

/// Marks both copies v_1 and v_2 of every marked v.
inline Coloring lift_coloring(const Coloring& c, const Graph& base) {
    if (c.size() != base.vertex_count()) {
        throw InputError("coloring length " + std::to_string(c.size()) + " does not match vertex count " +
                         std::to_string(base.vertex_count()));
    }
    std::vector<std::uint8_t> marks(c.marks());
    marks.insert(marks.end(), c.marks().begin(), c.marks().end());
    return Coloring(std::move(marks));
}

inline bool has_collision(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count()) {
        throw InputError("coloring length " + std::to_string(c.size()) + " does not match vertex count " +
                         std::to_string(g.vertex_count()));
    }
    return std::any_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return c.marked(e.first) && c.marked(e.second); });
}

/// All triangles {u < v < w}, lexicographically sorted.
inline std::vector<Triple> enumerate_triangles(const Graph& g) {
    std::vector<Triple> out;
    const std::size_t words = g.row_words();
    for (auto [u, v] : g.edges()) {
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rv = g.row(v);
        // only w > v, so every triangle is reported once from its smallest edge
        for (std::size_t k = (v + 1) >> 6; k < words; ++k) {
            std::uint64_t common = ru[k] & rv[k];
            if (k == ((v + 1) >> 6)) common &= ~std::uint64_t{0} << ((v + 1) & 63U);
            while (common != 0) {
                const auto bit = static_cast<Vertex>(__builtin_ctzll(common));
                out.push_back({u, v, static_cast<Vertex>(k * 64 + bit)});
                common &= common - 1;
            }
        }
    }
    return out;
}

inline bool has_triangle(const Graph& g) {
    const std::size_t words = g.row_words();
    for (auto [u, v] : g.edges()) {
        for (std::size_t k = 0; k < words; ++k) {
            if ((g.row(u)[k] & g.row(v)[k]) != 0) return true;
        }
    }
    return false;
}

}  // namespace gctri
