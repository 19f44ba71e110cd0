#pragma once

// JSON readers and writers for graphs, coloring tuples, reduction instances,
// equivalence reports, truth tables and adversary certificates.

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gctri/adversary.hpp"
#include "gctri/boolfn.hpp"
#include "gctri/bounds.hpp"
#include "gctri/errors.hpp"
#include "gctri/graph.hpp"
#include "gctri/problems.hpp"
#include "gctri/reduction.hpp"

namespace gctri::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

namespace detail {

template <class T>
T get_field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": field '" + key + "' has the wrong type (" + e.what() + ")");
    }
}

inline std::vector<std::uint8_t> bits_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of bits");
    std::vector<std::uint8_t> bits;
    bits.reserve(j.size());
    for (const auto& b : j) {
        if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
            throw InputError(std::string(what) + ": entries must be 0 or 1");
        }
        bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
    return bits;
}

}  // namespace detail

// --- graphs -----------------------------------------------------------------

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json j = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

inline Graph graph_from_json(const json& j) {
    const auto n = detail::get_field<long long>(j, "n", "graph");
    if (n < 0) throw InputError("graph: n must be non-negative");
    const auto raw_edges = detail::get_field<json>(j, "edges", "graph");
    if (!raw_edges.is_array()) throw InputError("graph: 'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& e : raw_edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("graph: each edge must be a pair of integers");
        }
        const auto u = e[0].get<long long>();
        const auto v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("graph: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = detail::get_field<std::vector<std::string>>(j, "labels", "graph");
    return Graph(static_cast<std::size_t>(n), std::move(edges), std::move(labels));
}

inline Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

// --- colorings --------------------------------------------------------------

inline json to_json(const std::vector<Coloring>& colorings) {
    json arr = json::array();
    for (const auto& c : colorings) arr.push_back(c.marks());
    return json{{"colorings", std::move(arr)}};
}

inline std::vector<Coloring> colorings_from_json(const json& j) {
    const auto arr = detail::get_field<json>(j, "colorings", "colorings");
    if (!arr.is_array()) throw InputError("colorings: 'colorings' must be an array");
    std::vector<Coloring> out;
    for (const auto& c : arr) out.emplace_back(detail::bits_from_json(c, "colorings"));
    return out;
}

inline std::vector<Coloring> load_colorings(const std::string& path) {
    return colorings_from_json(read_json_file(path));
}

// --- reduction instances ----------------------------------------------------

inline json roles_to_json(const std::vector<VertexRole>& roles) {
    json arr = json::array();
    for (std::size_t k = 0; k < roles.size(); ++k) {
        arr.push_back({{"vertex", k}, {"role", role_name(roles[k].kind)}, {"origin", roles[k].origin}});
    }
    return arr;
}

inline std::vector<VertexRole> roles_from_json(const json& arr) {
    if (!arr.is_array()) throw InputError("roles: expected an array");
    std::vector<VertexRole> roles;
    for (const auto& r : arr) {
        const auto kind = detail::get_field<std::string>(r, "role", "roles");
        const auto origin = detail::get_field<Vertex>(r, "origin", "roles");
        if (kind == "left") {
            roles.push_back({VertexRole::Kind::Left, origin});
        } else if (kind == "right") {
            roles.push_back({VertexRole::Kind::Right, origin});
        } else if (kind == "z") {
            roles.push_back({VertexRole::Kind::Z, origin});
        } else {
            throw InputError("roles: unknown role '" + kind + "'");
        }
    }
    return roles;
}

/// {"base": graph, "colorings": [...], "gadget": graph, "roles": [...]}
inline json to_json(const ReductionInstance& inst) {
    return json{{"base", to_json(inst.base)},
                {"colorings", to_json(inst.colorings)["colorings"]},
                {"gadget", to_json(inst.gadget)},
                {"roles", roles_to_json(inst.roles)}};
}

/// Reads an instance as written, without rebuilding it; run check_instance on the result.
inline ReductionInstance instance_from_json(const json& j) {
    ReductionInstance inst;
    inst.base = graph_from_json(detail::get_field<json>(j, "base", "instance"));
    inst.colorings = colorings_from_json(json{{"colorings", detail::get_field<json>(j, "colorings", "instance")}});
    inst.gadget = graph_from_json(detail::get_field<json>(j, "gadget", "instance"));
    inst.roles = roles_from_json(detail::get_field<json>(j, "roles", "instance"));
    return inst;
}

// --- equivalence reports ----------------------------------------------------

inline json to_json(const EquivalenceReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back({w.instance, w.left, w.right});
    return json{{"id", r.id},
                {"n", r.n},
                {"triangle_found", r.triangle_found},
                {"or_of_collisions", r.or_of_collisions},
                {"agreement", r.agreement},
                {"witnesses", std::move(witnesses)}};
}

inline EquivalenceReport report_from_json(const json& j) {
    EquivalenceReport r;
    r.id = detail::get_field<std::uint64_t>(j, "id", "report");
    r.n = detail::get_field<std::size_t>(j, "n", "report");
    r.triangle_found = detail::get_field<bool>(j, "triangle_found", "report");
    r.or_of_collisions = detail::get_field<bool>(j, "or_of_collisions", "report");
    r.agreement = detail::get_field<bool>(j, "agreement", "report");
    for (const auto& w : detail::get_field<json>(j, "witnesses", "report")) {
        if (!w.is_array() || w.size() != 3) throw InputError("report: witnesses must be [i, v, w] triples");
        r.witnesses.push_back({w[0].get<Vertex>(), w[1].get<Vertex>(), w[2].get<Vertex>()});
    }
    return r;
}

// --- boolean functions ------------------------------------------------------

/// {"arity": m, "table": "<2^m characters>"}; character k is f(index k).
inline json to_json(const BooleanFunction& f) {
    json j = {{"arity", f.arity()}, {"table", f.table_string()}};
    if (!f.name().empty()) j["name"] = f.name();
    return j;
}

inline BooleanFunction function_from_json(const json& j) {
    const auto arity = detail::get_field<unsigned>(j, "arity", "truth table");
    const auto table = detail::get_field<std::string>(j, "table", "truth table");
    if (arity > kMaxArity) throw SizeLimitError("truth table arity exceeds 20");
    if (table.size() != (std::size_t{1} << arity)) {
        throw InputError("truth table: length " + std::to_string(table.size()) + " does not equal 2^" +
                         std::to_string(arity));
    }
    auto f = BooleanFunction::from_table_string(table);
    if (j.contains("name") && j["name"].is_string()) f.set_name(j["name"].get<std::string>());
    return f;
}

/// or_n:k, and_n:k, tri:k, gc:<graph file>, or a truth-table file path.
inline BooleanFunction parse_function_spec(const std::string& spec) {
    auto number_after = [&](std::size_t prefix) {
        const std::string digits = spec.substr(prefix);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4) {
            throw InputError("malformed function spec '" + spec + "'");
        }
        return static_cast<unsigned>(std::stoul(digits));
    };
    if (spec.rfind("or_n:", 0) == 0) return or_n(number_after(5));
    if (spec.rfind("and_n:", 0) == 0) return and_n(number_after(6));
    if (spec.rfind("tri:", 0) == 0) return triangle_fn(number_after(4));
    if (spec.rfind("gc:", 0) == 0) {
        auto f = graph_collision_fn(load_graph(spec.substr(3)));
        f.set_name(spec);
        return f;
    }
    auto f = function_from_json(read_json_file(spec));
    if (f.name().empty()) f.set_name(spec);
    return f;
}

// --- adversary certificates -------------------------------------------------

/// {"mode", "arity", "value", "entries": [[x, y, w], ...]} with the nonzero
/// upper-triangle entries, plus the function table and tolerances so the
/// certificate can be re-verified standalone.
inline json to_json(const BoundEstimate& est) {
    json entries = json::array();
    const auto& g = est.certificate.entries;
    for (Eigen::Index x = 0; x < g.rows(); ++x) {
        for (Eigen::Index y = x; y < g.cols(); ++y) {
            if (g(x, y) != 0.0) entries.push_back({x, y, g(x, y)});
        }
    }
    return json{{"mode", mode_name(est.mode)},
                {"arity", est.certificate.f.arity()},
                {"value", est.value},
                {"entries", std::move(entries)},
                {"table", est.certificate.f.table_string()},
                {"constraint_slack", est.constraint_slack},
                {"solver_tolerance", est.solver_tolerance}};
}

/// `f` is required when the document carries no "table" field.
inline BoundEstimate estimate_from_json(const json& j, const BooleanFunction* f = nullptr) {
    BoundEstimate est;
    est.mode = parse_mode(detail::get_field<std::string>(j, "mode", "certificate"));
    const auto arity = detail::get_field<unsigned>(j, "arity", "certificate");
    if (arity > kMaxAdversaryArity) throw SizeLimitError("certificate arity exceeds 5");
    est.value = detail::get_field<double>(j, "value", "certificate");
    if (j.contains("table")) {
        est.certificate.f = function_from_json(json{{"arity", arity}, {"table", j["table"]}});
    } else if (f != nullptr) {
        est.certificate.f = *f;
    } else {
        throw InputError("certificate: no 'table' field and no function supplied");
    }
    if (est.certificate.f.arity() != arity) throw InputError("certificate: arity does not match the function");
    est.constraint_slack = j.value("constraint_slack", 1e-9);
    est.solver_tolerance = j.value("solver_tolerance", 1e-3);
    const auto size = static_cast<Eigen::Index>(std::size_t{1} << arity);
    est.certificate.entries = Eigen::MatrixXd::Zero(size, size);
    for (const auto& e : detail::get_field<json>(j, "entries", "certificate")) {
        if (!e.is_array() || e.size() != 3) throw InputError("certificate: entries must be [x, y, weight]");
        const auto x = e[0].get<long long>();
        const auto y = e[1].get<long long>();
        if (x < 0 || y < 0 || x >= size || y >= size) throw InputError("certificate: entry index out of range");
        const double w = e[2].get<double>();
        est.certificate.entries(x, y) = w;
        est.certificate.entries(y, x) = w;
    }
    return est;
}

inline json to_json(const CertificateCheck& c, AdversaryMode mode) {
    return json{{"support", c.support},
                {"symmetric", c.symmetric},
                {"nonnegative", c.nonnegative},
                {"constraints", c.constraints},
                {"value", c.value},
                {"max_constraint_norm", c.max_constraint_norm},
                {"recomputed_norm", c.recomputed_norm},
                {"passed", c.passed(mode)}};
}

inline json to_json(const CompositionReport& r) {
    return json{{"outer", to_json(r.outer)},
                {"inner", to_json(r.inner)},
                {"composed", to_json(r.composed)},
                {"outer_value", r.outer.value},
                {"inner_value", r.inner.value},
                {"composed_value", r.composed.value},
                {"product", r.product},
                {"ratio", r.ratio},
                {"tolerance", r.tolerance},
                {"multiplicative", r.multiplicative}};
}

inline json to_json(const BoundReport& r) {
    return json{{"n", r.n},
                {"gadget_vertices", r.gadget_vertices},
                {"gc_exponent", r.gc_exponent.str()},
                {"triangle_exponent", r.triangle_exponent.str()},
                {"triangle_exponent_value", r.triangle_exponent.to_double()},
                {"supertrivial", r.supertrivial},
                {"gc_bound", r.gc_bound},
                {"triangle_bound", r.triangle_bound},
                {"statement", r.statement}};
}

}  // namespace gctri::io
