// gctri: command-line front end for the Graph-Collision -> Triangle workbench.
//
// Exit codes: 0 success, 1 input error, 2 solver failure, 3 invariant violation.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "gctri/gctri.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;
constexpr int kExitInvariant = 3;

using nlohmann::json;

/// Writes to --out when given, else stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw gctri::InputError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct Options {
    std::string graph;
    std::string colorings;
    std::string fn;
    std::string inner_fn;
    std::string mode = "neg";
    std::string out;
    std::string cert;
    double tol = 1e-3;
    std::uint64_t seed = 1;
    int restarts = 32;
    int iterations = 10000;
    unsigned n_min = 2;
    unsigned n_max = 4;
    std::uint64_t samples = 1000;
    std::uint64_t n = 0;
    std::string gc_exponent;
};

gctri::SolverOptions solver_options(const Options& o) {
    gctri::SolverOptions s;
    s.tol = o.tol;
    s.seed = o.seed;
    s.restarts = o.restarts;
    s.iterations = o.iterations;
    return s;
}

int cmd_reduce(const Options& o) {
    auto inst = gctri::build_reduction(gctri::io::load_graph(o.graph), gctri::io::load_colorings(o.colorings));
    gctri::check_instance(inst);
    Output out(o.out);
    out.stream() << gctri::io::to_json(inst).dump(2) << '\n';
    return kExitOk;
}

int cmd_check(const Options& o) {
    const auto graph = gctri::io::load_graph(o.graph);
    const auto colorings = gctri::io::load_colorings(o.colorings);
    const auto report = gctri::check_equivalence(graph, colorings);
    Output out(o.out);
    out.stream() << gctri::io::to_json(report).dump() << '\n';
    return report.agreement ? kExitOk : kExitInvariant;
}

int cmd_sweep(const Options& o) {
    gctri::SweepConfig config{o.n_min, o.n_max, o.samples, o.seed};
    Output out(o.out);
    const auto summary = gctri::run_sweep(config, &out.stream());
    std::cerr << gctri::to_json(summary, config).dump() << '\n';
    return summary.clean() ? kExitOk : kExitInvariant;
}

int cmd_adv(const Options& o) {
    const auto f = gctri::io::parse_function_spec(o.fn);
    const auto mode = gctri::parse_mode(o.mode);
    Output out(o.out);
    try {
        const auto est = gctri::adversary_bound(f, mode, solver_options(o));
        auto j = gctri::io::to_json(est);
        j["function"] = f.name();
        j["converged"] = true;
        j["verification"] = gctri::io::to_json(gctri::verify_certificate(est), mode);
        out.stream() << j.dump(2) << '\n';
        return kExitOk;
    } catch (const gctri::SolverFailure& e) {
        auto j = gctri::io::to_json(e.best());
        j["function"] = f.name();
        j["converged"] = false;
        j["verification"] = gctri::io::to_json(gctri::verify_certificate(e.best()), mode);
        out.stream() << j.dump(2) << '\n';
        std::cerr << "gctri: " << e.what() << '\n';
        return kExitSolver;
    }
}

int cmd_compose_check(const Options& o) {
    const auto outer = gctri::io::parse_function_spec(o.fn);
    const auto inner = gctri::io::parse_function_spec(o.inner_fn);
    const auto report = gctri::composition_check(outer, inner, solver_options(o));
    auto j = gctri::io::to_json(report);
    j["outer_function"] = outer.name();
    j["inner_function"] = inner.name();
    Output out(o.out);
    out.stream() << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_report(const Options& o) {
    const auto report = gctri::bound_report(o.n, gctri::Rational::parse(o.gc_exponent));
    Output out(o.out);
    out.stream() << gctri::io::to_json(report).dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o) {
    std::optional<gctri::BooleanFunction> f;
    if (!o.fn.empty()) f = gctri::io::parse_function_spec(o.fn);
    const auto est = gctri::io::estimate_from_json(gctri::io::read_json_file(o.cert), f ? &*f : nullptr);
    const auto check = gctri::verify_certificate(est);
    Output out(o.out);
    out.stream() << gctri::io::to_json(check, est.mode).dump(2) << '\n';
    return check.passed(est.mode) ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-Collision to Triangle reduction workbench"};
    app.require_subcommand(1);
    Options o;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Output file (default: stdout)"); };
    auto add_solver = [&](CLI::App* cmd) {
        cmd->add_option("--tol", o.tol, "Solver tolerance")->check(CLI::Range(1e-12, 0.1));
        cmd->add_option("--seed", o.seed, "Seed for solver restarts");
        cmd->add_option("--restarts", o.restarts, "Random restarts")->check(CLI::PositiveNumber);
        cmd->add_option("--iterations", o.iterations, "Iteration budget per restart")->check(CLI::PositiveNumber);
    };

    auto* reduce = app.add_subcommand("reduce", "Build the 3n-vertex gadget from a graph and n colorings");
    reduce->add_option("--graph", o.graph, "Graph JSON")->required();
    reduce->add_option("--colorings", o.colorings, "Coloring tuple JSON")->required();
    add_out(reduce);

    auto* check = app.add_subcommand("check", "Compare gadget triangle detection with OR of collisions");
    check->add_option("--graph", o.graph, "Graph JSON")->required();
    check->add_option("--colorings", o.colorings, "Coloring tuple JSON")->required();
    add_out(check);

    auto* sweep = app.add_subcommand("sweep", "Equivalence sweep over graphs and coloring tuples (JSON lines)");
    sweep->add_option("--n-min", o.n_min, "Smallest n")->check(CLI::Range(2, 8));
    sweep->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(2, 8));
    sweep->add_option("--samples", o.samples, "Random cases per sampled n (0: no cases)");
    sweep->add_option("--seed", o.seed, "Sampling seed");
    add_out(sweep);

    auto* adv = app.add_subcommand("adv", "Adversary lower bound with certificate");
    adv->add_option("fn,--fn", o.fn, "or_n:k, and_n:k, tri:k, gc:<graph.json> or truth-table JSON")->required();
    adv->add_option("--mode", o.mode, "nonneg or neg")->check(CLI::IsMember({"nonneg", "neg"}));
    add_solver(adv);
    add_out(adv);

    auto* compose = app.add_subcommand("compose-check", "Multiplicativity of the negative-weight adversary under f . g");
    compose->add_option("fn,--fn", o.fn, "Outer function")->required();
    compose->add_option("inner,--inner", o.inner_fn, "Inner function")->required();
    add_solver(compose);
    add_out(compose);

    auto* report = app.add_subcommand("report", "Triangle lower-bound exponent implied by a Graph-Collision exponent");
    report->add_option("--n", o.n, "Base graph size")->required()->check(CLI::PositiveNumber);
    report->add_option("--gc-exponent", o.gc_exponent, "Exponent a in [1/2, 1], e.g. 2/3 or 0.6")->required();
    add_out(report);

    auto* verify = app.add_subcommand("verify", "Re-check an exported adversary certificate");
    verify->add_option("--cert", o.cert, "Certificate JSON")->required();
    verify->add_option("--fn", o.fn, "Function, if the certificate carries no table");
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*reduce) return cmd_reduce(o);
        if (*check) return cmd_check(o);
        if (*sweep) return cmd_sweep(o);
        if (*adv) return cmd_adv(o);
        if (*compose) return cmd_compose_check(o);
        if (*report) return cmd_report(o);
        if (*verify) return cmd_verify(o);
    } catch (const gctri::SolverFailure& e) {
        std::cerr << "gctri: " << e.what() << '\n';
        return kExitSolver;
    } catch (const gctri::InvariantViolation& e) {
        std::cerr << "gctri: invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const gctri::InputError& e) {
        std::cerr << "gctri: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "gctri: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
