#pragma once

// Adversary lower bounds for small total boolean functions.
//
//   ADV(f) = max ||G||  s.t.  G symmetric, G[x,y] = 0 when f(x) = f(y),
//                             ||G o D_i|| <= 1 for every input bit i,
//
// with D_i[x,y] = [x_i != y_i]. The nonnegative variant adds G >= 0 entrywise.
// The solver returns a feasible G (a certificate) so the reported value is a
// sound lower bound whether or not the optimum was reached.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gctri/boolfn.hpp"
#include "gctri/errors.hpp"
#include "gctri/spectral.hpp"

namespace gctri {

inline constexpr unsigned kMaxAdversaryArity = 5;

enum class AdversaryMode { Nonnegative, NegativeWeight };

inline const char* mode_name(AdversaryMode mode) {
    return mode == AdversaryMode::Nonnegative ? "nonneg" : "neg";
}

inline AdversaryMode parse_mode(const std::string& text) {
    if (text == "nonneg" || text == "nonnegative") return AdversaryMode::Nonnegative;
    if (text == "neg" || text == "negative-weight") return AdversaryMode::NegativeWeight;
    throw InputError("unknown adversary mode '" + text + "' (expected nonneg or neg)");
}

/// Symmetric 2^m x 2^m weight matrix over input pairs of f.
struct AdversaryMatrix {
    BooleanFunction f;
    Eigen::MatrixXd entries;

    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

struct BoundEstimate {
    double value = 0.0;
    AdversaryMode mode = AdversaryMode::NegativeWeight;
    AdversaryMatrix certificate;
    double constraint_slack = 0.0;
    double solver_tolerance = 0.0;
};

struct SolverOptions {
    double tol = 1e-3;
    int restarts = 32;
    int iterations = 10000;  // per restart
    std::uint64_t seed = 0x5eed;
};

/// The iteration budget ran out before the best value was confirmed by a
/// second restart. Carries the best feasible certificate found.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, BoundEstimate best) : std::runtime_error(what), best_(std::move(best)) {}
    [[nodiscard]] const BoundEstimate& best() const noexcept { return best_; }

private:
    BoundEstimate best_;
};

namespace detail {

/// support[x,y] = [f(x) != f(y)]; differs[i][x,y] = [x_i != y_i].
struct AdversaryMasks {
    Eigen::MatrixXd support;
    std::vector<Eigen::MatrixXd> differs;
};

inline AdversaryMasks make_masks(const BooleanFunction& f) {
    const auto size = static_cast<Eigen::Index>(f.table_size());
    AdversaryMasks masks;
    masks.support = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index x = 0; x < size; ++x) {
        for (Eigen::Index y = 0; y < size; ++y) {
            masks.support(x, y) = f.at(static_cast<std::uint64_t>(x)) != f.at(static_cast<std::uint64_t>(y)) ? 1.0 : 0.0;
        }
    }
    for (unsigned i = 0; i < f.arity(); ++i) {
        Eigen::MatrixXd d(size, size);
        for (Eigen::Index x = 0; x < size; ++x) {
            for (Eigen::Index y = 0; y < size; ++y) d(x, y) = (((x ^ y) >> i) & 1) ? 1.0 : 0.0;
        }
        masks.differs.push_back(std::move(d));
    }
    return masks;
}

inline double max_abs_eigenvalue(const Eigen::VectorXd& eig) {
    return eig.size() == 0 ? 0.0 : std::max(std::abs(eig(0)), std::abs(eig(eig.size() - 1)));
}

/// Smoothed norm mu * log sum_k (e^{l_k/mu} + e^{-l_k/mu}) over the
/// eigenvalues l_k of every matrix in `mats`, its gradient with respect to
/// the shared parameter (each term masked by `masks[j]` when non-null), and
/// the exact largest |eigenvalue|.
struct SmoothNorm {
    double value = 0.0;
    double exact = 0.0;
    Eigen::MatrixXd grad;
};

inline SmoothNorm smooth_max_norm(const std::vector<Eigen::MatrixXd>& mats, const std::vector<const Eigen::MatrixXd*>& masks,
                                  double mu) {
    std::vector<Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>> solvers;
    solvers.reserve(mats.size());
    double top = 0.0;
    for (const auto& m : mats) {
        solvers.emplace_back(m);
        top = std::max(top, max_abs_eigenvalue(solvers.back().eigenvalues()));
    }
    const auto size = mats.front().rows();
    SmoothNorm out;
    out.exact = top;
    out.grad = Eigen::MatrixXd::Zero(size, size);
    double z = 0.0;
    for (std::size_t j = 0; j < mats.size(); ++j) {
        const auto& eig = solvers[j].eigenvalues();
        const auto& vec = solvers[j].eigenvectors();
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size, size);
        for (Eigen::Index k = 0; k < eig.size(); ++k) {
            const double wp = std::exp((eig(k) - top) / mu);
            const double wm = std::exp((-eig(k) - top) / mu);
            z += wp + wm;
            const double w = wp - wm;
            if (std::abs(w) > 1e-300) g.noalias() += w * vec.col(k) * vec.col(k).transpose();
        }
        if (masks[j] != nullptr) g = g.cwiseProduct(*masks[j]);
        out.grad += g;
    }
    out.value = top + mu * std::log(z);
    out.grad /= z;
    return out;
}

struct AscentResult {
    double value = 0.0;
    Eigen::MatrixXd gamma;
    int iterations = 0;
};

/// One restart of normalized gradient ascent on the scale-invariant ratio
///   log smooth||G|| - log smooth max_i ||G o D_i||
/// restricted to the support, with a decreasing smoothing temperature and
/// backtracking step control. Returns the best iterate seen, rescaled to be
/// feasible (max_i ||G o D_i|| = 1), together with its exact norm.
inline AscentResult ascend(Eigen::MatrixXd gamma, const AdversaryMasks& masks, AdversaryMode mode, int budget) {
    const bool nonneg = mode == AdversaryMode::Nonnegative;
    const std::vector<const Eigen::MatrixXd*> objective_masks{nullptr};
    std::vector<const Eigen::MatrixXd*> constraint_masks;
    for (const auto& d : masks.differs) constraint_masks.push_back(&d);

    auto project = [&](Eigen::MatrixXd& g) {
        g = (0.5 * (g + g.transpose()).eval()).cwiseProduct(masks.support);
        if (nonneg) g = g.cwiseMax(0.0);
    };
    struct Eval {
        double objective;
        double ratio;
        double constraint;
        Eigen::MatrixXd grad;
    };
    auto evaluate = [&](const Eigen::MatrixXd& g, double mu) {
        std::vector<Eigen::MatrixXd> cons;
        cons.reserve(masks.differs.size());
        for (const auto& d : masks.differs) cons.push_back(g.cwiseProduct(d));
        const SmoothNorm top = smooth_max_norm({g}, objective_masks, mu);
        const SmoothNorm con = smooth_max_norm(cons, constraint_masks, mu);
        Eval e;
        e.objective = std::log(top.value) - std::log(con.value);
        e.constraint = con.exact;
        e.ratio = con.exact > 0 ? top.exact / con.exact : 0.0;
        e.grad = top.grad / top.value - con.grad / con.value;
        return e;
    };

    AscentResult best;
    project(gamma);
    if (gamma.norm() == 0.0) return best;
    gamma /= gamma.norm();

    int used = 0;
    double step = 0.05;
    for (double mu = 0.05; mu >= 2e-6 && used < budget; mu *= 0.3) {
        Eval current = evaluate(gamma, mu);
        if (current.ratio > best.value) {
            best.value = current.ratio;
            best.gamma = gamma / current.constraint;
        }
        double stage_start = best.value;
        int since_check = 0;
        while (used < budget && step > 1e-10) {
            ++used;
            Eigen::MatrixXd dir = current.grad;
            project(dir);
            const double dn = dir.norm();
            if (dn < 1e-14) break;
            Eigen::MatrixXd trial = gamma + (step / dn) * dir;
            project(trial);
            const double tn = trial.norm();
            if (tn == 0.0) {
                step *= 0.5;
                continue;
            }
            trial /= tn;
            Eval next = evaluate(trial, mu);
            if (next.constraint > 0 && next.objective > current.objective) {
                gamma = std::move(trial);
                current = std::move(next);
                step = std::min(step * 1.5, 0.5);
                if (current.ratio > best.value) {
                    best.value = current.ratio;
                    best.gamma = gamma / current.constraint;
                }
            } else {
                step *= 0.5;
            }
            // a stage ends once 200 iterations no longer move the best value
            if (++since_check == 200) {
                if (best.value - stage_start < 1e-10 * best.value) break;
                stage_start = best.value;
                since_check = 0;
            }
        }
        step = std::max(step, 1e-3);
    }
    best.iterations = used;
    return best;
}

}  // namespace detail

/// Recomputes the spectral norm of a symmetric matrix with the Jacobi routine.
inline double jacobi_norm(const Eigen::MatrixXd& m, double tol = 1e-8) {
    spectral::SymmetricMatrix s(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) s(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
    return spectral::spectral_norm(s, tol);
}

/// Wraps a raw matrix as a reportable estimate: projects onto the support,
/// rescales so that max_i ||G o D_i|| = 1, and records the norm.
inline BoundEstimate make_estimate(const BooleanFunction& f, Eigen::MatrixXd raw, AdversaryMode mode, double tol) {
    const auto masks = detail::make_masks(f);
    raw = (0.5 * (raw + raw.transpose()).eval()).cwiseProduct(masks.support);
    if (mode == AdversaryMode::Nonnegative) raw = raw.cwiseMax(0.0);
    double worst = 0.0;
    for (const auto& d : masks.differs) worst = std::max(worst, jacobi_norm(raw.cwiseProduct(d)));
    if (worst > 0) raw /= worst;
    BoundEstimate est;
    est.mode = mode;
    est.value = jacobi_norm(raw);
    est.certificate = AdversaryMatrix{f, std::move(raw)};
    est.constraint_slack = 1e-9;
    est.solver_tolerance = tol;
    return est;
}

/// Maximizes ||G|| over feasible adversary matrices for f.
///
/// Restart 0 starts from the uniform matrix on the support, the others from
/// seeded random matrices. The best restart wins (lowest index on ties). The
/// result counts as converged when a second restart reproduces the best value
/// to within tol; otherwise SolverFailure carries the best certificate.
inline BoundEstimate adversary_bound(const BooleanFunction& f, AdversaryMode mode, SolverOptions options = {}) {
    if (f.arity() > kMaxAdversaryArity) {
        throw SizeLimitError("adversary_bound supports arity <= 5, got " + std::to_string(f.arity()));
    }
    if (!(options.tol > 0.0 && options.tol <= 0.1)) throw InputError("tolerance must lie in (0, 0.1]");
    if (options.restarts < 1 || options.iterations < 1) throw InputError("restarts and iterations must be positive");

    const auto masks = detail::make_masks(f);
    const auto size = masks.support.rows();
    if (masks.support.isZero()) {
        // constant function: the only feasible matrix is zero
        return make_estimate(f, Eigen::MatrixXd::Zero(size, size), mode, options.tol);
    }

    std::mt19937_64 rng(options.seed);
    std::vector<double> values;
    detail::AscentResult best;
    int best_index = -1;
    for (int r = 0; r < options.restarts; ++r) {
        Eigen::MatrixXd start(size, size);
        if (r == 0) {
            start = masks.support;
        } else {
            std::normal_distribution<double> normal(0.0, 1.0);
            for (Eigen::Index x = 0; x < size; ++x) {
                for (Eigen::Index y = 0; y < size; ++y) {
                    const double v = normal(rng);
                    start(x, y) = mode == AdversaryMode::Nonnegative ? std::abs(v) : v;
                }
            }
        }
        auto result = detail::ascend(std::move(start), masks, mode, options.iterations);
        values.push_back(result.value);
        if (best_index < 0 || result.value > best.value) {
            best = std::move(result);
            best_index = r;
        }
    }

    BoundEstimate est = make_estimate(f, best.gamma, mode, options.tol);
    const auto confirmations = std::count_if(values.begin(), values.end(),
                                             [&](double v) { return v >= best.value - options.tol; });
    if (options.restarts > 1 && confirmations < 2) {
        throw SolverFailure("adversary ascent did not converge: best value " + std::to_string(est.value) +
                                " was not reproduced by a second restart",
                            std::move(est));
    }
    return est;
}

struct CertificateCheck {
    bool support = false;
    bool symmetric = false;
    bool nonnegative = false;  // only required in nonnegative mode
    bool constraints = false;
    bool value = false;
    double max_constraint_norm = 0.0;
    double recomputed_norm = 0.0;

    [[nodiscard]] bool passed(AdversaryMode mode) const {
        return support && symmetric && constraints && value && (mode == AdversaryMode::NegativeWeight || nonnegative);
    }
};

/// Independent re-check of a certificate with the Jacobi eigen routine at 1e-8.
inline CertificateCheck verify_certificate(const BoundEstimate& est) {
    const auto& f = est.certificate.f;
    const auto& g = est.certificate.entries;
    CertificateCheck check;
    const auto size = static_cast<Eigen::Index>(f.table_size());
    if (g.rows() != size || g.cols() != size) return check;

    check.support = true;
    check.symmetric = true;
    check.nonnegative = true;
    for (Eigen::Index x = 0; x < size; ++x) {
        for (Eigen::Index y = 0; y < size; ++y) {
            const double v = g(x, y);
            if (v != 0.0 && f.at(static_cast<std::uint64_t>(x)) == f.at(static_cast<std::uint64_t>(y))) {
                check.support = false;
            }
            if (v != g(y, x)) check.symmetric = false;
            if (v < 0.0) check.nonnegative = false;
        }
    }

    for (unsigned i = 0; i < f.arity(); ++i) {
        Eigen::MatrixXd masked = g;
        for (Eigen::Index x = 0; x < size; ++x) {
            for (Eigen::Index y = 0; y < size; ++y) {
                if ((((x ^ y) >> i) & 1) == 0) masked(x, y) = 0.0;
            }
        }
        check.max_constraint_norm = std::max(check.max_constraint_norm, jacobi_norm(masked));
    }
    check.constraints = check.max_constraint_norm <= 1.0 + est.constraint_slack;
    check.recomputed_norm = jacobi_norm(g);
    check.value = std::abs(check.recomputed_norm - est.value) <= est.solver_tolerance;
    return check;
}

struct CompositionReport {
    BoundEstimate outer;
    BoundEstimate inner;
    BoundEstimate composed;
    double product = 0.0;
    double ratio = 0.0;
    double tolerance = 0.0;  // allowed |ratio - 1|
    bool multiplicative = false;
};

/// Negative-weight adversary values of f, g and f . g, and the ratio
/// ADV(f . g) / (ADV(f) ADV(g)), which is 1 for boolean f and g.
inline CompositionReport composition_check(const BooleanFunction& outer, const BooleanFunction& inner,
                                           SolverOptions options = {}) {
    if (std::uint64_t{outer.arity()} * inner.arity() > kMaxAdversaryArity) {
        throw SizeLimitError("composition_check needs arity(f) * arity(g) <= 5");
    }
    const BooleanFunction composed = compose(outer, inner);
    CompositionReport report;
    report.outer = adversary_bound(outer, AdversaryMode::NegativeWeight, options);
    report.inner = adversary_bound(inner, AdversaryMode::NegativeWeight, options);
    report.composed = adversary_bound(composed, AdversaryMode::NegativeWeight, options);
    report.product = report.outer.value * report.inner.value;
    report.ratio = report.product > 0 ? report.composed.value / report.product : 0.0;
    report.tolerance = 2.0 * options.tol;
    report.multiplicative = std::abs(report.ratio - 1.0) <= report.tolerance;
    return report;
}

}  // namespace gctri
