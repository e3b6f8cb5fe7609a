#include "corotan/verify.hpp"

#include <cmath>
#include <limits>

#include "corotan/errors.hpp"
#include "corotan/linalg.hpp"
#include "corotan/rates.hpp"
#include "corotan/sampling.hpp"
#include "corotan/tangents.hpp"

namespace corotan {

using ordered_json = nlohmann::ordered_json;

CheckReport symmetry_report(const Tensor4& t, double tol,
                            std::optional<SymmetryExpectation> expect) {
    CheckReport r;
    r.name = "symmetry";
    const SymmetryFlags f = symmetry_flags(t, tol);
    r.details["tol"] = tol;
    r.details["minor_left"] = f.minor_left;
    r.details["minor_right"] = f.minor_right;
    r.details["major"] = f.major;
    r.details["minor_left_residual"] = f.minor_left_residual;
    r.details["minor_right_residual"] = f.minor_right_residual;
    r.details["major_residual"] = f.major_residual;
    if (f.minor_left && f.minor_right) {
        const Mandel6 m = to_mandel(t, std::max(tol, 1e-8));
        r.details["mandel_skew_norm"] = norm(skew_part(m));
        r.details["mandel_norm"] = norm(m);
    }
    r.passed = true;
    if (expect) {
        r.passed = f.minor_left == expect->minor_left &&
                   f.minor_right == expect->minor_right && f.major == expect->major;
        if (!r.passed) r.failures.push_back("symmetry flags do not match expectation");
    }
    return r;
}

namespace {

struct SweepPathDef {
    std::string name;
    Tensor2 (*F)(double lam);
};

// tension paths apply the stretch directly; compression paths apply the
// reciprocal stretch, so the full grid covers the lambda < 1 branch as well
const std::vector<SweepPathDef>& compressible_paths() {
    static const std::vector<SweepPathDef> defs = {
        {"uniaxial_tension", [](double l) { return Tensor2::diag(l, 1.0, 1.0); }},
        {"uniaxial_compression", [](double l) { return Tensor2::diag(1.0 / l, 1.0, 1.0); }},
        {"equibiaxial_tension", [](double l) { return Tensor2::diag(l, l, 1.0); }},
        {"equibiaxial_compression",
         [](double l) { return Tensor2::diag(1.0 / l, 1.0 / l, 1.0); }},
        {"planar_tension", [](double l) { return Tensor2::diag(l, 1.0 / l, 1.0); }},
        {"planar_compression", [](double l) { return Tensor2::diag(1.0 / l, l, 1.0); }},
    };
    return defs;
}

const std::vector<SweepPathDef>& isochoric_paths() {
    static const std::vector<SweepPathDef> defs = {
        {"uniaxial_tension",
         [](double l) { return Tensor2::diag(l, 1.0 / std::sqrt(l), 1.0 / std::sqrt(l)); }},
        {"uniaxial_compression",
         [](double l) { return Tensor2::diag(1.0 / l, std::sqrt(l), std::sqrt(l)); }},
        {"equibiaxial_tension",
         [](double l) { return Tensor2::diag(l, l, 1.0 / (l * l)); }},
        {"equibiaxial_compression",
         [](double l) { return Tensor2::diag(1.0 / l, 1.0 / l, l * l); }},
        {"planar_tension", [](double l) { return Tensor2::diag(l, 1.0 / l, 1.0); }},
        {"planar_compression", [](double l) { return Tensor2::diag(1.0 / l, l, 1.0); }},
    };
    return defs;
}

std::vector<double> lambda_grid(const SweepConfig& c) {
    std::vector<double> grid;
    const int n = static_cast<int>(std::floor((c.lam_max - c.lam_min) / c.step + 0.5)) + 1;
    grid.reserve(n);
    for (int k = 0; k < n; ++k) grid.push_back(std::min(c.lam_min + k * c.step, c.lam_max));
    return grid;
}

} // namespace

SweepReport stability_sweep(const MaterialModel& model, const SweepConfig& config) {
    SweepReport rep;
    rep.model = model.name();
    rep.config = config;
    rep.incompressible = model.is_incompressible();
    rep.header = rep.incompressible
                     ? "isochoric paths: uniaxial diag(l,1/sqrt(l),1/sqrt(l)), equibiaxial "
                       "diag(l,l,1/l^2), planar diag(l,1/l,1); compression uses the "
                       "reciprocal stretch; definiteness tested on the traceless subspace"
                     : "paths: uniaxial diag(l,1,1), equibiaxial diag(l,l,1), planar "
                       "diag(l,1/l,1); compression uses the reciprocal stretch (l < 1 branch)";

    const auto& defs = rep.incompressible ? isochoric_paths() : compressible_paths();
    const std::vector<double> grid = lambda_grid(config);

    for (const auto& def : defs) {
        SweepPathRecord rec;
        rec.path = def.name;
        for (double lam : grid) {
            try {
                const DeformationState state = make_state(def.F(lam));
                const Tensor4 d = abaqus_ddsdde(model.hzj_tau(state), state.J);
                const double min_eig = rep.incompressible
                                           ? min_eig_traceless(to_mandel(d, 1e-7))
                                           : eig_sym6(to_mandel(d, 1e-7), 1e-7).values[0];
                rec.lam.push_back(lam);
                rec.J.push_back(state.J);
                rec.min_eig.push_back(min_eig);
                ++rep.total_points;
                if (!(min_eig > 0.0)) {
                    ++rec.unstable_count;
                    ++rep.total_unstable;
                    if (!rec.first_unstable_lambda) rec.first_unstable_lambda = lam;
                }
            } catch (const Error& e) {
                rep.errors.push_back(def.name + " at lambda=" + std::to_string(lam) + ": " +
                                     e.what());
            }
        }
        rep.paths.push_back(std::move(rec));
    }
    return rep;
}

namespace {

Tensor2 stretch_from_log(const Tensor2& log_v) { return sym_exp(log_v); }

Tensor2 model_tau_of_logV(const MaterialModel& model, const Tensor2& log_v) {
    return model.kirchhoff(make_state(stretch_from_log(log_v)));
}

Tensor2 model_sigma_of_logV(const MaterialModel& model, const Tensor2& log_v) {
    const DeformationState st = make_state(stretch_from_log(log_v));
    return (1.0 / st.J) * model.kirchhoff(st);
}

Tensor2 random_log_stretch(Sampler& rng, bool traceless) {
    const Tensor2 q = rng.rotation();
    double u[3];
    for (double& v : u) v = rng.uniform(-1.5, 1.5);
    if (traceless) {
        const double mean = (u[0] + u[1] + u[2]) / 3.0;
        for (double& v : u) v -= mean;
    }
    return q * Tensor2::diag(u[0], u[1], u[2]) * transpose(q);
}

} // namespace

CheckReport hill_check(const MaterialModel& model, int n_samples, std::uint64_t seed) {
    CheckReport r;
    r.name = "hill";
    r.seed = seed;
    Sampler rng(seed);
    double min_quotient = std::numeric_limits<double>::infinity();
    int tested = 0, skipped = 0;
    ordered_json violation;

    for (int i = 0; i < n_samples; ++i) {
        const Tensor2 x1 = random_log_stretch(rng, model.is_incompressible());
        const Tensor2 x2 = random_log_stretch(rng, model.is_incompressible());
        const Tensor2 dx = x1 - x2;
        const double nn = inner(dx, dx);
        if (nn < 1e-16) { // degenerate pair, excluded by contract
            ++skipped;
            continue;
        }
        const Tensor2 dtau = model_tau_of_logV(model, x1) - model_tau_of_logV(model, x2);
        const double q = inner(dtau, dx) / nn;
        ++tested;
        if (q < min_quotient) min_quotient = q;
        if (q <= 0.0 && violation.is_null()) {
            violation["logV1"] = {x1(0, 0), x1(0, 1), x1(0, 2), x1(1, 0), x1(1, 1),
                                  x1(1, 2), x1(2, 0), x1(2, 1), x1(2, 2)};
            violation["logV2"] = {x2(0, 0), x2(0, 1), x2(0, 2), x2(1, 0), x2(1, 1),
                                  x2(1, 2), x2(2, 0), x2(2, 1), x2(2, 2)};
            violation["quotient"] = q;
        }
    }
    r.details["samples"] = n_samples;
    r.details["tested"] = tested;
    r.details["skipped_degenerate"] = skipped;
    r.details["min_quotient"] = min_quotient;
    if (!violation.is_null()) r.details["violating_pair"] = violation;
    r.passed = min_quotient > 0.0;
    if (!r.passed) r.failures.push_back("monotonicity violated, min quotient " +
                                        std::to_string(min_quotient));
    return r;
}

namespace {

const std::array<Tensor2, 5>& traceless_sym_basis() {
    static const std::array<Tensor2, 5> basis = [] {
        std::array<Tensor2, 5> b{};
        const double r2 = 1.0 / std::sqrt(2.0), r6 = 1.0 / std::sqrt(6.0);
        b[0] = Tensor2::diag(r2, -r2, 0.0);
        b[1] = Tensor2::diag(r6, r6, -2.0 * r6);
        b[2](0, 1) = b[2](1, 0) = r2;
        b[3](1, 2) = b[3](2, 1) = r2;
        b[4](2, 0) = b[4](0, 2) = r2;
        return b;
    }();
    return basis;
}

} // namespace

CheckReport tsts_check(const MaterialModel& model, const DeformationState& state) {
    CheckReport r;
    r.name = "tsts";
    const bool traceless = model.is_incompressible();
    const Tensor2 x0 = state.log_V;
    const double h = 1e-6 * (1.0 + norm(x0));

    // FD derivative of sigma_hat(log V), explicitly symmetrised
    const int dim = traceless ? 5 : 6;
    double a[36] = {0};
    for (int col = 0; col < dim; ++col) {
        const Tensor2 dir = traceless ? traceless_sym_basis()[col] : sym_basis()[col];
        const Tensor2 plus = model_sigma_of_logV(model, x0 + h * dir);
        const Tensor2 minus = model_sigma_of_logV(model, x0 - h * dir);
        const Tensor2 column = (1.0 / (2.0 * h)) * (plus - minus);
        for (int row = 0; row < dim; ++row) {
            const Tensor2 probe = traceless ? traceless_sym_basis()[row] : sym_basis()[row];
            a[row * dim + col] = inner(probe, column);
        }
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const double m = 0.5 * (a[i * dim + j] + a[j * dim + i]);
            a[i * dim + j] = a[j * dim + i] = m;
        }
    double values[6], vecs[36];
    jacobi_eigen(dim, a, values, vecs);
    const double min_eig_fd = values[0];
    const bool tsts_pass = min_eig_fd > 0.0;

    // positivity of sym H^ZJ(sigma) through the tangent route
    const Tensor4 c = spatial_tangent(state, model.material_tangent(state));
    const Tensor2 sigma = (1.0 / state.J) * model.kirchhoff(state);
    const Tensor4 hzj = hzj_sigma_absolute(c, sigma);
    const Mandel6 m = to_mandel(hzj, 1e-6);
    const double min_eig_sym = traceless ? min_eig_traceless(m) : eig_sym6(m, 1e-6).values[0];
    const bool sym_pass = min_eig_sym > 0.0;

    r.details["min_eig_dsigma_dlogV"] = min_eig_fd;
    r.details["min_eig_sym_hzj_sigma"] = min_eig_sym;
    r.details["mandel_skew_norm"] = norm(skew_part(m));
    r.details["tsts_positive"] = tsts_pass;
    r.details["sym_hzj_positive"] = sym_pass;
    r.details["traceless_subspace"] = traceless;
    r.passed = tsts_pass == sym_pass;
    if (!r.passed)
        r.failures.push_back("TSTS verdict and sym H^ZJ(sigma) verdict disagree");
    return r;
}

CheckReport det_scan(const MaterialModel& model, const MotionPath& path, int n_points) {
    CheckReport r;
    r.name = "det_scan";
    std::vector<double> dets;
    std::vector<double> ts;
    int crossings = 0;
    int counterexamples = 0;

    for (int i = 0; i < n_points; ++i) {
        const double t = path.t0 + (path.t1 - path.t0) * i / std::max(1, n_points - 1);
        const DeformationState state = make_state(path.F_at(t));
        const Tensor4 c = spatial_tangent(state, model.material_tangent(state));
        const Tensor2 sigma = (1.0 / state.J) * model.kirchhoff(state);
        const Tensor4 hzj = hzj_sigma_absolute(c, sigma);
        const Mandel6 m = to_mandel(hzj, 1e-6);
        const double d = det6(m);
        const double min_eig_sym = eig_sym6(m, 1e-6).values[0];
        if (!dets.empty() && std::signbit(d) != std::signbit(dets.back())) ++crossings;
        // Bendixson: positive definite symmetric part forces det > 0
        if (min_eig_sym > 0.0 && !(d > 0.0)) ++counterexamples;
        ts.push_back(t);
        dets.push_back(d);
    }

    r.details["path"] = path.label;
    r.details["points"] = n_points;
    r.details["t"] = ts;
    r.details["det"] = dets;
    r.details["sign_crossings"] = crossings;
    r.details["bendixson_counterexamples"] = counterexamples;
    r.passed = counterexamples == 0;
    if (!r.passed) r.failures.push_back("TSTS passed at a point with det <= 0");
    return r;
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "euler") return Scheme::Euler;
    if (name == "rk4") return Scheme::RK4;
    throw ConfigError("unknown scheme '" + name + "'");
}

const char* scheme_name(Scheme s) { return s == Scheme::Euler ? "euler" : "rk4"; }

IntegrationReport integrate_hypoelastic(const MaterialModel& model, const MotionPath& path,
                                        Scheme scheme, int n_steps) {
    if (n_steps < 1) throw ConfigError("integrate_hypoelastic: need n_steps >= 1");
    IntegrationReport rep;
    rep.scheme = scheme_name(scheme);
    rep.steps = n_steps;

    auto rhs = [&](double t, const Tensor2& tau) {
        DeformationState state;
        try {
            state = make_state(path.F_at(t));
        } catch (const NonInvertible& e) {
            throw StepRejected(std::string("integrate_hypoelastic: ") + e.what());
        }
        const VelocitySplit vs = velocity_split(path.L_at(t));
        const Tensor4 h = model.hzj_tau(state);
        return apply4(h, vs.D) + vs.W * tau - tau * vs.W;
    };

    const double dt = (path.t1 - path.t0) / n_steps;
    double t = path.t0;
    Tensor2 tau = model.kirchhoff(make_state(path.F_at(t)));
    rep.t.push_back(t);
    rep.tau_numeric.push_back(tau);

    for (int i = 0; i < n_steps; ++i) {
        if (scheme == Scheme::Euler) {
            tau += dt * rhs(t, tau);
        } else {
            const Tensor2 k1 = rhs(t, tau);
            const Tensor2 k2 = rhs(t + 0.5 * dt, tau + (0.5 * dt) * k1);
            const Tensor2 k3 = rhs(t + 0.5 * dt, tau + (0.5 * dt) * k2);
            const Tensor2 k4 = rhs(t + dt, tau + dt * k3);
            tau += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        t = path.t0 + (i + 1) * dt;
        rep.t.push_back(t);
        rep.tau_numeric.push_back(tau);

        const Tensor2 exact = model.kirchhoff(make_state(path.F_at(t)));
        const double drift = norm(tau - exact) / std::max(1.0, norm(exact));
        rep.max_drift = std::max(rep.max_drift, drift);
        if (i + 1 == n_steps) rep.terminal_rel_error = drift;
    }
    return rep;
}

CheckReport rate_identity_audit(const MaterialModel& model, const MotionPath& path,
                                int t_samples, double fd_step) {
    CheckReport r;
    r.name = "rate_identity_audit";

    auto sigma_at = [&](double t) {
        const DeformationState st = make_state(path.F_at(t));
        return (1.0 / st.J) * model.kirchhoff(st);
    };
    auto tau_at = [&](double t) { return model.kirchhoff(make_state(path.F_at(t))); };

    auto residuals_at = [&](double t, double h, double& res_a, double& res_b) {
        const DeformationState state = make_state(path.F_at(t));
        const Tensor2 L = path.L_at(t);
        const Tensor2 sigma = sigma_at(t);
        const Tensor2 tau = tau_at(t);
        const Tensor2 sigma_dot = (1.0 / (2.0 * h)) * (sigma_at(t + h) - sigma_at(t - h));
        const Tensor2 tau_dot = (1.0 / (2.0 * h)) * (tau_at(t + h) - tau_at(t - h));

        const Tensor2 zj_tau = rate_value(RateKind::ZarembaJaumann, {tau, tau_dot, L, {}});
        const Tensor2 bh_sigma =
            rate_value(RateKind::BiezenoHencky, {sigma, sigma_dot, L, {}});
        res_a = rel_diff(zj_tau, state.J * bh_sigma);

        const Tensor2 tr_sigma = rate_value(RateKind::Truesdell, {sigma, sigma_dot, L, {}});
        const Tensor2 lie_tau = rate_value(RateKind::LieKirchhoff, {tau, tau_dot, L, {}});
        res_b = rel_diff(tr_sigma, (1.0 / state.J) * lie_tau);
    };

    const double margin = 4.0 * fd_step;
    const double a0 = path.t0 + margin, a1 = path.t1 - margin;
    double max_a = 0.0, max_b = 0.0, max_c = 0.0;
    double max_a_half = 0.0, max_b_half = 0.0, max_c_half = 0.0;

    for (int i = 0; i < t_samples; ++i) {
        const double t = a0 + (a1 - a0) * i / std::max(1, t_samples - 1);
        double ra, rb;
        residuals_at(t, fd_step, ra, rb);
        max_a = std::max(max_a, ra);
        max_b = std::max(max_b, rb);
        residuals_at(t, 0.5 * fd_step, ra, rb);
        max_a_half = std::max(max_a_half, ra);
        max_b_half = std::max(max_b_half, rb);

        // tangent contraction against the corotational oracle
        const DeformationState state = make_state(path.F_at(t));
        const VelocitySplit vs = velocity_split(path.L_at(t));
        const Tensor2 from_tangent = apply4(model.hzj_tau(state), vs.D);
        max_c = std::max(
            max_c, rel_diff(from_tangent, rotated_frame_zj_tau(path, t, fd_step, model)));
        max_c_half = std::max(max_c_half, rel_diff(from_tangent, rotated_frame_zj_tau(
                                                                     path, t, 0.5 * fd_step,
                                                                     model)));
    }

    // on isochoric paths (J = 1, tr D = 0) identities (a) and (b) sit at the
    // round-off floor, so the truncation-order evidence falls back to (c)
    const bool ab_truncation_limited = std::max(max_a, max_b) > 1e-12;
    const double drop_ab = std::max(max_a_half, max_b_half) > 0.0
                               ? std::max(max_a, max_b) / std::max(max_a_half, max_b_half)
                               : std::numeric_limits<double>::infinity();
    const double drop_c = max_c_half > 0.0 ? max_c / max_c_half
                                           : std::numeric_limits<double>::infinity();

    r.details["samples"] = t_samples;
    r.details["fd_step"] = fd_step;
    r.details["max_residual_zj_vs_biezeno_hencky"] = max_a;
    r.details["max_residual_truesdell_vs_lie"] = max_b;
    r.details["max_residual_tangent_vs_rotated_frame"] = max_c;
    r.details["max_residual_half_step"] = std::max(max_a_half, max_b_half);
    r.details["ab_truncation_limited"] = ab_truncation_limited;
    r.details["residual_drop_on_halving"] = drop_ab;
    r.details["oracle_drop_on_halving"] = drop_c;

    r.passed = max_a <= 1e-6 && max_b <= 1e-6 && max_c <= 1e-5;
    if (max_a > 1e-6) r.failures.push_back("identity D^ZJ[tau] = J D^BH[sigma] failed");
    if (max_b > 1e-6) r.failures.push_back("identity D^TR[sigma] = Lie[tau]/J failed");
    if (max_c > 1e-5) r.failures.push_back("tangent contraction vs rotated frame failed");
    return r;
}

} // namespace corotan
