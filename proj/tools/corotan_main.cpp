#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "corotan/errors.hpp"
#include "corotan/json_io.hpp"
#include "corotan/rates.hpp"
#include "corotan/sampling.hpp"
#include "corotan/tangents.hpp"
#include "corotan/uniaxial.hpp"
#include "corotan/verify.hpp"

namespace {

using corotan::ordered_json;

struct OutputOptions {
    std::string path;   // empty -> stdout
    std::string format; // per-command default
};

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw corotan::ConfigError("cannot open output file '" + out.path + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
}

void emit_json(const OutputOptions& out, const ordered_json& j) { emit(out, j.dump(2)); }

std::shared_ptr<corotan::MaterialModel> load_model(const std::string& spec) {
    if (spec.empty()) throw corotan::ConfigError("--model is required");
    if (spec == "hencky" || spec == "svk")
        return corotan::make_model(spec, 1.0, 1.0);
    if (spec == "hencky_incompressible") return corotan::make_model(spec, 1.0, 0.0);
    std::string text;
    if (!spec.empty() && spec.front() == '{') {
        text = spec;
    } else {
        std::ifstream f(spec);
        if (!f) throw corotan::ConfigError("cannot read model file '" + spec + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return corotan::model_from_json(ordered_json::parse(text));
}

struct Range {
    double lo = 0.1;
    double hi = 10.0;
    double step = 0.01;
    bool has_step = false;
};

Range parse_range(const std::string& text) {
    Range r;
    std::stringstream ss(text);
    std::string tok;
    std::vector<double> vals;
    while (std::getline(ss, tok, ':')) vals.push_back(std::stod(tok));
    if (vals.size() < 2 || vals.size() > 3)
        throw corotan::ConfigError("--range expects lo:hi or lo:hi:step");
    r.lo = vals[0];
    r.hi = vals[1];
    if (vals.size() == 3) {
        r.step = vals[2];
        r.has_step = true;
    }
    return r;
}

struct Tolerances {
    double analytic = 1e-11;
    double fd = 1e-6;
    double symmetry = 1e-9;
    double bridge = 1e-12;
    double exact = 1e-14;
};

ordered_json run_config(const std::string& command, const ordered_json& fields,
                        std::uint64_t seed) {
    ordered_json j;
    j["schema"] = std::string("corotan/") + corotan::kSchemaVersion + "/run_config";
    j["command"] = command;
    for (const auto& item : fields.items()) j[item.key()] = item.value();
    j["seed"] = seed;
    return j;
}

int cmd_tangent(const std::string& model_spec, const std::string& f_literal,
                const Tolerances& tol, const OutputOptions& out, std::uint64_t seed) {
    const auto model = load_model(model_spec);
    const corotan::Tensor2 F = corotan::parse_matrix_literal(f_literal);
    const corotan::DeformationState state = corotan::make_state(F);
    const corotan::TangentSet set = corotan::build_tangent_set(*model, state);

    ordered_json failures = ordered_json::array();
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };
    require(set.res_absolute_vs_lagrangian <= tol.analytic,
            "absolute vs lagrangian residual above tolerance");
    if (set.H_zj_tau_direct) {
        require(set.res_absolute_vs_direct <= tol.fd,
                "absolute vs direct residual above tolerance");
        require(set.res_lagrangian_vs_direct <= tol.fd,
                "lagrangian vs direct residual above tolerance");
    }
    require(set.res_sigma_routes <= tol.analytic, "sigma dual-route residual above tolerance");
    require(set.res_bridge <= tol.bridge, "bridge identity residual above tolerance");
    require(set.res_wang_li <= tol.exact, "wang_li equality residual above tolerance");
    require(corotan::symmetry_flags(set.H_zj_tau_absolute, tol.symmetry).major,
            "H_zj_tau_absolute lost major symmetry");

    ordered_json j = corotan::tangent_set_to_json(set);
    j["config"] = run_config("tangent",
                             {{"model", corotan::model_to_json(*model)},
                              {"F", corotan::tensor2_to_json(F)}},
                             seed);
    j["failures"] = failures;

    if (out.format == "csv")
        emit(out, corotan::tangent_set_csv(set));
    else
        emit_json(out, j);
    return failures.empty() ? 0 : 1;
}

int cmd_sweep(const std::string& model_spec, const Range& range, const OutputOptions& out,
              std::uint64_t seed) {
    const auto model = load_model(model_spec);
    corotan::SweepConfig cfg;
    cfg.lam_min = range.lo;
    cfg.lam_max = range.hi;
    cfg.step = range.step;
    const corotan::SweepReport rep = corotan::stability_sweep(*model, cfg);

    if (out.format == "csv") {
        emit(out, corotan::sweep_csv(rep));
    } else {
        ordered_json j = corotan::sweep_to_json(rep);
        j["config"] = run_config(
            "sweep",
            {{"model", corotan::model_to_json(*model)},
             {"grid", {{"min", cfg.lam_min}, {"max", cfg.lam_max}, {"step", cfg.step}}}},
            seed);
        emit_json(out, j);
    }
    std::cerr << (rep.all_stable() ? "stable: all 6 paths"
                                   : "unstable points: " + std::to_string(rep.total_unstable))
              << "\n";
    return rep.all_stable() ? 0 : 1;
}

ordered_json rate_values_at(const corotan::MaterialModel& model,
                            const corotan::MotionPath& path,
                            const std::string& rate_list) {
    // evaluates the named rates of the Cauchy stress at the path midpoint,
    // with FD material derivatives and the FD polar spin for green_naghdi
    const double t = 0.5 * (path.t0 + path.t1);
    const double h = 1e-6;
    auto sigma_at = [&](double s) {
        const corotan::DeformationState st = corotan::make_state(path.F_at(s));
        return (1.0 / st.J) * model.kirchhoff(st);
    };
    corotan::RateInput in{sigma_at(t),
                          (1.0 / (2.0 * h)) * (sigma_at(t + h) - sigma_at(t - h)),
                          path.L_at(t),
                          corotan::polar_spin_fd(path, t)};
    ordered_json values;
    std::stringstream ss(rate_list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const corotan::RateKind kind = corotan::rate_from_name(name);
        values[name] = corotan::tensor2_to_json(corotan::rate_value(kind, in));
    }
    return values;
}

int cmd_check(const std::string& model_spec, const std::string& f_literal,
              const std::string& path_name, const Range& range, int samples,
              const std::string& rate_list, const OutputOptions& out, std::uint64_t seed) {
    const auto model = load_model(model_spec);
    const corotan::Tensor2 F = corotan::parse_matrix_literal(f_literal);
    const corotan::DeformationState state = corotan::make_state(F);

    const corotan::CheckReport sym = corotan::symmetry_report(
        model->hzj_tau(state), 1e-9, corotan::SymmetryExpectation{true, true, true});
    const corotan::CheckReport hill = corotan::hill_check(*model, samples, seed);
    const corotan::CheckReport tsts = corotan::tsts_check(*model, state);
    const corotan::MotionPath path = corotan::make_path(path_name, range.lo, range.hi);
    const corotan::CheckReport det = corotan::det_scan(*model, path, 50);
    const corotan::CheckReport audit = corotan::rate_identity_audit(*model, path, 25);

    ordered_json j;
    j["schema"] = std::string("corotan/") + corotan::kSchemaVersion + "/check_bundle";
    j["config"] = run_config("check",
                             {{"model", corotan::model_to_json(*model)},
                              {"F", corotan::tensor2_to_json(F)},
                              {"path", path_name},
                              {"range", {{"lo", range.lo}, {"hi", range.hi}}},
                              {"samples", samples}},
                             seed);
    ordered_json failures = ordered_json::array();
    bool all = true;
    for (const auto* r : {&sym, &hill, &tsts, &det, &audit}) {
        j[r->name] = corotan::check_to_json(*r);
        all = all && r->passed;
        for (const auto& f : r->failures) failures.push_back(r->name + ": " + f);
    }
    if (!rate_list.empty()) j["rate_values"] = rate_values_at(*model, path, rate_list);
    j["passed"] = all;
    j["failures"] = failures;
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "check,passed,failures\n";
        for (const auto* r : {&sym, &hill, &tsts, &det, &audit})
            csv << r->name << "," << (r->passed ? 1 : 0) << "," << r->failures.size() << "\n";
        emit(out, csv.str());
    } else {
        emit_json(out, j);
    }
    return all ? 0 : 1;
}

int cmd_simulate(const std::string& model_spec, const std::string& path_name,
                 const Range& range, const std::string& scheme, int steps, double max_error,
                 const OutputOptions& out, std::uint64_t seed) {
    const auto model = load_model(model_spec);
    const corotan::MotionPath path = corotan::make_path(path_name, range.lo, range.hi);
    const corotan::IntegrationReport rep = corotan::integrate_hypoelastic(
        *model, path, corotan::scheme_from_name(scheme), steps);

    ordered_json j = corotan::integration_to_json(rep);
    j["config"] = run_config("simulate",
                             {{"model", corotan::model_to_json(*model)},
                              {"path", path_name},
                              {"range", {{"lo", range.lo}, {"hi", range.hi}}},
                              {"scheme", scheme},
                              {"steps", steps}},
                             seed);
    ordered_json failures = ordered_json::array();
    if (max_error > 0.0 && !(rep.terminal_rel_error <= max_error))
        failures.push_back("terminal error above --max-error");
    j["failures"] = failures;
    if (out.format == "csv")
        emit(out, corotan::integration_csv(rep));
    else
        emit_json(out, j);
    std::cerr << "terminal relative error: " << rep.terminal_rel_error << "\n";
    return failures.empty() ? 0 : 1;
}

int cmd_uniaxial(const std::string& law_name, const std::string& model_spec,
                 const Range& range, const OutputOptions& out, std::uint64_t seed) {
    corotan::ScalarLaw law;
    std::shared_ptr<corotan::MaterialModel> model; // keeps closures alive
    if (!model_spec.empty()) {
        model = load_model(model_spec);
        law = corotan::ScalarLaw::from_model(*model);
    } else if (law_name == "hencky") {
        law = corotan::ScalarLaw::hencky();
    } else if (law_name == "svk") {
        law = corotan::ScalarLaw::svk();
    } else {
        throw corotan::ConfigError("--law must be hencky or svk, or pass --model");
    }
    const corotan::Scan1D scan = corotan::monotonicity_scan(law, range.lo, range.hi, range.step);
    if (out.format == "json") {
        ordered_json j = corotan::scan_to_json(scan);
        j["config"] = run_config(
            "uniaxial",
            {{"law", law.label},
             {"range", {{"lo", range.lo}, {"hi", range.hi}, {"step", range.step}}}},
            seed);
        emit_json(out, j);
    } else {
        emit(out, corotan::scan_csv(scan, out.format == "gnuplot"));
    }
    return 0;
}

int cmd_products(const std::string& p_lit, const std::string& q_lit, const std::string& z_lit,
                 const OutputOptions& out) {
    const corotan::Tensor2 P = corotan::parse_matrix_literal(p_lit);
    const corotan::Tensor2 Q = corotan::parse_matrix_literal(q_lit);
    const corotan::Tensor2 Z =
        z_lit.empty() ? corotan::Tensor2::identity() : corotan::parse_matrix_literal(z_lit);

    ordered_json j;
    j["schema"] = std::string("corotan/") + corotan::kSchemaVersion + "/products";
    j["P"] = corotan::tensor2_to_json(P);
    j["Q"] = corotan::tensor2_to_json(Q);
    j["Z"] = corotan::tensor2_to_json(Z);

    auto block = [&](const char* name, const corotan::Tensor4& t,
                     const corotan::Tensor2& action) {
        ordered_json b;
        b["tensor"] = corotan::tensor4_to_json(t);
        const corotan::SymmetryFlags f = corotan::symmetry_flags(t, 1e-12);
        b["symmetry"] = {{"minor_left", f.minor_left},
                         {"minor_right", f.minor_right},
                         {"major", f.major}};
        b["action_on_Z"] = corotan::tensor2_to_json(corotan::apply4(t, Z));
        b["action_reference"] = corotan::tensor2_to_json(action);
        j[name] = b;
    };
    using corotan::transpose;
    block("outer", corotan::outer(P, Q), corotan::inner(Q, Z) * P);
    block("otimes_down", corotan::otimes_down(P, Q), P * Z * transpose(Q));
    block("otimes_up", corotan::otimes_up(P, Q), P * transpose(Z) * transpose(Q));
    block("otimes_downup", corotan::otimes_downup(P, Q), corotan::sym(P * Z * transpose(Q)));
    emit_json(out, j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangent stiffness tensors for hypoelastic rate formulations"};
    app.require_subcommand(1);

    std::string model_spec, f_literal = "diag(1,1,1)", path_name = "uniaxial";
    std::string law_name = "hencky", scheme = "rk4";
    std::string range_text, p_lit, q_lit, z_lit;
    int steps = 1000, samples = 10000;
    double max_error = -1.0;
    std::uint64_t seed = 20240901;
    OutputOptions out;
    Tolerances tol;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out.path, "output file (default: stdout)");
        sub->add_option("--format", out.format, "output format");
        sub->add_option("--seed", seed, "seed recorded in reports");
    };

    auto* tangent = app.add_subcommand("tangent", "all tangent constructions at one state");
    tangent->add_option("--model", model_spec, "model JSON file, inline JSON, or name")
        ->required();
    tangent->add_option("--F", f_literal, "deformation gradient literal")->required();
    tangent->add_option("--tol.analytic", tol.analytic, "analytic cross-check tolerance");
    tangent->add_option("--tol.fd", tol.fd, "FD-limited cross-check tolerance");
    tangent->add_option("--tol.symmetry", tol.symmetry, "major-symmetry tolerance");
    tangent->add_option("--tol.bridge", tol.bridge, "bridge identity tolerance");
    tangent->add_option("--tol.exact", tol.exact, "same-algebra equality tolerance");
    add_common(tangent);

    auto* sweep = app.add_subcommand("sweep", "six-path stability sweep");
    sweep->add_option("--model", model_spec)->required();
    std::string sweep_range = "0.1:10:0.01";
    sweep->add_option("--range", sweep_range, "lambda grid lo:hi[:step]");
    double step_override = -1.0;
    sweep->add_option("--step", step_override, "grid step (overrides --range step)");
    add_common(sweep);

    auto* check = app.add_subcommand("check", "symmetry, hill, tsts, det and rate audit");
    check->add_option("--model", model_spec)->required();
    check->add_option("--F", f_literal, "state for symmetry/tsts checks");
    check->add_option("--path", path_name, "path for det scan and rate audit");
    std::string check_range = "0.5:2";
    check->add_option("--range", check_range, "path parameter range lo:hi");
    check->add_option("--samples", samples, "hill sample pairs");
    std::string rate_list = "zj,truesdell,oldroyd,cotter_rivlin,biezeno_hencky,green_naghdi,lie";
    check->add_option("--rates", rate_list,
                      "comma-separated rate names evaluated at the path midpoint");
    add_common(check);

    auto* simulate = app.add_subcommand("simulate", "integrate the rate equation");
    simulate->add_option("--model", model_spec)->required();
    simulate->add_option("--path", path_name, "uniaxial|equibiaxial|planar|shear|rigid_rotation");
    std::string sim_range = "1:2";
    simulate->add_option("--range", sim_range, "path parameter range lo:hi");
    simulate->add_option("--scheme", scheme, "euler|rk4");
    simulate->add_option("--steps", steps, "number of steps");
    simulate->add_option("--max-error", max_error, "fail when terminal error exceeds this");
    add_common(simulate);

    auto* uni = app.add_subcommand("uniaxial", "1D stress and stiffness scan");
    uni->add_option("--law", law_name, "hencky|svk");
    uni->add_option("--model", model_spec, "restrict a 3D model instead of --law");
    std::string uni_range = "0.1:10:0.01";
    uni->add_option("--range", uni_range, "lo:hi:step");
    add_common(uni);

    auto* products = app.add_subcommand("products", "special tensor product pretty-printer");
    products->add_option("--P", p_lit)->required();
    products->add_option("--Q", q_lit)->required();
    products->add_option("--Z", z_lit, "probe argument (default: identity)");
    add_common(products);

    CLI11_PARSE(app, argc, argv);

    try {
        if (out.format.empty()) out.format = uni->parsed() ? "csv" : "json";
        if (tangent->parsed()) return cmd_tangent(model_spec, f_literal, tol, out, seed);
        if (sweep->parsed()) {
            Range r = parse_range(sweep_range);
            if (step_override > 0.0) r.step = step_override;
            return cmd_sweep(model_spec, r, out, seed);
        }
        if (check->parsed())
            return cmd_check(model_spec, f_literal, path_name, parse_range(check_range),
                             samples, rate_list, out, seed);
        if (simulate->parsed())
            return cmd_simulate(model_spec, path_name, parse_range(sim_range), scheme, steps,
                                max_error, out, seed);
        if (uni->parsed()) return cmd_uniaxial(law_name, model_spec, parse_range(uni_range), out, seed);
        if (products->parsed()) return cmd_products(p_lit, q_lit, z_lit, out);
    } catch (const corotan::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const corotan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
