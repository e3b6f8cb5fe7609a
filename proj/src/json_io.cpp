#include "corotan/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "corotan/errors.hpp"

namespace corotan {

namespace {

std::string schema_tag(const char* kind) {
    return std::string("corotan/") + kSchemaVersion + "/" + kind;
}

} // namespace

ordered_json tensor2_to_json(const Tensor2& t) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 3; ++j) row.push_back(t(i, j));
        rows.push_back(row);
    }
    return rows;
}

Tensor2 tensor2_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 3) throw ConfigError("tensor2: expected 3 rows");
    Tensor2 t;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3)
            throw ConfigError("tensor2: row " + std::to_string(i) + " must have 3 entries");
        for (int k = 0; k < 3; ++k) t(i, k) = j[i][k].get<double>();
    }
    return t;
}

ordered_json tensor4_to_json(const Tensor4& t) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        ordered_json ji = ordered_json::array();
        for (int j = 0; j < 3; ++j) {
            ordered_json jj = ordered_json::array();
            for (int k = 0; k < 3; ++k) {
                ordered_json jk = ordered_json::array();
                for (int l = 0; l < 3; ++l) jk.push_back(t(i, j, k, l));
                jj.push_back(jk);
            }
            ji.push_back(jj);
        }
        out.push_back(ji);
    }
    return out;
}

Tensor4 tensor4_from_json(const ordered_json& j) {
    Tensor4 t;
    if (!j.is_array() || j.size() != 3) throw ConfigError("tensor4: expected 3x3x3x3 array");
    for (int i = 0; i < 3; ++i)
        for (int jj = 0; jj < 3; ++jj)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) t(i, jj, k, l) = j[i][jj][k][l].get<double>();
    return t;
}

ordered_json mandel_to_json(const Mandel6& m) {
    ordered_json out;
    out["convention"] = kMandelConvention;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 6; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 6; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    out["matrix"] = rows;
    return out;
}

Mandel6 mandel_from_json(const ordered_json& j) {
    reject_unknown_keys(j, {"convention", "matrix"}, "mandel");
    if (j.value("convention", "") != kMandelConvention)
        throw ConfigError("mandel: unknown convention tag");
    Mandel6 m;
    const auto& rows = j.at("matrix");
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) m(i, k) = rows[i][k].get<double>();
    return m;
}

ordered_json state_to_json(const DeformationState& st) {
    ordered_json j;
    j["schema"] = schema_tag("deformation_state");
    j["derived_from_F"] = true;
    j["F"] = tensor2_to_json(st.F);
    j["J"] = st.J;
    j["C"] = tensor2_to_json(st.C);
    j["B"] = tensor2_to_json(st.B);
    j["U"] = tensor2_to_json(st.U);
    j["V"] = tensor2_to_json(st.V);
    j["R"] = tensor2_to_json(st.R);
    j["log_V"] = tensor2_to_json(st.log_V);
    j["log_B"] = tensor2_to_json(st.log_B);
    return j;
}

ordered_json model_to_json(const MaterialModel& model) {
    ordered_json j;
    j["model"] = model.name();
    j["mu"] = model.params().mu;
    if (!model.is_incompressible()) j["lambda"] = model.params().lambda;
    return j;
}

std::shared_ptr<MaterialModel> model_from_json(const ordered_json& j) {
    reject_unknown_keys(j, {"model", "mu", "lambda"}, "model");
    if (!j.contains("model")) throw ConfigError("model: missing \"model\" key");
    const std::string name = j.at("model").get<std::string>();
    const double mu = j.value("mu", 1.0);
    const double lambda = j.value("lambda", 1.0);
    if (name == "hencky_incompressible" && j.contains("lambda"))
        throw ConfigError("model: hencky_incompressible takes no lambda");
    return make_model(name, mu, lambda);
}

MotionPath path_from_json(const ordered_json& j) {
    reject_unknown_keys(j, {"path", "start", "end", "F0"}, "path");
    if (!j.contains("path")) throw ConfigError("path: missing \"path\" key");
    const std::string name = j.at("path").get<std::string>();
    if (name == "rigid_rotation" && j.contains("F0"))
        return rigid_rotation_path(tensor2_from_json(j.at("F0")));
    const double p0 = j.value("start", name == "shear" ? 0.0 : 1.0);
    const double p1 = j.value("end", name == "shear" ? 1.0 : 2.0);
    return make_path(name, p0, p1);
}

namespace {

void put_block(ordered_json& j, const char* key, const Tensor4& t) {
    ordered_json block;
    block["tensor"] = tensor4_to_json(t);
    const SymmetryFlags f = symmetry_flags(t, 1e-9);
    block["symmetry"] = {{"minor_left", f.minor_left},
                         {"minor_right", f.minor_right},
                         {"major", f.major},
                         {"major_residual", f.major_residual}};
    if (f.minor_left && f.minor_right) block["mandel"] = mandel_to_json(to_mandel(t, 1e-6));
    j[key] = block;
}

void csv_block(std::ostringstream& out, const char* key, const Tensor4& t) {
    out << "# " << key << " (Mandel " << kMandelConvention << ")\n";
    const Mandel6 m = to_mandel(t, 1e-6);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) out << (j ? "," : "") << m(i, j);
        out << "\n";
    }
}

} // namespace

ordered_json tangent_set_to_json(const TangentSet& set) {
    ordered_json j;
    j["schema"] = schema_tag("tangent_set");
    j["J"] = set.J;
    j["tau"] = tensor2_to_json(set.tau);
    j["sigma"] = tensor2_to_json(set.sigma);
    put_block(j, "H_zj_tau_absolute", set.H_zj_tau_absolute);
    put_block(j, "H_zj_tau_lagrangian", set.H_zj_tau_lagrangian);
    if (set.H_zj_tau_direct) put_block(j, "H_zj_tau_direct", *set.H_zj_tau_direct);
    put_block(j, "H_zj_sigma_absolute", set.H_zj_sigma_absolute);
    put_block(j, "H_zj_sigma_from_tau", set.H_zj_sigma_from_tau);
    put_block(j, "D_abaqus", set.D_abaqus);
    j["residuals"] = {{"absolute_vs_lagrangian", set.res_absolute_vs_lagrangian},
                      {"absolute_vs_direct", set.res_absolute_vs_direct},
                      {"lagrangian_vs_direct", set.res_lagrangian_vs_direct},
                      {"sigma_routes", set.res_sigma_routes},
                      {"bridge", set.res_bridge},
                      {"wang_li", set.res_wang_li}};
    return j;
}

std::string tangent_set_csv(const TangentSet& set) {
    std::ostringstream out;
    out.precision(17);
    out << "# J," << set.J << "\n";
    csv_block(out, "H_zj_tau_absolute", set.H_zj_tau_absolute);
    csv_block(out, "H_zj_tau_lagrangian", set.H_zj_tau_lagrangian);
    if (set.H_zj_tau_direct) csv_block(out, "H_zj_tau_direct", *set.H_zj_tau_direct);
    csv_block(out, "H_zj_sigma_absolute", set.H_zj_sigma_absolute);
    csv_block(out, "D_abaqus", set.D_abaqus);
    return out.str();
}

ordered_json check_to_json(const CheckReport& r) {
    ordered_json j;
    j["schema"] = schema_tag("check_report");
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["seed"] = r.seed;
    j["details"] = r.details;
    j["failures"] = r.failures;
    return j;
}

ordered_json sweep_to_json(const SweepReport& r) {
    ordered_json j;
    j["schema"] = schema_tag("sweep_report");
    j["model"] = r.model;
    j["incompressible"] = r.incompressible;
    j["header"] = r.header;
    j["grid"] = {{"min", r.config.lam_min}, {"max", r.config.lam_max}, {"step", r.config.step}};
    j["total_points"] = r.total_points;
    j["total_unstable"] = r.total_unstable;
    j["all_stable"] = r.all_stable();
    ordered_json paths = ordered_json::array();
    for (const auto& p : r.paths) {
        ordered_json pj;
        pj["path"] = p.path;
        pj["unstable_count"] = p.unstable_count;
        if (p.first_unstable_lambda)
            pj["first_unstable_lambda"] = *p.first_unstable_lambda;
        else
            pj["first_unstable_lambda"] = nullptr;
        double min_eig = std::numeric_limits<double>::infinity();
        for (double e : p.min_eig) min_eig = std::min(min_eig, e);
        pj["min_eig_over_grid"] = min_eig;
        paths.push_back(pj);
    }
    j["paths"] = paths;
    j["errors"] = r.errors;
    return j;
}

std::string sweep_csv(const SweepReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "# " << r.header << "\n";
    out << "path,lambda,J,min_eig,stable\n";
    for (const auto& p : r.paths)
        for (size_t i = 0; i < p.lam.size(); ++i)
            out << p.path << "," << p.lam[i] << "," << p.J[i] << "," << p.min_eig[i] << ","
                << (p.min_eig[i] > 0.0 ? 1 : 0) << "\n";
    return out.str();
}

ordered_json integration_to_json(const IntegrationReport& r) {
    ordered_json j;
    j["schema"] = schema_tag("integration_report");
    j["scheme"] = r.scheme;
    j["steps"] = r.steps;
    j["terminal_rel_error"] = r.terminal_rel_error;
    j["max_drift"] = r.max_drift;
    ordered_json traj = ordered_json::array();
    for (size_t i = 0; i < r.t.size(); ++i) {
        ordered_json rec;
        rec["t"] = r.t[i];
        rec["tau"] = tensor2_to_json(r.tau_numeric[i]);
        traj.push_back(rec);
    }
    j["trajectory"] = traj;
    return j;
}

std::string integration_csv(const IntegrationReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "# scheme " << r.scheme << ", steps " << r.steps << ", terminal_rel_error "
        << r.terminal_rel_error << "\n";
    out << "t,tau11,tau12,tau13,tau21,tau22,tau23,tau31,tau32,tau33\n";
    for (size_t i = 0; i < r.t.size(); ++i) {
        out << r.t[i];
        for (double v : r.tau_numeric[i].a) out << "," << v;
        out << "\n";
    }
    return out.str();
}

ordered_json scan_to_json(const Scan1D& scan) {
    ordered_json j;
    j["schema"] = schema_tag("scan1d");
    j["law"] = scan.label;
    j["lambda"] = scan.lam;
    j["sigma"] = scan.sigma;
    j["tau"] = scan.tau;
    j["W_hat"] = scan.W_hat;
    j["H"] = scan.H;
    j["H_tau"] = scan.H_tau;
    j["sigma_first_nonmonotone"] =
        scan.sigma_first_nonmonotone ? ordered_json(*scan.sigma_first_nonmonotone)
                                     : ordered_json(nullptr);
    j["tau_first_nonmonotone"] = scan.tau_first_nonmonotone
                                     ? ordered_json(*scan.tau_first_nonmonotone)
                                     : ordered_json(nullptr);
    j["max_bridge_residual"] = scan.max_bridge_residual;
    return j;
}

namespace {

double parse_scalar(std::string tok) {
    const auto strip = [](std::string& s) {
        s.erase(s.begin(), std::find_if(s.begin(), s.end(),
                                        [](unsigned char c) { return !std::isspace(c); }));
        s.erase(std::find_if(s.rbegin(), s.rend(),
                             [](unsigned char c) { return !std::isspace(c); })
                    .base(),
                s.end());
    };
    strip(tok);
    if (tok.empty()) throw ConfigError("matrix literal: empty entry");
    if (tok == "e") return M_E;
    if (tok == "-e") return -M_E;
    double value = 0.0;
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end)
        throw ConfigError("matrix literal: cannot parse '" + tok + "'");
    return value;
}

} // namespace

Tensor2 parse_matrix_literal(const std::string& text) {
    std::string body = text;
    bool diagonal = false;
    const auto open = text.find('(');
    if (open != std::string::npos) {
        const auto close = text.rfind(')');
        const std::string head = text.substr(0, open);
        if (head != "diag" || close == std::string::npos || close < open)
            throw ConfigError("matrix literal: expected diag(a,b,c)");
        diagonal = true;
        body = text.substr(open + 1, close - open - 1);
    }
    std::vector<double> vals;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(parse_scalar(tok));
    if (diagonal) {
        if (vals.size() != 3) throw ConfigError("matrix literal: diag needs 3 entries");
        return Tensor2::diag(vals[0], vals[1], vals[2]);
    }
    if (vals.size() != 9)
        throw ConfigError("matrix literal: expected 9 row-major entries, got " +
                          std::to_string(vals.size()));
    Tensor2 t;
    for (int k = 0; k < 9; ++k) t.a[k] = vals[k];
    return t;
}

void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                         const std::string& context) {
    if (!j.is_object()) throw ConfigError(context + ": expected a JSON object");
    for (const auto& item : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return item.key() == k; });
        if (!known) throw ConfigError(context + ": unknown key \"" + item.key() + "\"");
    }
}

} // namespace corotan
