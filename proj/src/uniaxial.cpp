#include "corotan/uniaxial.hpp"

#include <cmath>
#include <sstream>

#include "corotan/errors.hpp"
#include "corotan/kinematics.hpp"
#include "corotan/materials.hpp"

namespace corotan {

namespace {

double fd_step(double lam) { return 1e-6 * (1.0 + std::abs(std::log(lam))); }

} // namespace

ScalarLaw ScalarLaw::hencky() {
    ScalarLaw law;
    law.label = "hencky";
    law.W = [](double lam) {
        const double s = std::log(lam);
        return 0.5 * s * s;
    };
    law.dW = [](double lam) { return std::log(lam) / lam; };
    law.d2W = [](double lam) { return (1.0 - std::log(lam)) / (lam * lam); };
    return law;
}

ScalarLaw ScalarLaw::svk() {
    ScalarLaw law;
    law.label = "svk";
    law.W = [](double lam) {
        const double q = lam * lam - 1.0;
        return 0.125 * q * q;
    };
    law.dW = [](double lam) { return 0.5 * lam * (lam * lam - 1.0); };
    law.d2W = [](double lam) { return 1.5 * lam * lam - 0.5; };
    return law;
}

ScalarLaw ScalarLaw::from_model(const MaterialModel& model, std::string label) {
    ScalarLaw law;
    law.label = label.empty() ? model.name() + "_1d" : std::move(label);
    const MaterialModel* m = &model; // caller keeps the model alive
    law.W = [m](double lam) {
        return m->energy(make_state(Tensor2::diag(lam, 1.0, 1.0)));
    };
    return law;
}

double ScalarLaw::dW_at(double lam) const {
    if (dW) return dW(lam);
    const double h = fd_step(lam);
    return (W(lam + h) - W(lam - h)) / (2.0 * h);
}

double ScalarLaw::d2W_at(double lam) const {
    if (d2W) return d2W(lam);
    if (dW) {
        const double h = fd_step(lam);
        return (dW(lam + h) - dW(lam - h)) / (2.0 * h);
    }
    // Richardson-extrapolated second difference with a step proportional to
    // lambda; a wide base keeps the cancellation noise near 1e-9
    const double h = 6e-3 * lam;
    auto second = [&](double step) {
        return (W(lam + step) - 2.0 * W(lam) + W(lam - step)) / (step * step);
    };
    return (4.0 * second(0.5 * h) - second(h)) / 3.0;
}

Stresses1D stresses_1d(const ScalarLaw& law, double lam) {
    if (!(lam > 0.0)) throw ConfigError("stresses_1d: lambda must be positive");
    Stresses1D s;
    s.sigma = law.dW_at(lam);
    s.tau = lam * s.sigma;
    s.S2 = s.sigma / lam; // 2 D_{lam^2} W~ = W' / lam
    s.biot = s.sigma;
    return s;
}

Bridge1D stiffness_bridge(const ScalarLaw& law, double lam) {
    if (!(lam > 0.0)) throw ConfigError("stiffness_bridge: lambda must be positive");
    Bridge1D b;
    const double s = std::log(lam);
    const double sigma = law.dW_at(lam);

    b.H = lam * law.d2W_at(lam); // D_loglam sigma_hat = lam sigma'(lam)

    // H_tau = D^2_loglam W_hat, evaluated on its own route so the bridge
    // residual is a genuine cross-check and not an algebraic restatement
    if (law.dW) {
        auto tau_hat = [&](double x) { return std::exp(x) * law.dW(std::exp(x)); };
        const double h = fd_step(lam);
        b.H_tau = (tau_hat(s + h) - tau_hat(s - h)) / (2.0 * h);
    } else {
        // log-space second difference; the step stays constant because the
        // law varies on an O(1) scale in log lambda
        auto W_hat = [&](double x) { return law.W(std::exp(x)); };
        const double h = 6e-3;
        auto second = [&](double step) {
            return (W_hat(s + step) - 2.0 * W_hat(s) + W_hat(s - step)) / (step * step);
        };
        b.H_tau = (4.0 * second(0.5 * h) - second(h)) / 3.0;
    }

    b.residual = std::abs(b.H_tau - lam * (b.H + sigma));
    return b;
}

Scan1D monotonicity_scan(const ScalarLaw& law, double lam_min, double lam_max, double step) {
    if (!(0.0 < lam_min && lam_min < lam_max) || !(step > 0.0))
        throw ConfigError("monotonicity_scan: need 0 < lam_min < lam_max and step > 0");
    Scan1D scan;
    scan.label = law.label;
    const int n = static_cast<int>(std::floor((lam_max - lam_min) / step + 0.5)) + 1;
    for (int k = 0; k < n; ++k) {
        const double lam = std::min(lam_min + k * step, lam_max);
        const Stresses1D s = stresses_1d(law, lam);
        const Bridge1D b = stiffness_bridge(law, lam);
        scan.lam.push_back(lam);
        scan.sigma.push_back(s.sigma);
        scan.tau.push_back(s.tau);
        scan.W_hat.push_back(law.W(lam));
        scan.H.push_back(b.H);
        scan.H_tau.push_back(b.H_tau);
        scan.max_bridge_residual = std::max(scan.max_bridge_residual, b.residual);
        if (!scan.sigma_first_nonmonotone && b.H <= 0.0) scan.sigma_first_nonmonotone = lam;
        if (!scan.tau_first_nonmonotone && b.H_tau <= 0.0) scan.tau_first_nonmonotone = lam;
    }
    return scan;
}

std::string scan_csv(const Scan1D& scan, bool gnuplot) {
    std::ostringstream out;
    out.precision(17);
    const char sep = gnuplot ? ' ' : ',';
    if (gnuplot)
        out << "# lambda sigma tau W_hat H H_tau sigma_flag tau_flag\n";
    else
        out << "lambda,sigma,tau,W_hat,H,H_tau,sigma_flag,tau_flag\n";
    for (size_t i = 0; i < scan.lam.size(); ++i) {
        const int sflag =
            scan.sigma_first_nonmonotone && scan.lam[i] >= *scan.sigma_first_nonmonotone;
        const int tflag =
            scan.tau_first_nonmonotone && scan.lam[i] >= *scan.tau_first_nonmonotone;
        out << scan.lam[i] << sep << scan.sigma[i] << sep << scan.tau[i] << sep
            << scan.W_hat[i] << sep << scan.H[i] << sep << scan.H_tau[i] << sep << sflag
            << sep << tflag << "\n";
    }
    return out.str();
}

} // namespace corotan
