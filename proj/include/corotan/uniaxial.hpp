#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace corotan {

class MaterialModel;

/// One-dimensional energy lambda -> W(lambda). Derivatives may be registered
/// analytically; otherwise they are taken by central differences with step
/// scaled by 1 + |log lambda|.
struct ScalarLaw {
    std::string label;
    std::function<double(double)> W;
    std::function<double(double)> dW;  // optional
    std::function<double(double)> d2W; // optional

    /// W = 1/2 log^2(lambda), with analytic derivatives.
    static ScalarLaw hencky();
    /// W = 1/8 (lambda^2 - 1)^2, with analytic derivatives.
    static ScalarLaw svk();
    /// Restriction of a 3D law to F = diag(lambda, 1, 1); derivatives by FD.
    static ScalarLaw from_model(const MaterialModel& model, std::string label = "");

    double dW_at(double lam) const;
    double d2W_at(double lam) const;
};

/// All uniaxial stress measures at one stretch. Cauchy, first Piola-Kirchhoff
/// and Biot coincide in 1D; they are reported as separate fields anyway.
struct Stresses1D {
    double sigma = 0.0;
    double tau = 0.0;   // lambda sigma
    double S2 = 0.0;    // 2 dW~/d(lambda^2)
    double biot = 0.0;  // = sigma in 1D
};

Stresses1D stresses_1d(const ScalarLaw& law, double lam);

/// Logarithmic stiffnesses and the Kirchhoff/Cauchy bridge
/// H_tau = lambda (H + sigma).
struct Bridge1D {
    double H = 0.0;     // D_loglam sigma_hat
    double H_tau = 0.0; // D^2_loglam W_hat
    double residual = 0.0;
};

Bridge1D stiffness_bridge(const ScalarLaw& law, double lam);

struct Scan1D {
    std::string label;
    std::vector<double> lam;
    std::vector<double> sigma;
    std::vector<double> tau;
    std::vector<double> W_hat;
    std::vector<double> H;
    std::vector<double> H_tau;
    std::optional<double> sigma_first_nonmonotone; // first lambda with H <= 0
    std::optional<double> tau_first_nonmonotone;   // first lambda with H_tau <= 0
    double max_bridge_residual = 0.0;
};

Scan1D monotonicity_scan(const ScalarLaw& law, double lam_min, double lam_max, double step);

/// CSV rows lambda, sigma, tau, W_hat, H, H_tau, flags. `gnuplot` switches to
/// space-separated columns with a '#' header.
std::string scan_csv(const Scan1D& scan, bool gnuplot = false);

} // namespace corotan
