#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "corotan/mandel.hpp"
#include "corotan/materials.hpp"
#include "corotan/motion.hpp"
#include "corotan/tensor4.hpp"

namespace corotan {

/// Pass/fail verdict with the numeric evidence that produced it. Reports are
/// deterministic given the recorded seed.
struct CheckReport {
    std::string name;
    bool passed = false;
    std::uint64_t seed = 0;
    nlohmann::ordered_json details;
    std::vector<std::string> failures;
};

struct SymmetryExpectation {
    bool minor_left = true;
    bool minor_right = true;
    bool major = true;
};

/// Symmetry flags plus Mandel skew-norm diagnostics. With an expectation the
/// report passes iff the flags match it; without one it is informational.
CheckReport symmetry_report(const Tensor4& t, double tol = 1e-9,
                            std::optional<SymmetryExpectation> expect = std::nullopt);

struct SweepConfig {
    double lam_min = 0.1;
    double lam_max = 10.0;
    double step = 0.01;
};

struct SweepPathRecord {
    std::string path;
    std::vector<double> lam;
    std::vector<double> J;
    std::vector<double> min_eig; // of the Mandel image of D = H_tau / J
    std::optional<double> first_unstable_lambda;
    int unstable_count = 0;
};

struct SweepReport {
    std::string model;
    SweepConfig config;
    bool incompressible = false;
    std::string header; // documents the six path parameterisations
    std::vector<SweepPathRecord> paths;
    std::vector<std::string> errors; // per-point evaluation failures, non-fatal
    int total_points = 0;
    int total_unstable = 0;

    bool all_stable() const { return total_unstable == 0 && errors.empty(); }
};

/// Positive definiteness of D = J^{-1} H^ZJ_tau over six stress paths on a
/// stretch grid. Incompressible laws sweep isochoric paths and test
/// definiteness on the traceless subspace.
SweepReport stability_sweep(const MaterialModel& model, const SweepConfig& config = {});

/// Monotonicity of tau in log V on random SPD stretch pairs; reports the
/// minimum quotient and a violating pair when one exists.
CheckReport hill_check(const MaterialModel& model, int n_samples, std::uint64_t seed = 20240901);

/// Positive definiteness of the symmetrised derivative of sigma in log V,
/// cross-checked against positivity of sym H^ZJ(sigma).
CheckReport tsts_check(const MaterialModel& model, const DeformationState& state);

/// Sign of det(Mandel H^ZJ(sigma)) along a path, with the implication audit:
/// no point may pass the TSTS test while det <= 0.
CheckReport det_scan(const MaterialModel& model, const MotionPath& path, int n_points = 50);

enum class Scheme { Euler, RK4 };

Scheme scheme_from_name(const std::string& name);
const char* scheme_name(Scheme s);

struct IntegrationReport {
    std::string scheme;
    int steps = 0;
    std::vector<double> t;
    std::vector<Tensor2> tau_numeric;
    double terminal_rel_error = 0.0;
    double max_drift = 0.0; // max over steps of relative deviation from closed form
};

/// Marches tau_dot = H^ZJ_tau . D + W tau - tau W along the path, starting
/// from the closed-form stress, and reports the reconstruction error against
/// the closed form at the end of the path.
IntegrationReport integrate_hypoelastic(const MaterialModel& model, const MotionPath& path,
                                        Scheme scheme, int n_steps);

/// Rate-catalog identities along a path using finite-difference material
/// derivatives of the closed-form stresses:
///   (a) D^ZJ[tau] = J D^BH[sigma]
///   (b) D^TR[sigma] = J^{-1} Lie[tau]
///   (c) tangent contraction vs the rotated-frame oracle
CheckReport rate_identity_audit(const MaterialModel& model, const MotionPath& path,
                                int t_samples, double fd_step = 1e-4);

} // namespace corotan
