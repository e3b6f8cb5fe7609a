#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corotan/motion.hpp"
#include "corotan/tensor2.hpp"

namespace corotan {

class MaterialModel;

enum class RateKind {
    ZarembaJaumann,
    Truesdell,
    Oldroyd,
    CotterRivlin,
    BiezenoHencky,
    GreenNaghdi,
    LieKirchhoff,
};

const char* rate_name(RateKind kind);
RateKind rate_from_name(const std::string& name);
const std::vector<RateKind>& all_rate_kinds();

/// Pointwise data for one rate evaluation. The material derivative of the
/// stress is supplied by the caller; this module never differentiates a
/// constitutive law itself.
struct RateInput {
    Tensor2 stress;              // sigma or tau, symmetric
    Tensor2 stress_dot;          // D/Dt of the stress
    Tensor2 L;                   // velocity gradient
    std::optional<Tensor2> spin_override; // polar spin for Green-Naghdi
};

Tensor2 rate_value(RateKind kind, const RateInput& in);

/// D^ZJ[tau] from the Lie derivative: lie_tau + tau D + D tau.
Tensor2 zj_from_lie(const Tensor2& lie_tau, const Tensor2& tau, const Tensor2& D);

/// D^ZJ[sigma] from the Truesdell rate: tr_sigma + sigma D + D sigma - tr(D) sigma.
Tensor2 zj_from_truesdell(const Tensor2& tr_sigma, const Tensor2& sigma, const Tensor2& D);

/// Polar spin Omega^R = Rdot R^T by central differencing of the polar rotation
/// along a path.
Tensor2 polar_spin_fd(const MotionPath& path, double t, double h = 1e-6);

/// Corotational finite-difference rate: integrates Qdot = W Q around t with
/// Q(t) = 1 and central-differences Q^T Sigma Q. Serves as the independent
/// oracle for the Zaremba-Jaumann rate.
Tensor2 rotated_frame_rate(const std::function<Tensor2(double)>& stress_at,
                           const std::function<Tensor2(double)>& L_at, double t, double h);

/// Rotated-frame oracle for the Cauchy stress of a model along a path.
Tensor2 rotated_frame_zj(const MotionPath& path, double t, double h,
                         const MaterialModel& model);

/// Same oracle for the Kirchhoff stress.
Tensor2 rotated_frame_zj_tau(const MotionPath& path, double t, double h,
                             const MaterialModel& model);

} // namespace corotan
