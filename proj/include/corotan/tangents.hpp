#pragma once

#include <optional>

#include "corotan/materials.hpp"
#include "corotan/tensor2.hpp"
#include "corotan/tensor4.hpp"

namespace corotan {

/// H^ZJ_tau from the spatial tangent: J c + 1 (x)_^ tau + tau (x)_^ 1.
/// Major and minor symmetric whenever c is. Throws InputAsymmetric when tau
/// is not symmetric, NonInvertible when J <= 0.
Tensor4 hzj_tau_absolute(const Tensor4& c_spatial, const Tensor2& tau, double J);

/// Same tensor assembled from the reference-configuration tangent:
/// D -> F (C4 . [F^T D F]) F^T + D tau + tau D, materialised over the six
/// symmetric basis directions.
Tensor4 hzj_tau_lagrangian(const DeformationState& state, const Tensor4& C4,
                           const Tensor2& tau);

/// Closed construction for the Hencky law:
/// D -> mu D_B log B . [B D + D B] + lambda tr(D) 1.
Tensor4 hzj_tau_direct_hencky(const DeformationState& state, const LameParams& p);

/// Cauchy-stress tangent: c + 1 (x)_^ sigma + sigma (x)_^ 1 - sigma (x) 1.
/// Minor symmetric; major symmetric only for hydrostatic sigma.
Tensor4 hzj_sigma_absolute(const Tensor4& c_spatial, const Tensor2& sigma);

/// H^ZJ(sigma) = (1/J) H_tau - sigma (x) 1.
Tensor4 hzj_sigma_from_tau(const Tensor4& H_tau, const Tensor2& sigma, double J);

/// Stiffness tensor of Wang/Li assembled from its printed component formula;
/// must equal hzj_sigma_absolute identically.
Tensor4 wang_li_tensor(const Tensor4& c_spatial, const Tensor2& sigma);

/// Consistent tangent in UMAT convention: H_tau / J.
Tensor4 abaqus_ddsdde(const Tensor4& H_tau, double J);

/// All tangent constructions at one state plus their cross-check residuals.
struct TangentSet {
    double J = 1.0;
    Tensor2 tau;
    Tensor2 sigma;
    Tensor4 H_zj_tau_absolute;
    Tensor4 H_zj_tau_lagrangian;
    std::optional<Tensor4> H_zj_tau_direct; // closed form, Hencky laws only
    Tensor4 H_zj_sigma_absolute;
    Tensor4 H_zj_sigma_from_tau;
    Tensor4 D_abaqus;

    double res_absolute_vs_lagrangian = 0.0;
    double res_absolute_vs_direct = 0.0;    // 0 when no direct route
    double res_lagrangian_vs_direct = 0.0;
    double res_sigma_routes = 0.0;          // absolute vs from_tau
    double res_bridge = 0.0;                // H_tau - J (H_sigma + sigma (x) 1)
    double res_wang_li = 0.0;
};

TangentSet build_tangent_set(const MaterialModel& model, const DeformationState& state);

} // namespace corotan
