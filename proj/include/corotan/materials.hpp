#pragma once

#include <memory>
#include <string>

#include "corotan/kinematics.hpp"
#include "corotan/tensor2.hpp"
#include "corotan/tensor4.hpp"

namespace corotan {

struct LameParams {
    double mu = 1.0;
    double lambda = 1.0;

    /// mu > 0 and 2 mu + 3 lambda > 0; the range in which the Kirchhoff
    /// stress is monotone in the logarithmic strain.
    bool stable_range() const { return mu > 0.0 && 2.0 * mu + 3.0 * lambda > 0.0; }
};

struct StressBundle {
    Tensor2 sigma; // Cauchy
    Tensor2 tau;   // Kirchhoff, J sigma
    Tensor2 S2;    // second Piola-Kirchhoff
    Tensor2 S1;    // first Piola-Kirchhoff
};

/// Hyperelastic law: all stress measures and the material tangent
/// C = D_E S2(E) from one deformation state. Implementations are immutable
/// parameter records; every evaluation is pure.
class MaterialModel {
public:
    virtual ~MaterialModel() = default;

    virtual std::string name() const = 0;
    virtual LameParams params() const = 0;
    virtual bool is_incompressible() const { return false; }

    virtual double energy(const DeformationState& state) const = 0;
    virtual Tensor2 kirchhoff(const DeformationState& state) const = 0;
    virtual Tensor4 material_tangent(const DeformationState& state) const = 0;

    /// Tangent of the Kirchhoff rate equation for this law. The base
    /// implementation assembles it from the spatial tangent; laws with a
    /// closed construction override.
    virtual Tensor4 hzj_tau(const DeformationState& state) const;

    StressBundle stresses(const DeformationState& state) const;
};

/// Quadratic energy in log V: mu ||log V||^2 + (lambda/2) tr^2(log V).
class HenckyModel final : public MaterialModel {
public:
    explicit HenckyModel(LameParams p) : p_(p) {}
    std::string name() const override { return "hencky"; }
    LameParams params() const override { return p_; }
    double energy(const DeformationState& state) const override;
    Tensor2 kirchhoff(const DeformationState& state) const override;
    Tensor4 material_tangent(const DeformationState& state) const override;
    Tensor4 hzj_tau(const DeformationState& state) const override;

private:
    LameParams p_;
};

/// mu ||log V||^2 under det F = 1; evaluations require an isochoric state.
class IncompressibleHenckyModel final : public MaterialModel {
public:
    explicit IncompressibleHenckyModel(double mu) : mu_(mu) {}
    std::string name() const override { return "hencky_incompressible"; }
    LameParams params() const override { return {mu_, 0.0}; }
    bool is_incompressible() const override { return true; }
    double energy(const DeformationState& state) const override;
    Tensor2 kirchhoff(const DeformationState& state) const override;
    Tensor4 material_tangent(const DeformationState& state) const override;
    Tensor4 hzj_tau(const DeformationState& state) const override;

private:
    double mu_;
};

/// St. Venant-Kirchhoff: quadratic in the Green-Lagrange strain, constant C.
class SvkModel final : public MaterialModel {
public:
    explicit SvkModel(LameParams p) : p_(p) {}
    std::string name() const override { return "svk"; }
    LameParams params() const override { return p_; }
    double energy(const DeformationState& state) const override;
    Tensor2 kirchhoff(const DeformationState& state) const override;
    Tensor4 material_tangent(const DeformationState& state) const override;

private:
    LameParams p_;
};

double hencky_energy(const DeformationState& state, const LameParams& p);

/// tau = 2 mu log V + lambda tr(log V) 1.
Tensor2 hencky_tau(const DeformationState& state, const LameParams& p);

/// tau = 2 mu log V, trace free. Throws NotIsochoric when |det F - 1| > 1e-8.
Tensor2 incompressible_hencky_tau(const DeformationState& state, double mu);

/// S2 as a function of the Green-Lagrange strain alone (isotropy), used by the
/// finite-difference material tangent.
Tensor2 hencky_S2_of_E(const Tensor2& E, const LameParams& p);

/// C = D_E S2 by central differences over the six symmetric directions with
/// Richardson extrapolation, step 1e-5 (1 + ||E||).
Tensor4 hencky_material_tangent_fd(const DeformationState& state, const LameParams& p);

/// Constant isotropic tangent lambda 1(x)1 + 2 mu I_sym.
Tensor4 isotropic_tangent(const LameParams& p);

/// Full backward Piola transform: c_ijkl = J^{-1} F_iI F_jJ C_IJKL F_kK F_lL.
Tensor4 spatial_tangent(const DeformationState& state, const Tensor4& C4);

/// Inverse transform back to the reference configuration.
Tensor4 material_from_spatial(const DeformationState& state, const Tensor4& c4);

std::shared_ptr<MaterialModel> make_model(const std::string& name, double mu, double lambda);

} // namespace corotan
