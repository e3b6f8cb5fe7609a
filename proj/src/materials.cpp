#include "corotan/materials.hpp"

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/linalg.hpp"
#include "corotan/tangents.hpp"

namespace corotan {

namespace {

void require_isochoric(const DeformationState& state, const char* who) {
    if (std::abs(state.J - 1.0) > 1e-8)
        throw NotIsochoric(std::string(who) + ": det F = " + std::to_string(state.J));
}

/// out_ijkl = A_iI A_jJ A_kK A_lL T_IJKL, one index contracted at a time.
Tensor4 congruence4(const Tensor4& t, const Tensor2& a) {
    Tensor4 r = t;
    for (int slot = 0; slot < 4; ++slot) {
        Tensor4 next;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        double acc = 0.0;
                        for (int m = 0; m < 3; ++m) {
                            switch (slot) {
                                case 0: acc += a(i, m) * r(m, j, k, l); break;
                                case 1: acc += a(j, m) * r(i, m, k, l); break;
                                case 2: acc += a(k, m) * r(i, j, m, l); break;
                                default: acc += a(l, m) * r(i, j, k, m); break;
                            }
                        }
                        next(i, j, k, l) = acc;
                    }
        r = next;
    }
    return r;
}

} // namespace

Tensor4 MaterialModel::hzj_tau(const DeformationState& state) const {
    const Tensor4 c = spatial_tangent(state, material_tangent(state));
    return hzj_tau_absolute(c, kirchhoff(state), state.J);
}

StressBundle MaterialModel::stresses(const DeformationState& state) const {
    StressBundle b;
    b.tau = kirchhoff(state);
    b.sigma = (1.0 / state.J) * b.tau;
    const Tensor2 Finv = inverse(state.F);
    b.S2 = Finv * b.tau * transpose(Finv);
    b.S1 = state.F * b.S2;
    return b;
}

double hencky_energy(const DeformationState& state, const LameParams& p) {
    const double t = trace(state.log_V);
    const double n = norm(state.log_V);
    return p.mu * n * n + 0.5 * p.lambda * t * t;
}

Tensor2 hencky_tau(const DeformationState& state, const LameParams& p) {
    return 2.0 * p.mu * state.log_V + p.lambda * trace(state.log_V) * Tensor2::identity();
}

Tensor2 incompressible_hencky_tau(const DeformationState& state, double mu) {
    require_isochoric(state, "incompressible_hencky_tau");
    return 2.0 * mu * state.log_V;
}

Tensor2 hencky_S2_of_E(const Tensor2& E, const LameParams& p) {
    const Tensor2 C = 2.0 * sym(E) + Tensor2::identity();
    const EigSym3 e = eig_sym3(C);
    if (e.values[0] <= 1e-12 * std::max(1.0, e.values[2]))
        throw NotSPD("hencky_S2_of_E: C = 2E + 1 is not positive definite");
    // isotropy puts tau and C on the same eigenbasis: with F = sqrt(C),
    // tau_i = mu log l_i + (lambda/2) log det C and S2 = U^{-1} tau U^{-1}
    const double logdet = std::log(e.values[0]) + std::log(e.values[1]) + std::log(e.values[2]);
    std::array<double, 3> s2{};
    for (int i = 0; i < 3; ++i)
        s2[i] = (p.mu * std::log(e.values[i]) + 0.5 * p.lambda * logdet) / e.values[i];
    return spectral_apply(e, s2);
}

Tensor4 hencky_material_tangent_fd(const DeformationState& state, const LameParams& p) {
    const Tensor2 E = 0.5 * (state.C - Tensor2::identity());
    const double h = 1e-5 * (1.0 + norm(E));

    auto jacobian = [&](double step) {
        return materialize_sym([&](const Tensor2& dir) {
            const Tensor2 plus = hencky_S2_of_E(E + step * dir, p);
            const Tensor2 minus = hencky_S2_of_E(E - step * dir, p);
            return (1.0 / (2.0 * step)) * (plus - minus);
        });
    };
    const Tensor4 d1 = jacobian(h);
    const Tensor4 d2 = jacobian(0.5 * h);
    const Tensor4 c = (1.0 / 3.0) * (4.0 * d2 - d1);
    // the Hessian of the energy is self-adjoint; asymmetry in the FD estimate
    // is estimator noise and gets projected out
    return 0.5 * (c + transpose4(c));
}

Tensor4 isotropic_tangent(const LameParams& p) {
    const Tensor2 id = Tensor2::identity();
    return p.lambda * outer(id, id) + 2.0 * p.mu * otimes_downup(id, id);
}

Tensor4 spatial_tangent(const DeformationState& state, const Tensor4& C4) {
    return (1.0 / state.J) * congruence4(C4, state.F);
}

Tensor4 material_from_spatial(const DeformationState& state, const Tensor4& c4) {
    return state.J * congruence4(c4, inverse(state.F));
}

double HenckyModel::energy(const DeformationState& state) const {
    return hencky_energy(state, p_);
}

Tensor2 HenckyModel::kirchhoff(const DeformationState& state) const {
    return hencky_tau(state, p_);
}

Tensor4 HenckyModel::material_tangent(const DeformationState& state) const {
    return hencky_material_tangent_fd(state, p_);
}

Tensor4 HenckyModel::hzj_tau(const DeformationState& state) const {
    return hzj_tau_direct_hencky(state, p_);
}

double IncompressibleHenckyModel::energy(const DeformationState& state) const {
    require_isochoric(state, "energy");
    const double n = norm(state.log_V);
    return mu_ * n * n;
}

Tensor2 IncompressibleHenckyModel::kirchhoff(const DeformationState& state) const {
    return incompressible_hencky_tau(state, mu_);
}

Tensor4 IncompressibleHenckyModel::material_tangent(const DeformationState& state) const {
    // evaluates the unconstrained extension of the energy, which coincides
    // with the compressible law at lambda = 0
    require_isochoric(state, "material_tangent");
    return hencky_material_tangent_fd(state, {mu_, 0.0});
}

Tensor4 IncompressibleHenckyModel::hzj_tau(const DeformationState& state) const {
    require_isochoric(state, "hzj_tau");
    return hzj_tau_direct_hencky(state, {mu_, 0.0});
}

double SvkModel::energy(const DeformationState& state) const {
    const Tensor2 E = 0.5 * (state.C - Tensor2::identity());
    const double t = trace(E);
    const double n = norm(E);
    return p_.mu * n * n + 0.5 * p_.lambda * t * t;
}

Tensor2 SvkModel::kirchhoff(const DeformationState& state) const {
    const Tensor2 E = 0.5 * (state.C - Tensor2::identity());
    const Tensor2 S2 = p_.lambda * trace(E) * Tensor2::identity() + 2.0 * p_.mu * E;
    return state.F * S2 * transpose(state.F);
}

Tensor4 SvkModel::material_tangent(const DeformationState&) const {
    return isotropic_tangent(p_);
}

std::shared_ptr<MaterialModel> make_model(const std::string& name, double mu, double lambda) {
    if (name == "hencky") return std::make_shared<HenckyModel>(LameParams{mu, lambda});
    if (name == "hencky_incompressible")
        return std::make_shared<IncompressibleHenckyModel>(mu);
    if (name == "svk") return std::make_shared<SvkModel>(LameParams{mu, lambda});
    throw ConfigError("unknown model '" + name + "'");
}

} // namespace corotan
