#include "corotan/tangents.hpp"

#include <cmath>

#include "corotan/errors.hpp"

namespace corotan {

namespace {

void require_symmetric(const Tensor2& s, const char* who) {
    if (!is_symmetric(s, 1e-8))
        throw InputAsymmetric(std::string(who) + ": stress is not symmetric");
}

} // namespace

Tensor4 hzj_tau_absolute(const Tensor4& c_spatial, const Tensor2& tau, double J) {
    require_symmetric(tau, "hzj_tau_absolute");
    if (!(J > 0.0)) throw NonInvertible("hzj_tau_absolute: J must be positive");
    const Tensor2 id = Tensor2::identity();
    return J * c_spatial + otimes_downup(id, tau) + otimes_downup(tau, id);
}

Tensor4 hzj_tau_lagrangian(const DeformationState& state, const Tensor4& C4,
                           const Tensor2& tau) {
    require_symmetric(tau, "hzj_tau_lagrangian");
    const Tensor2& F = state.F;
    const Tensor2 Ft = transpose(F);
    return materialize_sym([&](const Tensor2& D) {
        const Tensor2 pulled = Ft * D * F;
        return F * apply4(C4, pulled) * Ft + D * tau + tau * D;
    });
}

Tensor4 hzj_tau_direct_hencky(const DeformationState& state, const LameParams& p) {
    const Tensor2& B = state.B;
    const Tensor2 id = Tensor2::identity();
    return materialize_sym([&](const Tensor2& D) {
        return p.mu * dlog_frechet(B, B * D + D * B) + p.lambda * trace(D) * id;
    });
}

Tensor4 hzj_sigma_absolute(const Tensor4& c_spatial, const Tensor2& sigma) {
    require_symmetric(sigma, "hzj_sigma_absolute");
    const Tensor2 id = Tensor2::identity();
    return c_spatial + otimes_downup(id, sigma) + otimes_downup(sigma, id) -
           outer(sigma, id);
}

Tensor4 hzj_sigma_from_tau(const Tensor4& H_tau, const Tensor2& sigma, double J) {
    if (!(J > 0.0)) throw NonInvertible("hzj_sigma_from_tau: J must be positive");
    return (1.0 / J) * H_tau - outer(sigma, Tensor2::identity());
}

Tensor4 wang_li_tensor(const Tensor4& c_spatial, const Tensor2& sigma) {
    require_symmetric(sigma, "wang_li_tensor");
    Tensor4 t = c_spatial;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double dik = i == k ? 1.0 : 0.0;
                    const double djk = j == k ? 1.0 : 0.0;
                    const double dil = i == l ? 1.0 : 0.0;
                    const double djl = j == l ? 1.0 : 0.0;
                    const double dkl = k == l ? 1.0 : 0.0;
                    t(i, j, k, l) += 0.5 * (dik * sigma(j, l) + sigma(i, l) * djk +
                                            sigma(i, k) * djl + dil * sigma(j, k) -
                                            2.0 * dkl * sigma(i, j));
                }
    return t;
}

Tensor4 abaqus_ddsdde(const Tensor4& H_tau, double J) {
    if (!(J > 0.0)) throw NonInvertible("abaqus_ddsdde: J must be positive");
    return (1.0 / J) * H_tau;
}

TangentSet build_tangent_set(const MaterialModel& model, const DeformationState& state) {
    TangentSet set;
    set.J = state.J;
    set.tau = model.kirchhoff(state);
    set.sigma = (1.0 / state.J) * set.tau;

    const Tensor4 C4 = model.material_tangent(state);
    const Tensor4 c = spatial_tangent(state, C4);

    set.H_zj_tau_absolute = hzj_tau_absolute(c, set.tau, state.J);
    set.H_zj_tau_lagrangian = hzj_tau_lagrangian(state, C4, set.tau);
    if (model.name() == "hencky" || model.name() == "hencky_incompressible") {
        LameParams p = model.params();
        if (model.is_incompressible()) p.lambda = 0.0;
        set.H_zj_tau_direct = hzj_tau_direct_hencky(state, p);
    }
    set.H_zj_sigma_absolute = hzj_sigma_absolute(c, set.sigma);
    set.H_zj_sigma_from_tau = hzj_sigma_from_tau(set.H_zj_tau_absolute, set.sigma, state.J);
    set.D_abaqus = abaqus_ddsdde(set.H_zj_tau_absolute, state.J);

    set.res_absolute_vs_lagrangian =
        rel_diff(set.H_zj_tau_absolute, set.H_zj_tau_lagrangian);
    if (set.H_zj_tau_direct) {
        set.res_absolute_vs_direct = rel_diff(set.H_zj_tau_absolute, *set.H_zj_tau_direct);
        set.res_lagrangian_vs_direct =
            rel_diff(set.H_zj_tau_lagrangian, *set.H_zj_tau_direct);
    }
    set.res_sigma_routes = rel_diff(set.H_zj_sigma_absolute, set.H_zj_sigma_from_tau);
    set.res_bridge = rel_diff(
        set.H_zj_tau_absolute,
        state.J * (set.H_zj_sigma_absolute + outer(set.sigma, Tensor2::identity())));
    set.res_wang_li = rel_diff(set.H_zj_sigma_absolute, wang_li_tensor(c, set.sigma));
    return set;
}

} // namespace corotan
