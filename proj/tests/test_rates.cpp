#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/materials.hpp"
#include "corotan/rates.hpp"
#include "corotan/sampling.hpp"
#include "corotan/tangents.hpp"

using namespace corotan;

namespace {
const Tensor2 kId = Tensor2::identity();
}

TEST_CASE("all rates reduce to the material derivative at L = 0") {
    Sampler rng(31);
    const Tensor2 s = rng.symmetric(), sd = rng.symmetric();
    for (RateKind k : all_rate_kinds()) {
        RateInput in{s, sd, Tensor2::zero(), {}};
        if (k == RateKind::GreenNaghdi) in.spin_override = Tensor2::zero();
        CHECK(rel_diff(rate_value(k, in), sd) < 1e-15);
    }
}

TEST_CASE("zj rate vanishes for rigid co-rotation") {
    Sampler rng(32);
    const Tensor2 s = rng.symmetric();
    const Tensor2 w = rng.skew_tensor();
    // stress rotating with the frame: sigma_dot = W sigma - sigma W
    const Tensor2 sd = w * s - s * w;
    CHECK(norm(rate_value(RateKind::ZarembaJaumann, {s, sd, w, {}})) < 1e-14);
}

TEST_CASE("trace terms connect the rate catalog") {
    Sampler rng(33);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 s = rng.symmetric(), sd = rng.symmetric(), L = rng.tensor();
        const double trd = trace(sym(L));
        const Tensor2 tr = rate_value(RateKind::Truesdell, {s, sd, L, {}});
        const Tensor2 old = rate_value(RateKind::Oldroyd, {s, sd, L, {}});
        const Tensor2 bh = rate_value(RateKind::BiezenoHencky, {s, sd, L, {}});
        const Tensor2 zj = rate_value(RateKind::ZarembaJaumann, {s, sd, L, {}});
        CHECK(rel_diff(tr - old, trd * s) < 1e-14);
        CHECK(rel_diff(bh - zj, trd * s) < 1e-14);
    }
}

TEST_CASE("zj from lie derivative") {
    Sampler rng(34);
    const Tensor2 tau = rng.symmetric(), lie = rng.symmetric();
    CHECK(rel_diff(zj_from_lie(lie, tau, Tensor2::zero()), lie) < 1e-16);

    const Tensor2 d = rng.symmetric();
    CHECK(rel_diff(zj_from_lie(lie, kId, d), lie + 2.0 * d) < 1e-14);

    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 s = rng.symmetric(), sd = rng.symmetric(), L = rng.tensor();
        const Tensor2 via_formula = rate_value(RateKind::ZarembaJaumann, {s, sd, L, {}});
        const Tensor2 via_lie =
            zj_from_lie(rate_value(RateKind::LieKirchhoff, {s, sd, L, {}}), s, sym(L));
        CHECK(rel_diff(via_formula, via_lie) < 1e-13);
    }
}

TEST_CASE("zj from truesdell rate") {
    Sampler rng(35);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 s = rng.symmetric(), sd = rng.symmetric(), L = rng.tensor();
        const Tensor2 via_formula = rate_value(RateKind::ZarembaJaumann, {s, sd, L, {}});
        const Tensor2 via_tr =
            zj_from_truesdell(rate_value(RateKind::Truesdell, {s, sd, L, {}}), s, sym(L));
        CHECK(rel_diff(via_formula, via_tr) < 1e-13);
    }

    const Tensor2 d = Tensor2::diag(1, 0, 0);
    const Tensor2 tr = rate_value(RateKind::Truesdell, {kId, Tensor2::zero(), d, {}});
    CHECK(rel_diff(zj_from_truesdell(tr, kId, d), tr + 2.0 * d - kId) < 1e-14);
}

TEST_CASE("kirchhoff weighted lie derivative equals the truesdell rate") {
    Sampler rng(36);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 sigma = rng.symmetric(), sigma_dot = rng.symmetric();
        const Tensor2 L = rng.tensor();
        const double J = std::exp(rng.uniform(-1.0, 1.0));
        const double Jdot = J * trace(sym(L)); // mass balance
        const Tensor2 tau = J * sigma;
        const Tensor2 tau_dot = Jdot * sigma + J * sigma_dot;
        const Tensor2 lie_tau = rate_value(RateKind::LieKirchhoff, {tau, tau_dot, L, {}});
        const Tensor2 tr_sigma = rate_value(RateKind::Truesdell, {sigma, sigma_dot, L, {}});
        CHECK(rel_diff((1.0 / J) * lie_tau, tr_sigma) < 1e-13);
    }
}

TEST_CASE("zj rate is invariant under superposed rigid spin") {
    Sampler rng(37);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 s = rng.symmetric(), sd = rng.symmetric(), L = rng.tensor();
        const Tensor2 omega = rng.skew_tensor();
        const Tensor2 base = rate_value(RateKind::ZarembaJaumann, {s, sd, L, {}});
        const Tensor2 spun = rate_value(
            RateKind::ZarembaJaumann, {s, sd + omega * s - s * omega, L + omega, {}});
        CHECK(rel_diff(base, spun) < 1e-13);
    }
}

TEST_CASE("green-naghdi needs a spin") {
    Sampler rng(38);
    const Tensor2 s = rng.symmetric(), sd = rng.symmetric(), L = rng.tensor();
    CHECK_THROWS_AS((void)rate_value(RateKind::GreenNaghdi, {s, sd, L, {}}), MissingSpin);

    const Tensor2 omega = rng.skew_tensor();
    const Tensor2 r = rate_value(RateKind::GreenNaghdi, {s, sd, L, omega});
    CHECK(rel_diff(r, sd + s * omega - omega * s) < 1e-15);
}

TEST_CASE("rate names round trip") {
    for (RateKind k : all_rate_kinds()) CHECK(rate_from_name(rate_name(k)) == k);
    CHECK_THROWS_AS((void)rate_from_name("logarithmic"), ConfigError);
}

TEST_CASE("polar spin of a rigid rotation equals the vorticity") {
    const MotionPath path = rigid_rotation_path(Tensor2::diag(1.3, 0.8, 1.1));
    const double t = 0.4;
    const Tensor2 omega = polar_spin_fd(path, t, 1e-6);
    const Tensor2 w = skew(path.L_at(t));
    CHECK(norm(omega - w) < 1e-8);
}

TEST_CASE("rotated frame oracle on a rigid rotation is zero") {
    const HenckyModel model({1.0, 1.0});
    const MotionPath path = rigid_rotation_path(Tensor2::diag(1.3, 0.8, 1.1));
    const Tensor2 r = rotated_frame_zj(path, 0.5, 1e-4, model);
    CHECK(norm(r) < 1e-7);
}

TEST_CASE("rotated frame oracle reduces to a central difference when W = 0") {
    const HenckyModel model({1.0, 1.0});
    const MotionPath path = uniaxial_path(1.0, 2.0);
    const double t = 0.5, h = 1e-5;
    auto sigma_at = [&](double s) { return model.stresses(make_state(path.F_at(s))).sigma; };
    const Tensor2 fd = (1.0 / (2.0 * h)) * (sigma_at(t + h) - sigma_at(t - h));
    CHECK(norm(rotated_frame_zj(path, t, h, model) - fd) < 1e-12);
}

TEST_CASE("rotated frame oracle matches the tangent contraction on shear") {
    const HenckyModel model({1.0, 1.0});
    const MotionPath path = shear_path(0.0, 1.0);
    const double t = 0.6, h = 1e-4;
    const DeformationState st = make_state(path.F_at(t));
    const Tensor4 c = spatial_tangent(st, model.material_tangent(st));
    const Tensor2 sigma = model.stresses(st).sigma;
    const Tensor4 hzj = hzj_sigma_absolute(c, sigma);
    const Tensor2 d = sym(path.L_at(t));
    CHECK(rel_diff(apply4(hzj, d), rotated_frame_zj(path, t, h, model)) < 1e-6);
}
