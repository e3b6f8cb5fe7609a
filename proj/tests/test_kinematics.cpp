#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/kinematics.hpp"
#include "corotan/linalg.hpp"
#include "corotan/sampling.hpp"

using namespace corotan;

namespace {
const Tensor2 kId = Tensor2::identity();
}

TEST_CASE("make_state at the identity") {
    const DeformationState st = make_state(kId);
    CHECK(st.J == doctest::Approx(1.0));
    CHECK(rel_diff(st.C, kId) < 1e-15);
    CHECK(rel_diff(st.V, kId) < 1e-15);
    CHECK(norm(st.log_V) < 1e-15);
}

TEST_CASE("make_state on a uniaxial stretch") {
    const double lam = 1.7;
    const DeformationState st = make_state(Tensor2::diag(lam, 1, 1));
    CHECK(st.J == doctest::Approx(lam));
    CHECK(rel_diff(st.V, Tensor2::diag(lam, 1, 1)) < 1e-14);
    CHECK(rel_diff(st.log_V, Tensor2::diag(std::log(lam), 0, 0)) < 1e-14);
    CHECK(rel_diff(st.R, kId) < 1e-14);
}

TEST_CASE("polar decomposition reassembles F") {
    Sampler rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 F = rng.deformation_gradient(0.3, 3.0);
        const DeformationState st = make_state(F);
        CHECK(norm(st.R * st.U - F) < 1e-12 * std::max(1.0, norm(F)));
        CHECK(norm(st.V * st.R - F) < 1e-12 * std::max(1.0, norm(F)));
        CHECK(norm(transpose(st.R) * st.R - kId) < 1e-12);
        CHECK(norm(st.V * st.V - st.B) < 1e-12 * std::max(1.0, norm(st.B)));
        CHECK(norm(st.log_B - 2.0 * st.log_V) < 1e-15);
    }
}

TEST_CASE("make_state rejects non-invertible gradients") {
    CHECK_THROWS_AS((void)make_state(Tensor2::diag(0.0, 1.0, 1.0)), NonInvertible);
    CHECK_THROWS_AS((void)make_state(Tensor2::diag(-1.0, 1.0, 1.0)), NonInvertible);
}

TEST_CASE("spd_log") {
    CHECK(norm(spd_log(kId)) < 1e-15);
    CHECK(rel_diff(spd_log(Tensor2::diag(std::exp(2.0), 1, 1)), Tensor2::diag(2, 0, 0)) <
          1e-14);

    Sampler rng(12);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 s = rng.spd_stretch();
        CHECK(rel_diff(sym_exp(spd_log(s)), s) < 1e-11);
    }
    CHECK_THROWS_AS((void)spd_log(Tensor2::diag(1.0, -0.5, 1.0)), NotSPD);
    CHECK_THROWS_AS((void)spd_log(Tensor2::diag(1.0, 0.0, 1.0)), NotSPD);
}

TEST_CASE("dlog_frechet at the identity is the identity map") {
    Sampler rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const Tensor2 h = rng.symmetric();
        CHECK(rel_diff(dlog_frechet(kId, h), h) < 1e-14);
    }
}

TEST_CASE("dlog_frechet divided-difference entry") {
    const Tensor2 B = Tensor2::diag(4, 1, 1);
    Tensor2 h;
    h(0, 1) = h(1, 0) = 1.0;
    const Tensor2 r = dlog_frechet(B, h);
    const double expected = std::log(4.0) / 3.0; // (log 4 - log 1) / (4 - 1)
    CHECK(r(0, 1) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(r(1, 0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("dlog_frechet against the finite-difference oracle") {
    Sampler rng(14);
    const double h = 1e-6;
    for (int rep = 0; rep < 50; ++rep) {
        const Tensor2 B = rng.spd_stretch();
        const Tensor2 dir = rng.symmetric();
        const Tensor2 fd = (1.0 / (2.0 * h)) * (spd_log(B + h * dir) - spd_log(B - h * dir));
        CHECK(norm(dlog_frechet(B, dir) - fd) <= 1e-7 * std::max(1.0, norm(dir)));
    }
}

TEST_CASE("dlog trace identity and positivity") {
    Sampler rng(15);
    for (int rep = 0; rep < 1000; ++rep) {
        const Tensor2 B = rng.spd_stretch();
        const Tensor2 D = rng.symmetric();
        const Tensor2 r = dlog_frechet(B, B * D + D * B);
        CHECK(std::abs(trace(r) - 2.0 * trace(D)) <=
              1e-11 * std::max(1.0, std::abs(2.0 * trace(D))));
        if (norm(D) > 1e-12) CHECK(inner(r, D) > 0.0);
    }
}

TEST_CASE("dlog_tensor") {
    CHECK(rel_diff(dlog_tensor(kId), Tensor4::identity_sym()) < 1e-14);

    Sampler rng(16);
    for (int rep = 0; rep < 10; ++rep) {
        const Tensor2 B = rng.spd_stretch();
        const Tensor4 t = dlog_tensor(B);
        const SymmetryFlags f = symmetry_flags(t, 1e-12);
        CHECK(f.minor_left);
        CHECK(f.minor_right);
        CHECK(f.major);
        for (int k = 0; k < 5; ++k) {
            const Tensor2 h = rng.symmetric();
            CHECK(rel_diff(apply4(t, h), dlog_frechet(B, h)) < 1e-12);
        }
    }

    // composed with D -> B D + D B at B = 1 the map is D -> 2 D
    const Tensor2 d = rng.symmetric();
    CHECK(rel_diff(apply4(dlog_tensor(kId), kId * d + d * kId), 2.0 * d) < 1e-13);
}

TEST_CASE("velocity split") {
    const double lam = 2.0, lamdot = 0.3;
    const Tensor2 L = path_L(Tensor2::diag(lam, 1, 1), Tensor2::diag(lamdot, 0, 0));
    CHECK(rel_diff(L, Tensor2::diag(lamdot / lam, 0, 0)) < 1e-15);
    const VelocitySplit vs = velocity_split(L);
    CHECK(norm(vs.W) < 1e-16);

    Sampler rng(17);
    const Tensor2 w = rng.skew_tensor();
    const VelocitySplit vs2 = velocity_split(w);
    CHECK(norm(vs2.D) < 1e-16);
    CHECK(rel_diff(vs2.W, w) < 1e-16);
    const Tensor2 l = rng.tensor();
    const VelocitySplit vs3 = velocity_split(l);
    CHECK(rel_diff(vs3.D + vs3.W, l) < 1e-15);
}

TEST_CASE("path_L against a finite-difference oracle") {
    Sampler rng(18);
    const double h = 1e-6;
    for (int rep = 0; rep < 20; ++rep) {
        const Tensor2 F0 = rng.deformation_gradient(0.5, 2.0);
        const Tensor2 G = rng.tensor(0.3);
        const Tensor2 L = path_L(F0, G);
        // (F(h) F(0)^{-1} - 1) / h with F(t) = F0 + t G
        const Tensor2 fd = (1.0 / h) * ((F0 + h * G) * inverse(F0) - kId);
        CHECK(norm(L - fd) < 1e-5);
    }
    CHECK_THROWS_AS((void)path_L(Tensor2::zero(), kId), NonInvertible);
}

TEST_CASE("jacobi eigensolver orthogonality") {
    Sampler rng(19);
    for (int rep = 0; rep < 200; ++rep) {
        const Tensor2 s = rng.symmetric(3.0);
        const EigSym3 e = eig_sym3(s);
        CHECK(norm(transpose(e.vectors) * e.vectors - kId) < 1e-13);
        CHECK(rel_diff(spectral_apply(e, {e.values[0], e.values[1], e.values[2]}), s) < 1e-13);
        CHECK(e.values[0] <= e.values[1]);
        CHECK(e.values[1] <= e.values[2]);
    }
}
