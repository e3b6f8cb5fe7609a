#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/json_io.hpp"
#include "corotan/rates.hpp"
#include "corotan/sampling.hpp"
#include "corotan/tangents.hpp"

using namespace corotan;

namespace {

const Tensor2 kId = Tensor2::identity();

// generic tangent with both minor symmetries and major symmetry
Tensor4 random_full_sym_tangent(Sampler& rng) {
    const Tensor2 s1 = rng.symmetric(), s2 = rng.symmetric();
    return otimes_downup(s1, s1) + otimes_downup(s2, s2) + 0.5 * outer(s1, s1);
}

} // namespace

TEST_CASE("hzj_tau_absolute building blocks") {
    Sampler rng(41);
    const Tensor4 c = random_full_sym_tangent(rng);

    // tau = 0 keeps only the weighted spatial tangent
    const double J = 1.7;
    CHECK(rel_diff(hzj_tau_absolute(c, Tensor2::zero(), J), J * c) < 1e-15);

    // c = 0, tau = 1 gives twice the symmetriser
    const Tensor4 h = hzj_tau_absolute(Tensor4::zero(), kId, 1.0);
    CHECK(rel_diff(h, 2.0 * Tensor4::identity_sym()) < 1e-15);
    CHECK(norm(to_mandel(h) - (Mandel6::identity() + Mandel6::identity())) < 1e-14);

    CHECK_THROWS_AS((void)hzj_tau_absolute(c, rng.tensor(), 1.0), InputAsymmetric);
    CHECK_THROWS_AS((void)hzj_tau_absolute(c, kId, 0.0), NonInvertible);
}

TEST_CASE("hzj_tau_absolute against the component-loop oracle") {
    const HenckyModel model({1.0, 1.0});
    const DeformationState st = make_state(Tensor2::diag(std::exp(1.0), 1, 1));
    const Tensor4 c = spatial_tangent(st, model.material_tangent(st));
    const Tensor2 tau = model.kirchhoff(st);
    const Tensor4 h = hzj_tau_absolute(c, tau, st.J);

    Tensor4 oracle;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double dik = i == k, djk = j == k, dil = i == l, djl = j == l;
                    oracle(i, j, k, l) = st.J * c(i, j, k, l) +
                                         0.5 * (dik * tau(j, l) + tau(i, l) * djk) +
                                         0.5 * (tau(i, k) * djl + dil * tau(j, k));
                }
    CHECK(rel_diff(h, oracle) < 1e-13);
}

TEST_CASE("hzj_tau_lagrangian") {
    Sampler rng(42);
    const LameParams p{1.0, 1.0};
    const Tensor4 C4 = isotropic_tangent(p);

    // at F = 1 the map is C4 . D + D tau + tau D
    const Tensor2 tau = rng.symmetric();
    const Tensor4 at_id = hzj_tau_lagrangian(make_state(kId), C4, tau);
    const Tensor4 expected =
        C4 + otimes_downup(kId, tau) + otimes_downup(tau, kId);
    CHECK(rel_diff(at_id, expected) < 1e-14);

    // equality with the absolute construction on random states
    const SvkModel svk(p);
    for (int rep = 0; rep < 20; ++rep) {
        const DeformationState st = make_state(rng.deformation_gradient(0.3, 3.0));
        const Tensor2 t = svk.kirchhoff(st);
        const Tensor4 habs = hzj_tau_absolute(spatial_tangent(st, C4), t, st.J);
        const Tensor4 hlag = hzj_tau_lagrangian(st, C4, t);
        CHECK(rel_diff(habs, hlag) < 1e-11);
    }
}

TEST_CASE("svk tangent constructions match the rotated-frame oracle") {
    Sampler rng(43);
    const SvkModel svk({1.0, 1.0});
    for (int rep = 0; rep < 5; ++rep) {
        const Tensor2 F0 = rng.deformation_gradient(0.6, 1.8);
        const Tensor2 G = rng.tensor(0.3);
        MotionPath path;
        path.label = "affine";
        path.F = [=](double t) { return F0 + t * G; };
        const double t = 0.5;
        const DeformationState st = make_state(path.F_at(t));
        const Tensor2 tau = svk.kirchhoff(st);
        const Tensor4 C4 = svk.material_tangent(st);
        const Tensor4 habs = hzj_tau_absolute(spatial_tangent(st, C4), tau, st.J);
        const Tensor4 hlag = hzj_tau_lagrangian(st, C4, tau);
        const Tensor2 d = sym(path.L_at(t));
        const Tensor2 oracle = rotated_frame_zj_tau(path, t, 1e-4, svk);
        CHECK(rel_diff(apply4(habs, d), oracle) < 1e-5);
        CHECK(rel_diff(apply4(hlag, d), oracle) < 1e-5);
    }
}

TEST_CASE("hzj_tau_direct_hencky") {
    const LameParams p{1.0, 1.0};

    // F = 1: isotropic stiffness with Mandel eigenvalues {2 mu x5, 2 mu + 3 lambda}
    const Tensor4 at_id = hzj_tau_direct_hencky(make_state(kId), p);
    CHECK(rel_diff(at_id, isotropic_tangent(p)) < 1e-13);

    // (1111) entry against an FD of tau(B) along B -> B + h (B D + D B)
    const LameParams p0{1.0, 0.0};
    const DeformationState st = make_state(Tensor2::diag(2, 1, 1));
    const Tensor4 h4 = hzj_tau_direct_hencky(st, p0);
    const Tensor2 d = Tensor2::diag(1, 0, 0);
    auto tau_of_B = [&](const Tensor2& b) { return p0.mu * spd_log(b); };
    const double h = 1e-6;
    const Tensor2 dir = st.B * d + d * st.B;
    const Tensor2 fd = (1.0 / (2.0 * h)) * (tau_of_B(st.B + h * dir) - tau_of_B(st.B - h * dir));
    CHECK(apply4(h4, d)(0, 0) == doctest::Approx(fd(0, 0)).epsilon(1e-6));

    // three-way agreement on random states
    Sampler rng(44);
    const HenckyModel model(p);
    for (int rep = 0; rep < 20; ++rep) {
        const DeformationState s = make_state(rng.deformation_gradient(0.3, 3.0));
        const TangentSet set = build_tangent_set(model, s);
        CHECK(set.res_absolute_vs_lagrangian < 1e-11);
        CHECK(set.res_absolute_vs_direct < 1e-6);
        CHECK(set.res_lagrangian_vs_direct < 1e-6);
    }
}

TEST_CASE("hzj_sigma_absolute") {
    Sampler rng(45);
    const Tensor4 c = random_full_sym_tangent(rng);

    CHECK(rel_diff(hzj_sigma_absolute(c, Tensor2::zero()), c) < 1e-15);

    // hydrostatic stress restores major symmetry
    const Tensor4 hydou = hzj_sigma_absolute(c, 0.7 * kId);
    CHECK(symmetry_flags(hydou, 1e-12).major);

    // the asymmetry is exactly the skew part of -sigma (x) 1
    for (int rep = 0; rep < 20; ++rep) {
        const Tensor2 sigma = rng.symmetric();
        const Tensor4 h = hzj_sigma_absolute(c, sigma);
        const Tensor4 so = outer(sigma, kId);
        const double res = norm(h - transpose4(h));
        const double skew_norm = norm(so - transpose4(so));
        CHECK(std::abs(res - skew_norm) <= 1e-13 * std::max(1.0, skew_norm));
        // same statement in Mandel form: skew(H) = -skew(sigma (x) 1)
        const Mandel6 sum = skew_part(to_mandel(h, 1e-8)) + skew_part(to_mandel(so, 1e-8));
        CHECK(norm(sum) <= 1e-13 * std::max(1.0, norm(to_mandel(h, 1e-8))));
    }
}

TEST_CASE("hzj_sigma_from_tau") {
    Sampler rng(46);
    const Tensor4 h_tau = random_full_sym_tangent(rng);
    const double J = 2.3;
    CHECK(rel_diff(hzj_sigma_from_tau(h_tau, Tensor2::zero(), J), (1.0 / J) * h_tau) <
          1e-15);

    // dual-route equality through a real model
    const HenckyModel model({1.0, 1.0});
    for (int rep = 0; rep < 20; ++rep) {
        const DeformationState st = make_state(rng.deformation_gradient(0.3, 3.0));
        const TangentSet set = build_tangent_set(model, st);
        CHECK(set.res_sigma_routes < 1e-11);
        CHECK(set.res_bridge < 1e-12);
    }

    // J = 1 with traceless sigma: restriction to tr(D) = 0 equals H_tau
    const IncompressibleHenckyModel inc(1.0);
    const double lam = 1.5;
    const DeformationState st =
        make_state(Tensor2::diag(lam, 1.0 / std::sqrt(lam), 1.0 / std::sqrt(lam)));
    const Tensor4 h = inc.hzj_tau(st);
    const Tensor2 sigma = inc.stresses(st).sigma;
    const Tensor4 hs = hzj_sigma_from_tau(h, sigma, st.J);
    for (int rep = 0; rep < 10; ++rep) {
        Tensor2 d = rng.symmetric();
        d = d - (trace(d) / 3.0) * kId;
        CHECK(rel_diff(apply4(h, d), apply4(hs, d)) < 1e-10);
    }
}

TEST_CASE("wang_li tensor equals the sigma tangent") {
    Sampler rng(47);
    const Tensor4 c = random_full_sym_tangent(rng);
    CHECK(rel_diff(wang_li_tensor(c, Tensor2::zero()), c) < 1e-16);
    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 sigma = rng.symmetric();
        CHECK(rel_diff(wang_li_tensor(c, sigma), hzj_sigma_absolute(c, sigma)) < 1e-14);
    }
    CHECK(symmetry_flags(wang_li_tensor(c, 1.3 * kId), 1e-12).major);
}

TEST_CASE("abaqus format tangent") {
    Sampler rng(48);
    const Tensor4 h = random_full_sym_tangent(rng);
    CHECK(rel_diff(abaqus_ddsdde(h, 1.0), h) < 1e-16);
    const double J = 2.7;
    CHECK(rel_diff(J * abaqus_ddsdde(h, J), h) < 1e-16);

    const HenckyModel model({1.0, 1.0});
    const TangentSet set = build_tangent_set(model, make_state(kId));
    CHECK(rel_diff(set.D_abaqus, isotropic_tangent({1.0, 1.0})) < 1e-9);
}

TEST_CASE("tangent set serialization round trip") {
    const HenckyModel model({1.0, 1.0});
    const DeformationState st = make_state(Tensor2::diag(1.4, 0.9, 1.1));
    const TangentSet set = build_tangent_set(model, st);

    const ordered_json j = tangent_set_to_json(set);
    CHECK(j.contains("H_zj_tau_absolute"));
    CHECK(j.contains("H_zj_tau_direct"));
    CHECK(j["residuals"]["wang_li"].get<double>() < 1e-14);
    const Tensor4 back = tensor4_from_json(j["H_zj_tau_absolute"]["tensor"]);
    CHECK(rel_diff(back, set.H_zj_tau_absolute) < 1e-16);
    CHECK(j["H_zj_tau_absolute"]["mandel"]["convention"] == kMandelConvention);

    const std::string csv = tangent_set_csv(set);
    CHECK(csv.find("H_zj_tau_absolute") != std::string::npos);
    CHECK(csv.find("H_zj_sigma_absolute") != std::string::npos);
}

TEST_CASE("apply4 action matches the defining contraction for every construction") {
    Sampler rng(49);
    const HenckyModel model({1.0, 1.0});
    const DeformationState st = make_state(rng.deformation_gradient(0.5, 2.0));
    const TangentSet set = build_tangent_set(model, st);
    const Tensor4 C4 = model.material_tangent(st);

    for (int rep = 0; rep < 100; ++rep) {
        const Tensor2 d = rng.symmetric();
        // lagrangian definition: F (C4 . [F^T D F]) F^T + D tau + tau D
        const Tensor2 expect = st.F * apply4(C4, transpose(st.F) * d * st.F) * transpose(st.F) +
                               d * set.tau + set.tau * d;
        CHECK(rel_diff(apply4(set.H_zj_tau_lagrangian, d), expect) < 1e-12);
        // direct definition: mu dlog + lambda tr(D) 1
        const Tensor2 direct = 1.0 * dlog_frechet(st.B, st.B * d + d * st.B) +
                               1.0 * trace(d) * kId;
        CHECK(rel_diff(apply4(*set.H_zj_tau_direct, d), direct) < 1e-12);
    }
}
