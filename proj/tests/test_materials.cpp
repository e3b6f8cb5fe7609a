#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/mandel.hpp"
#include "corotan/materials.hpp"
#include "corotan/sampling.hpp"

using namespace corotan;

namespace {

const Tensor2 kId = Tensor2::identity();

DeformationState random_state(Sampler& rng) {
    return make_state(rng.deformation_gradient(0.3, 3.0));
}

} // namespace

TEST_CASE("hencky energy") {
    const LameParams p{1.0, 0.0};
    CHECK(hencky_energy(make_state(kId), p) == 0.0);
    CHECK(hencky_energy(make_state(Tensor2::diag(std::exp(1.0), 1, 1)), p) ==
          doctest::Approx(1.0).epsilon(1e-13));

    // V-form and B-form agree once log B = 2 log V is substituted
    Sampler rng(21);
    const LameParams pr{1.3, 0.7};
    for (int rep = 0; rep < 50; ++rep) {
        const DeformationState st = random_state(rng);
        const double v_form = hencky_energy(st, pr);
        const double nb = norm(st.log_B), tb = trace(st.log_B);
        const double b_form = 0.25 * pr.mu * nb * nb + 0.125 * pr.lambda * tb * tb;
        CHECK(std::abs(v_form - b_form) <= 1e-13 * std::max(1.0, std::abs(v_form)));
    }
}

TEST_CASE("hencky kirchhoff stress") {
    const LameParams p{1.0, 1.0};
    CHECK(norm(hencky_tau(make_state(kId), p)) < 1e-15);
    const DeformationState st = make_state(Tensor2::diag(std::exp(1.0), 1, 1));
    CHECK(rel_diff(hencky_tau(st, p), Tensor2::diag(3, 1, 1)) < 1e-13);
}

TEST_CASE("hencky tau is the gradient of the energy in log V") {
    Sampler rng(22);
    const LameParams p{0.8, 1.4};
    const double h = 1e-6;
    auto w_hat = [&](const Tensor2& x) {
        const double n = norm(x), t = trace(x);
        return p.mu * n * n + 0.5 * p.lambda * t * t;
    };
    for (int rep = 0; rep < 20; ++rep) {
        const DeformationState st = random_state(rng);
        const Tensor2 tau = hencky_tau(st, p);
        for (const Tensor2& dir : sym_basis()) {
            const double fd =
                (w_hat(st.log_V + h * dir) - w_hat(st.log_V - h * dir)) / (2.0 * h);
            CHECK(std::abs(inner(tau, dir) - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("stress bundle consistency") {
    Sampler rng(23);
    const HenckyModel hencky({1.0, 1.0});
    const SvkModel svk({1.0, 1.0});
    for (const MaterialModel* model : {(const MaterialModel*)&hencky,
                                       (const MaterialModel*)&svk}) {
        for (int rep = 0; rep < 30; ++rep) {
            const DeformationState st = random_state(rng);
            const StressBundle b = model->stresses(st);
            CHECK(rel_diff(b.tau, st.J * b.sigma) < 1e-14);
            CHECK(rel_diff(b.tau, st.F * b.S2 * transpose(st.F)) < 1e-12);
            CHECK(rel_diff(b.S1, st.F * b.S2) < 1e-14);
            CHECK(is_symmetric(b.sigma, 1e-12));
            CHECK(is_symmetric(b.tau, 1e-12));
            CHECK(is_symmetric(b.S2, 1e-10));
        }
    }
}

TEST_CASE("hencky uniaxial cauchy stress is log(lam)/lam for mu = 1/2") {
    const HenckyModel model({0.5, 0.0});
    for (double lam : {0.5, 1.0, 1.5, std::exp(1.0), 4.0}) {
        const StressBundle b = model.stresses(make_state(Tensor2::diag(lam, 1, 1)));
        CHECK(b.sigma(0, 0) == doctest::Approx(std::log(lam) / lam).epsilon(1e-13));
        CHECK(std::abs(b.sigma(1, 1)) < 1e-14);
    }
}

TEST_CASE("svk second Piola-Kirchhoff stress") {
    Sampler rng(24);
    const LameParams p{1.1, 0.6};
    const SvkModel model(p);
    const double h = 1e-6;
    for (int rep = 0; rep < 20; ++rep) {
        const DeformationState st = random_state(rng);
        const Tensor2 E = 0.5 * (st.C - kId);
        const StressBundle b = model.stresses(st);
        CHECK(rel_diff(b.S2, p.lambda * trace(E) * kId + 2.0 * p.mu * E) < 1e-11);
        // S2 = dW/dE by finite differences of the energy in E
        auto w_of_E = [&](const Tensor2& e) {
            const double t = trace(e), n = norm(e);
            return p.mu * n * n + 0.5 * p.lambda * t * t;
        };
        for (const Tensor2& dir : sym_basis()) {
            const double fd = (w_of_E(E + h * dir) - w_of_E(E - h * dir)) / (2.0 * h);
            CHECK(std::abs(inner(b.S2, dir) - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("svk material tangent is the constant isotropic tensor") {
    Sampler rng(25);
    const LameParams p{1.0, 1.0};
    const SvkModel model(p);
    const Tensor4 expected = isotropic_tangent(p);
    for (int rep = 0; rep < 5; ++rep)
        CHECK(rel_diff(model.material_tangent(random_state(rng)), expected) < 1e-15);

    const Eig6 e = eig_sym6(to_mandel(expected));
    for (int i = 0; i < 5; ++i) CHECK(e.values[i] == doctest::Approx(2.0 * p.mu));
    CHECK(e.values[5] == doctest::Approx(2.0 * p.mu + 3.0 * p.lambda));
}

TEST_CASE("hencky material tangent reduces to the isotropic tensor at F = 1") {
    const LameParams p{1.0, 1.0};
    const HenckyModel model(p);
    const Tensor4 c = model.material_tangent(make_state(kId));
    CHECK(rel_diff(c, isotropic_tangent(p)) < 1e-9);
}

TEST_CASE("hencky material tangent against a plain FD jacobian oracle") {
    Sampler rng(26);
    const LameParams p{1.0, 1.0};
    const HenckyModel model(p);
    for (int rep = 0; rep < 10; ++rep) {
        const DeformationState st = random_state(rng);
        const Tensor4 c = model.material_tangent(st);
        const Tensor2 E = 0.5 * (st.C - kId);
        const double h = 1e-5;
        const Tensor4 oracle = materialize_sym([&](const Tensor2& dir) {
            return (1.0 / (2.0 * h)) *
                   (hencky_S2_of_E(E + h * dir, p) - hencky_S2_of_E(E - h * dir, p));
        });
        CHECK(rel_diff(c, oracle) < 1e-6);
    }
}

TEST_CASE("material tangents carry the hyperelastic symmetries") {
    Sampler rng(27);
    const HenckyModel hencky({1.0, 1.0});
    const SvkModel svk({1.0, 1.0});
    for (int rep = 0; rep < 10; ++rep) {
        const DeformationState st = random_state(rng);
        for (const MaterialModel* model : {(const MaterialModel*)&hencky,
                                           (const MaterialModel*)&svk}) {
            const SymmetryFlags f = symmetry_flags(model->material_tangent(st), 1e-9);
            CHECK(f.minor_left);
            CHECK(f.minor_right);
            CHECK(f.major);
        }
    }
}

TEST_CASE("spatial tangent push-forward") {
    Sampler rng(28);
    const LameParams p{1.0, 1.0};
    const Tensor4 C4 = isotropic_tangent(p);

    CHECK(rel_diff(spatial_tangent(make_state(kId), C4), C4) < 1e-15);

    for (int rep = 0; rep < 20; ++rep) {
        const DeformationState st = random_state(rng);
        const Tensor4 c = spatial_tangent(st, C4);

        // round trip through the inverse transform
        CHECK(rel_diff(material_from_spatial(st, c), C4) < 1e-11);

        // quintuple-loop component oracle
        Tensor4 oracle;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        double acc = 0.0;
                        for (int I = 0; I < 3; ++I)
                            for (int J = 0; J < 3; ++J)
                                for (int K = 0; K < 3; ++K)
                                    for (int L = 0; L < 3; ++L)
                                        acc += st.F(i, I) * st.F(j, J) * C4(I, J, K, L) *
                                               st.F(k, K) * st.F(l, L);
                        oracle(i, j, k, l) = acc / st.J;
                    }
        CHECK(rel_diff(c, oracle) < 1e-12);

        // all three symmetries survive the transform
        const SymmetryFlags f = symmetry_flags(c, 1e-12);
        CHECK(f.minor_left);
        CHECK(f.minor_right);
        CHECK(f.major);
    }
}

TEST_CASE("incompressible hencky") {
    const double mu = 1.2;
    const IncompressibleHenckyModel model(mu);

    CHECK(norm(model.kirchhoff(make_state(kId))) < 1e-15);

    const double lam = 1.8;
    const DeformationState st =
        make_state(Tensor2::diag(lam, 1.0 / std::sqrt(lam), 1.0 / std::sqrt(lam)));
    const Tensor2 tau = model.kirchhoff(st);
    const double l = std::log(lam);
    CHECK(rel_diff(tau, 2.0 * mu * Tensor2::diag(l, -0.5 * l, -0.5 * l)) < 1e-12);
    CHECK(std::abs(trace(tau)) <= 1e-10 * std::max(1.0, norm(tau)));

    CHECK_THROWS_AS((void)model.kirchhoff(make_state(Tensor2::diag(2, 1, 1))), NotIsochoric);
}

TEST_CASE("hill inequality for the hencky stress in the stable range") {
    Sampler rng(29);
    const LameParams p{1.0, 1.0};
    for (int rep = 0; rep < 2000; ++rep) {
        const Tensor2 x1 = spd_log(rng.spd_stretch());
        const Tensor2 x2 = spd_log(rng.spd_stretch());
        if (norm(x1 - x2) < 1e-8) continue;
        const Tensor2 t1 = 2.0 * p.mu * x1 + p.lambda * trace(x1) * kId;
        const Tensor2 t2 = 2.0 * p.mu * x2 + p.lambda * trace(x2) * kId;
        CHECK(inner(t1 - t2, x1 - x2) > 0.0);
    }
}

TEST_CASE("energy rate matches the stress power to second order") {
    Sampler rng(30);
    const HenckyModel model({1.0, 1.0});
    const double h = 1e-5;
    for (int rep = 0; rep < 10; ++rep) {
        const Tensor2 F0 = rng.deformation_gradient(0.5, 2.0);
        const Tensor2 G = rng.tensor(0.2);
        auto F_of = [&](double t) { return F0 + t * G; };
        auto E_of = [&](double t) {
            const Tensor2 f = F_of(t);
            return 0.5 * (transpose(f) * f - kId);
        };
        const double dW =
            (model.energy(make_state(F_of(h))) - model.energy(make_state(F_of(-h)))) /
            (2.0 * h);
        const Tensor2 Edot = (1.0 / (2.0 * h)) * (E_of(h) - E_of(-h));
        const Tensor2 S2 = model.stresses(make_state(F0)).S2;
        CHECK(std::abs(dW - inner(S2, Edot)) <= 1e-6 * std::max(1.0, std::abs(dW)));
    }
}

TEST_CASE("model factory") {
    CHECK(make_model("hencky", 1, 1)->name() == "hencky");
    CHECK(make_model("svk", 1, 1)->name() == "svk");
    CHECK(make_model("hencky_incompressible", 1, 0)->is_incompressible());
    CHECK_THROWS_AS((void)make_model("mooney", 1, 1), ConfigError);
}
