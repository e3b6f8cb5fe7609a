#include "corotan/kinematics.hpp"

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/linalg.hpp"

namespace corotan {

namespace {

EigSym3 spd_eigen(const Tensor2& s, const char* who) {
    if (!is_symmetric(s, 1e-8))
        throw NotSPD(std::string(who) + ": input is not symmetric");
    const EigSym3 e = eig_sym3(s);
    const double floor = 1e-12 * std::max(1.0, e.values[2]);
    if (e.values[0] <= floor)
        throw NotSPD(std::string(who) + ": eigenvalue " + std::to_string(e.values[0]) +
                     " is not positive");
    return e;
}

} // namespace

DeformationState make_state(const Tensor2& F) {
    const double J = det(F);
    const double scale = norm(F);
    if (!(J > 1e-12 * std::max(1.0, scale * scale * scale)))
        throw NonInvertible("make_state: det F = " + std::to_string(J));

    DeformationState st;
    st.F = F;
    st.J = J;
    st.C = transpose(F) * F;
    st.B = F * transpose(F);

    const EigSym3 ec = spd_eigen(st.C, "make_state(C)");
    st.U = spectral_apply(ec, {std::sqrt(ec.values[0]), std::sqrt(ec.values[1]),
                               std::sqrt(ec.values[2])});
    const Tensor2 Uinv = spectral_apply(ec, {1.0 / std::sqrt(ec.values[0]),
                                             1.0 / std::sqrt(ec.values[1]),
                                             1.0 / std::sqrt(ec.values[2])});
    st.R = F * Uinv;

    // one eigensystem of B feeds V, log B and log V, so log B = 2 log V holds
    // to rounding by construction
    const EigSym3 eb = spd_eigen(st.B, "make_state(B)");
    st.V = spectral_apply(eb, {std::sqrt(eb.values[0]), std::sqrt(eb.values[1]),
                               std::sqrt(eb.values[2])});
    st.log_B = spectral_apply(eb, {std::log(eb.values[0]), std::log(eb.values[1]),
                                   std::log(eb.values[2])});
    st.log_V = 0.5 * st.log_B;
    return st;
}

Tensor2 spd_log(const Tensor2& s) {
    const EigSym3 e = spd_eigen(s, "spd_log");
    return spectral_apply(e, {std::log(e.values[0]), std::log(e.values[1]),
                              std::log(e.values[2])});
}

Tensor2 sym_exp(const Tensor2& s) {
    if (!is_symmetric(s, 1e-8)) throw NotSPD("sym_exp: input is not symmetric");
    const EigSym3 e = eig_sym3(s);
    return spectral_apply(e, {std::exp(e.values[0]), std::exp(e.values[1]),
                              std::exp(e.values[2])});
}

Tensor2 spd_sqrt(const Tensor2& s) {
    const EigSym3 e = spd_eigen(s, "spd_sqrt");
    return spectral_apply(e, {std::sqrt(e.values[0]), std::sqrt(e.values[1]),
                              std::sqrt(e.values[2])});
}

namespace {

// Divided-difference kernel of the logarithm on the eigenvalues of B. The
// kernel is built symmetric in (i, j); the log1p form avoids cancellation for
// close eigenvalue pairs, and pairs within 1e-9 relative distance use the
// confluent value.
std::array<std::array<double, 3>, 3> log_kernel(const std::array<double, 3>& lam) {
    std::array<std::array<double, 3>, 3> k{};
    for (int i = 0; i < 3; ++i) k[i][i] = 1.0 / lam[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double d = lam[i] - lam[j];
            if (std::abs(d) <= 1e-9 * std::max(lam[i], lam[j]))
                k[i][j] = k[j][i] = 2.0 / (lam[i] + lam[j]);
            else
                k[i][j] = k[j][i] = std::log1p(d / lam[j]) / d;
        }
    return k;
}

} // namespace

Tensor2 dlog_frechet(const Tensor2& B, const Tensor2& H) {
    const EigSym3 e = spd_eigen(B, "dlog_frechet");
    const auto k = log_kernel(e.values);
    const Tensor2 Hs = sym(H);
    const Tensor2 m = transpose(e.vectors) * Hs * e.vectors;
    Tensor2 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = k[i][j] * m(i, j);
    return e.vectors * r * transpose(e.vectors);
}

Tensor4 dlog_tensor(const Tensor2& B) {
    const EigSym3 e = spd_eigen(B, "dlog_tensor");
    const auto k = log_kernel(e.values);
    const Tensor2& q = e.vectors;
    // T = sum_ab k_ab S^ab (x) S^ab with S^ab = sym(q_a q_b^T); the kernel is
    // symmetric, so major symmetry is exact by construction
    Tensor4 t;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Tensor2 s;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    s(i, j) = 0.5 * (q(i, a) * q(j, b) + q(j, a) * q(i, b));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int kk = 0; kk < 3; ++kk)
                        for (int l = 0; l < 3; ++l)
                            t(i, j, kk, l) += k[a][b] * s(i, j) * s(kk, l);
        }
    return t;
}

VelocitySplit velocity_split(const Tensor2& L) { return {L, sym(L), skew(L)}; }

Tensor2 path_L(const Tensor2& F, const Tensor2& Fdot) {
    const double J = det(F);
    const double scale = norm(F);
    if (!(J > 1e-12 * std::max(1.0, scale * scale * scale)))
        throw NonInvertible("path_L: det F = " + std::to_string(J));
    return Fdot * inverse(F);
}

} // namespace corotan
