#include "corotan/mandel.hpp"

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/linalg.hpp"

namespace corotan {

namespace {

constexpr int kPairI[6] = {0, 1, 2, 0, 1, 2};
constexpr int kPairJ[6] = {0, 1, 2, 1, 2, 0};

int pair_index(int i, int j) {
    static constexpr int tbl[3][3] = {{0, 3, 5}, {3, 1, 4}, {5, 4, 2}};
    return tbl[i][j];
}

double weight(int a) { return a < 3 ? 1.0 : std::sqrt(2.0); }

} // namespace

double norm(const Mandel6& m) {
    double s = 0.0;
    for (double v : m.m) s += v * v;
    return std::sqrt(s);
}

Vec6 mandel_vec(const Tensor2& s) {
    Vec6 v{};
    for (int a = 0; a < 6; ++a)
        v[a] = weight(a) * 0.5 * (s(kPairI[a], kPairJ[a]) + s(kPairJ[a], kPairI[a]));
    return v;
}

Tensor2 from_mandel_vec(const Vec6& v) {
    Tensor2 s;
    for (int a = 0; a < 6; ++a) {
        const double x = v[a] / weight(a);
        s(kPairI[a], kPairJ[a]) = x;
        s(kPairJ[a], kPairI[a]) = x;
    }
    return s;
}

Mandel6 to_mandel(const Tensor4& t, double tol) {
    const SymmetryFlags f = symmetry_flags(t, tol);
    if (!f.minor_left || !f.minor_right)
        throw NotMinorSymmetric("to_mandel: tensor lacks a minor symmetry (left residual " +
                                std::to_string(f.minor_left_residual) + ", right residual " +
                                std::to_string(f.minor_right_residual) + ")");
    Mandel6 m;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            m(a, b) = weight(a) * weight(b) * t(kPairI[a], kPairJ[a], kPairI[b], kPairJ[b]);
    return m;
}

Tensor4 from_mandel(const Mandel6& m) {
    Tensor4 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const int a = pair_index(i, j);
                    const int b = pair_index(k, l);
                    t(i, j, k, l) = m(a, b) / (weight(a) * weight(b));
                }
    return t;
}

Mandel6 sym_part(const Mandel6& m) {
    Mandel6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r(i, j) = 0.5 * (m(i, j) + m(j, i));
    return r;
}

Mandel6 skew_part(const Mandel6& m) {
    Mandel6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r(i, j) = 0.5 * (m(i, j) - m(j, i));
    return r;
}

Eig6 eig_sym6(const Mandel6& m, double tol) {
    Eig6 e;
    e.symmetrised = norm(skew_part(m)) > tol * std::max(1.0, norm(m));
    const Mandel6 s = sym_part(m);
    std::array<double, 36> vecs{};
    jacobi_eigen(6, s.m.data(), e.values.data(), vecs.data());
    return e;
}

double det6(const Mandel6& m) { return det_lu(6, m.m.data()); }

double min_eig_traceless(const Mandel6& m) {
    // orthonormal basis of the complement of vec(identity) = (1,1,1,0,0,0)/sqrt3
    static const double basis[5][6] = {
        {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0, 0, 0, 0},
        {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0), 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
    };
    const Mandel6 s = sym_part(m);
    double a5[25];
    for (int p = 0; p < 5; ++p)
        for (int q = 0; q < 5; ++q) {
            double acc = 0.0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) acc += basis[p][i] * s(i, j) * basis[q][j];
            a5[p * 5 + q] = acc;
        }
    double values[5], vecs[25];
    jacobi_eigen(5, a5, values, vecs);
    return values[0];
}

} // namespace corotan
