#pragma once

#include <array>

#include "corotan/tensor2.hpp"
#include "corotan/tensor4.hpp"

namespace corotan {

inline constexpr const char* kMandelConvention = "mandel-sqrt2-112233122331";

using Vec6 = std::array<double, 6>;

/// 6x6 image of a minor-symmetric fourth-order tensor in the orthonormal
/// Mandel basis, pair order (11, 22, 33, 12, 23, 31), off-diagonal weight
/// sqrt(2). Matrix symmetry of the image is exactly major symmetry of the
/// tensor, and eigenvalues are preserved.
struct Mandel6 {
    std::array<double, 36> m{};

    double& operator()(int i, int j) { return m[6 * i + j]; }
    double operator()(int i, int j) const { return m[6 * i + j]; }

    static Mandel6 identity() {
        Mandel6 r;
        for (int i = 0; i < 6; ++i) r(i, i) = 1.0;
        return r;
    }

    Mandel6& operator+=(const Mandel6& o) {
        for (int k = 0; k < 36; ++k) m[k] += o.m[k];
        return *this;
    }
    Mandel6& operator-=(const Mandel6& o) {
        for (int k = 0; k < 36; ++k) m[k] -= o.m[k];
        return *this;
    }
    friend Mandel6 operator+(Mandel6 x, const Mandel6& y) { return x += y; }
    friend Mandel6 operator-(Mandel6 x, const Mandel6& y) { return x -= y; }
};

double norm(const Mandel6& m);

/// vec(S) = (S11, S22, S33, sqrt2 S12, sqrt2 S23, sqrt2 S31); preserves the
/// Frobenius inner product on symmetric tensors.
Vec6 mandel_vec(const Tensor2& s);

Tensor2 from_mandel_vec(const Vec6& v);

/// Throws NotMinorSymmetric when a minor-symmetry residual exceeds tol; a
/// silent projection would hide genuine asymmetry.
Mandel6 to_mandel(const Tensor4& t, double tol = 1e-10);

/// Minor-symmetric tensor with the given Mandel image.
Tensor4 from_mandel(const Mandel6& m);

Mandel6 sym_part(const Mandel6& m);
Mandel6 skew_part(const Mandel6& m);

struct Eig6 {
    Vec6 values{};          // ascending
    bool symmetrised = false; // input was symmetrised before solving
};

/// Eigenvalues of sym(M), ascending. Positive definite iff values[0] > 0.
Eig6 eig_sym6(const Mandel6& m, double tol = 1e-10);

double det6(const Mandel6& m);

/// Min eigenvalue of sym(M) restricted to the 5-dimensional traceless
/// subspace (orthogonal complement of vec(identity)).
double min_eig_traceless(const Mandel6& m);

} // namespace corotan
