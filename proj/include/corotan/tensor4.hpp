#pragma once

#include <array>
#include <functional>

#include "corotan/tensor2.hpp"

namespace corotan {

/// Dense fourth-order tensor on R^{3x3}, 81 components T(i,j,k,l).
struct Tensor4 {
    std::array<double, 81> c{};

    double& operator()(int i, int j, int k, int l) { return c[27 * i + 9 * j + 3 * k + l]; }
    double operator()(int i, int j, int k, int l) const { return c[27 * i + 9 * j + 3 * k + l]; }

    static Tensor4 zero() { return {}; }

    /// Identity on symmetric tensors, Z -> sym(Z).
    static Tensor4 identity_sym();

    Tensor4& operator+=(const Tensor4& o) {
        for (int k = 0; k < 81; ++k) c[k] += o.c[k];
        return *this;
    }
    Tensor4& operator-=(const Tensor4& o) {
        for (int k = 0; k < 81; ++k) c[k] -= o.c[k];
        return *this;
    }
    Tensor4& operator*=(double s) {
        for (int k = 0; k < 81; ++k) c[k] *= s;
        return *this;
    }
    friend Tensor4 operator+(Tensor4 x, const Tensor4& y) { return x += y; }
    friend Tensor4 operator-(Tensor4 x, const Tensor4& y) { return x -= y; }
    friend Tensor4 operator*(double s, Tensor4 x) { return x *= s; }
    friend Tensor4 operator*(Tensor4 x, double s) { return x *= s; }
};

double norm(const Tensor4& t);
double rel_diff(const Tensor4& x, const Tensor4& y);

/// (P (x) Q) . Z = <Q, Z> P, components P_ij Q_kl.
Tensor4 outer(const Tensor2& p, const Tensor2& q);

/// (P (x)_ Q) . Z = P Z Q^T, components P_ik Q_jl.
Tensor4 otimes_down(const Tensor2& p, const Tensor2& q);

/// (P (x)^ Q) . Z = P Z^T Q^T, components P_il Q_jk.
Tensor4 otimes_up(const Tensor2& p, const Tensor2& q);

/// Half sum of the two special products; acts as Z -> sym(P Z Q^T).
Tensor4 otimes_downup(const Tensor2& p, const Tensor2& q);

/// T . Z, result_ij = sum_kl T_ijkl Z_kl.
Tensor2 apply4(const Tensor4& t, const Tensor2& z);

/// Adjoint with respect to the Frobenius pairing: result_klij = T_ijkl.
Tensor4 transpose4(const Tensor4& t);

/// Composition of linear maps, (T o S)_ijkl = sum_mn T_ijmn S_mnkl.
Tensor4 compose4(const Tensor4& t, const Tensor4& s);

struct SymmetryFlags {
    bool minor_left = false;
    bool minor_right = false;
    bool major = false;
    double minor_left_residual = 0.0;  // relative to max(1, ||T||)
    double minor_right_residual = 0.0;
    double major_residual = 0.0;
};

SymmetryFlags symmetry_flags(const Tensor4& t, double tol = 1e-10);

/// Materialise a linear map on Sym(3) into a Tensor4 via the six orthonormal
/// symmetric basis directions. The result has both minor symmetries whenever
/// the map returns symmetric values; its action agrees with the map on
/// symmetric arguments only.
Tensor4 materialize_sym(const std::function<Tensor2(const Tensor2&)>& map);

/// The six orthonormal symmetric basis tensors in Mandel pair order
/// (11, 22, 33, 12, 23, 31), off-diagonal entries 1/sqrt(2).
const std::array<Tensor2, 6>& sym_basis();

} // namespace corotan
