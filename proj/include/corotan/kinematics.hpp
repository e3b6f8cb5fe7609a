#pragma once

#include "corotan/tensor2.hpp"
#include "corotan/tensor4.hpp"

namespace corotan {

/// Every deformation measure derived from one F with det F > 0.
struct DeformationState {
    Tensor2 F;
    double J = 1.0; // det F
    Tensor2 C;      // F^T F
    Tensor2 B;      // F F^T
    Tensor2 U;      // sqrt(C)
    Tensor2 V;      // sqrt(B)
    Tensor2 R;      // F U^{-1}, rotation of the polar decomposition
    Tensor2 log_V;
    Tensor2 log_B;  // = 2 log_V
};

/// Builds the full state eigen-based. Throws NonInvertible when det F is at or
/// below the invertibility threshold.
DeformationState make_state(const Tensor2& F);

/// Matrix logarithm of a symmetric positive definite tensor. Throws NotSPD.
Tensor2 spd_log(const Tensor2& s);

/// Matrix exponential of a symmetric tensor (result is SPD).
Tensor2 sym_exp(const Tensor2& s);

/// SPD square root.
Tensor2 spd_sqrt(const Tensor2& s);

/// Directional derivative of spd_log at B in the symmetric direction H, via
/// divided differences in the eigenbasis of B.
Tensor2 dlog_frechet(const Tensor2& B, const Tensor2& H);

/// D_B log B materialised as a fourth-order tensor. Carries both minor
/// symmetries and major symmetry; its action on H equals
/// dlog_frechet(B, sym H).
Tensor4 dlog_tensor(const Tensor2& B);

struct VelocitySplit {
    Tensor2 L;
    Tensor2 D; // sym L
    Tensor2 W; // skew L
};

VelocitySplit velocity_split(const Tensor2& L);

/// L = Fdot F^{-1}. Throws NonInvertible.
Tensor2 path_L(const Tensor2& F, const Tensor2& Fdot);

} // namespace corotan
