#pragma once

#include <functional>
#include <string>

#include "corotan/tensor2.hpp"

namespace corotan {

/// Deformation history t -> F(t) with det F > 0 on [t0, t1]. Fdot may be
/// supplied analytically; otherwise a central difference with step 1e-6 is
/// used.
struct MotionPath {
    std::string label;
    std::function<Tensor2(double)> F;
    std::function<Tensor2(double)> Fdot; // may be empty
    double t0 = 0.0;
    double t1 = 1.0;

    Tensor2 F_at(double t) const { return F(t); }
    Tensor2 Fdot_at(double t) const;
    Tensor2 L_at(double t) const; // Fdot F^{-1}

    /// det F(t) > 0 sampled on 100 points of [t0, t1].
    bool valid() const;
};

/// diag(lambda(t), 1, 1) with lambda linear from lam0 to lam1 over [0, 1].
MotionPath uniaxial_path(double lam0, double lam1);
MotionPath equibiaxial_path(double lam0, double lam1);
/// diag(lambda, 1/lambda, 1).
MotionPath planar_path(double lam0, double lam1);
/// 1 + gamma(t) e1 (x) e2 with gamma linear from g0 to g1.
MotionPath shear_path(double g0, double g1);
/// Q(t) F0 with Q a rotation about `axis` at unit angular rate.
MotionPath rigid_rotation_path(const Tensor2& F0, int axis = 2);

/// Factory for the CLI names: uniaxial, equibiaxial, planar, shear,
/// rigid_rotation. Throws ConfigError on an unknown name.
MotionPath make_path(const std::string& name, double p0, double p1);

} // namespace corotan
