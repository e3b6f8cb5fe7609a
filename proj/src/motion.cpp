#include "corotan/motion.hpp"

#include <cmath>

#include "corotan/errors.hpp"
#include "corotan/kinematics.hpp"

namespace corotan {

Tensor2 MotionPath::Fdot_at(double t) const {
    if (Fdot) return Fdot(t);
    const double h = 1e-6;
    return (1.0 / (2.0 * h)) * (F(t + h) - F(t - h));
}

Tensor2 MotionPath::L_at(double t) const { return path_L(F(t), Fdot_at(t)); }

bool MotionPath::valid() const {
    for (int i = 0; i < 100; ++i) {
        const double t = t0 + (t1 - t0) * i / 99.0;
        if (!(det(F(t)) > 0.0)) return false;
    }
    return true;
}

namespace {

MotionPath stretch_path(std::string label, double lam0, double lam1,
                        Tensor2 (*shape)(double)) {
    MotionPath p;
    p.label = std::move(label);
    const double rate = lam1 - lam0;
    p.F = [=](double t) { return shape(lam0 + rate * t); };
    p.Fdot = [=](double t) {
        const double h = 1e-6;
        const double lam = lam0 + rate * t;
        return (rate / (2.0 * h)) * (shape(lam + h) - shape(lam - h));
    };
    return p;
}

} // namespace

MotionPath uniaxial_path(double lam0, double lam1) {
    MotionPath p;
    p.label = "uniaxial";
    const double rate = lam1 - lam0;
    p.F = [=](double t) { return Tensor2::diag(lam0 + rate * t, 1.0, 1.0); };
    p.Fdot = [=](double) { return Tensor2::diag(rate, 0.0, 0.0); };
    return p;
}

MotionPath equibiaxial_path(double lam0, double lam1) {
    MotionPath p;
    p.label = "equibiaxial";
    const double rate = lam1 - lam0;
    p.F = [=](double t) {
        const double lam = lam0 + rate * t;
        return Tensor2::diag(lam, lam, 1.0);
    };
    p.Fdot = [=](double) { return Tensor2::diag(rate, rate, 0.0); };
    return p;
}

MotionPath planar_path(double lam0, double lam1) {
    return stretch_path("planar", lam0, lam1,
                        [](double lam) { return Tensor2::diag(lam, 1.0 / lam, 1.0); });
}

MotionPath shear_path(double g0, double g1) {
    MotionPath p;
    p.label = "shear";
    const double rate = g1 - g0;
    p.F = [=](double t) {
        Tensor2 f = Tensor2::identity();
        f(0, 1) = g0 + rate * t;
        return f;
    };
    p.Fdot = [=](double) {
        Tensor2 fd;
        fd(0, 1) = rate;
        return fd;
    };
    return p;
}

MotionPath rigid_rotation_path(const Tensor2& F0, int axis) {
    if (axis < 0 || axis > 2) throw ConfigError("rigid_rotation_path: axis must be 0..2");
    MotionPath p;
    p.label = "rigid_rotation";
    auto rot = [axis](double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        Tensor2 q = Tensor2::identity();
        const int i = (axis + 1) % 3, j = (axis + 2) % 3;
        q(i, i) = c;
        q(i, j) = -s;
        q(j, i) = s;
        q(j, j) = c;
        return q;
    };
    p.F = [=](double t) { return rot(t) * F0; };
    p.Fdot = [=](double t) {
        const double c = std::cos(t), s = std::sin(t);
        Tensor2 qd;
        const int i = (axis + 1) % 3, j = (axis + 2) % 3;
        qd(i, i) = -s;
        qd(i, j) = -c;
        qd(j, i) = c;
        qd(j, j) = -s;
        return qd * F0;
    };
    return p;
}

MotionPath make_path(const std::string& name, double p0, double p1) {
    if (name == "uniaxial") return uniaxial_path(p0, p1);
    if (name == "equibiaxial") return equibiaxial_path(p0, p1);
    if (name == "planar") return planar_path(p0, p1);
    if (name == "shear") return shear_path(p0, p1);
    if (name == "rigid_rotation")
        return rigid_rotation_path(Tensor2::diag(1.3, 0.8, 1.1));
    throw ConfigError("unknown path '" + name + "'");
}

} // namespace corotan
