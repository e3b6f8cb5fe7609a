#include "corotan/tensor4.hpp"

#include <cmath>

namespace corotan {

Tensor4 Tensor4::identity_sym() {
    return otimes_downup(Tensor2::identity(), Tensor2::identity());
}

double norm(const Tensor4& t) {
    double s = 0.0;
    for (double v : t.c) s += v * v;
    return std::sqrt(s);
}

double rel_diff(const Tensor4& x, const Tensor4& y) {
    return norm(x - y) / std::max(1.0, std::max(norm(x), norm(y)));
}

Tensor4 outer(const Tensor2& p, const Tensor2& q) {
    Tensor4 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) t(i, j, k, l) = p(i, j) * q(k, l);
    return t;
}

Tensor4 otimes_down(const Tensor2& p, const Tensor2& q) {
    Tensor4 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) t(i, j, k, l) = p(i, k) * q(j, l);
    return t;
}

Tensor4 otimes_up(const Tensor2& p, const Tensor2& q) {
    Tensor4 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) t(i, j, k, l) = p(i, l) * q(j, k);
    return t;
}

Tensor4 otimes_downup(const Tensor2& p, const Tensor2& q) {
    Tensor4 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    t(i, j, k, l) = 0.5 * (p(i, k) * q(j, l) + q(i, l) * p(j, k));
    return t;
}

Tensor2 apply4(const Tensor4& t, const Tensor2& z) {
    Tensor2 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) s += t(i, j, k, l) * z(k, l);
            r(i, j) = s;
        }
    return r;
}

Tensor4 transpose4(const Tensor4& t) {
    Tensor4 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) r(k, l, i, j) = t(i, j, k, l);
    return r;
}

Tensor4 compose4(const Tensor4& t, const Tensor4& s) {
    Tensor4 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    double acc = 0.0;
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n) acc += t(i, j, m, n) * s(m, n, k, l);
                    r(i, j, k, l) = acc;
                }
    return r;
}

SymmetryFlags symmetry_flags(const Tensor4& t, double tol) {
    const double scale = std::max(1.0, norm(t));
    double rl = 0.0, rr = 0.0, rm = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double v = t(i, j, k, l);
                    rl = std::max(rl, std::abs(v - t(j, i, k, l)));
                    rr = std::max(rr, std::abs(v - t(i, j, l, k)));
                    rm = std::max(rm, std::abs(v - t(k, l, i, j)));
                }
    SymmetryFlags f;
    f.minor_left_residual = rl / scale;
    f.minor_right_residual = rr / scale;
    f.major_residual = rm / scale;
    f.minor_left = f.minor_left_residual <= tol;
    f.minor_right = f.minor_right_residual <= tol;
    f.major = f.major_residual <= tol;
    return f;
}

const std::array<Tensor2, 6>& sym_basis() {
    static const std::array<Tensor2, 6> basis = [] {
        const double r = 1.0 / std::sqrt(2.0);
        std::array<Tensor2, 6> b{};
        b[0](0, 0) = 1.0;
        b[1](1, 1) = 1.0;
        b[2](2, 2) = 1.0;
        b[3](0, 1) = b[3](1, 0) = r;
        b[4](1, 2) = b[4](2, 1) = r;
        b[5](2, 0) = b[5](0, 2) = r;
        return b;
    }();
    return basis;
}

Tensor4 materialize_sym(const std::function<Tensor2(const Tensor2&)>& map) {
    Tensor4 t;
    for (const Tensor2& e : sym_basis()) {
        const Tensor2 image = map(e);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) t(i, j, k, l) += image(i, j) * e(k, l);
    }
    return t;
}

} // namespace corotan
