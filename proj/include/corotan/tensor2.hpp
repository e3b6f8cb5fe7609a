#pragma once

#include <array>
#include <cmath>
#include <algorithm>

namespace corotan {

/// Dense 3x3 real tensor, row major. Plain value type; every operation is pure.
struct Tensor2 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[3 * i + j]; }
    double operator()(int i, int j) const { return a[3 * i + j]; }

    static Tensor2 zero() { return {}; }

    static Tensor2 identity() {
        Tensor2 t;
        t(0, 0) = t(1, 1) = t(2, 2) = 1.0;
        return t;
    }

    static Tensor2 diag(double x, double y, double z) {
        Tensor2 t;
        t(0, 0) = x;
        t(1, 1) = y;
        t(2, 2) = z;
        return t;
    }

    static Tensor2 from_rows(std::array<double, 9> rows) { return Tensor2{rows}; }

    Tensor2& operator+=(const Tensor2& o) {
        for (int k = 0; k < 9; ++k) a[k] += o.a[k];
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) {
        for (int k = 0; k < 9; ++k) a[k] -= o.a[k];
        return *this;
    }
    Tensor2& operator*=(double s) {
        for (int k = 0; k < 9; ++k) a[k] *= s;
        return *this;
    }

    friend Tensor2 operator+(Tensor2 x, const Tensor2& y) { return x += y; }
    friend Tensor2 operator-(Tensor2 x, const Tensor2& y) { return x -= y; }
    friend Tensor2 operator*(double s, Tensor2 x) { return x *= s; }
    friend Tensor2 operator*(Tensor2 x, double s) { return x *= s; }
    friend Tensor2 operator-(Tensor2 x) { return x *= -1.0; }

    /// Matrix product.
    friend Tensor2 operator*(const Tensor2& x, const Tensor2& y) {
        Tensor2 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

inline Tensor2 transpose(const Tensor2& x) {
    Tensor2 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = x(j, i);
    return r;
}

inline Tensor2 sym(const Tensor2& x) { return 0.5 * (x + transpose(x)); }
inline Tensor2 skew(const Tensor2& x) { return 0.5 * (x - transpose(x)); }

inline double trace(const Tensor2& x) { return x(0, 0) + x(1, 1) + x(2, 2); }

/// Frobenius inner product <X, Y> = tr(X Y^T).
inline double inner(const Tensor2& x, const Tensor2& y) {
    double s = 0.0;
    for (int k = 0; k < 9; ++k) s += x.a[k] * y.a[k];
    return s;
}

inline double norm(const Tensor2& x) { return std::sqrt(inner(x, x)); }

inline double det(const Tensor2& x) {
    return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
           x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
           x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

inline Tensor2 inverse(const Tensor2& x) {
    const double d = det(x);
    Tensor2 r;
    r(0, 0) = (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) / d;
    r(0, 1) = (x(0, 2) * x(2, 1) - x(0, 1) * x(2, 2)) / d;
    r(0, 2) = (x(0, 1) * x(1, 2) - x(0, 2) * x(1, 1)) / d;
    r(1, 0) = (x(1, 2) * x(2, 0) - x(1, 0) * x(2, 2)) / d;
    r(1, 1) = (x(0, 0) * x(2, 2) - x(0, 2) * x(2, 0)) / d;
    r(1, 2) = (x(0, 2) * x(1, 0) - x(0, 0) * x(1, 2)) / d;
    r(2, 0) = (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0)) / d;
    r(2, 1) = (x(0, 1) * x(2, 0) - x(0, 0) * x(2, 1)) / d;
    r(2, 2) = (x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0)) / d;
    return r;
}

inline bool is_symmetric(const Tensor2& x, double tol = 1e-10) {
    const double scale = std::max(1.0, norm(x));
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) r = std::max(r, std::abs(x(i, j) - x(j, i)));
    return r <= tol * scale;
}

inline bool is_finite(const Tensor2& x) {
    return std::all_of(x.a.begin(), x.a.end(), [](double v) { return std::isfinite(v); });
}

inline double max_abs(const Tensor2& x) {
    double m = 0.0;
    for (double v : x.a) m = std::max(m, std::abs(v));
    return m;
}

/// Relative Frobenius distance with unit floor, used by every tolerance check.
inline double rel_diff(const Tensor2& x, const Tensor2& y) {
    return norm(x - y) / std::max(1.0, std::max(norm(x), norm(y)));
}

} // namespace corotan
