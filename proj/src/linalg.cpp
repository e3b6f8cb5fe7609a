#include "corotan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace corotan {

namespace {

double off_diag_sq(int n, const double* a) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return s;
}

} // namespace

void jacobi_eigen(int n, const double* a_in, double* values, double* vectors) {
    std::array<double, 36> a{};
    std::copy(a_in, a_in + n * n, a.begin());
    // symmetrise up front; callers may carry rounding-level asymmetry
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double m = 0.5 * (a[p * n + q] + a[q * n + p]);
            a[p * n + q] = a[q * n + p] = m;
        }

    std::array<double, 36> v{};
    for (int p = 0; p < n; ++p) v[p * n + p] = 1.0;

    double diag_sq = 0.0;
    for (int p = 0; p < n; ++p) diag_sq += a[p * n + p] * a[p * n + p];
    const double stop = 1e-30 * std::max(diag_sq, 1e-300);

    for (int sweep = 0; sweep < 64 && off_diag_sq(n, a.data()) > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a[p * n + p], aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a[r * n + p], arq = a[r * n + q];
                        a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
                        a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v[r * n + p], vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::array<int, 6> order{};
    std::iota(order.begin(), order.begin() + n, 0);
    std::sort(order.begin(), order.begin() + n,
              [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });
    for (int k = 0; k < n; ++k) {
        values[k] = a[order[k] * n + order[k]];
        for (int r = 0; r < n; ++r) vectors[r * n + k] = v[r * n + order[k]];
    }
}

EigSym3 eig_sym3(const Tensor2& s) {
    EigSym3 e;
    jacobi_eigen(3, s.a.data(), e.values.data(), e.vectors.a.data());
    return e;
}

Tensor2 spectral_apply(const EigSym3& e, const std::array<double, 3>& f) {
    Tensor2 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += e.vectors(i, k) * f[k] * e.vectors(j, k);
            r(i, j) = acc;
        }
    return r;
}

double det_lu(int n, const double* a_in) {
    std::vector<double> a(a_in, a_in + n * n);
    double d = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (a[pivot * n + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            d = -d;
        }
        d *= a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double m = a[r * n + col] / a[col * n + col];
            for (int c = col; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
        }
    }
    return d;
}

} // namespace corotan
