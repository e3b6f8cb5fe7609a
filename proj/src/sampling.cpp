#include "corotan/sampling.hpp"

#include <cmath>

namespace corotan {

double Sampler::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Tensor2 Sampler::tensor(double scale) {
    Tensor2 t;
    for (double& v : t.a) v = scale * gauss();
    return t;
}

Tensor2 Sampler::symmetric(double scale) { return sym(tensor(scale)); }

Tensor2 Sampler::skew_tensor(double scale) { return skew(tensor(scale)); }

Tensor2 Sampler::rotation() {
    // Gram-Schmidt on a Gaussian matrix, then fix orientation
    Tensor2 g = tensor();
    std::array<std::array<double, 3>, 3> col{};
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) col[c][r] = g(r, c);
    for (int c = 0; c < 3; ++c) {
        for (int p = 0; p < c; ++p) {
            double dot = 0.0;
            for (int r = 0; r < 3; ++r) dot += col[c][r] * col[p][r];
            for (int r = 0; r < 3; ++r) col[c][r] -= dot * col[p][r];
        }
        double len = 0.0;
        for (int r = 0; r < 3; ++r) len += col[c][r] * col[c][r];
        len = std::sqrt(len);
        if (len < 1e-12) {
            // essentially degenerate draw; restart with fresh randomness
            return rotation();
        }
        for (int r = 0; r < 3; ++r) col[c][r] /= len;
    }
    Tensor2 q;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) q(r, c) = col[c][r];
    if (det(q) < 0.0)
        for (int r = 0; r < 3; ++r) q(r, 2) = -q(r, 2);
    return q;
}

Tensor2 Sampler::spd_stretch(double log_range) {
    const Tensor2 q = rotation();
    const Tensor2 d = Tensor2::diag(std::exp(uniform(-log_range, log_range)),
                                    std::exp(uniform(-log_range, log_range)),
                                    std::exp(uniform(-log_range, log_range)));
    return q * d * transpose(q);
}

Tensor2 Sampler::deformation_gradient(double det_lo, double det_hi) {
    const Tensor2 r1 = rotation();
    const Tensor2 r2 = rotation();
    const Tensor2 d = Tensor2::diag(std::exp(uniform(-0.6, 0.6)),
                                    std::exp(uniform(-0.6, 0.6)),
                                    std::exp(uniform(-0.6, 0.6)));
    Tensor2 f = r1 * d * r2;
    const double target = uniform(det_lo, det_hi);
    const double scale = std::cbrt(target / det(f));
    return scale * f;
}

} // namespace corotan
