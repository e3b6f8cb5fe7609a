#pragma once

#include <cstdint>
#include <random>

#include "corotan/tensor2.hpp"

namespace corotan {

/// Seeded generator for the random tensors used by checks and property tests.
/// Distributions are hand-rolled from raw 64-bit draws so that a seed pins the
/// sample stream independently of the standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    double gauss();

    Tensor2 tensor(double scale = 1.0);
    Tensor2 symmetric(double scale = 1.0);
    Tensor2 skew_tensor(double scale = 1.0);
    Tensor2 rotation();

    /// SPD stretch V = Q diag(exp u) Q^T with u uniform in [-1.5, 1.5],
    /// covering a decade of principal stretch in log space.
    Tensor2 spd_stretch(double log_range = 1.5);

    /// Deformation gradient R1 diag(exp u) R2 rescaled so that det F is
    /// uniform in [det_lo, det_hi].
    Tensor2 deformation_gradient(double det_lo, double det_hi);

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace corotan
