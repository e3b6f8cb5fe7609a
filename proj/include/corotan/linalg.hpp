#pragma once

#include <array>

#include "corotan/tensor2.hpp"

namespace corotan {

/// Cyclic Jacobi diagonalisation of a symmetric n x n matrix held row major in
/// `a` (n <= 6). On return `values` holds eigenvalues ascending and `vectors`
/// the corresponding eigenvectors as columns. The single numerical kernel of
/// the library; columns are orthonormal to near machine precision.
void jacobi_eigen(int n, const double* a, double* values, double* vectors);

struct EigSym3 {
    std::array<double, 3> values{}; // ascending
    Tensor2 vectors;                // eigenvector i in column i
};

EigSym3 eig_sym3(const Tensor2& s);

/// Rebuild Q diag(f(values)) Q^T from an eigensystem.
Tensor2 spectral_apply(const EigSym3& e, const std::array<double, 3>& f);

/// Determinant of an n x n matrix (row major) by LU with partial pivoting.
double det_lu(int n, const double* a);

} // namespace corotan
