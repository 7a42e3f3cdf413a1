#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sxq {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Dense square complex matrix, row-major.
struct CMat {
    int n = 0;
    cvec a;

    CMat() = default;
    explicit CMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}

    cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static CMat identity(int dim);
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double max_abs_diff(const CMat& x, const CMat& y);
double hermiticity_defect(const CMat& m);

// Eigenvalues (ascending) and eigenvectors (columns of `vecs`) of a Hermitian
// matrix via cyclic Jacobi rotations. Sweep cap 100*n; throws NumericalError
// on non-convergence. The decomposition residual ||m - V diag(w) V^dag||_max
// is checked against `residual_tol`.
std::vector<double> jacobi_eigenvalues(const CMat& m, CMat* vecs = nullptr,
                                       double residual_tol = 1e-8);

// Modified Gram-Schmidt on the columns of an (rows x cols) matrix stored
// row-major, rows >= cols. Throws NumericalError on rank deficiency.
void orthonormalize_columns(cvec& m, int rows, int cols);

// Eigenvalues only (ascending) of a Hermitian matrix via Householder
// tridiagonalization followed by implicit-shift QL. Destroys `m`. Much
// faster than the Jacobi path when eigenvectors are not needed; used in
// optimizer inner loops.
std::vector<double> hermitian_eigenvalues_fast(CMat& m);

}  // namespace sxq
