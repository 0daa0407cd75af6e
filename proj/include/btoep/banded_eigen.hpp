#pragma once

#include <cstddef>
#include <vector>

namespace btoep {

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;  // unit 2-norm
    double residual = 0.0;       // ||A v - value v||_inf / ||A||_inf-scale
};

// Smallest eigenvalue and eigenvector of the symmetric tridiagonal matrix
// with the given diagonal and first off-diagonal. Bisection on the Sturm
// (inertia) count followed by inverse iteration; accuracy is limited only by
// binary64. Throws std::invalid_argument on inconsistent lengths.
EigenPair tridiagonal_min_eigenpair(const std::vector<double>& diag,
                                    const std::vector<double>& offdiag);

// Number of eigenvalues of the tridiagonal matrix strictly below x
// (LDL^T inertia count). Exposed for certified sign checks in tests.
int tridiagonal_count_below(const std::vector<double>& diag,
                            const std::vector<double>& offdiag, double x);

struct BandedEigenPair {
    double value = 0.0;
    std::vector<double> vector;  // full length, unit 2-norm, zero off-chain
    std::size_t chain = 0;       // residue class (mod offset) achieving the min
    double residual = 0.0;
};

// Smallest eigenvalue of the K x K symmetric matrix with diagonal `diag` and
// one symmetric off-diagonal band at distance `offset`: A[k][k+offset] =
// band[k]. Such a matrix decouples into `offset` independent tridiagonal
// chains (indices congruent mod offset), so the minimum is the smallest of
// the per-chain minima. band must have length max(0, K - offset).
// Throws std::invalid_argument on offset < 1 or band-length mismatch.
BandedEigenPair banded_min_eigenvalue(const std::vector<double>& diag,
                                      const std::vector<double>& band,
                                      std::size_t offset);

}  // namespace btoep
