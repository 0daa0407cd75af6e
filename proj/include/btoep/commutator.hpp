#pragma once

#include <btoep/polynomial.hpp>
#include <btoep/rational.hpp>
#include <btoep/roots.hpp>
#include <btoep/sequences.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace btoep {

// The self-commutator of the operator with symbol z^m conj(z)^n (m >= n) is
// diagonal with eigenvalues lambda_k = lambda_eig(m, n, k); everything in
// this module is exact analysis of that sequence.

// Cubic P(y) governing the sign of the tail derivative: with x = y + (m - n),
// the derivative of the continuous tail eigenvalue function at x has the sign
// of P(y) for y > 0. Coefficients ascending; for m > n the three top
// coefficients are negative (checked), so sign changes are controlled by the
// constant term alone.
Polynomial cubic_P(int m, int n);

// Constant term of cubic_P, exact: positive iff the tail has an interior
// maximum past k = m - n.
Int tail_shape_d(int m, int n);

// Sign of tail_shape_d. Uses 128-bit integer arithmetic when m is small
// enough for it to be provably overflow-free, exact big integers otherwise.
int tail_shape_d_sign(long long m, long long n);

enum class Monotonicity { MonotoneDecreasing, UniqueInteriorMax, Degenerate };

std::string to_string(Monotonicity c);

struct MonotonicityReport {
    int m = 0, n = 0;
    Int d;                      // = tail_shape_d(m, n)
    Monotonicity classification = Monotonicity::Degenerate;
    // Location of the interior maximum of the continuous tail function, in
    // the original index coordinate; width < 1/4, so the nearest integers
    // are determined. Present only for UniqueInteriorMax.
    std::optional<RootInterval> critical_point;
};

// Classifies the tail k >= m - n of the eigenvalue sequence: strictly
// decreasing (d < 0), a unique interior maximum (d > 0, with the critical
// point isolated and refined), or the degenerate boundary case d = 0.
// Requires m > n >= 1.
MonotonicityReport classify_monotonicity(int m, int n);

struct CommutatorReport {
    int m = 0, n = 0;
    Rational norm;           // sup_k lambda_k, attained
    long long argmax_k = 0;  // smallest attaining index
    Rational head_max;       // max over 0 <= k < m - n (0 when the head is empty)
    Rational tail_max;       // max over k >= m - n
    MonotonicityReport monotonicity;
};

// Exact operator norm of the self-commutator: head maximum by enumeration,
// tail maximum from the monotonicity classification (boundary value, or the
// integers adjacent to the refined critical point). Requires m >= n >= 1;
// the result is checked to be < 1/2 for m > n (and is 0 for m = n).
CommutatorReport commutator_norm(int m, int n);

// Quartic R with 1/2 - lambda_k = R(k) / (2 (k+m+1)^2 (k+n+1)^2) on the tail
// branch; monic, exact expansion. Requires m >= n >= 1.
Polynomial quartic_R(int m, int n);

// R shifted to the tail origin: quartic_R evaluated at x + (m - n), so
// positivity of all coefficients proves lambda_k < 1/2 for every k >= m - n.
Polynomial quartic_R_shifted(int m, int n);

struct HalfBoundRecord {
    int m = 0, n = 0;
    // Coefficients of quartic_R_shifted below the monic leading term,
    // descending: x^3, x^2, x^1, x^0. All verified positive.
    Rational alpha, beta, gamma, delta;
    bool head_ok = false;       // lambda_k < 1/2 checked exactly on the head
    long long head_checked = 0; // number of head indices checked (= m - n)
};

// Proves sup_k lambda_k < 1/2: tail via positivity of every coefficient of
// the shifted quartic (throws std::logic_error if any fails, which would
// disprove the bound), head by exact enumeration. Requires m > n >= 1.
HalfBoundRecord verify_half_bound(int m, int n);

// Continuous interpolant of the tail branch of the eigenvalue sequence:
// F(x) = (x+1) [ (x+m-n+1)/(x+m+1)^2 - (x+n-m+1)/(x+n+1)^2 ]; agrees with
// lambda_eig(m, n, k) at integers k >= m - n.
Rational tail_eigenvalue_function(int m, int n, const Rational& x);

// Numerator of the derivative of the tail interpolant written over the
// squared denominator: with F = U/V, this is U'V - UV'. Proportional to
// cubic_P(m, n) shifted by m - n times (x+m+1)(x+n+1); exposed so the
// proportionality is testable.
Polynomial tail_derivative_numerator(int m, int n);

// Grid classification of the sign of tail_shape_d over 1 <= n < m <= m_max.
struct RegionScan {
    int m_max = 0;
    // shaded[n-1][m-2] == true iff tail_shape_d(m, n) > 0, for
    // 1 <= n <= m_max - 1 (rows) and 2 <= m <= m_max (columns); cells with
    // m <= n are always false.
    std::vector<std::vector<bool>> shaded;
    // For each m with a positive cell: (m, least n with d > 0).
    std::vector<std::pair<int, int>> boundary_samples;
    std::vector<std::pair<int, int>> zero_cells;  // (m, n) with d == 0
    // True iff for every m the positive cells form the contiguous block
    // [least n, m-1].
    bool contiguous = false;
    bool has_shaded = false;
    std::pair<int, int> slope_cell{0, 0};  // (M, least n) at the largest shaded M
    Rational fitted_slope;                 // M / least n at that M
};

RegionScan scan_region(int m_max, int threads = 1);

// The asymptotic slope of the region boundary: the unique real root of
// 6 x^3 - 13 x^2 + 6 x - 1, isolated and refined to width <= 1e-12
// (approximately 1.6097789567578734).
RootInterval boundary_slope();

}  // namespace btoep
