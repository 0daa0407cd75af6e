#pragma once

#include <btoep/rational.hpp>
#include <btoep/sequences.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace btoep {

// Truncation of the hyponormality quadratic form. After the worst-case
// (sign-aligned) reduction the form on a nonnegative vector u is
//   sum_k diag[k] u_k^2 + 2 sum_k band[k] u_k u_{k+offset}
// with diag[k] = sigma_k + |a|^2 omega_k and band[k] = -|a| |delta_k|;
// positivity of this real symmetric band form is equivalent to the original
// two-sided condition because sign-aligned vectors achieve the worst case.
struct QuadraticFormBand {
    SymbolParams params;
    long long K = 0;
    int offset = 0;  // = n + m
    std::vector<Rational> diag;  // length K
    std::vector<Rational> band;  // length max(0, K - offset)
};

QuadraticFormBand assemble_form(const SymbolParams& params, long long K);

enum class HypoStatus { CertifiedHyponormal, CertifiedNotHyponormal, Inconclusive };

std::string to_string(HypoStatus s);

struct TestVector {
    enum class Kind { Window, Eigenvector, Basis };
    Kind kind = Kind::Basis;
    long long support_start = 0;
    std::vector<Rational> values;  // u on [support_start, support_start + size)
};

// Exact value of the band form on a test vector; entries outside the
// truncation extend by zero. Used to validate every refutation witness.
Rational form_value(const QuadraticFormBand& form, const TestVector& u);

struct Certificate {
    long long K = 0;
    Rational min_pointwise;  // min over k <= K of the pointwise slack c_k
    bool tail_checked = false;
};

struct WindowRefutation {
    Rational t;       // radial exponent at the violating grid point (= 2^j)
    long long k1 = 0; // window start (= 4^j)
    long long k2 = 0; // window length parameter; support is [k1, k1+k2]
};

struct HypoVerdict {
    HypoStatus status = HypoStatus::Inconclusive;
    long long K = 0;
    bool exact_mode = true;
    std::optional<TestVector> witness;
    std::optional<Rational> witness_value;   // exact; <= 0 for refutations
    std::optional<Certificate> certificate;  // present for certifications
    std::optional<WindowRefutation> window;
    // -1 unless the pointwise certification scan found c_k <= 0 at some k;
    // that index is where a refutation search should look first.
    long long first_nonpositive_k = -1;
    std::string diagnostic;
};

// Pointwise-domination certificate: verifies exactly that
//   c_k = sigma_k + |a|^2 omega_k - |a| (|delta_k| + |delta_{k-n-m}|) > 0
// for all k <= K (the AM-GM split of the cross terms), then closes the
// k > K tail with rational envelopes reduced to a polynomial-positivity
// check. Returns CertifiedHyponormal only when both parts hold; never a
// false certificate. Requires K >= n + m.
HypoVerdict certify_hyponormal(const SymbolParams& params, long long K);

// Searches the truncated form for an exactly-verified nonpositive vector:
// basis vectors first (diag[k] <= 0), then the smallest eigenvector of each
// decoupled tridiagonal chain, rounded to exact rationals and re-evaluated.
// A nonpositive finite vector extends by zeros, so it is a global witness.
HypoVerdict refute_truncated(const SymbolParams& params, long long K);

// Search configuration for the window refutation of the family
// a(t) = c/t with n, m, s fixed: windows u = 1 on [k1, k1+k2] with
// k1 = 4^j, t = 2^j (exact square roots), j in [j_min, j_max].
struct WindowSearchConfig {
    Rational eta;      // |c| / (n + 2s), must exceed 1/2
    Rational epsilon;  // in (0, 1/2), satisfying the window inequality below
    long long k2 = 0;  // minimal length with 2 eta (k2-n-m+1)(1-eps) / ((k2+1)(1+eps)) > 1
    int j_min = 4;
    int j_max = 12;
};

// Builds a feasible configuration; throws std::invalid_argument when
// |c| <= (n+2s)/2 (the construction does not apply below the threshold).
WindowSearchConfig make_window_config(int n, int m, const Rational& s, const Rational& c);

// Runs the window search; throws std::invalid_argument if the supplied
// config violates its own feasibility inequality. On the first grid point
// whose exact window value is <= 0 returns CertifiedNotHyponormal with the
// window witness; Inconclusive after grid exhaustion.
HypoVerdict refute_window(int n, int m, const Rational& s, const Rational& c,
                          const WindowSearchConfig& config);

// Exact value of the form on the all-ones window [k1, k1+k2] (testability
// hook; refute_window uses this evaluation).
Rational window_form_value(const SymbolParams& params, long long k1, long long k2);

// Necessary bound from basis test vectors: |a|^2 <= inf_k sigma_k/(-omega_k).
struct BasisBound {
    Rational scan_min;       // min over the scanned prefix k <= scan_limit
    long long scan_argmin = 0;
    Rational limit;          // k -> inf value n(n+2s)/(m(m+2t))
    Rational value() const { return scan_min < limit ? scan_min : limit; }
};

BasisBound basis_vector_bound(const SymbolParams& params, long long scan_limit = 4096);

// Scans for a basis vector e_k with sigma_k + a2 * omega_k <= 0 (a2 = |a|^2,
// exact; a2 need not be a perfect square). Returns (k, value) when found.
std::optional<std::pair<long long, Rational>> basis_vector_refute(
    int n, int m, const Rational& s, const Rational& t, const Rational& a2, long long K);

// Exact coefficient-ratio bound min{((m-q+1)/(m+1))^2, ratio(k=1) term} from
// the eigenvalue-ratio comparison; verifies the min is attained by the first
// term. Requires m >= q + 1, q >= 0.
Rational kl_ratio_bound(int m, int q);

// lambda_k(m, m-1) / lambda_k(m-q, m-q-1), exact. Requires m - q >= 2 so the
// denominator family is nondegenerate, and k >= 0.
Rational lambda_ratio(int m, int q, long long k);

// k -> inf limit of lambda_ratio: (2m-1)/(2(m-q)-1).
Rational lambda_ratio_limit(int m, int q);

// --- certification envelopes (exact, valid beyond the stated index) --------
// sigma_k >= this for k >= n
Rational sigma_envelope_low(int n, const Rational& s, long long k);
// |omega_k| <= this for k >= m
Rational omega_envelope_high_abs(int m, const Rational& t, long long k);
// |delta_k| <= this for all k >= 0
Rational delta_envelope_high_abs(int n, int m, const Rational& s, const Rational& t, long long k);

// --- boundary sweep ---------------------------------------------------------
struct SweepOptions {
    Rational tol = Rational(1, 1000);
    long long K = 16384;     // strongest truncation tried per probe
    int max_iterations = 64;
};

struct SweepResult {
    bool converged = false;  // bracket width <= tol with certified lo, refuted hi
    Rational a_lo, a_hi;
    bool lo_certified = false;
    bool hi_refuted = false;
    int iterations = 0;
    std::string diagnostic;
};

// Bisects |a| between a certified-hyponormal lower end and a
// refuted upper end until the bracket width is <= tol. Midpoints that stay
// inconclusive at the working truncation (e.g. exactly-degenerate forms) are
// handled by probing nearby points; if no probe decides, returns the best
// bracket with converged = false.
SweepResult boundary_sweep(int n, int m, const Rational& s, const Rational& t,
                           const SweepOptions& options = {});

}  // namespace btoep
