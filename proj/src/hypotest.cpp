#include <btoep/hypotest.hpp>

#include <btoep/banded_eigen.hpp>
#include <btoep/polynomial.hpp>
#include <btoep/roots.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btoep {

namespace {

Rational abs_delta(const SymbolParams& p, long long k) {
    return k < 0 ? Rational(0) : abs(delta(p.n, p.m, p.s, p.t, k));
}

Rational square_of(long long v) { return Rational(v) * Rational(v); }

// Positive part of the rounded float eigenvector as exact dyadic rationals;
// entries below `threshold`*max are dropped so witnesses stay compact.
std::vector<Rational> round_vector(const std::vector<double>& v, double threshold) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::fabs(x));
    std::vector<Rational> out(v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::fabs(v[i]);
        if (peak > 0.0 && a < threshold * peak) continue;
        if (a > 0.0) out[i] = rational_from_double(a);
    }
    return out;
}

TestVector trim_to_support(std::vector<Rational> values, TestVector::Kind kind) {
    std::size_t first = 0, last = values.size();
    while (first < last && values[first] == 0) ++first;
    while (last > first && values[last - 1] == 0) --last;
    TestVector out;
    out.kind = kind;
    out.support_start = static_cast<long long>(first);
    out.values.assign(values.begin() + first, values.begin() + last);
    return out;
}

}  // namespace

std::string to_string(HypoStatus s) {
    switch (s) {
        case HypoStatus::CertifiedHyponormal: return "CertifiedHyponormal";
        case HypoStatus::CertifiedNotHyponormal: return "CertifiedNotHyponormal";
        case HypoStatus::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

QuadraticFormBand assemble_form(const SymbolParams& params, long long K) {
    params.validate();
    const int f = params.n + params.m;
    if (K <= f)
        throw std::invalid_argument("assemble_form: truncation too small, need K > n + m");
    QuadraticFormBand form;
    form.params = params;
    form.K = K;
    form.offset = f;
    form.diag.reserve(static_cast<std::size_t>(K));
    form.band.reserve(static_cast<std::size_t>(K - f));
    const Rational a2 = params.abs_a * params.abs_a;
    for (long long k = 0; k < K; ++k)
        form.diag.push_back(sigma(params, k) + a2 * omega(params, k));
    for (long long k = 0; k + f < K; ++k)
        form.band.push_back(-params.abs_a * abs_delta(params, k));
    return form;
}

Rational form_value(const QuadraticFormBand& form, const TestVector& u) {
    if (u.values.empty())
        throw std::invalid_argument("form_value: empty test vector");
    if (u.support_start < 0)
        throw std::invalid_argument("form_value: negative support start");
    const SymbolParams& p = form.params;
    const Rational a2 = p.abs_a * p.abs_a;
    const int f = form.offset;
    const auto entry = [&](long long k) -> Rational {
        if (k < form.K) return form.diag[static_cast<std::size_t>(k)];
        return sigma(p, k) + a2 * omega(p, k);  // beyond the stored truncation
    };
    Rational value(0);
    const long long base = u.support_start;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const Rational& ui = u.values[i];
        if (ui == 0) continue;
        value += entry(base + static_cast<long long>(i)) * ui * ui;
        const std::size_t j = i + static_cast<std::size_t>(f);
        if (j < u.values.size() && u.values[j] != 0)
            value -= 2 * p.abs_a * abs_delta(p, base + static_cast<long long>(i)) * ui * u.values[j];
    }
    return value;
}

// --- certification ----------------------------------------------------------

namespace {

// Quartic (k + c)^4 ... built from linear factors, exact.
Polynomial linear_pow4(const Rational& c) {
    const Polynomial l = Polynomial::linear(c);
    const Polynomial l2 = l * l;
    return l2 * l2;
}

struct TailEnvelopes {
    Polynomial sigma_num, sigma_den;
    Polynomial omega_num, omega_den;
    Polynomial delta_num, delta_den;          // valid for all k >= 0
    Polynomial delta_num_shift, delta_den_shift;  // argument k - (n+m)
};

TailEnvelopes build_tail_envelopes(const SymbolParams& p) {
    const Rational s = p.s, t = p.t;
    const int n = p.n, m = p.m;
    TailEnvelopes env;

    // sigma_k >= n(n+2s)(k+1)/(k+n+s+1)^4 for k >= n
    env.sigma_num = Polynomial::linear(Rational(1)) * (Rational(n) * (n + 2 * s));
    env.sigma_den = linear_pow4(n + s + 1);

    // |omega_k| <= m((m+2t)(k+1) + (m+t)^2 + t^2)/(k+t+1)^4 for k >= m
    const Rational mt2 = (m + t) * (m + t) + t * t;
    env.omega_num = (Polynomial::linear(Rational(1)) * (m + 2 * t) +
                     Polynomial::constant(mt2)) * Rational(m);
    env.omega_den = linear_pow4(t + 1);

    // |delta_k| <= (c1 k + c0) / four positive factors, all k >= 0
    const Rational c1 = abs(n * t - m * s);
    const Rational c0 = abs(n * t * (n + s + 1) - m * s * (m + t + 1));
    env.delta_num = Polynomial{c0, c1};
    env.delta_den = Polynomial::linear(n + s + 1) * Polynomial::linear(Rational(n + m) + t + 1) *
                    Polynomial::linear(Rational(n + m) + s + 1) * Polynomial::linear(m + t + 1);

    const Rational shift(-(n + m));
    env.delta_num_shift = env.delta_num.taylor_shift(shift);
    env.delta_den_shift = env.delta_den.taylor_shift(shift);
    return env;
}

// Numerator of sigma_low - a^2 omega_high - a (delta_high + delta_high(k-f))
// over the (positive for k > K) common denominator.
Polynomial tail_slack_numerator(const SymbolParams& p) {
    const TailEnvelopes env = build_tail_envelopes(p);
    const Rational a = p.abs_a, a2 = p.abs_a * p.abs_a;
    return env.sigma_num * env.omega_den * env.delta_den * env.delta_den_shift -
           env.omega_num * env.sigma_den * env.delta_den * env.delta_den_shift * a2 -
           (env.delta_num * env.delta_den_shift + env.delta_num_shift * env.delta_den) *
               env.sigma_den * env.omega_den * a;
}

}  // namespace

Rational sigma_envelope_low(int n, const Rational& s, long long k) {
    if (k < n) throw std::invalid_argument("sigma_envelope_low: valid only for k >= n");
    const Rational d = k + n + s + 1;
    const Rational d2 = d * d;
    return Rational(n) * (n + 2 * s) * (k + 1) / (d2 * d2);
}

Rational omega_envelope_high_abs(int m, const Rational& t, long long k) {
    if (k < m) throw std::invalid_argument("omega_envelope_high_abs: valid only for k >= m");
    const Rational d = k + t + 1;
    const Rational d2 = d * d;
    return Rational(m) * ((m + 2 * t) * (k + 1) + (m + t) * (m + t) + t * t) / (d2 * d2);
}

Rational delta_envelope_high_abs(int n, int m, const Rational& s, const Rational& t, long long k) {
    if (k < 0) throw std::invalid_argument("delta_envelope_high_abs: requires k >= 0");
    const Rational c1 = abs(n * t - m * s);
    const Rational c0 = abs(n * t * (n + s + 1) - m * s * (m + t + 1));
    return (c1 * k + c0) /
           ((k + n + s + 1) * (Rational(k + n + m) + t + 1) * (Rational(k + n + m) + s + 1) *
            (k + m + t + 1));
}

HypoVerdict certify_hyponormal(const SymbolParams& params, long long K) {
    params.validate();
    const int f = params.n + params.m;
    if (K <= f)
        throw std::invalid_argument("certify_hyponormal: truncation too small, need K > n + m");

    HypoVerdict out;
    out.K = K;
    const Rational a = params.abs_a, a2 = a * a;

    bool degenerate = true;
    bool have_min = false;
    Rational min_c;
    long long first_bad = -1;
    for (long long k = 0; k <= K; ++k) {
        const Rational dk = sigma(params, k) + a2 * omega(params, k);
        const Rational cross = a * (abs_delta(params, k) + abs_delta(params, k - f));
        const Rational ck = dk - cross;
        if (!have_min || ck < min_c) {
            min_c = ck;
            have_min = true;
        }
        if (dk != 0 || cross != 0) degenerate = false;
        if (ck <= 0 && first_bad < 0) first_bad = k;
        if (first_bad >= 0 && !degenerate) break;
    }
    if (degenerate) {
        out.diagnostic = "degenerate form: every coefficient vanishes on the truncation";
        return out;
    }
    if (first_bad >= 0) {
        out.first_nonpositive_k = first_bad;
        out.diagnostic = "pointwise check failed at k = " + std::to_string(first_bad);
        return out;
    }

    // Tail: slack numerator must be positive for every k >= K+1. Substitute
    // k = (K+1) + x and decide positivity on x >= 0 exactly.
    const Polynomial shifted = tail_slack_numerator(params).taylor_shift(Rational(K + 1));
    const bool tail_ok = !shifted.is_zero() && sign(shifted(Rational(0))) > 0 &&
                         positive_on_positive_axis(shifted);
    if (!tail_ok) {
        out.diagnostic = "tail bound not established at K = " + std::to_string(K);
        return out;
    }

    out.status = HypoStatus::CertifiedHyponormal;
    out.certificate = Certificate{K, min_c, true};
    out.diagnostic = "pointwise slack positive through K and envelope tail positive beyond";
    return out;
}

// --- refutation -------------------------------------------------------------

HypoVerdict refute_truncated(const SymbolParams& params, long long K) {
    const QuadraticFormBand form = assemble_form(params, K);
    HypoVerdict out;
    out.K = K;

    bool degenerate = true;
    for (const auto& d : form.diag)
        if (d != 0) { degenerate = false; break; }
    if (degenerate)
        for (const auto& b : form.band)
            if (b != 0) { degenerate = false; break; }
    if (degenerate) {
        out.diagnostic = "degenerate form: every coefficient vanishes on the truncation";
        return out;
    }

    for (long long k = 0; k < K; ++k) {
        const Rational& d = form.diag[static_cast<std::size_t>(k)];
        if (d <= 0) {
            TestVector u;
            u.kind = TestVector::Kind::Basis;
            u.support_start = k;
            u.values = {Rational(1)};
            out.status = HypoStatus::CertifiedNotHyponormal;
            out.witness = u;
            out.witness_value = d;
            out.diagnostic = "basis vector e_" + std::to_string(k) + " has nonpositive weight";
            return out;
        }
    }

    std::vector<double> diag_f(form.diag.size()), band_f(form.band.size());
    for (std::size_t i = 0; i < form.diag.size(); ++i) diag_f[i] = to_double(form.diag[i]);
    for (std::size_t i = 0; i < form.band.size(); ++i) band_f[i] = to_double(form.band[i]);
    const BandedEigenPair eig =
        banded_min_eigenvalue(diag_f, band_f, static_cast<std::size_t>(form.offset));

    for (double threshold : {1e-18, 0.0}) {
        TestVector u = trim_to_support(round_vector(eig.vector, threshold),
                                       TestVector::Kind::Eigenvector);
        if (u.values.empty()) continue;
        const Rational value = form_value(form, u);
        if (value <= 0) {
            out.status = HypoStatus::CertifiedNotHyponormal;
            out.witness = std::move(u);
            out.witness_value = value;
            out.diagnostic = "rounded minimal eigenvector re-evaluates nonpositive";
            return out;
        }
    }

    out.diagnostic = "no nonpositive witness at truncation K = " + std::to_string(K) +
                     " (float lower bound " + std::to_string(eig.value) + ")";
    return out;
}

// --- window refutation ------------------------------------------------------

namespace {

bool window_inequality_holds(const Rational& eta, const Rational& eps, long long k2, int f) {
    if (!(eps > 0 && eps < Rational(1, 2))) return false;
    return 2 * eta * (k2 - f + 1) * (1 - eps) > (k2 + 1) * (1 + eps);
}

}  // namespace

WindowSearchConfig make_window_config(int n, int m, const Rational& s, const Rational& c) {
    if (n < 1 || m < 1) throw std::invalid_argument("make_window_config: n, m must be >= 1");
    if (s < 0) throw std::invalid_argument("make_window_config: s must be >= 0");
    const int f = n + m;
    WindowSearchConfig config;
    config.eta = abs(c) / (n + 2 * s);
    if (config.eta <= Rational(1, 2))
        throw std::invalid_argument(
            "make_window_config: window refutation requires |c| > (n + 2s)/2");

    Rational eps = std::min((2 * config.eta - 1) / 3, Rational(1, 2) - Rational(1, 64));
    // As eps -> 0 the margin tends to 2*eta > 1, so halving always lands on a
    // feasible value.
    while (!(eps > 0 && eps < Rational(1, 2) &&
             2 * config.eta * (1 - eps) > (1 + eps)))
        eps /= 2;
    config.epsilon = eps;

    // smallest k2 with 2 eta (k2 - f + 1)(1 - eps) > (k2 + 1)(1 + eps)
    const Rational r = 2 * config.eta * (1 - eps) / (1 + eps);
    const Rational threshold = (1 + r * (f - 1)) / (r - 1);
    Int floor_t = num(threshold) / den(threshold);
    long long k2 = floor_t.convert_to<long long>() + 1;
    if (k2 < f) k2 = f;
    while (!window_inequality_holds(config.eta, config.epsilon, k2, f)) ++k2;
    config.k2 = k2;
    return config;
}

Rational window_form_value(const SymbolParams& params, long long k1, long long k2) {
    params.validate();
    if (k1 < 0 || k2 < 0)
        throw std::invalid_argument("window_form_value: window indices must be >= 0");
    const Rational a2 = params.abs_a * params.abs_a;
    const int f = params.n + params.m;
    Rational value(0);
    for (long long k = k1; k <= k1 + k2; ++k)
        value += sigma(params, k) + a2 * omega(params, k);
    for (long long k = k1; k + f <= k1 + k2; ++k)
        value -= 2 * params.abs_a * abs_delta(params, k);
    return value;
}

HypoVerdict refute_window(int n, int m, const Rational& s, const Rational& c,
                          const WindowSearchConfig& config) {
    if (n < 1 || m < 1) throw std::invalid_argument("refute_window: n, m must be >= 1");
    if (s < 0) throw std::invalid_argument("refute_window: s must be >= 0");
    const int f = n + m;
    if (config.eta != abs(c) / (n + 2 * s))
        throw std::invalid_argument("refute_window: config eta does not match |c|/(n+2s)");
    if (config.eta <= Rational(1, 2))
        throw std::invalid_argument("refute_window: requires |c| > (n + 2s)/2");
    if (!window_inequality_holds(config.eta, config.epsilon, config.k2, f))
        throw std::invalid_argument("refute_window: config violates the window inequality");
    if (config.j_min < 1 || config.j_max < config.j_min)
        throw std::invalid_argument("refute_window: bad grid exponents");

    HypoVerdict out;
    for (int j = config.j_min; j <= config.j_max; ++j) {
        const long long k1 = 1LL << (2 * j);  // 4^j, so t = sqrt(k1) = 2^j exactly
        const Rational t = Rational(1LL << j);
        SymbolParams params;
        params.n = n;
        params.m = m;
        params.s = s;
        params.t = t;
        params.abs_a = abs(c) / t;
        const Rational value = window_form_value(params, k1, config.k2);
        if (value <= 0) {
            TestVector u;
            u.kind = TestVector::Kind::Window;
            u.support_start = k1;
            u.values.assign(static_cast<std::size_t>(config.k2) + 1, Rational(1));
            out.status = HypoStatus::CertifiedNotHyponormal;
            out.K = k1 + config.k2 + f + 1;
            out.witness = std::move(u);
            out.witness_value = value;
            out.window = WindowRefutation{t, k1, config.k2};
            out.diagnostic = "window vector nonpositive at t = " + btoep::to_string(t);
            return out;
        }
    }
    out.diagnostic = "window grid exhausted without a nonpositive value";
    return out;
}

// --- closed-form bounds -----------------------------------------------------

BasisBound basis_vector_bound(const SymbolParams& params, long long scan_limit) {
    params.validate();
    if (scan_limit < 0)
        throw std::invalid_argument("basis_vector_bound: scan limit must be >= 0");
    BasisBound out;
    for (long long k = 0; k <= scan_limit; ++k) {
        const Rational ratio = sigma(params, k) / -omega(params, k);
        if (k == 0 || ratio < out.scan_min) {
            out.scan_min = ratio;
            out.scan_argmin = k;
        }
    }
    out.limit = Rational(params.n) * (params.n + 2 * params.s) /
                (Rational(params.m) * (params.m + 2 * params.t));
    return out;
}

std::optional<std::pair<long long, Rational>> basis_vector_refute(
    int n, int m, const Rational& s, const Rational& t, const Rational& a2, long long K) {
    if (a2 < 0) throw std::invalid_argument("basis_vector_refute: |a|^2 must be >= 0");
    for (long long k = 0; k < K; ++k) {
        const Rational value = sigma(n, s, k) + a2 * omega(m, t, k);
        if (value <= 0) return std::make_pair(k, value);
    }
    return std::nullopt;
}

Rational kl_ratio_bound(int m, int q) {
    if (q < 0) throw std::invalid_argument("kl_ratio_bound: q must be >= 0");
    if (m < q + 1) throw std::invalid_argument("kl_ratio_bound: requires m >= q + 1");
    const Rational first = Rational(m - q + 1, m + 1) * Rational(m - q + 1, m + 1);
    const Rational second = (Rational(3) / square_of(m + 2) - Rational(1) / square_of(m + 1)) /
                            (Rational(3) / square_of(m - q + 2) - Rational(1) / square_of(m - q + 1));
    if (!(first <= second))
        throw std::logic_error("kl_ratio_bound: minimum not attained by the squared-ratio term");
    return first;
}

Rational lambda_ratio(int m, int q, long long k) {
    if (q < 0) throw std::invalid_argument("lambda_ratio: q must be >= 0");
    if (m - q < 2) throw std::invalid_argument("lambda_ratio: requires m - q >= 2");
    if (k < 0) throw std::invalid_argument("lambda_ratio: requires k >= 0");
    return lambda_eig(m, m - 1, k) / lambda_eig(m - q, m - q - 1, k);
}

Rational lambda_ratio_limit(int m, int q) {
    if (q < 0) throw std::invalid_argument("lambda_ratio_limit: q must be >= 0");
    if (m - q < 2) throw std::invalid_argument("lambda_ratio_limit: requires m - q >= 2");
    return Rational(2 * m - 1, 2 * (m - q) - 1);
}

// --- boundary sweep ---------------------------------------------------------

namespace {

std::vector<long long> truncation_schedule(std::vector<long long> raw, long long floor_K,
                                           long long cap) {
    std::vector<long long> out;
    for (long long K : raw) {
        K = std::clamp(K, floor_K, std::max(cap, floor_K));
        if (out.empty() || out.back() < K) out.push_back(K);
    }
    return out;
}

HypoStatus classify_point(const SymbolParams& base, const Rational& a, const SweepOptions& opt) {
    SymbolParams p = base;
    p.abs_a = a;
    const long long floor_K = p.n + p.m + 2;
    for (long long K : truncation_schedule({256, 2048, opt.K}, floor_K, opt.K)) {
        const HypoVerdict v = certify_hyponormal(p, K);
        if (v.status == HypoStatus::CertifiedHyponormal) return v.status;
        if (v.first_nonpositive_k >= 0) break;  // pointwise slack is truncation-independent
    }
    for (long long K : truncation_schedule({256, 4096, opt.K}, floor_K, opt.K)) {
        const HypoVerdict v = refute_truncated(p, K);
        if (v.status == HypoStatus::CertifiedNotHyponormal) return v.status;
    }
    return HypoStatus::Inconclusive;
}

}  // namespace

SweepResult boundary_sweep(int n, int m, const Rational& s, const Rational& t,
                           const SweepOptions& options) {
    SymbolParams base;
    base.n = n;
    base.m = m;
    base.s = s;
    base.t = t;
    base.abs_a = 0;
    base.validate();
    if (options.tol <= 0)
        throw std::invalid_argument("boundary_sweep: tolerance must be positive");

    SweepResult out;
    out.a_lo = 0;
    out.lo_certified =
        classify_point(base, Rational(0), options) == HypoStatus::CertifiedHyponormal;
    if (!out.lo_certified) {
        out.diagnostic = "could not certify the a = 0 endpoint";
        return out;
    }

    // find a refuted upper endpoint by doubling
    Rational hi(1);
    bool hi_found = false;
    for (int step = 0; step < 64; ++step) {
        const HypoStatus st = classify_point(base, hi, options);
        if (st == HypoStatus::CertifiedNotHyponormal) {
            hi_found = true;
            break;
        }
        if (st == HypoStatus::CertifiedHyponormal) out.a_lo = hi, out.lo_certified = true;
        hi *= 2;
    }
    out.a_hi = hi;
    out.hi_refuted = hi_found;
    if (!hi_found) {
        out.diagnostic = "no refutable upper endpoint found while doubling";
        return out;
    }

    while (out.a_hi - out.a_lo > options.tol && out.iterations < options.max_iterations) {
        ++out.iterations;
        const Rational mid = (out.a_lo + out.a_hi) / 2;
        const HypoStatus st = classify_point(base, mid, options);
        if (st == HypoStatus::CertifiedHyponormal) {
            out.a_lo = mid;
            continue;
        }
        if (st == HypoStatus::CertifiedNotHyponormal) {
            out.a_hi = mid;
            continue;
        }
        // Probe near the inconclusive midpoint (degenerate boundary points
        // land here); any certified point raises a_lo, any refuted lowers a_hi.
        const Rational width = out.a_hi - out.a_lo;
        bool decided = false;
        for (int j = 3; j <= 6 && !decided; ++j) {
            const Rational offset = width / (1LL << j);
            for (const Rational& probe : {mid - offset, mid + offset}) {
                if (probe <= out.a_lo || probe >= out.a_hi) continue;
                const HypoStatus ps = classify_point(base, probe, options);
                if (ps == HypoStatus::CertifiedHyponormal) {
                    out.a_lo = probe;
                    decided = true;
                    break;
                }
                if (ps == HypoStatus::CertifiedNotHyponormal) {
                    out.a_hi = probe;
                    decided = true;
                    break;
                }
            }
        }
        if (!decided) {
            out.diagnostic = "probes around " + btoep::to_string(mid) +
                             " stay inconclusive at the working truncation";
            return out;
        }
    }

    out.converged = out.a_hi - out.a_lo <= options.tol && out.lo_certified && out.hi_refuted;
    if (!out.converged && out.diagnostic.empty()) out.diagnostic = "iteration budget exhausted";
    return out;
}

}  // namespace btoep
