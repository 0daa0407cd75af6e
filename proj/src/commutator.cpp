#include <btoep/commutator.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace btoep {

namespace {

void require_pair(int m, int n, bool strict, const char* who) {
    const int least = strict ? n + 1 : n;
    if (n < 1 || m < least)
        throw std::invalid_argument(std::string(who) +
                                    (strict ? ": requires m > n >= 1" : ": requires m >= n >= 1"));
}

Int cube(const Int& v) { return v * v * v; }

Int floor_rational(const Rational& x) {
    Int q = num(x) / den(x);
    if (x < 0 && q * den(x) != num(x)) --q;
    return q;
}

Int ceil_rational(const Rational& x) { return -floor_rational(-x); }

}  // namespace

Polynomial cubic_P(int m, int n) {
    require_pair(m, n, /*strict=*/false, "cubic_P");
    const Int M = m, N = n;
    const Int a3 = 2 * (N * N - M * M);
    const Int a2 = 3 * (N - M) * (3 * M * M - N * N + 2 * M + 2 * N);
    const Int a1 = (N - M) * (13 * M * M * M + 18 * M * M + 6 * M - 13 * M * M * N + 6 * N -
                              M * N * N - 6 * N * N + N * N * N);
    const Int a0 = tail_shape_d(m, n);
    if (m > n && !(a3 < 0 && a2 < 0 && a1 < 0))
        throw std::logic_error("cubic_P: expected negative leading coefficients for m > n");
    return Polynomial{Rational(a0), Rational(a1), Rational(a2), Rational(a3)};
}

Int tail_shape_d(int m, int n) {
    require_pair(m, n, /*strict=*/false, "tail_shape_d");
    const Int M = m, N = n;
    return cube(1 + M) * (M + N - M * N + 2 * M * M - N * N) -
           cube(2 * M + 1 - N) * (M + N - M * N + M * M);
}

int tail_shape_d_sign(long long m, long long n) {
    if (n < 1 || m < n) throw std::invalid_argument("tail_shape_d_sign: requires m >= n >= 1");
    if (m <= 1'000'000) {
        // |d| < 2^127 for m up to 1e6, so 128-bit arithmetic is exact here.
        const __int128 M = m, N = n;
        const __int128 c1 = (1 + M) * (1 + M) * (1 + M);
        const __int128 c2 = (2 * M + 1 - N) * (2 * M + 1 - N) * (2 * M + 1 - N);
        const __int128 d = c1 * (M + N - M * N + 2 * M * M - N * N) - c2 * (M + N - M * N + M * M);
        return d > 0 ? 1 : d < 0 ? -1 : 0;
    }
    return sign(tail_shape_d(static_cast<int>(m), static_cast<int>(n)));
}

std::string to_string(Monotonicity c) {
    switch (c) {
        case Monotonicity::MonotoneDecreasing: return "monotone-decreasing";
        case Monotonicity::UniqueInteriorMax: return "unique-interior-max";
        case Monotonicity::Degenerate: return "degenerate";
    }
    return "degenerate";
}

MonotonicityReport classify_monotonicity(int m, int n) {
    require_pair(m, n, /*strict=*/true, "classify_monotonicity");
    MonotonicityReport out;
    out.m = m;
    out.n = n;
    out.d = tail_shape_d(m, n);
    if (out.d < 0) {
        out.classification = Monotonicity::MonotoneDecreasing;
        return out;
    }
    if (out.d == 0) {
        out.classification = Monotonicity::Degenerate;
        return out;
    }
    out.classification = Monotonicity::UniqueInteriorMax;
    const Polynomial P = cubic_P(m, n);
    const auto roots = isolate_positive_roots(P);
    if (roots.size() != 1)
        throw std::logic_error("classify_monotonicity: expected a unique positive critical point");
    RootInterval iv = refine_root(P, roots.front(), Rational(1, 8));
    iv.lo += m - n;  // back to the original index coordinate
    iv.hi += m - n;
    out.critical_point = iv;
    return out;
}

CommutatorReport commutator_norm(int m, int n) {
    require_pair(m, n, /*strict=*/false, "commutator_norm");
    CommutatorReport out;
    out.m = m;
    out.n = n;
    if (m == n) {
        out.monotonicity = MonotonicityReport{m, n, Int(0), Monotonicity::Degenerate, std::nullopt};
        out.norm = out.head_max = out.tail_max = 0;
        out.argmax_k = 0;
        return out;
    }
    out.monotonicity = classify_monotonicity(m, n);

    const long long base = m - n;
    long long head_arg = 0;
    for (long long k = 0; k < base; ++k) {
        const Rational v = lambda_eig(m, n, k);
        if (k == 0 || v > out.head_max) {
            out.head_max = v;
            head_arg = k;
        }
    }

    std::vector<long long> candidates;
    if (out.monotonicity.classification == Monotonicity::UniqueInteriorMax) {
        const RootInterval& iv = *out.monotonicity.critical_point;
        const long long lo = floor_rational(iv.lo).convert_to<long long>() - 1;
        const long long hi = ceil_rational(iv.hi).convert_to<long long>() + 1;
        for (long long k = std::max(base, lo); k <= hi; ++k) candidates.push_back(k);
    }
    if (candidates.empty()) candidates.push_back(base);

    long long tail_arg = candidates.front();
    bool first = true;
    for (long long k : candidates) {
        const Rational v = lambda_eig(m, n, k);
        if (first || v > out.tail_max) {
            out.tail_max = v;
            tail_arg = k;
            first = false;
        }
    }

    if (out.head_max >= out.tail_max) {
        out.norm = out.head_max;
        out.argmax_k = head_arg;
    } else {
        out.norm = out.tail_max;
        out.argmax_k = tail_arg;
    }
    if (!(out.norm < Rational(1, 2)))
        throw std::logic_error("commutator_norm: computed norm is not below 1/2");
    return out;
}

Polynomial quartic_R(int m, int n) {
    require_pair(m, n, /*strict=*/false, "quartic_R");
    const Polynomial A = Polynomial::linear(Rational(m + 1));
    const Polynomial B = Polynomial::linear(Rational(n + 1));
    const Polynomial A2 = A * A, B2 = B * B;
    const Polynomial bracket = Polynomial::linear(Rational(m - n + 1)) * B2 -
                               Polynomial::linear(Rational(n - m + 1)) * A2;
    return A2 * B2 - Polynomial::linear(Rational(1)) * bracket * Rational(2);
}

Polynomial quartic_R_shifted(int m, int n) {
    return quartic_R(m, n).taylor_shift(Rational(m - n));
}

HalfBoundRecord verify_half_bound(int m, int n) {
    require_pair(m, n, /*strict=*/true, "verify_half_bound");
    const Polynomial Rs = quartic_R_shifted(m, n);
    if (Rs.degree() != 4 || Rs.leading() != 1)
        throw std::logic_error("verify_half_bound: shifted quartic is not monic of degree 4");
    HalfBoundRecord rec;
    rec.m = m;
    rec.n = n;
    rec.alpha = Rs.coeff(3);
    rec.beta = Rs.coeff(2);
    rec.gamma = Rs.coeff(1);
    rec.delta = Rs.coeff(0);
    if (!(rec.alpha > 0 && rec.beta > 0 && rec.gamma > 0 && rec.delta > 0))
        throw std::logic_error("verify_half_bound: a tail coefficient is not positive");
    rec.head_ok = true;
    rec.head_checked = m - n;
    for (long long k = 0; k < rec.head_checked; ++k)
        if (!(lambda_eig(m, n, k) < Rational(1, 2))) {
            rec.head_ok = false;
            break;
        }
    return rec;
}

Rational tail_eigenvalue_function(int m, int n, const Rational& x) {
    require_pair(m, n, /*strict=*/false, "tail_eigenvalue_function");
    if (x == Rational(-(m + 1)) || x == Rational(-(n + 1)))
        throw std::invalid_argument("tail_eigenvalue_function: pole of the interpolant");
    const Rational dm = (x + m + 1) * (x + m + 1);
    const Rational dn = (x + n + 1) * (x + n + 1);
    return (x + 1) * ((x + m - n + 1) / dm - (x + n - m + 1) / dn);
}

Polynomial tail_derivative_numerator(int m, int n) {
    require_pair(m, n, /*strict=*/false, "tail_derivative_numerator");
    const Polynomial A2 = Polynomial::linear(Rational(m + 1)) * Polynomial::linear(Rational(m + 1));
    const Polynomial B2 = Polynomial::linear(Rational(n + 1)) * Polynomial::linear(Rational(n + 1));
    const Polynomial U = Polynomial::linear(Rational(1)) *
                         (Polynomial::linear(Rational(m - n + 1)) * B2 -
                          Polynomial::linear(Rational(n - m + 1)) * A2);
    const Polynomial V = A2 * B2;
    return U.derivative() * V - U * V.derivative();
}

RegionScan scan_region(int m_max, int threads) {
    if (m_max < 2) throw std::invalid_argument("scan_region: requires m_max >= 2");
    threads = std::clamp(threads, 1, 64);

    // signs per column m (owned by one worker each, so no sharing)
    std::vector<std::vector<signed char>> columns(static_cast<std::size_t>(m_max - 1));
    const auto worker = [&](int start) {
        for (int m = 2 + start; m <= m_max; m += threads) {
            std::vector<signed char> col(static_cast<std::size_t>(m - 1));
            for (int n = 1; n < m; ++n)
                col[static_cast<std::size_t>(n - 1)] =
                    static_cast<signed char>(tail_shape_d_sign(m, n));
            columns[static_cast<std::size_t>(m - 2)] = std::move(col);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    RegionScan out;
    out.m_max = m_max;
    out.shaded.assign(static_cast<std::size_t>(m_max - 1),
                      std::vector<bool>(static_cast<std::size_t>(m_max - 1), false));
    out.contiguous = true;
    for (int m = 2; m <= m_max; ++m) {
        const auto& col = columns[static_cast<std::size_t>(m - 2)];
        int least_positive = 0;
        bool contiguous_here = true;
        for (int n = 1; n < m; ++n) {
            const int s = col[static_cast<std::size_t>(n - 1)];
            if (s > 0) {
                out.shaded[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 2)] = true;
                if (least_positive == 0) least_positive = n;
            } else {
                if (s == 0) out.zero_cells.emplace_back(m, n);
                if (least_positive != 0) contiguous_here = false;
            }
        }
        if (least_positive != 0) {
            out.boundary_samples.emplace_back(m, least_positive);
            out.has_shaded = true;
            out.slope_cell = {m, least_positive};
            if (!contiguous_here) out.contiguous = false;
        }
    }
    if (out.has_shaded)
        out.fitted_slope = Rational(out.slope_cell.first, out.slope_cell.second);
    return out;
}

RootInterval boundary_slope() {
    const Polynomial p{Rational(-1), Rational(6), Rational(-13), Rational(6)};
    const auto roots = isolate_real_roots(p);
    if (roots.size() != 1)
        throw std::logic_error("boundary_slope: expected a unique real root");
    const RootInterval iv = refine_root(p, roots.front(), Rational(1, 1'000'000'000'000LL));
    if (!(iv.lo > 1))
        throw std::logic_error("boundary_slope: root did not refine above 1");
    return iv;
}

}  // namespace btoep
