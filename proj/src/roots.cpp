#include <btoep/roots.hpp>

#include <algorithm>
#include <stdexcept>

namespace btoep {

namespace {

// Upper bound on all positive roots: Cauchy bound 1 + max|c_i|/|c_n|,
// rounded up to an integer.
Rational positive_root_bound(const Polynomial& p) {
    const Rational& lead = p.leading();
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / lead);
        if (r > best) best = r;
    }
    Rational bound = 1 + best;
    Int whole = num(bound) / den(bound);
    return Rational(whole + 1);
}

// Descartes bound on the number of roots of p in the open interval (a, b):
// map (a,b) onto (0,inf) via the Moebius substitution and count coefficient
// sign variations. 0 means no roots; 1 means exactly one (Vincent's theorem
// for squarefree input).
int interval_variation_bound(const Polynomial& p, const Rational& a, const Rational& b) {
    // q(x) = p(a + (b-a)x) maps [0,1] onto [a,b]
    const Polynomial q = p.taylor_shift(a).scale_arg(b - a);
    // variations of (1+x)^n q(1/(1+x)) count roots of q in (0,1)
    return q.reversed().taylor_shift(Rational(1)).sign_variations();
}

// Widens an exact root r of p into a sign-changing interval [r-w, r+w] that
// contains no other root of (squarefree) p and stays strictly inside
// (lo_limit, hi_limit), so it cannot collide with neighbouring brackets.
RootInterval widen_exact_root(const Polynomial& p, const Rational& r,
                              const Rational& lo_limit, const Rational& hi_limit) {
    Rational w = std::min({Rational(1, 2), (r - lo_limit) / 2, (hi_limit - r) / 2});
    for (;;) {
        const Rational lo = r - w, hi = r + w;
        const int slo = sign(p(lo)), shi = sign(p(hi));
        if (slo != 0 && shi != 0 && slo != shi &&
            interval_variation_bound(p, lo, hi) == 1)
            return {lo, hi};
        w /= 2;
    }
}

void isolate_recursive(const Polynomial& p, const Rational& a, const Rational& b,
                       std::vector<RootInterval>& out) {
    const int v = interval_variation_bound(p, a, b);
    if (v == 0) return;
    if (v == 1) {
        const int sa = sign(p(a)), sb = sign(p(b));
        if (sa != 0 && sb != 0 && sa != sb) {
            out.push_back({a, b});
            return;
        }
        // defensive: subdivision also pins the root down
    }
    const Rational mid = (a + b) / 2;
    if (p(mid) == 0) {
        // exact root at the split point: bracket it inside this cell, then
        // sweep the trimmed flanks, which exclude it and so stay disjoint
        const RootInterval cell = widen_exact_root(p, mid, a, b);
        isolate_recursive(p, a, cell.lo, out);
        out.push_back(cell);
        isolate_recursive(p, cell.hi, b, out);
        return;
    }
    isolate_recursive(p, a, mid, out);
    isolate_recursive(p, mid, b, out);
}

}  // namespace

std::vector<RootInterval> isolate_positive_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("isolate_positive_roots: zero polynomial");
    // strip roots at the origin, then make all remaining roots simple
    std::vector<Rational> c = p.coefficients();
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    Polynomial work(std::vector<Rational>(c.begin() + shift, c.end()));
    if (work.degree() <= 0) return {};
    work = work.squarefree_part();

    // When p itself vanishes at 0 the brackets must keep clear of the origin,
    // or their endpoints would sit on a root of p. Start below the least
    // positive root (reciprocal Cauchy bound of the reversed polynomial).
    Rational start(0);
    if (shift > 0) start = 1 / positive_root_bound(work.reversed());

    std::vector<RootInterval> out;
    isolate_recursive(work, start, positive_root_bound(work), out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<RootInterval> out;
    // negative roots: positive roots of p(-x), mapped back
    for (const auto& iv : isolate_positive_roots(p.scale_arg(Rational(-1))))
        out.push_back({-iv.hi, -iv.lo});
    std::reverse(out.begin(), out.end());
    const std::vector<RootInterval> positive = isolate_positive_roots(p);
    if (p.coeff(0) == 0) {
        // exact root at 0; widen against the origin-stripped polynomial,
        // staying between the neighbouring brackets on either side
        const Rational lo_limit = out.empty() ? Rational(-1) : out.back().hi;
        const Rational hi_limit = positive.empty() ? Rational(1) : positive.front().lo;
        std::vector<Rational> c = p.coefficients();
        std::size_t shift = 0;
        while (shift < c.size() && c[shift] == 0) ++shift;
        Polynomial stripped(std::vector<Rational>(c.begin() + shift, c.end()));
        if (stripped.degree() >= 1)
            out.push_back(widen_exact_root(stripped.squarefree_part() *
                                               Polynomial{Rational(0), Rational(1)},
                                           Rational(0), lo_limit, hi_limit));
        else
            out.push_back({Rational(-1, 2), Rational(1, 2)});
    }
    for (const auto& iv : positive) out.push_back(iv);
    return out;
}

RootInterval refine_root(const Polynomial& p, const RootInterval& iv, const Rational& tol) {
    if (tol <= 0) throw std::invalid_argument("refine_root: tolerance must be positive");
    Rational lo = iv.lo, hi = iv.hi;
    int slo = sign(p(lo)), shi = sign(p(hi));
    if (slo == 0)
        return {lo, lo + std::min(tol, hi - lo)};
    if (shi == 0)
        return {hi - std::min(tol, hi - lo), hi};
    if (slo == shi)
        throw std::invalid_argument(
            "refine_root: interval does not bracket a sign change");
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        const int sm = sign(p(mid));
        if (sm == 0) {
            // exact hit; return a width-<=tol interval still containing it
            Rational half = tol / 2;
            return {std::max(lo, mid - half), std::min(hi, mid + half)};
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

bool positive_on_positive_axis(const Polynomial& p) {
    if (p.is_zero()) return false;
    if (sign(p.leading()) <= 0) return false;
    if (sign(p(Rational(0))) < 0) return false;
    // all coefficients nonnegative: values on (0,inf) are >= leading term > 0
    if (p.sign_variations() == 0) return true;
    // otherwise decide by complete isolation: no positive root means no sign
    // change, so the positive leading behavior rules the whole axis; p(0)=0
    // is fine because the first nonzero derivative is then positive.
    return isolate_positive_roots(p).empty();
}

}  // namespace btoep
