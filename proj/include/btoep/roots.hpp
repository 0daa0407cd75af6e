#pragma once

#include <btoep/polynomial.hpp>
#include <btoep/rational.hpp>

#include <vector>

namespace btoep {

// Interval certified to contain exactly one distinct real root of the
// polynomial it was produced for. lo < hi and the polynomial changes sign
// between the endpoints, so bisection can shrink it to any width.
struct RootInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// All distinct roots in (0, inf), one sign-changing interval per root,
// disjoint and sorted ascending. Exact arithmetic throughout (Descartes
// sign-variation bisection on the squarefree part). Roots at 0 are not
// reported. Throws std::invalid_argument on the zero polynomial.
std::vector<RootInterval> isolate_positive_roots(const Polynomial& p);

// All distinct real roots: negative roots via x -> -x, an exact check at 0,
// then the positive roots. Same guarantees as isolate_positive_roots.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

// Shrinks a bracketing interval to width <= tol by exact bisection. The
// input must satisfy p(lo)*p(hi) < 0, or have an exact root at an endpoint;
// otherwise throws std::invalid_argument (bracket-invalid).
RootInterval refine_root(const Polynomial& p, const RootInterval& iv, const Rational& tol);

// True iff p(x) > 0 for every x > 0. Decided exactly: Descartes shortcut
// when the coefficient signs already settle it, complete root isolation
// otherwise. Requires p(0) >= 0 and positive leading coefficient to return
// true (p nonzero).
bool positive_on_positive_axis(const Polynomial& p);

}  // namespace btoep
