#pragma once

#include <btoep/rational.hpp>

namespace btoep {

// Parameters of the two-term symbol z^n |z|^{2s} + a zbar^m |z|^{2t}.
// s, t and |a| are stored exactly; decimal command-line entry embeds its
// binary64 value into the rationals, so "float mode" (float_entry) only
// selects rendering and the inexact evaluation path, never a lossy store.
struct SymbolParams {
    int n = 1;
    int m = 1;
    Rational s = 0;
    Rational t = 0;
    Rational abs_a = 0;   // |a|; only the modulus enters every criterion here
    bool float_entry = false;

    void validate() const;  // throws std::invalid_argument on bad ranges
};

// --- exact evaluation -------------------------------------------------------
// Two-branch closed forms for the diagonal weights sigma_k (analytic term),
// omega_k (co-analytic term, always negative) and the cross-term delta_k.
// All are exact rationals; k is the coefficient index.

Rational sigma(int n, const Rational& s, long long k);
Rational omega(int m, const Rational& t, long long k);
Rational delta(int n, int m, const Rational& s, const Rational& t, long long k);

// Numerator of delta_k over its (positive) four-factor denominator:
//   (n t - m s) k + n t (n+s+1) - m s (m+t+1).
// Its sign equals sign(delta_k) with no cancellation, which is what the
// refutation search needs to locate the delta > 0 regime.
Rational delta_sign_numerator(int n, int m, const Rational& s, const Rational& t, long long k);

// Commutator eigenvalues of [T*_{z^m zbar^n}, T_{z^m zbar^n}], m >= n >= 0:
//   k <  m-n : (k+1)(k+m-n+1)/(k+m+1)^2
//   k >= m-n : (k+1)[(k+m-n+1)/(k+m+1)^2 - (k+n-m+1)/(k+n+1)^2]
// identically 0 when m = n. Throws std::invalid_argument when m < n.
Rational lambda_eig(int m, int n, long long k);

// convenience overloads on SymbolParams
Rational sigma(const SymbolParams& p, long long k);
Rational omega(const SymbolParams& p, long long k);
Rational delta(const SymbolParams& p, long long k);

// --- binary64 evaluation ----------------------------------------------------
// Cancellation-free forms (single-quotient algebraic numerators on the
// k >= n / k >= m branches) so the floats stay accurate where the naive
// difference of two near-equal fractions would not be.

double sigma_f(int n, double s, long long k);
double omega_f(int m, double t, long long k);
double delta_f(int n, int m, double s, double t, long long k);

// --- leading asymptotics ----------------------------------------------------
enum class SeqKind { Sigma, Omega, Delta };

// Displayed leading terms of the large-k expansions:
//   sigma: n(n+2s)/k^3     omega: -2mt/(k+t)^3     delta: nt/(k(k+t)^2)
// Requires k >= 1; the delta form additionally requires t > 0.
double asymptotic_leading(SeqKind kind, const SymbolParams& p, long long k);

}  // namespace btoep
