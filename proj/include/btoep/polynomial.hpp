#pragma once

#include <btoep/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace btoep {

struct PolynomialDivision;

// Dense univariate polynomial over the rationals, coefficients in ascending
// degree order. Trailing zero coefficients are stripped on construction, so
// degree() is always the true degree (-1 for the zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    // x + c, handy for building products of linear factors
    static Polynomial linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;  // Horner
    double eval_double(double x) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial derivative() const;

    // P(x + a), exact synthetic-division shift
    Polynomial taylor_shift(const Rational& a) const;

    // P(c*x); coefficients scaled by powers of c
    Polynomial scale_arg(const Rational& c) const;

    // Coefficients reversed: x^n * P(1/x) for n = degree()
    Polynomial reversed() const;

    // Number of sign changes in the nonzero coefficient sequence (Descartes)
    int sign_variations() const;

    // Euclidean division over the rationals; divisor must be nonzero
    PolynomialDivision divide(const Polynomial& divisor) const;

    // Monic gcd of this and rhs
    Polynomial gcd(const Polynomial& rhs) const;

    // this / gcd(this, this'): same roots, all simple
    Polynomial squarefree_part() const;

    std::string to_string() const;  // human-readable, ascending terms

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
    Polynomial quotient, remainder;
};

}  // namespace btoep
