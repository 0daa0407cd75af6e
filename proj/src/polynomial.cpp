#include <btoep/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace btoep {

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("Polynomial::leading: zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + to_double(coeffs_[i]);
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::taylor_shift(const Rational& a) const {
    if (a == 0 || is_zero()) return *this;
    // Repeated synthetic division by (x - (-a)); c[j] accumulates P(x+a).
    std::vector<Rational> c(coeffs_);
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            c[j] += a * c[j + 1];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scale_arg(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    Rational p(1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= p;
        p *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(out));
}

int Polynomial::sign_variations() const {
    int count = 0;
    int prev = 0;
    for (const auto& c : coeffs_) {
        const int s = sign(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

PolynomialDivision Polynomial::divide(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw std::invalid_argument("Polynomial::divide: division by zero polynomial");
    std::vector<Rational> rem(coeffs_);
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
    const Rational& lead = divisor.leading();
    for (std::size_t i = rem.size(); static_cast<int>(i) - 1 >= dd; --i) {
        const Rational q = rem[i - 1] / lead;
        if (q == 0) {
            if (i - 1 >= static_cast<std::size_t>(dd)) quot[i - 1 - dd] = 0;
            rem[i - 1] = 0;
            continue;
        }
        quot[i - 1 - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - 1 - dd + j] -= q * divisor.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(const Polynomial& rhs) const {
    Polynomial a = *this, b = rhs;
    while (!b.is_zero()) {
        Polynomial r = a.divide(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic normalization makes the gcd canonical
    return a * (Rational(1) / a.leading());
}

Polynomial Polynomial::squarefree_part() const {
    if (degree() <= 1) return *this;
    const Polynomial g = gcd(derivative());
    if (g.degree() <= 0) return *this;
    return divide(g).quotient;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        out << btoep::to_string(coeffs_[i]);
        if (i >= 1) out << "*x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

}  // namespace btoep
