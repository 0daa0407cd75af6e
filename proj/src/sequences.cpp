#include <btoep/sequences.hpp>

#include <stdexcept>

namespace btoep {

namespace {

void check_index(long long k) {
    if (k < 0) throw std::invalid_argument("sequence index k must be >= 0");
}

void check_exponent(int v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

void check_radial(const Rational& v, const char* name) {
    if (v < 0) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

Rational square(const Rational& x) { return x * x; }

}  // namespace

void SymbolParams::validate() const {
    check_exponent(n, "n");
    check_exponent(m, "m");
    check_radial(s, "s");
    check_radial(t, "t");
    if (abs_a < 0) throw std::invalid_argument("|a| must be >= 0");
}

Rational sigma(int n, const Rational& s, long long k) {
    check_exponent(n, "n");
    check_radial(s, "s");
    check_index(k);
    const Rational head = Rational(k + n + 1) / square(n + k + s + 1);
    if (k < n) return head;
    return head - Rational(k - n + 1) / square(k + s + 1);
}

Rational omega(int m, const Rational& t, long long k) {
    check_exponent(m, "m");
    check_radial(t, "t");
    check_index(k);
    const Rational tail = Rational(k + m + 1) / square(m + k + t + 1);
    if (k < m) return -tail;
    return Rational(k - m + 1) / square(k + t + 1) - tail;
}

Rational delta(int n, int m, const Rational& s, const Rational& t, long long k) {
    check_exponent(n, "n");
    check_exponent(m, "m");
    check_radial(s, "s");
    check_radial(t, "t");
    check_index(k);
    return Rational(k + n + 1) / ((k + n + s + 1) * (k + n + m + t + 1)) -
           Rational(k + m + 1) / ((k + n + m + s + 1) * (k + m + t + 1));
}

Rational delta_sign_numerator(int n, int m, const Rational& s, const Rational& t, long long k) {
    const Rational nt = n * t, ms = m * s;
    return (nt - ms) * k + nt * (n + s + 1) - ms * (m + t + 1);
}

Rational lambda_eig(int m, int n, long long k) {
    if (n < 0) throw std::invalid_argument("lambda_eig: n must be >= 0");
    if (m < n) throw std::invalid_argument("lambda_eig: requires m >= n");
    check_index(k);
    if (m == n) return Rational(0);
    const Rational first = Rational(k + m - n + 1) / square(Rational(k + m + 1));
    if (k < m - n) return Rational(k + 1) * first;
    return Rational(k + 1) * (first - Rational(k + n - m + 1) / square(Rational(k + n + 1)));
}

Rational sigma(const SymbolParams& p, long long k) { return sigma(p.n, p.s, k); }
Rational omega(const SymbolParams& p, long long k) { return omega(p.m, p.t, k); }
Rational delta(const SymbolParams& p, long long k) { return delta(p.n, p.m, p.s, p.t, k); }

double sigma_f(int n, double s, long long k) {
    check_exponent(n, "n");
    check_index(k);
    const double kk = static_cast<double>(k);
    if (k < n) {
        const double d = n + kk + s + 1;
        return (kk + n + 1) / (d * d);
    }
    // n(n^2 + n(2s+k+1) + 2s(k+s+1)) / ((k+s+1)^2 (k+n+s+1)^2)
    const double numer = n * (double(n) * n + n * (2 * s + kk + 1) + 2 * s * (kk + s + 1));
    const double d1 = kk + s + 1, d2 = kk + n + s + 1;
    return numer / (d1 * d1 * d2 * d2);
}

double omega_f(int m, double t, long long k) {
    check_exponent(m, "m");
    check_index(k);
    const double kk = static_cast<double>(k);
    if (k < m) {
        const double d = m + kk + t + 1;
        return -(kk + m + 1) / (d * d);
    }
    const double numer = m * (double(m) * m + m * (2 * t + kk + 1) + 2 * t * (kk + t + 1));
    const double d1 = kk + t + 1, d2 = kk + m + t + 1;
    return -numer / (d1 * d1 * d2 * d2);
}

double delta_f(int n, int m, double s, double t, long long k) {
    check_exponent(n, "n");
    check_exponent(m, "m");
    check_index(k);
    const double kk = static_cast<double>(k);
    const double numer = (n * t - m * s) * kk + n * t * (n + s + 1) - m * s * (m + t + 1);
    const double denom = (kk + n + s + 1) * (kk + n + m + t + 1) * (kk + n + m + s + 1) *
                         (kk + m + t + 1);
    return numer / denom;
}

double asymptotic_leading(SeqKind kind, const SymbolParams& p, long long k) {
    p.validate();
    if (k < 1) throw std::invalid_argument("asymptotic_leading: requires k >= 1");
    const double kk = static_cast<double>(k);
    const double s = to_double(p.s), t = to_double(p.t);
    switch (kind) {
        case SeqKind::Sigma:
            return p.n * (p.n + 2 * s) / (kk * kk * kk);
        case SeqKind::Omega: {
            const double kt = kk + t;
            return -2.0 * p.m * t / (kt * kt * kt);
        }
        case SeqKind::Delta: {
            if (p.t <= 0)
                throw std::invalid_argument("asymptotic_leading: delta form requires t > 0");
            const double kt = kk + t;
            return p.n * t / (kk * kt * kt);
        }
    }
    throw std::invalid_argument("asymptotic_leading: unknown sequence kind");
}

}  // namespace btoep
