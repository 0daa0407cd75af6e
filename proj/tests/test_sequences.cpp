#include "doctest.h"

#include <btoep/sequences.hpp>

#include <cmath>
#include <stdexcept>

using btoep::Rational;
using btoep::SymbolParams;

TEST_CASE("closed forms reproduce hand-computed values") {
    CHECK(btoep::sigma(1, Rational(1), 0) == Rational(2, 9));
    CHECK(btoep::sigma(1, Rational(0), 5) == Rational(1, 252));   // 7/49 - 5/36
    CHECK(btoep::sigma(2, Rational(1, 2), 2) == Rational(496, 5929));  // 20/121 - 4/49
    CHECK(btoep::omega(1, Rational(1), 0) == Rational(-2, 9));
    CHECK(btoep::omega(3, Rational(0), 2) == Rational(-1, 6));    // k < m branch
    CHECK(btoep::lambda_eig(2, 1, 0) == Rational(2, 9));
    CHECK(btoep::lambda_eig(2, 1, 1) == Rational(11, 72));        // 2(3/16 - 1/9)
    CHECK(btoep::lambda_eig(8, 7, 3) == Rational(173, 4356));     // 4(5/144 - 3/121)
    CHECK(btoep::lambda_eig(5, 4, 1) == Rational(59, 882));
}

TEST_CASE("sigma and omega are mirror images") {
    for (int n = 1; n <= 4; ++n)
        for (int num = 0; num <= 4; ++num)
            for (long long k = 0; k <= 25; ++k) {
                const Rational s(num, 2);
                CHECK(btoep::omega(n, s, k) == -btoep::sigma(n, s, k));
            }
}

TEST_CASE("sign structure: sigma positive, omega negative, lambda positive") {
    for (int n = 1; n <= 5; ++n)
        for (long long k = 0; k <= 120; ++k) {
            CHECK(btoep::sigma(n, Rational(3, 2), k) > 0);
            CHECK(btoep::sigma(n, Rational(0), k) > 0);
            CHECK(btoep::omega(n, Rational(2), k) < 0);
        }
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n < m; ++n)
            for (long long k = 0; k <= 120; ++k) CHECK(btoep::lambda_eig(m, n, k) > 0);
}

TEST_CASE("delta vanishes exactly on the symmetric diagonal") {
    for (int n = 1; n <= 3; ++n)
        for (int num = 0; num <= 3; ++num)
            for (long long k = 0; k <= 20; ++k)
                CHECK(btoep::delta(n, n, Rational(num, 2), Rational(num, 2), k) == 0);
}

TEST_CASE("delta_sign_numerator carries the sign of delta") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int si = 0; si <= 2; ++si)
                for (int ti = 0; ti <= 2; ++ti)
                    for (long long k = 0; k <= 40; ++k) {
                        const Rational s(si, 2), t(ti, 2);
                        CHECK(btoep::sign(btoep::delta(n, m, s, t, k)) ==
                              btoep::sign(btoep::delta_sign_numerator(n, m, s, t, k)));
                    }
    // a sign flip along k: numerator (nt - ms)k + nt(n+s+1) - ms(m+t+1)
    // with n=1, m=2, s=2, t=1: slope -3, intercept 3 - 4*4 = hits negative fast
    CHECK(btoep::delta(1, 2, Rational(2), Rational(1), 0) < 0);
    // with n=2, m=1, s=0, t=1: slope 2, intercept 2*4 = always positive
    CHECK(btoep::delta(2, 1, Rational(0), Rational(1), 5) > 0);
}

TEST_CASE("branch formulas mesh at the switch index") {
    // at k = n - 1 the subtracted term of the k >= n branch vanishes, so the
    // head formula must equal the full expression with a zero correction
    for (int n = 2; n <= 5; ++n) {
        const Rational s(3, 4);
        const long long k = n - 1;
        const Rational head = Rational(k + n + 1) / ((n + k + s + 1) * (n + k + s + 1));
        CHECK(btoep::sigma(n, s, k) == head);
    }
    for (int m = 3; m <= 6; ++m) {
        const int n = m - 2;
        const long long k = m - n - 1;  // last head index of lambda
        const Rational head =
            Rational((k + 1) * (k + m - n + 1)) / ((k + m + 1) * (k + m + 1));
        CHECK(btoep::lambda_eig(m, n, k) == head);
    }
}

TEST_CASE("lambda decays quadratically with an exact envelope") {
    // lambda_k <= (m^2 - n^2) / (k+1)^2 on the tail, exactly
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n < m; ++n) {
            const Rational cap(m * m - n * n);
            for (long long k = m - n; k <= 300; ++k)
                CHECK(btoep::lambda_eig(m, n, k) * (k + 1) * (k + 1) <= cap);
        }
    CHECK(btoep::lambda_eig(3, 1, 1000000) < Rational(1, 100000000000LL));
}

TEST_CASE("every eigenvalue stays below one half") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 1; n < m; ++n)
            for (long long k = 0; k <= 400; ++k)
                CHECK(btoep::lambda_eig(m, n, k) < Rational(1, 2));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(btoep::sigma(0, Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(btoep::sigma(1, Rational(-1), 0), std::invalid_argument);
    CHECK_THROWS_AS(btoep::sigma(1, Rational(1), -1), std::invalid_argument);
    CHECK_THROWS_AS(btoep::lambda_eig(1, 2, 0), std::invalid_argument);
    CHECK_NOTHROW(btoep::lambda_eig(2, 0, 3));  // n = 0 is a valid edge

    SymbolParams p;
    p.n = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.n = 1;
    p.abs_a = Rational(-1);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("float forms track the exact values without cancellation") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (long long k : {0LL, 1LL, 7LL, 100LL, 10000LL, 3000000LL}) {
                const Rational s(1, 2), t(2);
                const double se = btoep::to_double(btoep::sigma(n, s, k));
                const double sf = btoep::sigma_f(n, 0.5, k);
                CHECK(sf == doctest::Approx(se).epsilon(1e-12));
                const double oe = btoep::to_double(btoep::omega(m, t, k));
                const double of = btoep::omega_f(m, 2.0, k);
                CHECK(of == doctest::Approx(oe).epsilon(1e-12));
                const double de = btoep::to_double(btoep::delta(n, m, s, t, k));
                const double df = btoep::delta_f(n, m, 0.5, 2.0, k);
                CHECK(df == doctest::Approx(de).epsilon(1e-12));
            }
}

TEST_CASE("displayed leading asymptotics") {
    SymbolParams p;
    p.n = 1;
    p.m = 2;
    p.s = 0;
    p.t = 3;

    // sigma: n(n+2s)/k^3 — and it really is the leading term of sigma
    CHECK(btoep::asymptotic_leading(btoep::SeqKind::Sigma, p, 1000) ==
          doctest::Approx(1e-9).epsilon(1e-12));
    const double exact = btoep::to_double(btoep::sigma(1, Rational(0), 100000));
    const double lead = btoep::asymptotic_leading(btoep::SeqKind::Sigma, p, 100000);
    CHECK(lead == doctest::Approx(exact).epsilon(1e-3));

    // omega display: -2mt/(k+t)^3
    CHECK(btoep::asymptotic_leading(btoep::SeqKind::Omega, p, 100) ==
          doctest::Approx(-12.0 / (103.0 * 103.0 * 103.0)).epsilon(1e-12));

    // delta display: nt/(k(k+t)^2); requires t > 0
    CHECK(btoep::asymptotic_leading(btoep::SeqKind::Delta, p, 50) ==
          doctest::Approx(3.0 / (50.0 * 53.0 * 53.0)).epsilon(1e-12));
    p.t = 0;
    CHECK_THROWS_AS(btoep::asymptotic_leading(btoep::SeqKind::Delta, p, 50),
                    std::invalid_argument);
    p.t = 3;
    CHECK_THROWS_AS(btoep::asymptotic_leading(btoep::SeqKind::Sigma, p, 0),
                    std::invalid_argument);
}
