#include "doctest.h"

#include <btoep/commutator.hpp>
#include <btoep/polynomial.hpp>
#include <btoep/sequences.hpp>

#include <stdexcept>

using btoep::Int;
using btoep::Monotonicity;
using btoep::Polynomial;
using btoep::Rational;

TEST_CASE("tail-shape constant: frozen values and the symmetric zero") {
    CHECK(btoep::tail_shape_d(2, 1) == -104);
    CHECK(btoep::tail_shape_d(3, 1) == -1008);
    CHECK(btoep::tail_shape_d(3, 2) == -168);
    CHECK(btoep::tail_shape_d(5, 4) == 166);
    CHECK(btoep::tail_shape_d(8, 7) == 4702);
    for (int n = 1; n <= 6; ++n) CHECK(btoep::tail_shape_d(n, n) == 0);
}

TEST_CASE("the fast sign path agrees with exact integers") {
    for (int m = 2; m <= 60; ++m)
        for (int n = 1; n <= m; ++n)
            CHECK(btoep::tail_shape_d_sign(m, n) == btoep::sign(btoep::tail_shape_d(m, n)));
    // past the guarded range the sign falls back to arbitrary precision
    CHECK(btoep::tail_shape_d_sign(2000000, 1300000) ==
          btoep::sign(btoep::tail_shape_d(2000000, 1300000)));
}

TEST_CASE("cubic coefficients match their closed forms") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 1; n < m; ++n) {
            const Polynomial P = btoep::cubic_P(m, n);
            REQUIRE(P.degree() == 3);
            CHECK(P.coeff(0) == Rational(btoep::tail_shape_d(m, n)));
            CHECK(P.coeff(3) == Rational(2 * (n * n - m * m)));
            CHECK(P.coeff(2) == Rational(3 * (n - m) * (3 * m * m - n * n + 2 * m + 2 * n)));
            const long long a1 =
                static_cast<long long>(n - m) *
                (13LL * m * m * m + 18 * m * m + 6 * m - 13LL * m * m * n + 6 * n - 1LL * m * n * n -
                 6 * n * n + 1LL * n * n * n);
            CHECK(P.coeff(1) == Rational(a1));
            // every non-constant coefficient is strictly negative for m > n
            CHECK(P.coeff(1) < 0);
            CHECK(P.coeff(2) < 0);
            CHECK(P.coeff(3) < 0);
        }
    CHECK(btoep::cubic_P(4, 4).is_zero());
}

TEST_CASE("derivative numerator factors through the cubic") {
    // (U'V - UV')(x) = (x+m+1)(x+n+1) P(x - (m-n)) exactly; this ties the
    // continuous tail derivative to the sign classification constant d
    for (int m = 2; m <= 10; ++m)
        for (int n = 1; n < m; ++n) {
            const Polynomial D = btoep::tail_derivative_numerator(m, n);
            const Polynomial expect = Polynomial::linear(Rational(m + 1)) *
                                      Polynomial::linear(Rational(n + 1)) *
                                      btoep::cubic_P(m, n).taylor_shift(Rational(-(m - n)));
            CHECK(D == expect);
            // consequence used elsewhere: the derivative sign at the tail
            // origin is the sign of the constant d
            CHECK(btoep::sign(D(Rational(m - n))) == btoep::sign(btoep::tail_shape_d(m, n)));
        }
}

TEST_CASE("tail function interpolates the eigenvalues") {
    for (int m = 2; m <= 8; ++m)
        for (int n = 1; n < m; ++n)
            for (long long k = m - n; k <= m - n + 40; ++k)
                CHECK(btoep::tail_eigenvalue_function(m, n, Rational(k)) ==
                      btoep::lambda_eig(m, n, k));
    // the function has poles at the negative integers used by the quotient
    CHECK_THROWS_AS(btoep::tail_eigenvalue_function(3, 1, Rational(-4)), std::invalid_argument);
}

TEST_CASE("classification: frozen representatives") {
    const auto dec = btoep::classify_monotonicity(2, 1);
    CHECK(dec.classification == Monotonicity::MonotoneDecreasing);
    CHECK(dec.d == -104);
    CHECK_FALSE(dec.critical_point.has_value());

    const auto bump = btoep::classify_monotonicity(8, 7);
    CHECK(bump.classification == Monotonicity::UniqueInteriorMax);
    CHECK(bump.d == 4702);
    REQUIRE(bump.critical_point.has_value());
    CHECK(bump.critical_point->lo == Rational(1381, 512));
    CHECK(bump.critical_point->hi == Rational(2841, 1024));
    CHECK(bump.critical_point->width() <= Rational(1, 8));
    CHECK(bump.critical_point->lo > 1);  // strictly inside the tail
}

TEST_CASE("classification of (5,4): the critical point sits inside (1, 2)") {
    const auto rep = btoep::classify_monotonicity(5, 4);
    CHECK(rep.classification == Monotonicity::UniqueInteriorMax);
    CHECK(rep.d == 166);
    REQUIRE(rep.critical_point.has_value());
    CHECK(rep.critical_point->lo == Rational(297, 256));
    CHECK(rep.critical_point->hi == Rational(635, 512));
    CHECK(rep.critical_point->lo > 1);
    CHECK(rep.critical_point->hi < 2);

    CHECK_THROWS_AS(btoep::classify_monotonicity(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(btoep::classify_monotonicity(1, 2), std::invalid_argument);
}

TEST_CASE("classification agrees with a brute-force scan of the sequence") {
    for (int m = 2; m <= 25; ++m)
        for (int n = 1; n < m; ++n) {
            const auto rep = btoep::classify_monotonicity(m, n);
            // walk the integer tail; record increases and unimodality
            int increases = 0;
            bool decreased = false, violated = false;
            Rational prev = btoep::lambda_eig(m, n, m - n);
            for (long long k = m - n + 1; k <= m - n + 600; ++k) {
                const Rational cur = btoep::lambda_eig(m, n, k);
                if (cur > prev) {
                    ++increases;
                    if (decreased) violated = true;  // rise after a fall
                } else if (cur < prev) {
                    decreased = true;
                }
                prev = cur;
            }
            CHECK_FALSE(violated);
            if (rep.classification == Monotonicity::MonotoneDecreasing) {
                CHECK(increases == 0);
            } else {
                REQUIRE(rep.critical_point.has_value());
                // either the integers visibly rise, or the interior maximum
                // hides before the second integer sample
                if (increases == 0)
                    CHECK(rep.critical_point->lo < Rational(m - n + 2));
                else
                    CHECK(rep.critical_point->hi > Rational(m - n));
            }
        }
}

TEST_CASE("norm report: frozen values") {
    const auto flat = btoep::commutator_norm(2, 1);
    CHECK(flat.norm == Rational(2, 9));
    CHECK(flat.argmax_k == 0);
    CHECK(flat.head_max == Rational(2, 9));
    CHECK(flat.tail_max == Rational(11, 72));
    CHECK(flat.monotonicity.classification == Monotonicity::MonotoneDecreasing);

    const auto bump = btoep::commutator_norm(8, 7);
    CHECK(bump.norm == Rational(173, 4356));
    CHECK(bump.argmax_k == 3);
    CHECK(bump.head_max == Rational(2, 81));
    CHECK(bump.monotonicity.classification == Monotonicity::UniqueInteriorMax);

    const auto near = btoep::commutator_norm(5, 4);
    CHECK(near.norm == Rational(59, 882));
    CHECK(near.argmax_k == 1);

    const auto degenerate = btoep::commutator_norm(3, 3);
    CHECK(degenerate.norm == 0);
    CHECK(degenerate.monotonicity.classification == Monotonicity::Degenerate);
}

TEST_CASE("norm equals an exhaustive maximum over a long prefix") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 1; n < m; ++n) {
            const auto rep = btoep::commutator_norm(m, n);
            Rational best = 0;
            long long arg = 0;
            for (long long k = 0; k <= 2000; ++k) {
                const Rational v = btoep::lambda_eig(m, n, k);
                if (v > best) {
                    best = v;
                    arg = k;
                }
            }
            CHECK(rep.norm == best);
            CHECK(rep.argmax_k == arg);
            CHECK(rep.norm < Rational(1, 2));
            CHECK(rep.head_max <= rep.norm);
            CHECK(rep.tail_max <= rep.norm);
        }
}

TEST_CASE("quartic tail bound: shifted coefficients and closed forms") {
    for (int m = 2; m <= 30; ++m)
        for (int n = 1; n < m; ++n) {
            const auto rec = btoep::verify_half_bound(m, n);
            CHECK(rec.head_ok);
            CHECK(rec.head_checked == m - n);
            CHECK(rec.alpha == Rational(2 * (3 * m - n + 2)));
            CHECK(rec.beta == Rational(11LL * m * m - 8LL * m * n + 18 * m + 3LL * n * n -
                                       6 * n + 6));
            const long long dtrue = 4LL * m * m * m * n + 6LL * m * m * m -
                                    3LL * m * m * n * n - 4LL * m * m * n + 11LL * m * m +
                                    4LL * m * n * n - 8LL * m * n + 6 * m - 2LL * n * n * n +
                                    3LL * n * n - 2 * n + 1;
            CHECK(rec.delta == Rational(dtrue));
            CHECK(rec.gamma > 0);
        }
    CHECK_THROWS_AS(btoep::verify_half_bound(3, 3), std::invalid_argument);
}

TEST_CASE("the quartic at the symmetric point reduces to (n+1)^4") {
    // m = n collapses the subtracted bracket, leaving (x+n+1)^4; its shifted
    // constant term is the value at the tail origin x = 0
    for (int n = 1; n <= 5; ++n) {
        const Polynomial R = btoep::quartic_R_shifted(n, n);
        const Rational c = Rational((n + 1) * (n + 1)) * ((n + 1) * (n + 1));
        CHECK(R.coeff(0) == c);
        CHECK(R.degree() == 4);
        CHECK(R.leading() == 1);
    }
}

TEST_CASE("region scan: small grids") {
    const auto small = btoep::scan_region(3);
    CHECK_FALSE(small.has_shaded);
    CHECK(small.zero_cells.empty());
    CHECK(small.contiguous);

    const auto ten = btoep::scan_region(10);
    CHECK(ten.has_shaded);
    CHECK(ten.contiguous);
    CHECK(ten.zero_cells.empty());
    CHECK(ten.shaded[7 - 1][8 - 2]);        // (m, n) = (8, 7)
    CHECK_FALSE(ten.shaded[1 - 1][2 - 2]);  // (2, 1)
    CHECK(ten.slope_cell.first == 10);
    CHECK(ten.slope_cell.second == 7);
    CHECK(ten.fitted_slope == Rational(10, 7));

    long long count = 0;
    for (const auto& row : ten.shaded)
        for (bool b : row) count += b ? 1 : 0;
    CHECK(count == 10);

    CHECK_THROWS_AS(btoep::scan_region(1), std::invalid_argument);
}

TEST_CASE("region scan is deterministic across thread counts") {
    const auto serial = btoep::scan_region(60, 1);
    const auto parallel = btoep::scan_region(60, 4);
    CHECK(serial.shaded == parallel.shaded);
    CHECK(serial.boundary_samples == parallel.boundary_samples);
    CHECK(serial.slope_cell == parallel.slope_cell);
    CHECK(serial.contiguous == parallel.contiguous);
}

TEST_CASE("shading coincides with the interior-max classification") {
    const auto scan = btoep::scan_region(15);
    for (int m = 2; m <= 15; ++m)
        for (int n = 1; n < m; ++n) {
            const bool shaded = scan.shaded[static_cast<std::size_t>(n - 1)]
                                           [static_cast<std::size_t>(m - 2)];
            const auto rep = btoep::classify_monotonicity(m, n);
            CHECK(shaded == (rep.classification == Monotonicity::UniqueInteriorMax));
        }
}

TEST_CASE("boundary slope root is isolated to twelve digits") {
    const auto iv = btoep::boundary_slope();
    CHECK(iv.width() <= Rational(1, 1000000000000LL));
    CHECK(iv.lo > 1);
    CHECK(iv.contains(btoep::rational_from_double(1.6097789567578734)));
}
