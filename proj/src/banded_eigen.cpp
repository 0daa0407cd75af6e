#include <btoep/banded_eigen.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace btoep {

namespace {

void check_tridiagonal_sizes(const std::vector<double>& diag,
                             const std::vector<double>& offdiag) {
    if (diag.empty())
        throw std::invalid_argument("tridiagonal: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("tridiagonal: offdiag length must be diag length - 1");
}

double matrix_scale(const std::vector<double>& diag, const std::vector<double>& offdiag) {
    double scale = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double row = std::fabs(diag[i]);
        if (i > 0) row += std::fabs(offdiag[i - 1]);
        if (i < offdiag.size()) row += std::fabs(offdiag[i]);
        scale = std::max(scale, row);
    }
    return scale;
}

// Gaussian elimination with partial pivoting for (T - shift I) x = b.
// Pivoting introduces one extra superdiagonal of fill-in.
std::vector<double> shifted_tridiagonal_solve(const std::vector<double>& diag,
                                              const std::vector<double>& offdiag,
                                              double shift, std::vector<double> b) {
    const std::size_t n = diag.size();
    std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) u1[i] = offdiag[i];

    for (std::size_t i = 0; i + 1 < n; ++i) {
        double sub = offdiag[i];  // entry (i+1, i) before elimination
        if (std::fabs(sub) > std::fabs(d[i])) {
            std::swap(d[i], sub);
            std::swap(u1[i], d[i + 1]);
            std::swap(u2[i], u1[i + 1]);
            std::swap(b[i], b[i + 1]);
        }
        if (d[i] == 0.0) d[i] = std::numeric_limits<double>::min();
        const double factor = sub / d[i];
        d[i + 1] -= factor * u1[i];
        u1[i + 1] -= factor * u2[i];
        b[i + 1] -= factor * b[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = std::numeric_limits<double>::min();

    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        if (i + 1 < n) acc -= u1[i] * x[i + 1];
        if (i + 2 < n) acc -= u2[i] * x[i + 2];
        x[i] = acc / d[i];
    }
    return x;
}

void apply_tridiagonal(const std::vector<double>& diag, const std::vector<double>& offdiag,
                       const std::vector<double>& v, std::vector<double>& out) {
    const std::size_t n = diag.size();
    out.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = diag[i] * v[i];
        if (i > 0) out[i] += offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) out[i] += offdiag[i] * v[i + 1];
    }
}

void normalize2(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    for (double& x : v) x /= norm;
}

}  // namespace

int tridiagonal_count_below(const std::vector<double>& diag,
                            const std::vector<double>& offdiag, double x) {
    check_tridiagonal_sizes(diag, offdiag);
    // Sturm/LDL^T recurrence; the guarded pivot keeps the count correct in
    // the presence of exact zeros (standard bisection safeguard).
    const double tiny = std::numeric_limits<double>::min() * 4;
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double off2 = i > 0 ? offdiag[i - 1] * offdiag[i - 1] : 0.0;
        d = (diag[i] - x) - (i > 0 ? off2 / d : 0.0);
        if (std::fabs(d) < tiny) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

EigenPair tridiagonal_min_eigenpair(const std::vector<double>& diag,
                                    const std::vector<double>& offdiag) {
    check_tridiagonal_sizes(diag, offdiag);
    const std::size_t n = diag.size();
    const double scale = std::max(matrix_scale(diag, offdiag), 1e-300);

    if (n == 1) return {diag[0], {1.0}, 0.0};

    // Gershgorin interval certainly containing the spectrum
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(offdiag[i - 1]);
        if (i + 1 < n) r += std::fabs(offdiag[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    // bisect for the smallest eigenvalue: invariant count(lo)=0, count(hi)>=1
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    while (tridiagonal_count_below(diag, offdiag, hi) == 0)
        hi += std::max(1.0, std::fabs(hi));  // defensive; Gershgorin makes this rare
    const double width_target = 1e-15 * scale;
    for (int iter = 0; iter < 2000 && hi - lo > width_target; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // binade floor reached
        if (tridiagonal_count_below(diag, offdiag, mid) == 0)
            lo = mid;
        else
            hi = mid;
    }
    double value = 0.5 * (lo + hi);

    // inverse iteration from the certifiably-PD shift lo (count(lo) = 0)
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const double shift = lo - 1e-14 * scale;
    std::vector<double> tv;
    double best_residual = std::numeric_limits<double>::infinity();
    std::vector<double> best_v = v;
    double best_value = value;
    for (int iter = 0; iter < 64; ++iter) {
        v = shifted_tridiagonal_solve(diag, offdiag, shift, std::move(v));
        normalize2(v);
        apply_tridiagonal(diag, offdiag, v, tv);
        double rho = 0.0;
        for (std::size_t i = 0; i < n; ++i) rho += v[i] * tv[i];
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            res = std::max(res, std::fabs(tv[i] - rho * v[i]));
        res /= scale;
        if (res < best_residual) {
            best_residual = res;
            best_v = v;
            best_value = rho;
        }
        if (res < 1e-14) break;
    }
    // Rayleigh quotient of the converged vector is the best estimate; fall
    // back to the certified bisection interval if iteration went nowhere.
    if (best_residual < 1e-8)
        value = best_value;
    return {value, best_v, best_residual};
}

BandedEigenPair banded_min_eigenvalue(const std::vector<double>& diag,
                                      const std::vector<double>& band,
                                      std::size_t offset) {
    if (diag.empty())
        throw std::invalid_argument("banded_min_eigenvalue: empty diagonal");
    if (offset < 1)
        throw std::invalid_argument("banded_min_eigenvalue: offset must be >= 1");
    const std::size_t K = diag.size();
    const std::size_t expected_band = K > offset ? K - offset : 0;
    if (band.size() != expected_band)
        throw std::invalid_argument("banded_min_eigenvalue: band length must be max(0, K - offset)");

    BandedEigenPair best;
    best.value = std::numeric_limits<double>::infinity();
    best.vector.assign(K, 0.0);

    const std::size_t chains = std::min(offset, K);
    for (std::size_t r = 0; r < chains; ++r) {
        std::vector<double> cd, co;
        for (std::size_t i = r; i < K; i += offset) {
            cd.push_back(diag[i]);
            if (i + offset < K) co.push_back(band[i]);
        }
        const EigenPair chain = tridiagonal_min_eigenpair(cd, co);
        if (chain.value < best.value) {
            best.value = chain.value;
            best.chain = r;
            best.residual = chain.residual;
            std::fill(best.vector.begin(), best.vector.end(), 0.0);
            std::size_t j = 0;
            for (std::size_t i = r; i < K; i += offset) best.vector[i] = chain.vector[j++];
        }
    }
    return best;
}

}  // namespace btoep
