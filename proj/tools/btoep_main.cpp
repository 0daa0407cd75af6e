#include <CLI11.hpp>
#include <json.hpp>

#include <btoep/commutator.hpp>
#include <btoep/hypotest.hpp>
#include <btoep/rational.hpp>
#include <btoep/sequences.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

using btoep::Rational;
using json = nlohmann::ordered_json;

struct OutputOptions {
    std::string format = "json";  // json | csv
    std::string out;              // empty = stdout
    bool timing = false;
};

std::string dec_string(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json rational_json(const Rational& x) {
    return json{{"num", btoep::num(x).str()},
                {"den", btoep::den(x).str()},
                {"dec", btoep::to_double(x)}};
}

std::string rational_cell(const Rational& x, bool float_mode) {
    return float_mode ? dec_string(btoep::to_double(x)) : btoep::to_string(x);
}

void emit(const std::string& payload, const OutputOptions& opts) {
    if (opts.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + opts.out);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
}

// envelope shared by every command so downstream tooling can rely on it
json make_envelope(const std::string& command, json inputs, bool float_mode) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"mode", float_mode ? "float" : "exact"},
                {"results", json::object()}};
}

void finish(json envelope, const OutputOptions& opts,
            std::chrono::steady_clock::time_point started) {
    if (opts.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
        envelope["timing_ms"] = ms;
    }
    emit(envelope.dump(2), opts);
}

struct RationalFlag {
    std::string text;
    bool present = false;
    bool was_decimal = false;

    Rational parse(const Rational& fallback) {
        if (!present) return fallback;
        return btoep::parse_rational(text, &was_decimal);
    }
};

void add_rational_option(CLI::App* cmd, const std::string& name, RationalFlag& slot,
                         const std::string& help) {
    cmd->add_option_function<std::string>(
           name,
           [&slot](const std::string& v) {
               slot.text = v;
               slot.present = true;
           },
           help)
        ->type_name("RATIONAL");
}

json witness_json(const btoep::TestVector& u) {
    json values = json::array();
    for (const auto& v : u.values) values.push_back(rational_json(v));
    const char* kind = u.kind == btoep::TestVector::Kind::Window       ? "window"
                       : u.kind == btoep::TestVector::Kind::Eigenvector ? "eigenvector"
                                                                        : "basis";
    return json{{"kind", kind}, {"support_start", u.support_start}, {"values", std::move(values)}};
}

json verdict_json(const btoep::HypoVerdict& v) {
    json out{{"status", btoep::to_string(v.status)},
             {"K", v.K},
             {"exact_mode", v.exact_mode},
             {"diagnostic", v.diagnostic}};
    if (v.first_nonpositive_k >= 0) out["first_nonpositive_k"] = v.first_nonpositive_k;
    if (v.witness) out["witness"] = witness_json(*v.witness);
    if (v.witness_value) out["witness_value"] = rational_json(*v.witness_value);
    if (v.certificate)
        out["certificate"] = json{{"K", v.certificate->K},
                                  {"min_pointwise", rational_json(v.certificate->min_pointwise)},
                                  {"tail_checked", v.certificate->tail_checked}};
    if (v.window)
        out["window"] = json{{"t", rational_json(v.window->t)},
                             {"k1", v.window->k1},
                             {"k2", v.window->k2}};
    return out;
}

std::string csv_from_pairs(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) {
        out += k;
        out += ',';
        out += v;
        out += '\n';
    }
    return out;
}

int verdict_exit_code(btoep::HypoStatus s) {
    switch (s) {
        case btoep::HypoStatus::CertifiedHyponormal: return 0;
        case btoep::HypoStatus::CertifiedNotHyponormal: return 1;
        case btoep::HypoStatus::Inconclusive: return 2;
    }
    return 2;
}

// --- seq --------------------------------------------------------------------

int run_seq(int n, int m, RationalFlag& s_flag, RationalFlag& t_flag, RationalFlag& a_flag,
            long long kmax, const OutputOptions& opts,
            std::chrono::steady_clock::time_point started) {
    btoep::SymbolParams p;
    p.n = n;
    p.m = m;
    p.s = s_flag.parse(Rational(0));
    p.t = t_flag.parse(Rational(0));
    p.abs_a = a_flag.parse(Rational(0));
    p.float_entry = s_flag.was_decimal || t_flag.was_decimal || a_flag.was_decimal;
    p.validate();
    if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    const bool have_lambda = m >= n;

    if (opts.format == "csv") {
        std::string out = "k,sigma,omega,delta,lambda\n";
        for (long long k = 0; k <= kmax; ++k) {
            out += std::to_string(k);
            out += ',' + rational_cell(btoep::sigma(p, k), p.float_entry);
            out += ',' + rational_cell(btoep::omega(p, k), p.float_entry);
            out += ',' + rational_cell(btoep::delta(p, k), p.float_entry);
            out += ',';
            if (have_lambda) out += rational_cell(btoep::lambda_eig(m, n, k), p.float_entry);
            out += '\n';
        }
        emit(out, opts);
        return 0;
    }

    json env = make_envelope("seq",
                             json{{"n", n},
                                  {"m", m},
                                  {"s", btoep::to_string(p.s)},
                                  {"t", btoep::to_string(p.t)},
                                  {"a", btoep::to_string(p.abs_a)},
                                  {"kmax", kmax}},
                             p.float_entry);
    json rows = json::array();
    for (long long k = 0; k <= kmax; ++k) {
        json row{{"k", k},
                 {"sigma", rational_json(btoep::sigma(p, k))},
                 {"omega", rational_json(btoep::omega(p, k))},
                 {"delta", rational_json(btoep::delta(p, k))}};
        if (have_lambda)
            row["lambda"] = rational_json(btoep::lambda_eig(m, n, k));
        else
            row["lambda"] = nullptr;
        rows.push_back(std::move(row));
    }
    env["results"]["rows"] = std::move(rows);
    finish(std::move(env), opts, started);
    return 0;
}

// --- hypo -------------------------------------------------------------------

int run_hypo_check(int n, int m, RationalFlag& s_flag, RationalFlag& t_flag, RationalFlag& a_flag,
                   long long K, bool K_given, const OutputOptions& opts,
                   std::chrono::steady_clock::time_point started) {
    btoep::SymbolParams p;
    p.n = n;
    p.m = m;
    p.s = s_flag.parse(Rational(0));
    p.t = t_flag.parse(Rational(0));
    p.abs_a = a_flag.parse(Rational(0));
    p.float_entry = s_flag.was_decimal || t_flag.was_decimal || a_flag.was_decimal;
    p.validate();

    // default behavior: escalate the truncation until a verdict lands
    std::vector<long long> ladder;
    if (K_given) {
        ladder.push_back(K);
    } else {
        for (long long k = 256; k <= (1LL << 15); k *= 2) ladder.push_back(k);
    }
    const long long floor_K = n + m + 2;
    btoep::HypoVerdict v;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const long long Ki = std::max(ladder[i], floor_K);
        v = btoep::certify_hyponormal(p, Ki);
        if (v.status == btoep::HypoStatus::CertifiedHyponormal) break;
        const bool pointwise_failed = v.first_nonpositive_k >= 0;
        btoep::HypoVerdict r = btoep::refute_truncated(p, Ki);
        if (r.status == btoep::HypoStatus::CertifiedNotHyponormal || v.status == r.status)
            v = std::move(r);
        if (v.status == btoep::HypoStatus::CertifiedNotHyponormal) break;
        // once the pointwise scan fails, larger truncations cannot certify,
        // but they can still refute; keep escalating only for that purpose
        (void)pointwise_failed;
    }

    json env = make_envelope("hypo check",
                             json{{"n", n},
                                  {"m", m},
                                  {"s", btoep::to_string(p.s)},
                                  {"t", btoep::to_string(p.t)},
                                  {"a", btoep::to_string(p.abs_a)},
                                  {"K", K_given ? json(K) : json()}},
                             p.float_entry);
    env["results"] = verdict_json(v);
    if (opts.format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows{
            {"status", btoep::to_string(v.status)},
            {"K", std::to_string(v.K)},
            {"diagnostic", '"' + v.diagnostic + '"'}};
        if (v.witness_value) rows.emplace_back("witness_value", btoep::to_string(*v.witness_value));
        emit(csv_from_pairs(rows), opts);
    } else {
        finish(std::move(env), opts, started);
    }
    return verdict_exit_code(v.status);
}

int run_hypo_sweep(int n, int m, RationalFlag& s_flag, RationalFlag& t_flag,
                   RationalFlag& tol_flag, long long K, bool K_given, const OutputOptions& opts,
                   std::chrono::steady_clock::time_point started) {
    const Rational s = s_flag.parse(Rational(0));
    const Rational t = t_flag.parse(Rational(0));
    btoep::SweepOptions sweep;
    sweep.tol = tol_flag.parse(sweep.tol);
    if (K_given) sweep.K = K;
    const btoep::SweepResult r = btoep::boundary_sweep(n, m, s, t, sweep);

    json env = make_envelope("hypo sweep",
                             json{{"n", n},
                                  {"m", m},
                                  {"s", btoep::to_string(s)},
                                  {"t", btoep::to_string(t)},
                                  {"tol", btoep::to_string(sweep.tol)},
                                  {"K", sweep.K}},
                             s_flag.was_decimal || t_flag.was_decimal || tol_flag.was_decimal);
    env["results"] = json{{"converged", r.converged},
                          {"a_lo", rational_json(r.a_lo)},
                          {"a_hi", rational_json(r.a_hi)},
                          {"lo_certified", r.lo_certified},
                          {"hi_refuted", r.hi_refuted},
                          {"iterations", r.iterations},
                          {"diagnostic", r.diagnostic}};
    if (opts.format == "csv") {
        emit(csv_from_pairs({{"converged", r.converged ? "true" : "false"},
                             {"a_lo", btoep::to_string(r.a_lo)},
                             {"a_hi", btoep::to_string(r.a_hi)},
                             {"iterations", std::to_string(r.iterations)}}),
             opts);
    } else {
        finish(std::move(env), opts, started);
    }
    return r.converged ? 0 : 2;
}

int run_hypo_window(int n, int m, RationalFlag& s_flag, RationalFlag& c_flag,
                    const OutputOptions& opts, std::chrono::steady_clock::time_point started) {
    if (!c_flag.present) throw std::invalid_argument("hypo window requires --c");
    const Rational s = s_flag.parse(Rational(0));
    const Rational c = c_flag.parse(Rational(0));
    const btoep::WindowSearchConfig config = btoep::make_window_config(n, m, s, c);
    const btoep::HypoVerdict v = btoep::refute_window(n, m, s, c, config);

    json env = make_envelope(
        "hypo window",
        json{{"n", n}, {"m", m}, {"s", btoep::to_string(s)}, {"c", btoep::to_string(c)}},
        s_flag.was_decimal || c_flag.was_decimal);
    env["results"] = verdict_json(v);
    env["results"]["config"] = json{{"eta", rational_json(config.eta)},
                                    {"epsilon", rational_json(config.epsilon)},
                                    {"k2", config.k2},
                                    {"j_min", config.j_min},
                                    {"j_max", config.j_max}};
    if (opts.format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows{
            {"status", btoep::to_string(v.status)}};
        if (v.window) {
            rows.emplace_back("t", btoep::to_string(v.window->t));
            rows.emplace_back("k1", std::to_string(v.window->k1));
            rows.emplace_back("k2", std::to_string(v.window->k2));
        }
        emit(csv_from_pairs(rows), opts);
    } else {
        finish(std::move(env), opts, started);
    }
    return v.status == btoep::HypoStatus::CertifiedNotHyponormal ? 1 : 2;
}

// --- comm -------------------------------------------------------------------

json critical_point_json(const btoep::MonotonicityReport& rep) {
    if (!rep.critical_point) return nullptr;
    return json{{"lo", rational_json(rep.critical_point->lo)},
                {"hi", rational_json(rep.critical_point->hi)},
                {"mid_dec", btoep::to_double(rep.critical_point->midpoint())}};
}

int run_comm(const std::string& action, int m, int n, const OutputOptions& opts,
             std::chrono::steady_clock::time_point started) {
    if (m <= n || n < 1)
        throw std::invalid_argument("comm commands require m > n >= 1");
    json env = make_envelope("comm " + action, json{{"m", m}, {"n", n}}, false);

    if (action == "norm") {
        const btoep::CommutatorReport rep = btoep::commutator_norm(m, n);
        env["results"] = json{{"norm", rational_json(rep.norm)},
                              {"argmax_k", rep.argmax_k},
                              {"head_max", rational_json(rep.head_max)},
                              {"tail_max", rational_json(rep.tail_max)},
                              {"classification", btoep::to_string(rep.monotonicity.classification)},
                              {"d", rep.monotonicity.d.str()}};
        if (opts.format == "csv") {
            emit(csv_from_pairs({{"norm", btoep::to_string(rep.norm)},
                                 {"argmax_k", std::to_string(rep.argmax_k)},
                                 {"classification", btoep::to_string(rep.monotonicity.classification)}}),
                 opts);
            return 0;
        }
        finish(std::move(env), opts, started);
        return 0;
    }
    if (action == "classify") {
        const btoep::MonotonicityReport rep = btoep::classify_monotonicity(m, n);
        env["results"] = json{{"classification", btoep::to_string(rep.classification)},
                              {"d", rep.d.str()},
                              {"critical_point", critical_point_json(rep)}};
        if (opts.format == "csv") {
            emit(csv_from_pairs({{"classification", btoep::to_string(rep.classification)},
                                 {"d", rep.d.str()}}),
                 opts);
            return 0;
        }
        finish(std::move(env), opts, started);
        return 0;
    }
    if (action == "halfbound") {
        const btoep::HalfBoundRecord rec = btoep::verify_half_bound(m, n);
        const bool holds = rec.head_ok;
        env["results"] = json{{"alpha", rational_json(rec.alpha)},
                              {"beta", rational_json(rec.beta)},
                              {"gamma", rational_json(rec.gamma)},
                              {"delta", rational_json(rec.delta)},
                              {"coefficients_positive", true},
                              {"head_ok", rec.head_ok},
                              {"head_checked", rec.head_checked},
                              {"bound_holds", holds}};
        if (opts.format == "csv") {
            emit(csv_from_pairs({{"coefficients_positive", "true"},
                                 {"head_ok", rec.head_ok ? "true" : "false"},
                                 {"bound_holds", holds ? "true" : "false"}}),
                 opts);
            return holds ? 0 : 1;
        }
        finish(std::move(env), opts, started);
        return holds ? 0 : 1;
    }
    throw std::invalid_argument("unknown comm action " + action);
}

// --- region -----------------------------------------------------------------

int run_region(int m_max, int threads, const std::string& out_prefix, OutputOptions opts,
               std::chrono::steady_clock::time_point started) {
    opts.out.clear();  // --out is the artifact prefix; the summary goes to stdout
    const btoep::RegionScan scan = btoep::scan_region(m_max, threads);
    const btoep::RootInterval slope_root = btoep::boundary_slope();
    const double root_mid = btoep::to_double(slope_root.midpoint());

    std::set<std::pair<int, int>> zeros(scan.zero_cells.begin(), scan.zero_cells.end());
    const auto cell_sign = [&](int m, int n) -> int {
        if (scan.shaded[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 2)]) return 1;
        if (zeros.count({m, n})) return 0;
        return -1;
    };

    if (!out_prefix.empty()) {
        std::ofstream pbm(out_prefix + ".pbm", std::ios::binary);
        if (!pbm) throw std::invalid_argument("cannot open " + out_prefix + ".pbm");
        pbm << "P1\n# positive tail-shape cells, rows n=1.." << (m_max - 1) << ", cols m=2.."
            << m_max << "\n";
        pbm << (m_max - 1) << ' ' << (m_max - 1) << '\n';
        for (int n = 1; n <= m_max - 1; ++n) {
            for (int m = 2; m <= m_max; ++m) {
                const bool bit =
                    m > n && scan.shaded[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 2)];
                pbm << (bit ? '1' : '0');
                pbm << (m == m_max ? '\n' : ' ');
            }
        }
        std::ofstream csv(out_prefix + ".csv", std::ios::binary);
        if (!csv) throw std::invalid_argument("cannot open " + out_prefix + ".csv");
        csv << "m,n,d_sign\n";
        for (int m = 2; m <= m_max; ++m)
            for (int n = 1; n < m; ++n)
                csv << m << ',' << n << ',' << cell_sign(m, n) << '\n';
    }

    long long shaded_count = 0;
    for (const auto& row : scan.shaded)
        for (bool b : row) shaded_count += b ? 1 : 0;

    json env = make_envelope("region", json{{"mmax", m_max}, {"threads", threads}}, false);
    json results{{"shaded_cells", shaded_count},
                 {"boundary_samples", scan.boundary_samples.size()},
                 {"zero_cells", scan.zero_cells.size()},
                 {"contiguous", scan.contiguous},
                 {"has_shaded", scan.has_shaded}};
    if (scan.has_shaded) {
        results["slope_cell"] = json{{"m", scan.slope_cell.first}, {"n", scan.slope_cell.second}};
        results["fitted_slope"] = rational_json(scan.fitted_slope);
        const double fitted = btoep::to_double(scan.fitted_slope);
        results["boundary_slope_root"] = root_mid;
        results["relative_deviation"] = std::abs(fitted - root_mid) / root_mid;
    }
    if (!out_prefix.empty())
        results["files"] = json{{"bitmap", out_prefix + ".pbm"}, {"csv", out_prefix + ".csv"}};
    env["results"] = std::move(results);

    if (opts.format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows{
            {"shaded_cells", std::to_string(shaded_count)},
            {"contiguous", scan.contiguous ? "true" : "false"}};
        if (scan.has_shaded) {
            rows.emplace_back("slope_cell_m", std::to_string(scan.slope_cell.first));
            rows.emplace_back("slope_cell_n", std::to_string(scan.slope_cell.second));
            rows.emplace_back("fitted_slope", btoep::to_string(scan.fitted_slope));
        }
        emit(csv_from_pairs(rows), opts);
        return 0;
    }
    finish(std::move(env), opts, started);
    return 0;
}

// --- bounds -----------------------------------------------------------------

int run_bounds(bool kl_mode, int n, int m, int q, RationalFlag& s_flag, RationalFlag& t_flag,
               long long scan_limit, const OutputOptions& opts,
               std::chrono::steady_clock::time_point started) {
    if (kl_mode) {
        const Rational value = btoep::kl_ratio_bound(m, q);  // throws on m < q+1
        const Rational limit = m - q >= 2 ? btoep::lambda_ratio_limit(m, q) : Rational(0);
        json env = make_envelope("bounds", json{{"mode", "kl"}, {"m", m}, {"q", q}}, false);
        env["results"] = json{{"value", rational_json(value)},
                              {"min_attained_by_first", true},
                              {"limit", m - q >= 2 ? rational_json(limit) : json(nullptr)}};
        if (opts.format == "csv") {
            emit(csv_from_pairs({{"value", btoep::to_string(value)},
                                 {"min_attained_by_first", "true"}}),
                 opts);
            return 0;
        }
        finish(std::move(env), opts, started);
        return 0;
    }

    btoep::SymbolParams p;
    p.n = n;
    p.m = m;
    p.s = s_flag.parse(Rational(0));
    p.t = t_flag.parse(Rational(0));
    p.float_entry = s_flag.was_decimal || t_flag.was_decimal;
    p.validate();
    const btoep::BasisBound b = btoep::basis_vector_bound(p, scan_limit);
    json env = make_envelope("bounds",
                             json{{"mode", "basis"},
                                  {"n", n},
                                  {"m", m},
                                  {"s", btoep::to_string(p.s)},
                                  {"t", btoep::to_string(p.t)},
                                  {"kmax", scan_limit}},
                             p.float_entry);
    env["results"] = json{{"value", rational_json(b.value())},
                          {"scan_min", rational_json(b.scan_min)},
                          {"scan_argmin", b.scan_argmin},
                          {"limit", rational_json(b.limit)},
                          {"source", b.scan_min < b.limit ? "scan" : "limit"}};
    if (opts.format == "csv") {
        emit(csv_from_pairs({{"value", rational_cell(b.value(), p.float_entry)},
                             {"scan_min", rational_cell(b.scan_min, p.float_entry)},
                             {"scan_argmin", std::to_string(b.scan_argmin)},
                             {"limit", rational_cell(b.limit, p.float_entry)}}),
             opts);
        return 0;
    }
    finish(std::move(env), opts, started);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const auto started = std::chrono::steady_clock::now();
    CLI::App app{"banded-Toeplitz hyponormality and commutator analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", opts.out, "write output to this path (region: file prefix)");
    app.add_flag("--timing", opts.timing, "include timing in JSON output");

    int n = 1, m = 1, q = 0, threads = 1, m_max = 100;
    long long kmax = 8, K = 512, scan_limit = 4096;
    bool kl_mode = false;
    RationalFlag s_flag, t_flag, a_flag, c_flag, tol_flag;

    CLI::App* seq = app.add_subcommand("seq", "tabulate the diagonal sequences");
    seq->fallthrough();
    seq->add_option("--n", n, "analytic exponent n >= 1");
    seq->add_option("--m", m, "co-analytic exponent m >= 1");
    add_rational_option(seq, "--s", s_flag, "radial exponent s >= 0");
    add_rational_option(seq, "--t", t_flag, "radial exponent t >= 0");
    add_rational_option(seq, "--a", a_flag, "coefficient modulus |a|");
    seq->add_option("--kmax", kmax, "last index to print");

    CLI::App* hypo = app.add_subcommand("hypo", "hyponormality analysis");
    hypo->fallthrough();
    hypo->require_subcommand(1);
    CLI::App* hypo_check = hypo->add_subcommand("check", "certify or refute at given |a|");
    hypo_check->fallthrough();
    CLI::App* hypo_sweep = hypo->add_subcommand("sweep", "bracket the boundary |a|");
    hypo_sweep->fallthrough();
    CLI::App* hypo_window = hypo->add_subcommand("window", "window refutation for a(t) = c/t");
    hypo_window->fallthrough();
    for (CLI::App* c : {hypo_check, hypo_sweep, hypo_window}) {
        c->add_option("--n", n, "analytic exponent n >= 1");
        c->add_option("--m", m, "co-analytic exponent m >= 1");
        add_rational_option(c, "--s", s_flag, "radial exponent s >= 0");
    }
    add_rational_option(hypo_check, "--t", t_flag, "radial exponent t >= 0");
    add_rational_option(hypo_check, "--a", a_flag, "coefficient modulus |a|");
    hypo_check->add_option("--K", K, "truncation size (default: escalating ladder 256..32768)");
    add_rational_option(hypo_sweep, "--t", t_flag, "radial exponent t >= 0");
    add_rational_option(hypo_sweep, "--tol", tol_flag, "bracket width target");
    hypo_sweep->add_option("--K", K, "strongest truncation per probe");
    add_rational_option(hypo_window, "--c", c_flag, "family coefficient c in a(t) = c/t");

    CLI::App* comm = app.add_subcommand("comm", "self-commutator analysis");
    comm->fallthrough();
    comm->require_subcommand(1);
    CLI::App* comm_norm = comm->add_subcommand("norm", "exact commutator norm");
    comm_norm->fallthrough();
    CLI::App* comm_classify = comm->add_subcommand("classify", "tail monotonicity class");
    comm_classify->fallthrough();
    CLI::App* comm_half = comm->add_subcommand("halfbound", "prove the strict 1/2 bound");
    comm_half->fallthrough();
    for (CLI::App* c : {comm_norm, comm_classify, comm_half}) {
        c->add_option("--m", m, "exponent m > n")->required();
        c->add_option("--n", n, "exponent n >= 1")->required();
    }

    CLI::App* region = app.add_subcommand("region", "sign grid of the tail-shape constant");
    region->fallthrough();
    region->add_option("--mmax", m_max, "largest m in the grid")->required();
    region->add_option("--threads", threads, "worker threads");

    CLI::App* bounds = app.add_subcommand("bounds", "closed-form necessary bounds");
    bounds->fallthrough();
    bounds->add_flag("--kl", kl_mode, "coefficient-ratio bound mode");
    bounds->add_option("--n", n, "analytic exponent n >= 1");
    bounds->add_option("--m", m, "co-analytic exponent m >= 1");
    bounds->add_option("--q", q, "ratio offset q >= 0");
    add_rational_option(bounds, "--s", s_flag, "radial exponent s >= 0");
    add_rational_option(bounds, "--t", t_flag, "radial exponent t >= 0");
    bounds->add_option("--kmax", scan_limit, "prefix scan length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }

    const char* env_threads = std::getenv("BTOEP_THREADS");
    if (env_threads && !region->count("--threads")) {
        try {
            threads = std::max(1, std::stoi(env_threads));
        } catch (const std::exception&) {
            // ignore malformed environment override
        }
    }

    try {
        if (seq->parsed()) return run_seq(n, m, s_flag, t_flag, a_flag, kmax, opts, started);
        if (hypo->parsed()) {
            if (hypo_check->parsed())
                return run_hypo_check(n, m, s_flag, t_flag, a_flag, K, hypo_check->count("--K") > 0, opts, started);
            if (hypo_sweep->parsed())
                return run_hypo_sweep(n, m, s_flag, t_flag, tol_flag, K, hypo_sweep->count("--K") > 0, opts,
                                      started);
            if (hypo_window->parsed())
                return run_hypo_window(n, m, s_flag, c_flag, opts, started);
        }
        if (comm->parsed()) {
            const std::string action = comm_norm->parsed()      ? "norm"
                                       : comm_classify->parsed() ? "classify"
                                                                 : "halfbound";
            return run_comm(action, m, n, opts, started);
        }
        if (region->parsed()) return run_region(m_max, threads, opts.out, opts, started);
        if (bounds->parsed())
            return run_bounds(kl_mode, n, m, q, s_flag, t_flag, scan_limit, opts, started);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << "error: no command selected\n";
    return 3;
}
