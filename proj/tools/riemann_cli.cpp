// Command-line front end: exact covariance tables, sequence tabulation,
// seeded Monte Carlo studies, and the one-shot verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <riemann/exact_covariance.hpp>
#include <riemann/io.hpp>
#include <riemann/sequences.hpp>
#include <riemann/stats.hpp>
#include <riemann/verify.hpp>
#include <riemann/wiener.hpp>

namespace {

using namespace riemann;
using ordered_json = nlohmann::ordered_json;

struct Range {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;
};

// "7" or "2..100"
Range parse_range(const std::string& text) {
    Range r;
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoull(text);
        } else {
            r.lo = std::stoull(text.substr(0, pos));
            r.hi = std::stoull(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    if (r.lo < 1 || r.lo > r.hi)
        throw CLI::ValidationError("range", "need 1 <= LO <= HI in '" + text + "'");
    return r;
}

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "Write output to PATH instead of stdout");
}

// A table with fixed columns; renders to CSV (12-significant-digit reals,
// LF endings) or a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<ordered_json> json_rows;

    void emit(const OutputOptions& opts) const {
        std::ostringstream body;
        if (opts.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& r : json_rows) arr.push_back(r);
            body << arr.dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < columns.size(); ++i)
                body << (i ? "," : "") << columns[i];
            body << '\n';
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    body << (i ? "," : "") << row[i];
                body << '\n';
            }
        }
        if (opts.out_path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream f(opts.out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file " + opts.out_path);
            f << body.str();
        }
    }
};

int run_covariance(const std::optional<std::string>& n_text,
                   const std::optional<std::string>& s_text, bool check,
                   const OutputOptions& opts) {
    Table table;
    bool any_mismatch = false;
    if (n_text) {
        Range r = parse_range(*n_text);
        table.columns = {"n", "ex_n_sq", "ex_n_sq_approx", "ex_n_xnp1", "ey_n_sq", "check"};
        for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
            Rational sq = ex_n_squared(n);
            Rational cross = ex_n_xnp1(n);
            Rational ey2 = ey_n_squared(n);
            std::string verdict = "-";
            if (check) {
                bool ok = min_sum(n, n) == sq && min_sum(n, n + 1) == cross &&
                          ey2 == Rational(1, 2);
                verdict = ok ? "ok" : "MISMATCH";
                any_mismatch |= !ok;
            }
            table.rows.push_back({std::to_string(n), to_fraction_string(sq),
                                  format_real(to_double(sq)), to_fraction_string(cross),
                                  to_fraction_string(ey2), verdict});
            table.json_rows.push_back({{"n", n},
                                       {"ex_n_sq", to_fraction_string(sq)},
                                       {"ex_n_sq_approx", to_double(sq)},
                                       {"ex_n_xnp1", to_fraction_string(cross)},
                                       {"ey_n_sq", to_fraction_string(ey2)},
                                       {"check", verdict}});
        }
    } else if (s_text) {
        Range r = parse_range(*s_text);
        table.columns = {"s",         "ex4s_x2s",  "ex4s1_x2s1", "ex4s1_x2s", "ex4s_x2s1",
                         "ey4s_y2s",  "var_ydiff", "var_ydiff_approx", "check"};
        for (std::uint64_t s = r.lo; s <= r.hi; ++s) {
            CrossCovariances c = cross_covariances(s);
            Rational cross = ey4s_y2s(s);
            Rational var = var_ydiff(s);
            std::string verdict = "-";
            if (check) {
                bool ok = c.x4s_x2s == min_sum(4 * s, 2 * s) &&
                          c.x4s1_x2s1 == min_sum(4 * s + 1, 2 * s + 1) &&
                          c.x4s1_x2s == min_sum(4 * s + 1, 2 * s) &&
                          c.x4s_x2s1 == min_sum(4 * s, 2 * s + 1) &&
                          cross == c.x4s_x2s + c.x4s1_x2s1 - c.x4s1_x2s - c.x4s_x2s1;
                verdict = ok ? "ok" : "MISMATCH";
                any_mismatch |= !ok;
            }
            table.rows.push_back(
                {std::to_string(s), to_fraction_string(c.x4s_x2s),
                 to_fraction_string(c.x4s1_x2s1), to_fraction_string(c.x4s1_x2s),
                 to_fraction_string(c.x4s_x2s1), to_fraction_string(cross),
                 to_fraction_string(var), format_real(to_double(var)), verdict});
            table.json_rows.push_back({{"s", s},
                                       {"ex4s_x2s", to_fraction_string(c.x4s_x2s)},
                                       {"ex4s1_x2s1", to_fraction_string(c.x4s1_x2s1)},
                                       {"ex4s1_x2s", to_fraction_string(c.x4s1_x2s)},
                                       {"ex4s_x2s1", to_fraction_string(c.x4s_x2s1)},
                                       {"ey4s_y2s", to_fraction_string(cross)},
                                       {"var_ydiff", to_fraction_string(var)},
                                       {"var_ydiff_approx", to_double(var)},
                                       {"check", verdict}});
        }
    } else {
        std::cerr << "covariance: one of --n or --s is required\n";
        return 2;
    }
    table.emit(opts);
    return any_mismatch ? 1 : 0;
}

int run_sequence(const std::string& spec_text, const std::string& n_text,
                 unsigned quadrature, const OutputOptions& opts) {
    nlohmann::json spec_json;
    try {
        if (!spec_text.empty() && spec_text.front() == '@') {
            std::ifstream f(spec_text.substr(1));
            if (!f) throw std::runtime_error("cannot open spec file " + spec_text.substr(1));
            spec_json = nlohmann::json::parse(f);
        } else {
            spec_json = nlohmann::json::parse(spec_text);
        }
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "sequence: malformed spec JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "sequence: " << e.what() << "\n";
        return 2;
    }

    std::optional<FunctionSpec> spec;
    try {
        spec.emplace(spec_from_json(spec_json));
    } catch (const std::exception& e) {
        std::cerr << "sequence: invalid spec: " << e.what() << "\n";
        return 2;
    }

    Range r = parse_range(n_text);
    bool with_residual = spec->derivative_available();
    Table table;
    table.columns = {"n", "x_n", "y_n", "mean"};
    if (with_residual) table.columns.push_back("residual");
    double x_prev = x_n(*spec, r.lo);
    for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
        double x_next = x_n(*spec, n + 1);
        double y = x_next - x_prev;
        std::vector<std::string> row = {std::to_string(n), format_real(x_prev),
                                        format_real(y),
                                        format_real(x_prev / double(n))};
        ordered_json jrow = {{"n", n},
                             {"x_n", x_prev},
                             {"y_n", y},
                             {"mean", x_prev / double(n)}};
        if (with_residual) {
            double resid = decomposition_residual(*spec, n, quadrature);
            row.push_back(format_real(resid));
            jrow["residual"] = resid;
        }
        table.rows.push_back(std::move(row));
        table.json_rows.push_back(std::move(jrow));
        x_prev = x_next;
    }
    table.emit(opts);
    return 0;
}

int run_simulate(const std::string& s_text, std::uint64_t samples, std::uint64_t seed,
                 const OutputOptions& opts) {
    if (samples < 100) {
        std::cerr << "simulate: --samples must be >= 100\n";
        return 2;
    }
    Range r = parse_range(s_text);
    std::vector<std::uint64_t> s_values;
    for (std::uint64_t s = r.lo; s <= r.hi; ++s) s_values.push_back(s);
    auto rows = variance_convergence_study(s_values, samples, seed);

    Table table;
    table.columns = {"s",       "n_samples",  "mean",    "variance", "exact_target",
                     "target_approx", "ci_radius_3se", "ks_statistic", "ks_pass", "verdict"};
    bool hard_fail = false;
    for (const MonteCarloSummary& m : rows) {
        hard_fail |= m.hard_fail;
        std::string verdict = m.hard_fail ? "hard-fail" : (m.pass ? "pass" : "marginal");
        double target = to_double(*m.exact_target);
        table.rows.push_back({std::to_string(m.s), std::to_string(m.n_samples),
                              format_real(m.mean), format_real(m.variance),
                              to_fraction_string(*m.exact_target), format_real(target),
                              format_real(m.variance_ci_radius),
                              format_real(m.ks_statistic), m.ks_pass ? "true" : "false",
                              verdict});
        table.json_rows.push_back({{"s", m.s},
                                   {"n_samples", m.n_samples},
                                   {"mean", m.mean},
                                   {"variance", m.variance},
                                   {"exact_target", to_fraction_string(*m.exact_target)},
                                   {"target_approx", target},
                                   {"ci_radius_3se", m.variance_ci_radius},
                                   {"ks_statistic", m.ks_statistic},
                                   {"ks_pass", m.ks_pass},
                                   {"verdict", verdict}});
    }
    table.emit(opts);
    return hard_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-sum increment laboratory"};
    app.require_subcommand(1);

    std::optional<std::string> cov_n, cov_s;
    bool cov_check = false;
    OutputOptions cov_out;
    CLI::App* cov = app.add_subcommand("covariance", "Exact covariance identities");
    cov->add_option("--n", cov_n, "Grid size n or range LO..HI");
    cov->add_option("--s", cov_s, "Dyadic index s or range LO..HI");
    cov->add_flag("--check", cov_check, "Verify closed forms against brute-force sums");
    add_output_flags(cov, cov_out);

    std::string seq_spec, seq_n = "2..100";
    unsigned seq_quad = 8;
    OutputOptions seq_out;
    CLI::App* seq = app.add_subcommand("sequence", "Tabulate x_n, y_n, x_n/n");
    seq->add_option("--spec", seq_spec, "Function spec JSON (inline, or @FILE)")->required();
    seq->add_option("--n", seq_n, "Index range LO..HI");
    seq->add_option("--quadrature", seq_quad, "Gauss-Legendre points per window");
    add_output_flags(seq, seq_out);

    std::string sim_s = "1";
    std::uint64_t sim_samples = 100'000, sim_seed = 0;
    OutputOptions sim_out;
    CLI::App* sim = app.add_subcommand("simulate", "Seeded Monte Carlo for Lemma-1 pairs");
    sim->add_option("--s", sim_s, "Dyadic index s or range LO..HI");
    sim->add_option("--samples", sim_samples, "Replicates per s (>= 100)");
    sim->add_option("--seed", sim_seed, "RNG seed");
    add_output_flags(sim, sim_out);

    bool ver_quick = false;
    std::uint64_t ver_seed = 0;
    CLI::App* ver = app.add_subcommand("verify", "Run the full verification battery");
    ver->add_flag("--quick", ver_quick, "Reduced sample counts, rescaled tolerances");
    ver->add_option("--seed", ver_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cov->parsed()) return run_covariance(cov_n, cov_s, cov_check, cov_out);
        if (seq->parsed()) return run_sequence(seq_spec, seq_n, seq_quad, seq_out);
        if (sim->parsed()) return run_simulate(sim_s, sim_samples, sim_seed, sim_out);
        if (ver->parsed()) {
            auto results = riemann::run_verification(std::cout, ver_quick, ver_seed);
            return riemann::all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
