// Command line front end for the classical-threshold library.
//
// Exit codes: 0 success, 1 numeric failure or failed --verify cross-check,
// 2 usage/domain error (bad flag, bad purity, unreadable config file).

#include "cft/benchmark.hpp"
#include "cft/errors.hpp"
#include "cft/estimation.hpp"
#include "cft/fock_oracle.hpp"
#include "cft/serialize.hpp"
#include "cft/specfun.hpp"
#include "cft/states.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct GlobalOpts {
    std::string format = "csv";
    std::string output; // empty means stdout
    int precision = 6;
    cft::QuadConfig cfg;
    bool verify = false;
};

// Accepts plain decimals and exact rationals like "7/9" so that grid purities
// match the library's internal fractions bit for bit.
double parse_number(const std::string& text, const char* what) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return v;
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        std::size_t u1 = 0, u2 = 0;
        const long long a = std::stoll(num, &u1);
        const long long b = std::stoll(den, &u2);
        if (u1 != num.size() || u2 != den.size() || b == 0)
            throw std::invalid_argument(text);
        return double(a) / double(b);
    } catch (const cft::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw cft::domain_error(std::string(what) + ": cannot parse number '" + text + "'");
    }
}

void check_mu_range(double mu, const char* what) {
    if (!(mu > 0.0 && mu <= 1.0))
        throw cft::domain_error(std::string(what) + ": purity must lie in (0, 1]");
}

// CFT_CONFIG points at a JSON file carrying defaults for the global options;
// explicit command line flags still win because they overwrite afterwards.
void apply_config_file(GlobalOpts& g) {
    const char* path = std::getenv("CFT_CONFIG");
    if (path == nullptr || *path == '\0')
        return;
    std::ifstream in(path);
    if (!in)
        throw cft::domain_error(std::string("cannot open config file '") + path + "'");
    cft::ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw cft::domain_error(std::string("config file '") + path + "': " + e.what());
    }
    if (!j.is_object())
        throw cft::domain_error(std::string("config file '") + path + "': expected a JSON object");
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            if (k == "format")
                g.format = it.value().get<std::string>();
            else if (k == "precision")
                g.precision = it.value().get<int>();
            else if (k == "abs_tol")
                g.cfg.abs_tol = it.value().get<double>();
            else if (k == "rel_tol")
                g.cfg.rel_tol = it.value().get<double>();
            else if (k == "tail_cut")
                g.cfg.tail_cut = it.value().get<double>();
            else if (k == "delta_max")
                g.cfg.delta_max = it.value().get<double>();
            else if (k == "n_points")
                g.cfg.n_points = it.value().get<int>();
            else
                throw cft::domain_error("unknown config key '" + k + "'");
        }
    } catch (const cft::domain_error&) {
        throw;
    } catch (const std::exception& e) {
        throw cft::domain_error(std::string("config file '") + path + "': " + e.what());
    }
    if (g.format != "csv" && g.format != "json")
        throw cft::domain_error("config file: format must be 'csv' or 'json'");
    if (g.precision < 3 || g.precision > 12)
        throw cft::domain_error("config file: precision must lie in [3, 12]");
    if (!(g.cfg.delta_max > 0.0))
        throw cft::domain_error("config file: delta_max must be positive");
    if (g.cfg.n_points < 3)
        throw cft::domain_error("config file: n_points must be at least 3");
}

void emit(const GlobalOpts& g, const std::string& payload) {
    if (g.output.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out)
        throw cft::domain_error("cannot open output file '" + g.output + "'");
    out << payload;
}

std::string dump_json(const cft::ordered_json& j) { return j.dump(2) + "\n"; }

cft::ordered_json config_json(const GlobalOpts& g) {
    cft::ordered_json j;
    j["abs_tol"] = g.cfg.abs_tol;
    j["rel_tol"] = g.cfg.rel_tol;
    j["tail_cut"] = g.cfg.tail_cut;
    j["delta_max"] = g.cfg.delta_max;
    j["n_points"] = g.cfg.n_points;
    return j;
}

void run_pure(const GlobalOpts& g) {
    const cft::ValueWithError r = cft::cft_pure(g.cfg);
    if (g.format == "json") {
        cft::ordered_json j;
        j["value"] = cft::json_number(r.value, g.precision);
        j["error"] = cft::json_number(r.error, g.precision);
        j["config"] = config_json(g);
        emit(g, dump_json(j));
    } else {
        emit(g, "value,error\n" + cft::format_sig(r.value, g.precision) + "," +
                    cft::format_sig(r.error, g.precision) + "\n");
    }
}

std::vector<double> parse_mu_list(const std::vector<std::string>& args) {
    std::vector<double> mus;
    for (const std::string& raw : args) {
        std::size_t start = 0;
        while (start <= raw.size()) {
            const auto comma = raw.find(',', start);
            const std::string tok =
                raw.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!tok.empty()) {
                const double mu = parse_number(tok, "--mu");
                check_mu_range(mu, "--mu");
                mus.push_back(mu);
            }
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    if (mus.empty())
        throw cft::domain_error("--mu: no purity values given");
    return mus;
}

void run_bounds(const GlobalOpts& g, const std::vector<std::string>& mu_args) {
    const std::vector<double> mus = parse_mu_list(mu_args);
    std::vector<cft::BoundResult> rows;
    rows.reserve(mus.size());
    for (double mu : mus)
        rows.push_back(cft::bounds_at(mu, g.cfg));
    if (g.format == "json")
        emit(g, dump_json(cft::bounds_json(rows, g.precision)));
    else
        emit(g, cft::bounds_csv(rows, g.precision));
}

void run_average(const GlobalOpts& g, const std::string& side_str, const std::string& eps_str) {
    const double eps = parse_number(eps_str, "--eps");
    if (!(eps > 0.0 && eps < 1.0))
        throw cft::domain_error("--eps: must lie in (0, 1)");
    const cft::BoundSide side =
        side_str == "upper" ? cft::BoundSide::Upper : cft::BoundSide::Lower;
    const cft::ValueWithError r = cft::avg_bound_over_purity_detailed(side, eps, g.cfg);
    if (g.format == "json") {
        cft::ordered_json j;
        j["side"] = side_str;
        j["eps"] = cft::json_number(eps, g.precision);
        j["value"] = cft::json_number(r.value, g.precision);
        j["error"] = cft::json_number(r.error, g.precision);
        emit(g, dump_json(j));
    } else {
        emit(g, "side,eps,value,error\n" + side_str + "," + cft::format_sig(eps, g.precision) +
                    "," + cft::format_sig(r.value, g.precision) + "," +
                    cft::format_sig(r.error, g.precision) + "\n");
    }
}

void run_dist(const GlobalOpts& g, const std::string& kind, int n, int seed,
              const std::string& mu_str) {
    const cft::TabulatedDensity* p = nullptr;
    cft::TabulatedDensity owned;
    double mu = 0.0;
    int n_cut = 0;
    if (kind == "opt-vacuum") {
        p = &cft::p_opt_vacuum(g.cfg);
    } else if (kind == "opt-fock") {
        p = &cft::p_opt_fock(n, g.cfg);
    } else if (kind == "cross") {
        if ((n - seed) % 2 != 0)
            std::cerr << "warning: input n=" << n << " and seed " << seed
                      << " have opposite parity; the overlap density is identically zero\n";
        p = &cft::eta_overlap(n, seed, g.cfg);
    } else { // thermal-lower
        if (mu_str.empty())
            throw cft::domain_error("dist --kind thermal-lower requires --mu");
        mu = parse_number(mu_str, "--mu");
        check_mu_range(mu, "--mu");
        n_cut = cft::thermal_cutoff(mu);
        owned = cft::p_thermal_lower(mu, n_cut, g.cfg);
        p = &owned;
    }
    if (g.format == "json") {
        cft::ordered_json j;
        j["kind"] = kind;
        if (kind == "opt-fock" || kind == "cross")
            j["n"] = n;
        if (kind == "cross")
            j["seed"] = seed;
        if (kind == "thermal-lower") {
            j["mu"] = cft::json_number(mu, g.precision);
            j["n_cut"] = n_cut;
        }
        j["density"] = cft::density_json(*p, g.precision);
        emit(g, dump_json(j));
    } else {
        emit(g, cft::density_csv(*p, g.precision));
    }
}

void run_quantum_eval(const GlobalOpts& g, const std::string& r_str, const std::string& s_str) {
    const double r = parse_number(r_str, "--r");
    const double s = parse_number(s_str, "--s");
    const double f = cft::quantum_teleport_fidelity(r, s);
    if (g.format == "json") {
        cft::ordered_json j;
        j["r"] = cft::json_number(r, g.precision);
        j["s"] = cft::json_number(s, g.precision);
        j["f_q"] = cft::json_number(f, g.precision);
        emit(g, dump_json(j));
    } else {
        emit(g, "r,s,f_q\n" + cft::format_sig(r, g.precision) + "," +
                    cft::format_sig(s, g.precision) + "," + cft::format_sig(f, g.precision) +
                    "\n");
    }
}

double resolve_threshold(const GlobalOpts& g, const std::string& th_str) {
    if (th_str.empty())
        return cft::cft_pure(g.cfg).value;
    const double th = parse_number(th_str, "--threshold");
    if (!(th > 0.0 && th < 1.0))
        throw cft::domain_error("--threshold: must lie in (0, 1)");
    return th;
}

void run_quantum_critical(const GlobalOpts& g, const std::string& s_str,
                          const std::string& th_str) {
    const double s = parse_number(s_str, "--s");
    const double th = resolve_threshold(g, th_str);
    const std::optional<double> rc = cft::critical_squeezing(s, th);
    if (g.format == "json") {
        cft::ordered_json j;
        j["s"] = cft::json_number(s, g.precision);
        j["threshold"] = cft::json_number(th, g.precision);
        if (rc) {
            j["r_c"] = cft::json_number(*rc, g.precision);
            j["r_c_db"] = cft::json_number(cft::r_to_db(*rc), g.precision);
        } else {
            j["r_c"] = nullptr;
            j["r_c_db"] = nullptr;
        }
        emit(g, dump_json(j));
    } else {
        std::string row = cft::format_sig(s, g.precision) + "," +
                          cft::format_sig(th, g.precision) + ",";
        if (rc)
            row += cft::format_sig(*rc, g.precision) + "," +
                   cft::format_sig(cft::r_to_db(*rc), g.precision);
        else
            row += "None,None";
        emit(g, "s,threshold,r_c,r_c_db\n" + row + "\n");
    }
}

void run_quantum_min_resource(const GlobalOpts& g, const std::string& th_str) {
    const double th = resolve_threshold(g, th_str);
    const double s = cft::minimal_resource_squeezing(th);
    if (g.format == "json") {
        cft::ordered_json j;
        j["threshold"] = cft::json_number(th, g.precision);
        j["s_star"] = cft::json_number(s, g.precision);
        j["s_star_db"] = cft::json_number(cft::r_to_db(s), g.precision);
        emit(g, dump_json(j));
    } else {
        emit(g, "threshold,s_star,s_star_db\n" + cft::format_sig(th, g.precision) + "," +
                    cft::format_sig(s, g.precision) + "," +
                    cft::format_sig(cft::r_to_db(s), g.precision) + "\n");
    }
}

// Verdicts are structured output; they are emitted as JSON in both formats.
void run_verdict(const GlobalOpts& g, const std::string& key, const std::string& mu_str,
                 const std::string& fid_str, const std::string& sigma_str) {
    cft::ordered_json j;
    if (!key.empty()) {
        if (!mu_str.empty() || !fid_str.empty())
            throw cft::domain_error("verdict: give either --experiment or --mu/--fidelity");
        const cft::Experiment* e = cft::find_experiment(key);
        if (e == nullptr) {
            std::string known;
            for (const cft::Experiment& x : cft::experiments())
                known += (known.empty() ? "" : ", ") + x.key;
            throw cft::domain_error("unknown experiment '" + key + "' (known: " + known + ")");
        }
        j["experiment"] = cft::experiment_json(*e, g.precision);
        j["verdict"] = cft::verdict_json(cft::verdict(e->mu, e->fidelity, e->sigma, g.cfg),
                                         g.precision);
    } else {
        if (mu_str.empty() || fid_str.empty())
            throw cft::domain_error("verdict: requires --experiment or both --mu and --fidelity");
        const double mu = parse_number(mu_str, "--mu");
        check_mu_range(mu, "--mu");
        const double fid = parse_number(fid_str, "--fidelity");
        if (!(fid >= 0.0 && fid <= 1.0))
            throw cft::domain_error("--fidelity: must lie in [0, 1]");
        const double sigma = parse_number(sigma_str, "--sigma");
        if (sigma < 0.0)
            throw cft::domain_error("--sigma: must be >= 0");
        j["verdict"] = cft::verdict_json(cft::verdict(mu, fid, sigma, g.cfg), g.precision);
    }
    emit(g, dump_json(j));
}

const std::vector<double>& table_purities() {
    static const std::vector<double> mus = {1.0 / 9.0, 1.0 / 5.0,  1.0 / 3.0,
                                            3.0 / 7.0, 1.0 / 2.0,  3.0 / 5.0,
                                            7.0 / 9.0, 19.0 / 21.0, 1.0};
    return mus;
}

std::vector<double> fit_sample_grid() {
    constexpr int kSamples = 33;
    std::vector<double> mus(kSamples);
    const double eps = 1.0 / 9.0;
    for (int k = 0; k < kSamples; ++k)
        mus[k] = (k == kSamples - 1) ? 1.0 : eps + (1.0 - eps) * double(k) / double(kSamples - 1);
    return mus;
}

void run_table(const GlobalOpts& g, bool fits_only) {
    const std::vector<double> fit_mus = fit_sample_grid();
    if (fits_only) {
        if (g.format == "json") {
            cft::ordered_json arr = cft::ordered_json::array();
            for (double mu : fit_mus) {
                cft::ordered_json row;
                row["mu"] = cft::json_number(mu, g.precision);
                row["fit_up"] = cft::json_number(cft::fit_eval(mu, cft::BoundSide::Upper),
                                                 g.precision);
                row["fit_lo"] = cft::json_number(cft::fit_eval(mu, cft::BoundSide::Lower),
                                                 g.precision);
                arr.push_back(std::move(row));
            }
            cft::ordered_json j;
            j["fits"] = std::move(arr);
            emit(g, dump_json(j));
        } else {
            std::string out = "mu,fit_up,fit_lo\n";
            for (double mu : fit_mus) {
                out += cft::format_sig(mu, g.precision) + "," +
                       cft::format_sig(cft::fit_eval(mu, cft::BoundSide::Upper), g.precision) +
                       "," +
                       cft::format_sig(cft::fit_eval(mu, cft::BoundSide::Lower), g.precision) +
                       "\n";
            }
            emit(g, out);
        }
        return;
    }

    std::vector<cft::BoundResult> rows;
    for (double mu : table_purities())
        rows.push_back(cft::bounds_at(mu, g.cfg));
    struct ExpRow {
        const cft::Experiment* e;
        cft::Verdict v;
    };
    std::vector<ExpRow> exps;
    for (const cft::Experiment& e : cft::experiments())
        exps.push_back({&e, cft::verdict(e.mu, e.fidelity, e.sigma, g.cfg)});

    if (g.format == "json") {
        cft::ordered_json j;
        j["bounds"] = cft::bounds_json(rows, g.precision);
        cft::ordered_json fits = cft::ordered_json::array();
        for (double mu : fit_mus) {
            cft::ordered_json row;
            row["mu"] = cft::json_number(mu, g.precision);
            row["fit_up"] = cft::json_number(cft::fit_eval(mu, cft::BoundSide::Upper),
                                             g.precision);
            row["fit_lo"] = cft::json_number(cft::fit_eval(mu, cft::BoundSide::Lower),
                                             g.precision);
            fits.push_back(std::move(row));
        }
        j["fits"] = std::move(fits);
        cft::ordered_json experiments = cft::ordered_json::array();
        for (const ExpRow& x : exps) {
            cft::ordered_json row = cft::experiment_json(*x.e, g.precision);
            row["verdict"] = cft::verdict_json(x.v, g.precision);
            experiments.push_back(std::move(row));
        }
        j["experiments"] = std::move(experiments);
        emit(g, dump_json(j));
    } else {
        // One wide table so the payload stays a single-header CSV; cells that
        // do not apply to a section are left empty.
        std::string out =
            "section,mu,f_up,f_lo,n_cut,err,fit_up,fit_lo,key,squeezing_db,fidelity,sigma,"
            "classification\n";
        for (const cft::BoundResult& r : rows) {
            out += "bounds," + cft::format_sig(r.mu, g.precision) + "," +
                   cft::format_sig(r.f_up, g.precision) + "," +
                   cft::format_sig(r.f_lo, g.precision) + "," + std::to_string(r.n_cut_used) +
                   "," + cft::format_sig(r.error_estimate, g.precision) + ",,,,,,,\n";
        }
        for (double mu : fit_mus) {
            out += "fit," + cft::format_sig(mu, g.precision) + ",,,,," +
                   cft::format_sig(cft::fit_eval(mu, cft::BoundSide::Upper), g.precision) + "," +
                   cft::format_sig(cft::fit_eval(mu, cft::BoundSide::Lower), g.precision) +
                   ",,,,,\n";
        }
        for (const ExpRow& x : exps) {
            out += "experiment," + cft::format_sig(x.e->mu, g.precision) + "," +
                   cft::format_sig(x.v.f_up, g.precision) + "," +
                   cft::format_sig(x.v.f_lo, g.precision) + ",,,,," + x.e->key + "," +
                   cft::format_sig(x.e->squeezing_db, g.precision) + "," +
                   cft::format_sig(x.e->fidelity, g.precision) + "," +
                   cft::format_sig(x.e->sigma, g.precision) + "," +
                   cft::to_string(x.v.classification) + "\n";
        }
        emit(g, out);
    }
}

// Cross-checks the analytic pipeline against the truncated-Fock-basis oracle.
// Returns the number of failed checks; prints one line per check to stderr.
int run_verification(const GlobalOpts& g) {
    int failures = 0;
    auto report = [&failures](const std::string& name, double dev, double tol) {
        const bool ok = dev <= tol;
        failures += ok ? 0 : 1;
        std::cerr << "verify: " << name << ": max deviation " << cft::format_sig(dev, 3)
                  << " (tol " << cft::format_sig(tol, 3) << ") " << (ok ? "[ok]" : "[FAIL]")
                  << "\n";
    };

    constexpr int kDim = 150;
    {
        double dev = 0.0;
        const double cases[][2] = {{0.2, 0.5}, {0.5, 0.8}}; // (delta, mu)
        for (const auto& c : cases) {
            const double delta = c[0], mu = c[1];
            const cft::TruncatedOperator r1 = cft::squeezed_thermal_density(0.0, mu, kDim);
            const cft::TruncatedOperator r2 = cft::squeezed_thermal_density(delta, mu, kDim);
            const double fm = cft::uhlmann_fidelity(r1, r2);
            dev = std::max(dev, std::abs(fm - cft::fidelity_squeezed_thermal(delta, mu)));
        }
        report("Uhlmann fidelity vs closed form", dev, 1e-6);
    }
    {
        const cft::TruncatedOperator u = cft::squeeze_unitary(0.8, kDim);
        double dev = 0.0;
        for (int n : {0, 1, 2, 5, 10})
            dev = std::max(dev, std::abs(u.m(n, n).real() - cft::diag_squeeze_element(n, 0.8)));
        report("diagonal squeeze elements vs matrix exponential", dev, 1e-8);
    }
    {
        const cft::TabulatedDensity brute = cft::brute_povm_distribution(
            0, 0, g.cfg, kDim, 36.0, cft::ColumnSource::ClosedForm, 16385);
        const double tv = cft::total_variation(brute, cft::p_opt_vacuum(g.cfg));
        report("brute-force covariant POVM vs analytic density", tv, 1e-3);
    }
    return failures;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    GlobalOpts g;
    try {
        apply_config_file(g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"classical fidelity thresholds for teleportation and storage of "
                 "squeezed states with unknown squeezing"};
    app.require_subcommand(1);

    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("-o,--output", g.output, "write the payload to a file instead of stdout");
    app.add_option("--precision", g.precision, "significant digits in printed numbers")
        ->check(CLI::Range(3, 12))
        ->capture_default_str();
    app.add_option("--abs-tol", g.cfg.abs_tol, "absolute tolerance of the inner transforms")
        ->capture_default_str();
    app.add_option("--rel-tol", g.cfg.rel_tol, "relative tolerance of the outer integrals")
        ->capture_default_str();
    app.add_option("--tail-cut", g.cfg.tail_cut, "window cut for integrand tails")
        ->capture_default_str();
    app.add_option("--delta-max", g.cfg.delta_max, "half width of the delta grid")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--points", g.cfg.n_points,
                   "delta grid resolution (rounded up to an odd count >= 65)")
        ->check(CLI::Range(3, 4000001))
        ->capture_default_str();
    app.add_flag("--verify", g.verify,
                 "cross-check the analytic pipeline against the truncated-basis oracle");

    CLI::App* pure = app.add_subcommand(
        "pure", "classical threshold for pure squeezed vacuum inputs");
    pure->fallthrough();
    pure->callback([&g] { run_pure(g); });

    CLI::App* bounds = app.add_subcommand(
        "bounds", "upper and lower classical bounds at given purities");
    bounds->fallthrough();
    std::vector<std::string> mu_args;
    bounds->add_option("--mu", mu_args, "purity values (decimals or fractions like 7/9)")
        ->required();
    bounds->callback([&g, &mu_args] { run_bounds(g, mu_args); });

    CLI::App* average = app.add_subcommand(
        "average", "flat-prior average of a bound over the purity window [eps, 1]");
    average->fallthrough();
    std::string side_str;
    std::string eps_str = "1/9";
    average->add_option("--side", side_str, "which bound to average")
        ->required()
        ->check(CLI::IsMember({"upper", "lower"}));
    average->add_option("--eps", eps_str, "lower end of the purity window")
        ->capture_default_str();
    average->callback([&g, &side_str, &eps_str] { run_average(g, side_str, eps_str); });

    CLI::App* dist = app.add_subcommand("dist", "tabulated estimation densities");
    dist->fallthrough();
    std::string dist_kind;
    int dist_n = 0;
    int dist_seed = 0;
    std::string dist_mu;
    dist->add_option("--kind", dist_kind, "which density to tabulate")
        ->required()
        ->check(CLI::IsMember({"opt-vacuum", "opt-fock", "cross", "thermal-lower"}));
    dist->add_option("--n", dist_n, "Fock index of the input state")
        ->check(CLI::NonNegativeNumber);
    dist->add_option("--seed", dist_seed, "measurement seed state (0 or 1)")
        ->check(CLI::Range(0, 1));
    dist->add_option("--mu", dist_mu, "purity of the thermal mixture (thermal-lower only)");
    dist->callback([&g, &dist_kind, &dist_n, &dist_seed, &dist_mu] {
        run_dist(g, dist_kind, dist_n, dist_seed, dist_mu);
    });

    CLI::App* quantum = app.add_subcommand(
        "quantum", "conventional twin-beam teleportation analysis");
    quantum->fallthrough();
    quantum->require_subcommand(1);
    std::string q_r = "0";
    std::string q_s = "0";
    std::string q_th;

    CLI::App* q_eval = quantum->add_subcommand("eval", "F^Q at given input/resource squeezing");
    q_eval->fallthrough();
    q_eval->add_option("--r", q_r, "input squeezing degree (use --r=-0.3 for negatives)")
        ->required();
    q_eval->add_option("--s", q_s, "resource squeezing degree")->required();
    q_eval->callback([&g, &q_r, &q_s] { run_quantum_eval(g, q_r, q_s); });

    CLI::App* q_crit = quantum->add_subcommand(
        "critical", "input squeezing where F^Q drops to the threshold");
    q_crit->fallthrough();
    q_crit->add_option("--s", q_s, "resource squeezing degree")->required();
    q_crit->add_option("--threshold", q_th,
                       "fidelity threshold (default: the computed pure-state threshold)");
    q_crit->callback([&g, &q_s, &q_th] { run_quantum_critical(g, q_s, q_th); });

    CLI::App* q_min = quantum->add_subcommand(
        "min-resource", "resource squeezing needed to reach the threshold at r = 0");
    q_min->fallthrough();
    q_min->add_option("--threshold", q_th,
                      "fidelity threshold (default: the computed pure-state threshold)");
    q_min->callback([&g, &q_th] { run_quantum_min_resource(g, q_th); });

    CLI::App* verdict = app.add_subcommand(
        "verdict", "classify a measured fidelity against the computed bounds");
    verdict->fallthrough();
    std::string v_key, v_mu, v_fid;
    std::string v_sigma = "0";
    verdict->add_option("--experiment", v_key, "built-in experiment key");
    verdict->add_option("--mu", v_mu, "purity of the input ensemble");
    verdict->add_option("--fidelity", v_fid, "measured average fidelity");
    verdict->add_option("--sigma", v_sigma, "one standard deviation of the measured fidelity")
        ->capture_default_str();
    verdict->callback([&g, &v_key, &v_mu, &v_fid, &v_sigma] {
        run_verdict(g, v_key, v_mu, v_fid, v_sigma);
    });

    CLI::App* table = app.add_subcommand(
        "table", "bound table, quartic fit curves, and experiment verdicts");
    table->fallthrough();
    bool fits_only = false;
    table->add_flag("--fits-only", fits_only, "emit only the quartic fit curves");
    table->callback([&g, &fits_only] { run_table(g, fits_only); });

    int exit_code = 0;
    try {
        app.parse(argc, argv);
        if (g.verify && run_verification(g) > 0)
            exit_code = 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cft::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cft::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
