#include "cft/benchmark.hpp"
#include "cft/errors.hpp"
#include "cft/estimation.hpp"
#include "cft/states.hpp"

#include <algorithm>
#include <cmath>

namespace cft {

namespace {

void check_mu(double mu) {
    if (!(mu > 0.0 && mu <= 1.0))
        throw domain_error("purity mu must lie in (0, 1], got " + std::to_string(mu));
}

// F_{delta,mu} samples on the grid of p, shared across Fock indices.
std::vector<double> fidelity_weights(const TabulatedDensity& p, double mu) {
    std::vector<double> w(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        w[i] = fidelity_squeezed_thermal(p.delta_at(i), mu);
    return w;
}

} // namespace

double fidelity_squeezed_thermal(double delta, double mu) {
    check_mu(mu);
    const double t = std::abs(delta);
    if (t == 0.0)
        return 1.0;
    // multiply numerator and denominator by e^{-t}: every term stays bounded
    const double e1 = std::exp(-t);
    const double e2 = std::exp(-2.0 * t);
    const double e4 = std::exp(-4.0 * t);
    const double m2 = mu * mu;
    const double b = (m2 * m2 + 1.0) * e2 + m2 * (1.0 + e4);
    return 2.0 * m2 * e1 / ((m2 - 1.0) * e1 + std::sqrt(b));
}

ValueWithError cft_pure(const QuadConfig& cfg) {
    const TabulatedDensity& p = p_opt_vacuum(cfg);
    const std::vector<double> w = fidelity_weights(p, 1.0);
    const double simpson = expectation(p, w);
    // crude grid-error proxy: compare against the trapezoid value
    std::vector<double> prod(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        prod[i] = p.values[i] * w[i];
    long double trap = 0.5L * ((long double)prod.front() + (long double)prod.back());
    for (std::size_t i = 1; i + 1 < prod.size(); ++i)
        trap += (long double)prod[i];
    trap *= (long double)p.h;
    const double err = p.norm_defect + std::abs(simpson - double(trap)) + cfg.abs_tol;
    return {simpson, err};
}

double avg_fidelity_upper(double mu, const QuadConfig& cfg) {
    check_mu(mu);
    const double lam = lambda_of_mu(mu);
    const int n_cut = thermal_cutoff(mu);
    const std::vector<double> w = fidelity_weights(p_opt_fock(0, cfg), mu);
    long double acc = 0.0L;
    for (int n = 0; n <= n_cut; ++n) {
        const double weight = (1.0 - lam) * std::pow(lam, double(n));
        if (weight == 0.0 && n > 0)
            break;
        acc += (long double)(weight * expectation(p_opt_fock(n, cfg), w));
    }
    // dropped geometric tail contributes at most its weight (F <= 1)
    return double(acc) + std::pow(lam, double(n_cut + 1));
}

double avg_fidelity_lower(double mu, const QuadConfig& cfg) {
    check_mu(mu);
    const TabulatedDensity p = p_thermal_lower(mu, thermal_cutoff(mu), cfg);
    return expectation(p, fidelity_weights(p, mu));
}

BoundResult bounds_at(double mu, const QuadConfig& cfg) {
    check_mu(mu);
    BoundResult r;
    r.mu = mu;
    r.n_cut_used = thermal_cutoff(mu);
    r.f_up = avg_fidelity_upper(mu, cfg);
    r.f_lo = avg_fidelity_lower(mu, cfg);
    const double lam = lambda_of_mu(mu);
    const double tail = std::pow(lam, double(r.n_cut_used + 1));
    const TabulatedDensity p = p_thermal_lower(mu, r.n_cut_used, cfg);
    r.error_estimate = tail + p.mass_trimmed + 1e-6;
    return r;
}

ValueWithError avg_bound_over_purity_detailed(BoundSide side, double eps,
                                              const QuadConfig& cfg) {
    if (!(eps > 0.0 && eps < 1.0))
        throw domain_error("avg_bound_over_purity: eps must lie in (0, 1)");
    constexpr int kNodes = 65; // 64 Simpson intervals on [eps, 1]
    const double h = (1.0 - eps) / double(kNodes - 1);
    long double simpson = 0.0L;
    long double trap = 0.0L;
    long double cut = 0.0L; // mean per-node truncation allowance
    for (int k = 0; k < kNodes; ++k) {
        const double mu = (k == kNodes - 1) ? 1.0 : eps + h * double(k);
        double v;
        double node_cut = std::pow(lambda_of_mu(mu), double(thermal_cutoff(mu) + 1));
        if (side == BoundSide::Upper) {
            v = avg_fidelity_upper(mu, cfg);
        } else {
            const TabulatedDensity p = p_thermal_lower(mu, thermal_cutoff(mu), cfg);
            v = expectation(p, fidelity_weights(p, mu));
            node_cut += p.mass_trimmed;
        }
        const double ws = (k == 0 || k == kNodes - 1) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        simpson += (long double)(ws * v);
        trap += (long double)(((k == 0 || k == kNodes - 1) ? 0.5 : 1.0) * v);
        cut += (long double)node_cut;
    }
    const double vs = double(simpson * (long double)h / 3.0L) / (1.0 - eps);
    const double vt = double(trap * (long double)h) / (1.0 - eps);
    return {vs, std::abs(vs - vt) + double(cut) / double(kNodes)};
}

double avg_bound_over_purity(BoundSide side, double eps, const QuadConfig& cfg) {
    return avg_bound_over_purity_detailed(side, eps, cfg).value;
}

double fit_eval(double mu, BoundSide side) {
    if (side == BoundSide::Upper)
        return 4.0 * std::pow(mu, 4) / 25.0 - 11.0 * std::pow(mu, 3) / 20.0 +
               3.0 * mu * mu / 4.0 - 11.0 * mu / 25.0 + 179.0 / 200.0;
    return 21.0 * std::pow(mu, 4) / 200.0 - 6.0 * std::pow(mu, 3) / 25.0 +
           3.0 * mu * mu / 25.0 + 11.0 * mu / 100.0 + 18.0 / 25.0;
}

double quantum_teleport_fidelity(double r, double s) {
    if (s < 0.0)
        throw domain_error("quantum_teleport_fidelity: resource squeezing s must be >= 0");
    return 1.0 / std::sqrt(2.0 * std::exp(-2.0 * s) * (std::cosh(2.0 * r) + std::cosh(2.0 * s)));
}

std::optional<double> critical_squeezing(double s, double threshold) {
    if (s < 0.0)
        throw domain_error("critical_squeezing: s must be >= 0");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw domain_error("critical_squeezing: threshold must lie in (0, 1)");
    if (quantum_teleport_fidelity(0.0, s) <= threshold)
        return std::nullopt;
    double hi = 1.0;
    while (quantum_teleport_fidelity(hi, s) >= threshold) {
        hi *= 2.0;
        if (hi > 1e6)
            throw numeric_error("critical_squeezing: no crossing found below r = 1e6");
    }
    double lo = 0.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (quantum_teleport_fidelity(mid, s) >= threshold)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double minimal_resource_squeezing(double threshold) {
    if (!(threshold > 0.5 && threshold < 1.0))
        throw domain_error("minimal_resource_squeezing: threshold must lie in (1/2, 1)");
    return -0.5 * std::log(1.0 / threshold - 1.0);
}

std::string to_string(VerdictClass c) {
    switch (c) {
    case VerdictClass::BeatsUpperBound:
        return "BeatsUpperBound";
    case VerdictClass::BelowLowerBound:
        return "BelowLowerBound";
    default:
        return "InsideWindow";
    }
}

Verdict verdict(double mu, double f_measured, double sigma, const QuadConfig& cfg) {
    check_mu(mu);
    if (!(f_measured >= 0.0 && f_measured <= 1.0))
        throw domain_error("verdict: measured fidelity must lie in [0, 1]");
    if (sigma < 0.0)
        throw domain_error("verdict: sigma must be >= 0");
    Verdict v;
    v.mu = mu;
    v.f_measured = f_measured;
    v.sigma = sigma;
    const BoundResult b = bounds_at(mu, cfg);
    v.f_up = b.f_up;
    v.f_lo = b.f_lo;
    v.diff_up = f_measured - b.f_up;
    v.diff_lo = f_measured - b.f_lo;
    v.margin_up_sigma = sigma > 0.0 ? v.diff_up / sigma : 0.0;
    v.margin_lo_sigma = sigma > 0.0 ? v.diff_lo / sigma : 0.0;
    if (v.diff_up > 0.0)
        v.classification = VerdictClass::BeatsUpperBound;
    else if (v.diff_lo < 0.0)
        v.classification = VerdictClass::BelowLowerBound;
    else
        v.classification = VerdictClass::InsideWindow;
    return v;
}

const std::vector<Experiment>& experiments() {
    static const std::vector<Experiment> reg = {
        {"furusawa-tele", 0.58, 5.3, 0.85, 0.05,
         "teleportation of a squeezed vacuum state of light",
         "Takei et al., Phys. Rev. A 72, 042304 (2005)"},
        {"broadband-tele", 0.51, 9.1, 0.83, 0.03,
         "teleportation of broadband squeezing",
         "Yonezawa et al., Phys. Rev. Lett. 99, 110503 (2007)"},
        {"eit-storage", 0.66, 5.4, 0.89, 0.01,
         "storage and retrieval of squeezed light in an EIT quantum memory",
         "Appel et al., Phys. Rev. Lett. 100, 093602 (2008)"},
    };
    return reg;
}

const Experiment* find_experiment(const std::string& key) {
    for (const Experiment& e : experiments())
        if (e.key == key)
            return &e;
    return nullptr;
}

} // namespace cft
