#include "cft/estimation.hpp"
#include "cft/errors.hpp"
#include "cft/specfun.hpp"
#include "cft/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace cft {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Production grids. The frequency step resolves densities out to
// |delta| = pi/kNuStep = 160; the lambda windows are long enough that the
// sampled integrands decay to the floor levels below within them.
constexpr double kNuStep = kPi / 160.0;
constexpr double kLambdaStep = 0.0025;
constexpr double kLambdaMaxDiag = 70.0; // diag elements decay like e^{-lambda/2}
constexpr double kLambdaMaxCol = 50.0;
constexpr double kDiagFloor = 1e-15;  // relative floor on I^n fields
constexpr double kSeedFloor = 1e-18;  // relative floor on the seed spectral density
constexpr int kNuChunk = 256;         // support growth chunk (points)
constexpr int kNuCapPoints = 24001;   // hard cap, nu <= ~471

// Effective delta-grid size: at least 65 and odd, so the grid contains
// delta = 0 and composite Simpson applies exactly.
int effective_points(const QuadConfig& cfg) {
    return std::max(cfg.n_points, 65) | 1;
}

std::vector<double> diag_samples(int n) {
    const int count = int(std::lround(kLambdaMaxDiag / kLambdaStep)) + 1;
    std::vector<double> f(std::size_t(count), 0.0);
    for (int i = 0; i < count; ++i)
        f[std::size_t(i)] = diag_squeeze_element(n, kLambdaStep * double(i));
    return f;
}

std::vector<double> column_samples(int n, int seed) {
    const int count = int(std::lround(kLambdaMaxCol / kLambdaStep)) + 1;
    std::vector<double> f(std::size_t(count), 0.0);
    for (int i = 0; i < count; ++i)
        f[std::size_t(i)] = squeeze_column_entry(n, seed, kLambdaStep * double(i));
    return f;
}

// Full-line spectral field of an even integrand, grown in frequency chunks
// until a whole chunk stays below the floor (or the hard cap). The floor is
// the larger of floor_rel relative to the field maximum and abs_floor (the
// lambda-window truncation noise). Values below it are zeroed, the support
// is trimmed, and small negatives are clamped per policy.
std::vector<double> grow_even_field(const std::vector<double>& f, double floor_rel,
                                    double abs_floor, const QuadConfig& cfg) {
    std::vector<double> vals;
    double vmax = 0.0;
    int from = 0;
    while (from < kNuCapPoints) {
        const int to = std::min(from + kNuChunk, kNuCapPoints);
        std::vector<double> nu(std::size_t(to - from));
        for (int j = from; j < to; ++j)
            nu[std::size_t(j - from)] = kNuStep * double(j);
        std::vector<double> chunk = detail::sampled_transform(f, kLambdaStep, nu, false);
        double cmax = 0.0;
        for (double& v : chunk) {
            v *= 2.0; // full line = twice the half-line transform
            cmax = std::max(cmax, std::abs(v));
            vals.push_back(v);
        }
        vmax = std::max(vmax, cmax);
        from = to;
        if (vmax > 0.0 && cmax < std::max(floor_rel * vmax, abs_floor))
            break;
    }
    const double floor = std::max(floor_rel * vmax, abs_floor);
    std::size_t last = 0;
    for (std::size_t j = 0; j < vals.size(); ++j) {
        double& v = vals[j];
        if (v < -cfg.abs_tol)
            throw negativity_error("spectral field negative beyond the clamping "
                                   "window at nu = " +
                                       std::to_string(kNuStep * double(j)),
                                   v);
        if (v < floor)
            v = 0.0;
        else
            last = j;
    }
    vals.resize(last + 1);
    return vals;
}

// Seed spectral densities on the frequency grid, from the Gamma closed forms:
//   seed 0: |Gamma(1/4 + i nu/2)|^2 / (2 pi)^{3/2}
//   seed 1: sqrt(2) |Gamma(3/4 + i nu/2)|^2 / pi^{3/2}
// Grown until the relative floor is reached (the decay is monotone).
std::vector<double> seed_spectral_density(int seed) {
    std::vector<double> g;
    const double re = (seed == 0) ? 0.25 : 0.75;
    const double pref =
        (seed == 0) ? std::pow(2.0 * kPi, -1.5) : std::sqrt(2.0) * std::pow(kPi, -1.5);
    double g0 = 0.0;
    for (int j = 0; j < kNuCapPoints; ++j) {
        const double a = abs_gamma(re, 0.5 * kNuStep * double(j));
        const double v = pref * a * a;
        if (j == 0)
            g0 = v;
        if (v < kSeedFloor * g0)
            break;
        g.push_back(v);
    }
    return g;
}

TabulatedDensity empty_density(const QuadConfig& cfg) {
    TabulatedDensity p;
    const int n = effective_points(cfg);
    p.delta_max = cfg.delta_max;
    p.h = 2.0 * cfg.delta_max / double(n - 1);
    p.values.assign(std::size_t(n), 0.0);
    return p;
}

// p(delta) = (pref * transform of B)(delta)^2 on the config grid. B lives on
// the uniform frequency grid; sine selects the odd-pair branch. Both branches
// give densities even in delta, so only half the grid is transformed.
TabulatedDensity assemble_density(const std::vector<double>& b, bool sine,
                                  double pref, const QuadConfig& cfg) {
    TabulatedDensity p = empty_density(cfg);
    const std::size_t half = (p.size() - 1) / 2;
    std::vector<double> deltas(half + 1);
    for (std::size_t i = 0; i <= half; ++i)
        deltas[i] = p.h * double(i);
    const std::vector<double> amp = detail::sampled_transform(b, kNuStep, deltas, sine);
    for (std::size_t i = 0; i <= half; ++i) {
        const double a = pref * amp[i];
        const double v = a * a;
        p.values[half + i] = v;
        p.values[half - i] = v;
    }
    return p;
}

struct CacheKey {
    int kind;
    int n;
    int seed;
    double abs_tol;
    double delta_max;
    int n_points;
    auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, std::unique_ptr<TabulatedDensity>>& cache() {
    static std::map<CacheKey, std::unique_ptr<TabulatedDensity>> c;
    return c;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

const TabulatedDensity& cache_insert(const CacheKey& key, TabulatedDensity&& d) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& slot = cache()[key];
    if (!slot) // another thread may have built the same key concurrently
        slot = std::make_unique<TabulatedDensity>(std::move(d));
    return *slot;
}

const TabulatedDensity* cache_find(const CacheKey& key) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    return it == cache().end() ? nullptr : it->second.get();
}

CacheKey make_key(EstimationKind kind, int n, int seed, const QuadConfig& cfg) {
    return CacheKey{int(kind), n, seed, cfg.abs_tol, cfg.delta_max,
                    effective_points(cfg)};
}

TabulatedDensity build_opt_fock(int n, const QuadConfig& cfg) {
    const std::vector<double> f = diag_samples(n);
    const double noise = 6.0 * std::abs(f.back());
    std::vector<double> field = grow_even_field(f, kDiagFloor, noise, cfg);
    for (double& v : field)
        v = std::sqrt(v);
    TabulatedDensity p = assemble_density(field, false, 1.0 / kPi, cfg);
    p.norm_defect = std::abs(1.0 - p.integral());
    if (p.norm_defect > 1e-6)
        throw numeric_error("p_opt_fock(" + std::to_string(n) +
                            "): normalization defect " + std::to_string(p.norm_defect));
    return p;
}

TabulatedDensity build_cross(int n, int seed, const QuadConfig& cfg) {
    if (((n - seed) % 2 + 2) % 2 != 0) { // parity mismatch: exact zero density
        TabulatedDensity p = empty_density(cfg);
        p.norm_defect = 1.0;
        return p;
    }

    const std::vector<double> g_ss = seed_spectral_density(seed);
    std::vector<double> nus(g_ss.size());
    for (std::size_t j = 0; j < nus.size(); ++j)
        nus[j] = kNuStep * double(j);
    const std::vector<double> f_ns = column_samples(n, seed);

    // detect the lambda parity of <n|U|seed> numerically (it alternates with
    // (n - seed)/2): even -> cosine branch, odd -> sine branch
    const double probe = 0.37;
    const double fp = squeeze_column_entry(n, seed, probe);
    const double fm = squeeze_column_entry(n, seed, -probe);
    const double scale = std::max({std::abs(fp), std::abs(fm), 1e-300});
    const bool odd = std::abs(fp + fm) <= 1e-9 * scale;
    if (!odd && std::abs(fp - fm) > 1e-9 * scale)
        throw numeric_error("eta_overlap: column has no definite lambda parity");

    const std::vector<double> half =
        detail::sampled_transform(f_ns, kLambdaStep, nus, odd);
    std::vector<double> b(half.size());
    for (std::size_t j = 0; j < half.size(); ++j) {
        const double g_ns = half[j] / kPi; // (1/pi or i/pi) * half-line transform
        b[j] = g_ns / std::sqrt(g_ss[j]);
    }

    TabulatedDensity p = assemble_density(b, odd, std::sqrt(2.0 / kPi), cfg);
    const double kept = p.integral();
    if (!(kept > 0.0))
        throw numeric_error("eta_overlap: empty spectral support");
    // mass outside the trusted seed-density window is trimmed and reported;
    // the kept part is renormalized so downstream mixtures stay comparable
    p.mass_trimmed = std::max(0.0, 1.0 - kept);
    for (double& v : p.values)
        v /= kept;
    p.norm_defect = std::abs(1.0 - p.integral());
    if (p.norm_defect > 1e-6)
        throw numeric_error("eta_overlap(" + std::to_string(n) + "," +
                            std::to_string(seed) + "): normalization defect " +
                            std::to_string(p.norm_defect));
    return p;
}

} // namespace

const TabulatedDensity& p_opt_vacuum(const QuadConfig& cfg) {
    const CacheKey key = make_key(EstimationKind::OptVacuum, 0, 0, cfg);
    if (const TabulatedDensity* hit = cache_find(key))
        return *hit;
    // B(nu) = |Gamma(1/4 + i nu/2)|; the amplitude is the full-line transform
    // of B/(2 pi)^{5/4}, i.e. twice the assembled half-line cosine transform
    std::vector<double> b;
    double b0 = 0.0;
    for (int j = 0; j < kNuCapPoints; ++j) {
        const double v = abs_gamma_quarter_line(kNuStep * double(j));
        if (j == 0)
            b0 = v;
        if (v < kSeedFloor * b0)
            break;
        b.push_back(v);
    }
    TabulatedDensity p =
        assemble_density(b, false, 2.0 * std::pow(2.0 * kPi, -1.25), cfg);
    p.norm_defect = std::abs(1.0 - p.integral());
    if (p.norm_defect > 1e-6)
        throw numeric_error("p_opt_vacuum: normalization defect " +
                            std::to_string(p.norm_defect));
    return cache_insert(key, std::move(p));
}

double i_n_nu(int n, double nu, const QuadConfig& cfg) {
    auto f = [n](double lam) { return diag_squeeze_element(n, lam); };
    return fourier_even(f, {nu}, cfg)[0];
}

const TabulatedDensity& p_opt_fock(int n, const QuadConfig& cfg) {
    if (n < 0)
        throw domain_error("p_opt_fock: n must be >= 0");
    const CacheKey key = make_key(EstimationKind::OptFock, n, 0, cfg);
    if (const TabulatedDensity* hit = cache_find(key))
        return *hit;
    return cache_insert(key, build_opt_fock(n, cfg));
}

const TabulatedDensity& eta_overlap(int n, int seed, const QuadConfig& cfg) {
    if (n < 0)
        throw domain_error("eta_overlap: n must be >= 0");
    if (seed != 0 && seed != 1)
        throw domain_error("eta_overlap: seed must be 0 or 1");
    const CacheKey key = make_key(EstimationKind::Cross, n, seed, cfg);
    if (const TabulatedDensity* hit = cache_find(key))
        return *hit;
    return cache_insert(key, build_cross(n, seed, cfg));
}

int thermal_cutoff(double mu) {
    const double lam = lambda_of_mu(mu);
    if (lam == 0.0)
        return 0;
    const double needed = std::log(1e-6 * (1.0 - lam)) / std::log(lam);
    return std::min(200, std::max(0, int(std::ceil(needed))));
}

TabulatedDensity p_thermal_lower(double mu, int n_cut, const QuadConfig& cfg) {
    const double lam = lambda_of_mu(mu);
    if (n_cut < 0)
        throw domain_error("p_thermal_lower: n_cut must be >= 0");
    const double tail = std::pow(lam, double(n_cut + 1)) / (1.0 - lam);
    if (!(tail < 1e-6))
        throw numeric_error("p_thermal_lower: geometric tail " + std::to_string(tail) +
                            " above 1e-6; need n_cut >= " +
                            std::to_string(thermal_cutoff(mu)));

    TabulatedDensity mix = empty_density(cfg);
    double trimmed = 0.0;
    for (int n = 0; n <= n_cut; ++n) {
        const double w = (1.0 - lam) * std::pow(lam, double(n));
        if (w == 0.0 && n > 0)
            break;
        const TabulatedDensity& part = eta_overlap(n, n % 2, cfg);
        for (std::size_t i = 0; i < mix.values.size(); ++i)
            mix.values[i] += w * part.values[i];
        trimmed += w * part.mass_trimmed;
    }
    mix.mass_trimmed = trimmed;
    // the dropped geometric tail is reported, not renormalized away
    mix.norm_defect = std::abs(1.0 - mix.integral());
    if (mix.norm_defect > 1e-6)
        throw numeric_error("p_thermal_lower: normalization defect " +
                            std::to_string(mix.norm_defect));
    return mix;
}

void clear_density_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().clear();
}

} // namespace cft
