#include "cft/specfun.hpp"
#include "cft/errors.hpp"

#include <cmath>

namespace cft {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g=7, 9 coefficients (Godfrey). Core valid for Re z >= 0.5.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

std::complex<double> log_gamma_core(std::complex<double> z) {
    z -= 1.0;
    std::complex<double> sum = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i)
        sum += kLanczosCoef[i] / (z + double(i));
    const std::complex<double> t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// ln|sin(pi z)| without overflow for large |Im z|.
double log_abs_sin_pi(std::complex<double> z) {
    const double x = kPi * z.real();
    const double y = kPi * std::abs(z.imag());
    const double s = std::sin(x);
    if (y == 0.0)
        return std::log(std::abs(s));
    if (y > 40.0)
        return y - std::log(2.0); // sin^2 correction below 1e-34
    const double sh = std::sinh(y);
    const double lnsh = (y > 20.0) ? y - std::log(2.0) + std::log1p(-std::exp(-2.0 * y))
                                   : std::log(sh);
    const double ratio = s / sh;
    return lnsh + 0.5 * std::log1p(ratio * ratio);
}

} // namespace

double log_abs_gamma(std::complex<double> z) {
    if (z.real() >= 0.5)
        return log_gamma_core(z).real();
    // |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1-z)|)
    return std::log(kPi) - log_abs_sin_pi(z) - log_abs_gamma(1.0 - z);
}

double abs_gamma(double re, double im) {
    return std::exp(log_abs_gamma({re, im}));
}

double abs_gamma_quarter_line(double nu) {
    return abs_gamma(0.25, 0.5 * nu);
}

double hyp2f1_terminating(double a, double b, double c, double x) {
    auto nonpos_int = [](double v, int& k) {
        const double r = std::round(v);
        if (r <= 0.0 && std::abs(v - r) < 1e-12) {
            k = int(-r);
            return true;
        }
        return false;
    };
    int ka = 0, kb = 0;
    const bool ta = nonpos_int(a, ka);
    const bool tb = nonpos_int(b, kb);
    if (!ta && !tb)
        throw domain_error("hyp2f1_terminating: series does not terminate "
                           "(neither a nor b is a non-positive integer)");
    const int kmax = (ta && tb) ? std::min(ka, kb) : (ta ? ka : kb);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < kmax; ++k) {
        const double ck = c + double(k);
        if (std::abs(ck - std::round(ck)) < 1e-12 && std::round(ck) <= 0.0)
            throw domain_error("hyp2f1_terminating: c reaches a non-positive "
                               "integer before the series terminates");
        term *= (long double)(a + k) * (long double)(b + k) /
                ((long double)ck * (long double)(k + 1)) * (long double)x;
        sum += term;
    }
    return double(sum);
}

double diag_squeeze_element(int n, double lambda) {
    if (n < 0)
        throw domain_error("diag_squeeze_element: n must be >= 0");
    const long double x = 1.0L / std::cosh((long double)lambda); // sech in (0,1]
    const long double root = std::sqrt(x);
    if (n == 0)
        return double(root);
    // Legendre three-term recurrence, upward (stable on [0,1])
    long double pkm1 = 1.0L;
    long double pk = x;
    for (int k = 1; k < n; ++k) {
        const long double pkp1 =
            ((2.0L * k + 1.0L) * x * pk - (long double)k * pkm1) / (long double)(k + 1);
        pkm1 = pk;
        pk = pkp1;
    }
    return double(root * pk);
}

double squeeze_column_entry(int m, int seed, double lambda) {
    if (seed != 0 && seed != 1)
        throw domain_error("squeeze_column_entry: seed must be 0 or 1");
    if (m < 0 || ((m - seed) & 1))
        return 0.0; // parity selection
    const int k = (m - seed) / 2;
    if (lambda == 0.0)
        return (m == seed) ? 1.0 : 0.0;
    const long double t = std::tanh((long double)lambda);
    if (k > 0 && t == 0.0L)
        return 0.0;
    const long double lnsech = -std::log(std::cosh((long double)lambda));
    const long double ln2 = 0.69314718055994530942L;
    // ln of sqrt((m)!)/(2^k k!) with m = 2k+seed
    const long double logcoef = 0.5L * std::lgamma((long double)(m + 1)) -
                                (long double)k * ln2 -
                                std::lgamma((long double)(k + 1));
    const long double power = (seed == 0) ? 0.5L : 1.5L;
    long double lg = power * lnsech + logcoef;
    if (k > 0)
        lg += (long double)k * std::log(std::abs(t));
    const int sign = (t < 0.0L && (k & 1)) ? -1 : 1;
    return double(sign * std::exp(lg));
}

SqueezeColumn squeeze_column(int seed, int n_max, double lambda) {
    if (seed != 0 && seed != 1)
        throw domain_error("squeeze_column: seed must be 0 or 1");
    if (n_max < seed)
        throw domain_error("squeeze_column: n_max must be >= seed");
    SqueezeColumn col;
    col.values.resize(std::size_t(n_max) + 1, 0.0);
    long double sq = 0.0L;
    for (int m = seed; m <= n_max; m += 2) {
        const double v = squeeze_column_entry(m, seed, lambda);
        col.values[std::size_t(m)] = v;
        sq += (long double)v * v;
    }
    col.norm_defect = double(std::abs(1.0L - sq));
    col.truncated = col.norm_defect > 1e-10;
    return col;
}

} // namespace cft
