#pragma once

#include <complex>
#include <vector>

namespace cft {

// ln|Gamma(z)| for complex z, Lanczos approximation with reflection for
// Re z < 1/2. Accurate to ~13 significant digits on the strips used here.
double log_abs_gamma(std::complex<double> z);

// |Gamma(re + i*im)|.
double abs_gamma(double re, double im);

// |Gamma(1/4 + i*nu/2)|, the magnitude controlling the optimal-measurement
// spectral density of the vacuum seed. Decays like e^{-pi|nu|/4}.
double abs_gamma_quarter_line(double nu);

// Terminating Gauss hypergeometric series: a or b must be a non-positive
// integer. Throws domain_error otherwise (general 2F1 is out of scope).
double hyp2f1_terminating(double a, double b, double c, double x);

// <n|U(lambda)|n> for U(lambda) = exp[(lambda/2)(ad^2 - a^2)].
// Evaluated as sech^{1/2}(lambda) * P_n(sech lambda) via the Legendre
// recurrence, which is stable for all n (the equivalent hypergeometric
// form loses digits past n ~ 70). Note the value is NOT confined to (0,1]:
// it oscillates in sign for n >= 2 (e.g. n=2, lambda=1.5 gives -0.149).
double diag_squeeze_element(int n, double lambda);

// <m|U(lambda)|seed> for seed in {0,1}, closed form in log space:
//   <2k  |U|0> = sech^{1/2} * sqrt((2k)!)/(2^k k!) * tanh^k
//   <2k+1|U|1> = sech^{3/2} * sqrt((2k+1)!)/(2^k k!) * tanh^k
// Zero when m+seed is odd (parity selection). Sign fixed by the generator
// convention <2|K|0> = +sqrt(2)/2, so entries are positive for lambda > 0.
double squeeze_column_entry(int m, int seed, double lambda);

struct SqueezeColumn {
    std::vector<double> values; // <m|U(lambda)|seed>, m = 0..n_max
    double norm_defect = 0.0;   // 1 - sum of squares (tail beyond n_max)
    bool truncated = false;     // norm_defect above 1e-10
};

SqueezeColumn squeeze_column(int seed, int n_max, double lambda);

} // namespace cft
