#pragma once

#include "cft/quadrature.hpp"

namespace cft {

enum class EstimationKind { OptVacuum, OptFock, Cross, ThermalLower };

// Distribution of the optimal squeezing-degree estimate for the vacuum seed:
// p(delta) = |(2pi)^{-5/4} Int e^{-i nu delta} |Gamma(1/4 + i nu/2)| d nu|^2.
// Built directly from the Gamma closed form. Cached per config; the returned
// reference stays valid for the lifetime of the process.
const TabulatedDensity& p_opt_vacuum(const QuadConfig& cfg = {});

// I^n_nu: cosine transform (over the full line) of <n|U(lambda)|n>.
// Non-negative up to the clamping policy.
double i_n_nu(int n, double nu, const QuadConfig& cfg = {});

// Distribution of the optimal estimate when the input is the Fock state |n>:
// p(delta) = |(2pi)^{-1} Int e^{i nu delta} sqrt(I^n_nu) d nu|^2.
const TabulatedDensity& p_opt_fock(int n, const QuadConfig& cfg = {});

// Cross distribution p_{n,seed}(delta) = |<n|eta_seed(delta)>|^2 where the
// measurement is optimal for the seed state (0 or 1) but the input is |n>.
// Parity-mismatched (n, seed) returns the exact zero density. For large n
// part of the true frequency support falls outside the window where the
// seed spectral density is numerically trustworthy; that mass is reported
// in mass_trimmed and the kept part is renormalized.
const TabulatedDensity& eta_overlap(int n, int seed, const QuadConfig& cfg = {});

// Mixture (1-L)[sum_{n even} L^n p_{n,0} + sum_{n odd} L^n p_{n,1}] up to
// n_cut. The dropped geometric tail is reported in norm_defect, not
// renormalized away.
TabulatedDensity p_thermal_lower(double mu, int n_cut, const QuadConfig& cfg = {});

// Smallest cutoff with geometric tail Lambda^{n+1}/(1-Lambda) < 1e-6, cap 200.
int thermal_cutoff(double mu);

void clear_density_cache();

} // namespace cft
