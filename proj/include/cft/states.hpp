#pragma once

#include <array>

namespace cft {

// Single-mode squeezed thermal state, zero displacement, squeezing axis fixed.
// Covariance matrix is diag(e^{2r}/mu, e^{-2r}/mu), determinant 1/mu^2.
struct SqueezedThermalState {
    double r  = 0.0; // squeezing degree, any real
    double mu = 1.0; // purity in (0, 1]
};

// Geometric weights of the thermal part in the Fock basis:
// rho_th = (1 - Lambda) sum_n Lambda^n |n><n|.
struct ThermalWeights {
    double lambda = 0.0; // Lambda = (1-mu)/(1+mu), in [0, 1)
    double n_bar  = 0.0; // mean thermal photons (1/mu - 1)/2
};

// Lambda = (1-mu)/(1+mu). Throws domain_error for mu outside (0, 1].
double lambda_of_mu(double mu);

// n_bar = (1/mu - 1)/2. Throws domain_error for mu outside (0, 1].
double mean_thermal_photons(double mu);

ThermalWeights thermal_weights(double mu);

// Diagonal of the 2x2 covariance matrix: {e^{2r}/mu, e^{-2r}/mu}.
std::array<double, 2> covariance_matrix(const SqueezedThermalState& state);

// dB convention: dB = 10*log10(e^{2r}), the variance ratio in decibels.
double r_to_db(double r);
double db_to_r(double db);

} // namespace cft
