#pragma once

#include "cft/quadrature.hpp"

#include <Eigen/Dense>

namespace cft {

// Operator truncated to the first dim Fock levels.
struct TruncatedOperator {
    int dim = 0;
    Eigen::MatrixXcd m;
};

// K = (ad^2 - a^2)/2, real antisymmetric, entries only on |m - n| = 2.
TruncatedOperator squeeze_generator(int dim);

// exp(lambda K) via eigendecomposition of the Hermitian matrix iK. Exactly
// unitary at any dim; faithful to the untruncated operator only while the
// squeezed seed stays clear of the truncation edge (roughly
// n * e^{2|lambda|} well below dim).
TruncatedOperator squeeze_unitary(double lambda, int dim);

// U(r) rho_th(mu) U(r)^dagger with geometric thermal weights.
TruncatedOperator squeezed_thermal_density(double r, double mu, int dim);

// F = (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2 via eigendecomposition.
double uhlmann_fidelity(const TruncatedOperator& rho1, const TruncatedOperator& rho2);

enum class ColumnSource {
    ClosedForm, // analytic column entries; usable at any window width
    MatrixExp,  // truncated matrix exponential; window limited by dim
};

// Brute-force discretization of the covariant measurement: builds the
// spectral columns G_{n,seed}(nu) from a lambda grid over [0, lambda_window],
// divides by the windowed seed density above its truncation-noise floor, and
// assembles |<input_n|eta_seed(delta)>|^2 on the config delta grid.
//
// The seed spectral density decays like e^{-pi nu/2}, so the usable frequency
// window grows only linearly with lambda_window; defaults are sized so the
// result matches the analytic pipeline to well under 1e-3 total variation.
// With ColumnSource::MatrixExp the window must stay below the reflection
// horizon ~0.62 ln(dim), otherwise a validity error is thrown.
TabulatedDensity brute_povm_distribution(int seed, int input_n,
                                         const QuadConfig& cfg = {}, int dim = 150,
                                         double lambda_window = 48.0,
                                         ColumnSource source = ColumnSource::ClosedForm,
                                         int n_lambda = 65537);

// Total variation distance between two densities on identical grids.
double total_variation(const TabulatedDensity& a, const TabulatedDensity& b);

} // namespace cft
