#include "cft/states.hpp"
#include "cft/errors.hpp"

#include <cmath>

namespace cft {

static void check_mu(double mu) {
    if (!(mu > 0.0 && mu <= 1.0))
        throw domain_error("purity mu must lie in (0, 1], got " + std::to_string(mu));
}

double lambda_of_mu(double mu) {
    check_mu(mu);
    return (1.0 - mu) / (1.0 + mu);
}

double mean_thermal_photons(double mu) {
    check_mu(mu);
    return 0.5 * (1.0 / mu - 1.0);
}

ThermalWeights thermal_weights(double mu) {
    return ThermalWeights{lambda_of_mu(mu), mean_thermal_photons(mu)};
}

std::array<double, 2> covariance_matrix(const SqueezedThermalState& state) {
    check_mu(state.mu);
    if (!std::isfinite(state.r))
        throw domain_error("squeezing degree r must be finite");
    return {std::exp(2.0 * state.r) / state.mu, std::exp(-2.0 * state.r) / state.mu};
}

double r_to_db(double r) {
    return 10.0 * 2.0 * r / std::log(10.0);
}

double db_to_r(double db) {
    return db * std::log(10.0) / 20.0;
}

} // namespace cft
