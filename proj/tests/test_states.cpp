#include "cft/states.hpp"
#include "cft/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace cft;

TEST_SUITE("states") {

TEST_CASE("thermal weight examples") {
    CHECK(lambda_of_mu(1.0) == 0.0);
    CHECK(lambda_of_mu(1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lambda_of_mu(1.0 / 9.0) == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("purity domain is (0, 1]") {
    CHECK_THROWS_AS(lambda_of_mu(0.0), domain_error);
    CHECK_THROWS_AS(lambda_of_mu(-0.2), domain_error);
    CHECK_THROWS_AS(lambda_of_mu(1.0 + 1e-12), domain_error);
    CHECK_THROWS_AS(mean_thermal_photons(0.0), domain_error);
    CHECK_NOTHROW(lambda_of_mu(1e-12));
}

TEST_CASE("mean photon number") {
    CHECK(mean_thermal_photons(1.0) == 0.0);
    CHECK(mean_thermal_photons(1.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(mean_thermal_photons(1.0 / 9.0) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("weights are consistent") {
    for (double mu : {0.1, 0.37, 0.72, 1.0}) {
        const ThermalWeights w = thermal_weights(mu);
        CHECK(w.lambda == lambda_of_mu(mu));
        CHECK(w.n_bar == mean_thermal_photons(mu));
        // n_bar = Lambda / (1 - Lambda)
        CHECK(w.n_bar == doctest::Approx(w.lambda / (1.0 - w.lambda)).epsilon(1e-12));
        // geometric weights sum to one
        long double sum = 0.0L;
        for (int n = 0; n < 4000; ++n)
            sum += (long double)((1.0 - w.lambda) * std::pow(w.lambda, double(n)));
        CHECK(double(sum) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("covariance matrix diagonal") {
    const SqueezedThermalState st{0.5, 0.5};
    const auto cm = covariance_matrix(st);
    CHECK(cm[0] == doctest::Approx(std::exp(1.0) / 0.5).epsilon(1e-14));
    CHECK(cm[1] == doctest::Approx(std::exp(-1.0) / 0.5).epsilon(1e-14));
    // determinant is 1/mu^2 regardless of r
    for (double r : {-1.3, 0.0, 0.8})
        for (double mu : {0.2, 0.9, 1.0}) {
            const auto c = covariance_matrix({r, mu});
            CHECK(c[0] * c[1] == doctest::Approx(1.0 / (mu * mu)).epsilon(1e-12));
        }
    CHECK_THROWS_AS(covariance_matrix({0.1, 2.0}), domain_error);
}

TEST_CASE("decibel conversion") {
    // 10 dB of squeezing corresponds to r = ln(10)/2
    CHECK(db_to_r(10.0) == doctest::Approx(std::log(10.0) / 2.0).epsilon(1e-14));
    CHECK(r_to_db(std::log(10.0) / 2.0) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(r_to_db(0.0) == 0.0);
    for (double r : {-2.0, -0.3, 0.0, 0.1151292546497023, 1.0})
        CHECK(db_to_r(r_to_db(r)) == doctest::Approx(r).epsilon(1e-12));
    for (double db : {-3.0, 0.0, 5.3, 9.1, 20.0})
        CHECK(r_to_db(db_to_r(db)) == doctest::Approx(db).epsilon(1e-12));
}

} // TEST_SUITE
