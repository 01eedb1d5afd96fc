#include "cft/fock_oracle.hpp"
#include "cft/benchmark.hpp"
#include "cft/errors.hpp"
#include "cft/estimation.hpp"
#include "cft/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace cft;

TEST_SUITE("fock_oracle") {

TEST_CASE("squeeze generator structure") {
    const TruncatedOperator k = squeeze_generator(8);
    REQUIRE(k.dim == 8);
    CHECK(k.m(2, 0).real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(k.m(0, 2).real() == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(k.m(5, 3).real() == doctest::Approx(std::sqrt(4.0 * 5.0) / 2.0).epsilon(1e-15));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CHECK(k.m(i, j).imag() == 0.0);
            CHECK(k.m(i, j).real() == doctest::Approx(-k.m(j, i).real()).epsilon(1e-15));
            if (std::abs(i - j) != 2)
                CHECK(k.m(i, j) == std::complex<double>(0.0, 0.0));
        }
}

TEST_CASE("squeeze unitary is unitary and matches closed forms") {
    const TruncatedOperator u = squeeze_unitary(0.9, 150);
    const Eigen::MatrixXcd gram = u.m.adjoint() * u.m;
    CHECK((gram - Eigen::MatrixXcd::Identity(150, 150)).cwiseAbs().maxCoeff() < 1e-12);

    // diagonal elements, seed columns: all well below the truncation horizon
    // (n e^{2 lambda} stays clear of dim)
    for (int n : {0, 1, 2, 5, 10, 15})
        CHECK(u.m(n, n).real() ==
              doctest::Approx(diag_squeeze_element(n, 0.9)).epsilon(1e-9));
    for (int m = 0; m < 40; ++m) {
        CHECK(std::abs(u.m(m, 0).real() - squeeze_column_entry(m, 0, 0.9)) < 1e-9);
        CHECK(std::abs(u.m(m, 1).real() - squeeze_column_entry(m, 1, 0.9)) < 1e-9);
        CHECK(std::abs(u.m(m, 0).imag()) < 1e-12);
    }
    // imaginary parts vanish: the generator is real
    CHECK(u.m.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK_THROWS_AS(squeeze_unitary(0.5, 0), domain_error);
}

TEST_CASE("truncation horizon of the matrix exponential") {
    // the same comparison degrades once n e^{2 lambda} approaches the cutoff:
    // at lambda = 2 and dim = 150 the n = 20 diagonal element is off by ~0.2
    const TruncatedOperator u = squeeze_unitary(2.0, 150);
    CHECK(std::abs(u.m(0, 0).real() - diag_squeeze_element(0, 2.0)) < 1e-10);
    CHECK(std::abs(u.m(20, 20).real() - diag_squeeze_element(20, 2.0)) > 1e-2);
}

TEST_CASE("squeezed thermal density matrices") {
    for (double mu : {1.0 / 3.0, 0.5, 0.9, 1.0}) {
        const TruncatedOperator rho = squeezed_thermal_density(0.3, mu, 150);
        CHECK(std::abs(rho.m.trace().real() - 1.0) < 1e-9);
        const double purity = (rho.m * rho.m).trace().real();
        CHECK(purity == doctest::Approx(mu).epsilon(1e-6));
        // hermitian
        CHECK((rho.m - rho.m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }
    // thermal tail too heavy for the cutoff
    CHECK_THROWS_AS(squeezed_thermal_density(0.3, 0.05, 40), validity_error);
    CHECK_THROWS_AS(squeezed_thermal_density(0.3, 1.5, 40), domain_error);
}

TEST_CASE("Uhlmann fidelity against the closed form") {
    const double cases[][2] = {
        {0.2, 0.5}, {0.5, 0.5}, {0.2, 0.8}, {0.5, 0.8}, {0.3, 0.7}}; // (delta, mu)
    for (const auto& c : cases) {
        const double delta = c[0], mu = c[1];
        const TruncatedOperator r1 = squeezed_thermal_density(0.0, mu, 150);
        const TruncatedOperator r2 = squeezed_thermal_density(delta, mu, 150);
        const double f = uhlmann_fidelity(r1, r2);
        CHECK(f == doctest::Approx(fidelity_squeezed_thermal(delta, mu)).epsilon(1e-6));
        // argument order changes the numeric path, not the value
        CHECK(uhlmann_fidelity(r2, r1) == doctest::Approx(f).epsilon(1e-8));
    }
    const TruncatedOperator rho = squeezed_thermal_density(0.4, 0.6, 120);
    CHECK(uhlmann_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("brute POVM distribution matches the analytic pipeline") {
    const QuadConfig cfg;
    const std::pair<int, int> cases[] = {{0, 0}, {0, 2}, {1, 1}, {1, 3}}; // (seed, n)
    const double budgets[] = {1e-4, 1e-3, 1e-6, 1e-6};
    int i = 0;
    for (auto [seed, n] : cases) {
        const TabulatedDensity brute = brute_povm_distribution(seed, n, cfg);
        const double tv = total_variation(brute, eta_overlap(n, seed, cfg));
        CHECK(tv < budgets[i]);
        ++i;
    }
}

TEST_CASE("brute POVM parity mismatch gives the zero density") {
    const TabulatedDensity z =
        brute_povm_distribution(0, 1, {}, 30, 2.0, ColumnSource::ClosedForm, 257);
    CHECK(z.norm_defect == 1.0);
    for (double v : z.values)
        CHECK(v == 0.0);
}

TEST_CASE("brute POVM refines toward the analytic density") {
    // widening the lambda window at fixed step tightens the agreement
    const QuadConfig cfg;
    const TabulatedDensity& ref = eta_overlap(2, 0, cfg);
    const double tv24 = total_variation(
        brute_povm_distribution(0, 2, cfg, 150, 24.0, ColumnSource::ClosedForm, 32769), ref);
    const double tv36 = total_variation(
        brute_povm_distribution(0, 2, cfg, 150, 36.0, ColumnSource::ClosedForm, 49153), ref);
    const double tv48 = total_variation(
        brute_povm_distribution(0, 2, cfg, 150, 48.0, ColumnSource::ClosedForm, 65537), ref);
    CHECK(tv24 > tv36);
    CHECK(tv36 > tv48);
    CHECK(tv24 == doctest::Approx(1.6e-2).epsilon(0.5));
    CHECK(tv48 < 1e-3);
}

TEST_CASE("matrix-exponential columns agree with closed-form columns") {
    // same narrow window, two independent column sources
    const QuadConfig cfg;
    const std::pair<int, int> cases[] = {{0, 0}, {0, 2}, {1, 1}, {1, 3}}; // (seed, n)
    for (auto [seed, n] : cases) {
        const TabulatedDensity a =
            brute_povm_distribution(seed, n, cfg, 150, 3.0, ColumnSource::ClosedForm, 4097);
        const TabulatedDensity b =
            brute_povm_distribution(seed, n, cfg, 150, 3.0, ColumnSource::MatrixExp, 4097);
        CHECK(total_variation(a, b) < 5e-5);
    }
    // beyond the reflection horizon the matrix exponential is refused
    CHECK_THROWS_AS(
        brute_povm_distribution(0, 0, cfg, 150, 5.0, ColumnSource::MatrixExp, 4097),
        validity_error);
}

TEST_CASE("total variation basics") {
    const QuadConfig cfg;
    const TabulatedDensity& a = eta_overlap(0, 0, cfg);
    CHECK(total_variation(a, a) == 0.0);
    TabulatedDensity other = a;
    other.values.pop_back();
    CHECK_THROWS_AS(total_variation(a, other), domain_error);
}

} // TEST_SUITE
