#include "cft/fock_oracle.hpp"
#include "cft/errors.hpp"
#include "cft/specfun.hpp"
#include "cft/states.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace cft {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBruteNuStep = kPi / 320.0;
constexpr double kBruteNuMax = 40.0;

void check_dim(int dim) {
    if (dim < 2)
        throw domain_error("fock_oracle: dim must be >= 2");
}

int effective_points(const QuadConfig& cfg) {
    return std::max(cfg.n_points, 65) | 1;
}

TabulatedDensity empty_density(const QuadConfig& cfg) {
    TabulatedDensity p;
    const int n = effective_points(cfg);
    p.delta_max = cfg.delta_max;
    p.h = 2.0 * cfg.delta_max / double(n - 1);
    p.values.assign(std::size_t(n), 0.0);
    return p;
}

} // namespace

TruncatedOperator squeeze_generator(int dim) {
    check_dim(dim);
    TruncatedOperator k;
    k.dim = dim;
    k.m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n + 2 < dim; ++n) {
        const double v = 0.5 * std::sqrt(double(n + 1) * double(n + 2));
        k.m(n + 2, n) = v;  // (ad^2)/2 part
        k.m(n, n + 2) = -v; // -(a^2)/2 part
    }
    return k;
}

TruncatedOperator squeeze_unitary(double lambda, int dim) {
    check_dim(dim);
    const TruncatedOperator k = squeeze_generator(dim);
    const Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * k.m; // Hermitian
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw numeric_error("squeeze_unitary: eigendecomposition failed");
    const Eigen::VectorXd w = es.eigenvalues();
    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i)
        phases(i) = std::exp(std::complex<double>(0.0, -lambda * w(i)));
    TruncatedOperator u;
    u.dim = dim;
    u.m = v * phases.asDiagonal() * v.adjoint();
    return u;
}

TruncatedOperator squeezed_thermal_density(double r, double mu, int dim) {
    check_dim(dim);
    const double lam = lambda_of_mu(mu);
    if (lam > 0.0) {
        const double tail = std::pow(lam, double(dim)) / (1.0 - lam);
        if (tail > 1e-9)
            throw validity_error("squeezed_thermal_density: thermal tail " +
                                 std::to_string(tail) + " beyond the cutoff");
    }
    TruncatedOperator rho;
    rho.dim = dim;
    if (r == 0.0) {
        rho.m = Eigen::MatrixXcd::Zero(dim, dim);
        for (int n = 0; n < dim; ++n)
            rho.m(n, n) = (1.0 - lam) * std::pow(lam, double(n));
        return rho;
    }
    const TruncatedOperator u = squeeze_unitary(r, dim);
    Eigen::VectorXd weights(dim);
    for (int n = 0; n < dim; ++n)
        weights(n) = (1.0 - lam) * std::pow(lam, double(n));
    rho.m = u.m * weights.asDiagonal() * u.m.adjoint();
    return rho;
}

double uhlmann_fidelity(const TruncatedOperator& rho1, const TruncatedOperator& rho2) {
    if (rho1.dim != rho2.dim)
        throw domain_error("uhlmann_fidelity: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es1(rho1.m);
    if (es1.info() != Eigen::Success)
        throw numeric_error("uhlmann_fidelity: eigendecomposition failed");
    Eigen::VectorXd ev = es1.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) < -1e-10)
            throw domain_error("uhlmann_fidelity: input not positive "
                               "semidefinite (eigenvalue " +
                               std::to_string(ev(i)) + ")");
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    const Eigen::MatrixXcd root =
        es1.eigenvectors() * ev.asDiagonal() * es1.eigenvectors().adjoint();
    const Eigen::MatrixXcd inner = root * rho2.m * root;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(inner);
    if (es2.info() != Eigen::Success)
        throw numeric_error("uhlmann_fidelity: eigendecomposition failed");
    long double acc = 0.0L;
    for (int i = 0; i < es2.eigenvalues().size(); ++i)
        acc += std::sqrt((long double)std::max(es2.eigenvalues()(i), 0.0));
    const double f = double(acc * acc);
    return std::min(f, 1.0 + 1e-9);
}

TabulatedDensity brute_povm_distribution(int seed, int input_n, const QuadConfig& cfg,
                                         int dim, double lambda_window,
                                         ColumnSource source, int n_lambda) {
    if (seed != 0 && seed != 1)
        throw domain_error("brute_povm_distribution: seed must be 0 or 1");
    if (input_n < 0)
        throw domain_error("brute_povm_distribution: input_n must be >= 0");
    check_dim(dim);
    if (input_n >= dim)
        throw domain_error("brute_povm_distribution: input_n beyond the cutoff");
    if (!(lambda_window > 0.0))
        throw domain_error("brute_povm_distribution: lambda_window must be > 0");
    if (n_lambda < 129)
        throw domain_error("brute_povm_distribution: n_lambda too small");

    if ((input_n + seed) % 2 != 0) { // parity mismatch: exact zero density
        TabulatedDensity p = empty_density(cfg);
        p.norm_defect = 1.0;
        return p;
    }

    const double hl = lambda_window / double(n_lambda - 1);
    std::vector<double> f_ns(std::size_t(n_lambda), 0.0);
    std::vector<double> f_ss(std::size_t(n_lambda), 0.0);

    if (source == ColumnSource::ClosedForm) {
        for (int i = 0; i < n_lambda; ++i) {
            const double lam = hl * double(i);
            f_ns[std::size_t(i)] = squeeze_column_entry(input_n, seed, lam);
            f_ss[std::size_t(i)] = squeeze_column_entry(seed, seed, lam);
        }
    } else {
        // beyond ~0.62 ln(dim) the squeezed seed reflects off the truncation
        // edge and the sampled columns are no longer faithful
        const double horizon = 0.62 * std::log(double(dim));
        if (lambda_window > horizon)
            throw validity_error(
                "brute_povm_distribution: lambda_window " +
                std::to_string(lambda_window) + " exceeds the matrix-exponential "
                "validity horizon " +
                std::to_string(horizon) + " at dim " + std::to_string(dim));
        const TruncatedOperator k = squeeze_generator(dim);
        const Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * k.m;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        if (es.info() != Eigen::Success)
            throw numeric_error("brute_povm_distribution: eigendecomposition failed");
        const Eigen::VectorXd w = es.eigenvalues();
        const Eigen::MatrixXcd& v = es.eigenvectors();
        const Eigen::VectorXcd c = v.adjoint().col(seed);
        Eigen::VectorXcd phased(dim);
        for (int i = 0; i < n_lambda; ++i) {
            const double lam = hl * double(i);
            for (int j = 0; j < dim; ++j)
                phased(j) = std::exp(std::complex<double>(0.0, -lam * w(j))) * c(j);
            const Eigen::VectorXcd col = v * phased;
            f_ns[std::size_t(i)] = col(input_n).real();
            f_ss[std::size_t(i)] = col(seed).real();
        }
    }

    const bool odd = (((input_n - seed) % 4 + 4) % 4) == 2; // lambda parity

    std::size_t n_nu = std::size_t(std::floor(kBruteNuMax / kBruteNuStep)) + 1;
    std::vector<double> nus(n_nu);
    for (std::size_t j = 0; j < n_nu; ++j)
        nus[j] = kBruteNuStep * double(j);

    std::vector<double> g_ns = detail::sampled_transform(f_ns, hl, nus, odd);
    std::vector<double> g_ss = detail::sampled_transform(f_ss, hl, nus, false);
    for (double& g : g_ns)
        g /= kPi;
    for (double& g : g_ss)
        g /= kPi;

    // keep only frequencies where the windowed seed density clears its own
    // truncation-noise floor; the floor tightens like 1/nu because the
    // truncated tail integral does
    const double tail = 2.0 * std::abs(f_ss.back()) / kPi;
    std::vector<double> b(n_nu, 0.0);
    for (std::size_t j = 0; j < n_nu; ++j) {
        const double floor = 3.0 * tail / std::max(nus[j], 1.0);
        if (g_ss[j] > floor)
            b[j] = g_ns[j] / std::sqrt(g_ss[j]);
    }

    TabulatedDensity p = empty_density(cfg);
    const std::size_t half = (p.size() - 1) / 2;
    std::vector<double> deltas(half + 1);
    for (std::size_t i = 0; i <= half; ++i)
        deltas[i] = p.h * double(i);
    const std::vector<double> amp = detail::sampled_transform(b, kBruteNuStep, deltas, odd);
    const double pref = std::sqrt(2.0 / kPi);
    for (std::size_t i = 0; i <= half; ++i) {
        const double a = pref * amp[i];
        p.values[half + i] = a * a;
        p.values[half - i] = a * a;
    }
    p.norm_defect = std::abs(1.0 - p.integral());
    return p;
}

double total_variation(const TabulatedDensity& a, const TabulatedDensity& b) {
    if (a.size() != b.size() || a.h != b.h)
        throw domain_error("total_variation: grids do not match");
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        diff[i] = std::abs(a.values[i] - b.values[i]);
    return 0.5 * detail::integrate_samples(diff, a.h);
}

} // namespace cft
