#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cft {

struct QuadConfig {
    double abs_tol = 1e-10;   // inner transforms
    double rel_tol = 1e-8;    // outer integrals
    double tail_cut = 1e-12;  // window selection: integrand below this is dropped
    double delta_max = 160.0; // half-width of the delta grid
    int n_points = 32001;     // delta grid resolution (odd keeps Simpson exact)
};

// Density tabulated on the uniform symmetric grid delta in [-delta_max, delta_max].
struct TabulatedDensity {
    double delta_max = 0.0;
    double h = 0.0;
    std::vector<double> values;
    double norm_defect = 0.0;  // |1 - integral| after documented accounting
    double mass_trimmed = 0.0; // true mass dropped by frequency-window cuts
    bool symmetric = true;

    std::size_t size() const { return values.size(); }
    double delta_at(std::size_t i) const { return -delta_max + h * double(i); }
    double integral() const;
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
};

// Integral of f over the real line. The window is found by doubling until
// |f| at both ends drops below cfg.tail_cut, then composite Simpson is
// refined until the change is below max(abs_tol, rel_tol*|value|).
IntegralResult integrate_real_line(const std::function<double(double)>& f,
                                   const QuadConfig& cfg = {});

// g(nu) = integral over the real line of f(lambda) cos(nu lambda), for even f
// (f is sampled on lambda >= 0 only). Values in [-abs_tol, 0) are clamped to
// zero; anything more negative throws negativity_error.
std::vector<double> fourier_even(const std::function<double(double)>& f,
                                 const std::vector<double>& nu_grid,
                                 const QuadConfig& cfg = {});

// integral of p(delta) w(delta) d delta on the tabulated grid.
double expectation(const TabulatedDensity& p, const std::function<double(double)>& w);

// Same with precomputed weight samples w[i] = w(delta_at(i)).
double expectation(const TabulatedDensity& p, const std::vector<double>& w);

namespace detail {

// out[j] = h * sum_i trap_i f[i] * cos(freqs[j] * h * i)   (or sin).
// Direct summation with a rotation recurrence, long double accumulator,
// and periodic phase resync; spectrally accurate for smooth decaying f.
std::vector<double> sampled_transform(const std::vector<double>& f, double h,
                                      const std::vector<double>& freqs, bool sine);

// Composite Simpson over tabulated values (odd count), trapezoid fallback.
double integrate_samples(const std::vector<double>& v, double h);

} // namespace detail

} // namespace cft
