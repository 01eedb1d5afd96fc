#include "cft/quadrature.hpp"
#include "cft/errors.hpp"

#include <cmath>
#include <string>

namespace cft {

namespace detail {

std::vector<double> sampled_transform(const std::vector<double>& f, double h,
                                      const std::vector<double>& freqs, bool sine) {
    const std::size_t n = f.size();
    std::vector<double> out(freqs.size(), 0.0);
    if (n < 2)
        return out;
    for (std::size_t j = 0; j < freqs.size(); ++j) {
        const double th = freqs[j] * h;
        const double rc = std::cos(th);
        const double rs = std::sin(th);
        long double acc = 0.0L;
        double c = 1.0, s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((i & 511u) == 0u) { // resync the rotation against drift
                const double phase = th * double(i);
                c = std::cos(phase);
                s = std::sin(phase);
            }
            const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            acc += (long double)(w * f[i] * (sine ? s : c));
            const double cn = c * rc - s * rs;
            s = s * rc + c * rs;
            c = cn;
        }
        out[j] = double(acc * (long double)h);
    }
    return out;
}

double integrate_samples(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    if (n < 2)
        return 0.0;
    long double acc = 0.0L;
    if (n % 2 == 1) { // composite Simpson
        acc = v.front() + v.back();
        for (std::size_t i = 1; i + 1 < n; ++i)
            acc += (i % 2 == 1 ? 4.0L : 2.0L) * (long double)v[i];
        return double(acc * (long double)h / 3.0L);
    }
    acc = 0.5L * ((long double)v.front() + (long double)v.back());
    for (std::size_t i = 1; i + 1 < n; ++i)
        acc += (long double)v[i];
    return double(acc * (long double)h);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t intervals) {
    const double h = (b - a) / double(intervals);
    long double acc = f(a) + f(b);
    for (std::size_t i = 1; i < intervals; ++i)
        acc += (i % 2 == 1 ? 4.0L : 2.0L) * (long double)f(a + h * double(i));
    return double(acc * (long double)h / 3.0L);
}

} // namespace

} // namespace detail

double TabulatedDensity::integral() const {
    return detail::integrate_samples(values, h);
}

IntegralResult integrate_real_line(const std::function<double(double)>& f,
                                   const QuadConfig& cfg) {
    // Probe past the candidate edge so a lobe sitting beyond the first decay
    // crossing is not mistaken for the tail.
    const auto decayed = [&](double x) {
        for (double s : {1.0, 1.25, 1.5, 2.0})
            if (std::abs(f(s * x)) > cfg.tail_cut || std::abs(f(-s * x)) > cfg.tail_cut)
                return false;
        return true;
    };
    double w = 16.0;
    while (!decayed(w)) {
        w *= 2.0;
        if (w > 1e9)
            throw convergence_error("integrate_real_line: integrand does not "
                                    "decay below tail_cut within |x| <= 1e9",
                                    0.0, HUGE_VAL);
    }
    std::size_t n = 256;
    double prev = detail::simpson(f, -w, w, n);
    for (;;) {
        n *= 2;
        const double cur = detail::simpson(f, -w, w, n);
        const double diff = std::abs(cur - prev);
        if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur)))
            return {cur, std::max(diff, 1e-16)};
        if (n >= (std::size_t(1) << 22))
            throw convergence_error("integrate_real_line: refinement limit "
                                    "reached before tolerance",
                                    cur, diff);
        prev = cur;
    }
}

std::vector<double> fourier_even(const std::function<double(double)>& f,
                                 const std::vector<double>& nu_grid,
                                 const QuadConfig& cfg) {
    const auto decayed = [&](double x) {
        for (double s : {1.0, 1.25, 1.5, 2.0})
            if (std::abs(f(s * x)) > cfg.tail_cut)
                return false;
        return true;
    };
    double w = 16.0;
    while (!decayed(w)) {
        w *= 2.0;
        if (w > 1e9)
            throw convergence_error("fourier_even: integrand does not decay "
                                    "below tail_cut within lambda <= 1e9",
                                    0.0, HUGE_VAL);
    }
    std::vector<double> out(nu_grid.size(), 0.0);
    for (std::size_t j = 0; j < nu_grid.size(); ++j) {
        const double nu = nu_grid[j];
        // full line = 2 * integral over [0, w]; start resolving the oscillation
        std::size_t n = 512;
        const double cycles = std::abs(nu) * w / (2.0 * 3.14159265358979323846);
        while (double(n) < 16.0 * cycles)
            n *= 2;
        auto g = [&](double lam) { return f(lam) * std::cos(nu * lam); };
        double prev = 2.0 * detail::simpson(g, 0.0, w, n);
        double cur = prev;
        for (;;) {
            n *= 2;
            cur = 2.0 * detail::simpson(g, 0.0, w, n);
            if (std::abs(cur - prev) <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur)))
                break;
            if (n >= (std::size_t(1) << 23))
                throw convergence_error("fourier_even: refinement limit "
                                        "reached before tolerance",
                                        cur, std::abs(cur - prev));
            prev = cur;
        }
        if (cur < -cfg.abs_tol)
            throw negativity_error("fourier_even: transform value " +
                                       std::to_string(cur) +
                                       " below the clamping window",
                                   cur);
        out[j] = (cur < 0.0) ? 0.0 : cur;
    }
    return out;
}

double expectation(const TabulatedDensity& p, const std::function<double(double)>& w) {
    std::vector<double> ws(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        ws[i] = w(p.delta_at(i));
    return expectation(p, ws);
}

double expectation(const TabulatedDensity& p, const std::vector<double>& w) {
    if (w.size() != p.size())
        throw domain_error("expectation: weight samples do not match the grid");
    std::vector<double> prod(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        prod[i] = p.values[i] * w[i];
    return detail::integrate_samples(prod, p.h);
}

} // namespace cft
