#pragma once

#include <stdexcept>
#include <string>

namespace cft {

// Input outside a documented domain (bad purity, negative cutoff, ...).
// CLI maps this to exit code 2.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numeric failure: quadrature non-convergence, normalization defect above
// tolerance, truncation budget exceeded. CLI maps this to exit code 1.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature did not reach the requested tolerance; carries the best estimate.
class convergence_error : public numeric_error {
public:
    convergence_error(const std::string& what, double best, double err)
        : numeric_error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// A transform value came out more negative than the clamping policy allows.
class negativity_error : public numeric_error {
public:
    negativity_error(const std::string& what, double value)
        : numeric_error(what), value(value) {}
    double value;
};

// A request lies outside the validity region of a truncated-basis routine
// (e.g. squeeze window too wide for the Fock cutoff).
class validity_error : public numeric_error {
public:
    explicit validity_error(const std::string& what) : numeric_error(what) {}
};

} // namespace cft
