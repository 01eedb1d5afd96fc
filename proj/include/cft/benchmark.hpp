#pragma once

#include "cft/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cft {

// Fidelity between two squeezed thermal states of equal purity mu whose
// squeezing degrees differ by delta:
//   F = 2 mu^2 / [mu^2 + sqrt(mu^4 + 2 cosh(2 delta) mu^2 + 1) - 1],
// evaluated in a form stable for large |delta|.
double fidelity_squeezed_thermal(double delta, double mu);

struct ValueWithError {
    double value = 0.0;
    double error = 0.0;
};

// Classical fidelity threshold for pure squeezed vacuum inputs with unknown
// squeezing degree: expectation of F_{delta,1} under the optimal-estimation
// density of the vacuum seed. Known to five digits as 0.81517.
ValueWithError cft_pure(const QuadConfig& cfg = {});

// Upper bound on the average fidelity of any classical (measure-and-prepare)
// strategy for squeezed thermal inputs of purity mu: geometric mixture over
// Fock seeds of the per-seed optimal expectations.
double avg_fidelity_upper(double mu, const QuadConfig& cfg = {});

// Lower bound: expectation achieved by the concrete strategy that measures
// with the parity-matched seed POVMs on the thermal mixture.
double avg_fidelity_lower(double mu, const QuadConfig& cfg = {});

struct BoundResult {
    double mu = 1.0;
    double f_up = 0.0;
    double f_lo = 0.0;
    int n_cut_used = 0;
    double error_estimate = 0.0;
};

BoundResult bounds_at(double mu, const QuadConfig& cfg = {});

enum class BoundSide { Upper, Lower };

// Flat-prior average of a bound over purity in [eps, 1] (65-node Simpson).
double avg_bound_over_purity(BoundSide side, double eps, const QuadConfig& cfg = {});

// Same average with an error estimate: the Simpson/trapezoid spread of the
// node values plus the mean per-node truncation terms (geometric tail, and
// for the lower side the trimmed spectral mass).
ValueWithError avg_bound_over_purity_detailed(BoundSide side, double eps,
                                              const QuadConfig& cfg = {});

// Quartic fits of the two bound curves on mu in [1/9, 1]:
//   upper: 4 mu^4/25 - 11 mu^3/20 + 3 mu^2/4 - 11 mu/25 + 179/200
//   lower: 21 mu^4/200 - 6 mu^3/25 + 3 mu^2/25 + 11 mu/100 + 18/25
double fit_eval(double mu, BoundSide side);

// Fidelity of the conventional twin-beam teleportation protocol acting on a
// pure input of squeezing r with resource squeezing s:
//   F^Q(r, s) = {2 e^{-2s} [cosh(2r) + cosh(2s)]}^{-1/2}.
double quantum_teleport_fidelity(double r, double s);

// The input squeezing beyond which the conventional protocol drops below the
// threshold: unique r_c > 0 with F^Q(r_c, s) = threshold, if F^Q(0, s)
// exceeds the threshold; std::nullopt otherwise.
std::optional<double> critical_squeezing(double s, double threshold);

// Resource squeezing with F^Q(0, s*) = threshold: s* = -ln(1/threshold - 1)/2.
// Valid for threshold in (1/2, 1).
double minimal_resource_squeezing(double threshold);

enum class VerdictClass { BeatsUpperBound, InsideWindow, BelowLowerBound };

struct Verdict {
    double mu = 0.0;
    double f_measured = 0.0;
    double sigma = 0.0;
    double f_up = 0.0;
    double f_lo = 0.0;
    double diff_up = 0.0;      // f_measured - f_up
    double diff_lo = 0.0;      // f_measured - f_lo
    double margin_up_sigma = 0.0; // diff_up / sigma (0 when sigma == 0)
    double margin_lo_sigma = 0.0;
    VerdictClass classification = VerdictClass::InsideWindow;
};

std::string to_string(VerdictClass c);

// Classifies a measured fidelity against the computed bounds at purity mu.
Verdict verdict(double mu, double f_measured, double sigma, const QuadConfig& cfg = {});

struct Experiment {
    std::string key;
    double mu;
    double squeezing_db; // input |r| in dB
    double fidelity;
    double sigma;
    std::string description;
    std::string reference;
};

// Built-in registry of the three published demonstrations analyzed here.
const std::vector<Experiment>& experiments();
const Experiment* find_experiment(const std::string& key);

} // namespace cft
