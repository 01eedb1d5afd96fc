#pragma once

#include "cft/benchmark.hpp"
#include "cft/quadrature.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cft {

using ordered_json = nlohmann::ordered_json;

// printf %.{precision}g formatting: fixed significant digits, no locale.
std::string format_sig(double v, int precision);

// The same value as a JSON number rounded to the display precision, so CSV
// and JSON payloads carry identical digits.
ordered_json json_number(double v, int precision);

std::string density_csv(const TabulatedDensity& p, int precision);
ordered_json density_json(const TabulatedDensity& p, int precision);

std::string bounds_csv(const std::vector<BoundResult>& rows, int precision);
ordered_json bounds_json(const std::vector<BoundResult>& rows, int precision);

ordered_json verdict_json(const Verdict& v, int precision);
ordered_json experiment_json(const Experiment& e, int precision);

} // namespace cft
