#include "cft/serialize.hpp"
#include "cft/errors.hpp"

#include <cstdio>

namespace cft {

std::string format_sig(double v, int precision) {
    if (precision < 3 || precision > 12)
        throw domain_error("precision must lie in [3, 12]");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

ordered_json json_number(double v, int precision) {
    return ordered_json(std::stod(format_sig(v, precision)));
}

std::string density_csv(const TabulatedDensity& p, int precision) {
    std::string out = "delta,density\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += format_sig(p.delta_at(i), precision);
        out += ',';
        out += format_sig(p.values[i], precision);
        out += '\n';
    }
    return out;
}

ordered_json density_json(const TabulatedDensity& p, int precision) {
    ordered_json j;
    j["delta_max"] = p.delta_max;
    j["step"] = p.h;
    j["norm_defect"] = json_number(p.norm_defect, precision);
    j["mass_trimmed"] = json_number(p.mass_trimmed, precision);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        rows.push_back({json_number(p.delta_at(i), precision),
                        json_number(p.values[i], precision)});
    j["samples"] = std::move(rows);
    return j;
}

std::string bounds_csv(const std::vector<BoundResult>& rows, int precision) {
    std::string out = "mu,f_up,f_lo,n_cut,err\n";
    for (const BoundResult& r : rows) {
        out += format_sig(r.mu, precision);
        out += ',';
        out += format_sig(r.f_up, precision);
        out += ',';
        out += format_sig(r.f_lo, precision);
        out += ',';
        out += std::to_string(r.n_cut_used);
        out += ',';
        out += format_sig(r.error_estimate, precision);
        out += '\n';
    }
    return out;
}

ordered_json bounds_json(const std::vector<BoundResult>& rows, int precision) {
    ordered_json arr = ordered_json::array();
    for (const BoundResult& r : rows) {
        ordered_json j;
        j["mu"] = json_number(r.mu, precision);
        j["f_up"] = json_number(r.f_up, precision);
        j["f_lo"] = json_number(r.f_lo, precision);
        j["n_cut"] = r.n_cut_used;
        j["err"] = json_number(r.error_estimate, precision);
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json verdict_json(const Verdict& v, int precision) {
    ordered_json j;
    j["mu"] = json_number(v.mu, precision);
    j["f_measured"] = json_number(v.f_measured, precision);
    j["sigma"] = json_number(v.sigma, precision);
    j["f_up"] = json_number(v.f_up, precision);
    j["f_lo"] = json_number(v.f_lo, precision);
    j["diff_up"] = json_number(v.diff_up, precision);
    j["diff_lo"] = json_number(v.diff_lo, precision);
    j["margin_up_sigma"] = json_number(v.margin_up_sigma, precision);
    j["margin_lo_sigma"] = json_number(v.margin_lo_sigma, precision);
    j["classification"] = to_string(v.classification);
    return j;
}

ordered_json experiment_json(const Experiment& e, int precision) {
    ordered_json j;
    j["key"] = e.key;
    j["mu"] = json_number(e.mu, precision);
    j["squeezing_db"] = json_number(e.squeezing_db, precision);
    j["fidelity"] = json_number(e.fidelity, precision);
    j["sigma"] = json_number(e.sigma, precision);
    j["description"] = e.description;
    j["reference"] = e.reference;
    return j;
}

} // namespace cft
