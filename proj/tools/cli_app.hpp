// Command-line front end: hp, verify, decompose, series.
#pragma once

#include "hpsum/hp_formulas.hpp"
#include "hpsum/rational_sums.hpp"
#include "hpsum/report_json.hpp"
#include "hpsum/series_engine.hpp"
#include "hpsum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hpsum::cli {

enum exit_code : int { ok = 0, verification_failed = 1, invalid_parameters = 2, quadrature_failed = 3 };

enum class output_format { json, csv, plain };

struct cli_config {
    std::string method = "auto";
    double tol = 1e-10;
    output_format output = output_format::json;
    bool skip_singular = false;
};

inline const std::map<std::string, output_format> output_names{
    {"json", output_format::json}, {"csv", output_format::csv}, {"plain", output_format::plain}};

inline std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline void print_report(std::ostream& out, const method_report& r, output_format fmt) {
    switch (fmt) {
        case output_format::json: out << to_json(r).dump() << '\n'; break;
        case output_format::csv: {
            out << "value_re,value_im,method,quad_error,evals,notes\n";
            out << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
                << to_string(r.method) << ',';
            if (r.quadrature) out << format_double(r.quadrature->error_estimate) << ',' << r.quadrature->evaluations;
            else out << ',';
            out << ',';
            for (std::size_t i = 0; i < r.notes.size(); ++i) out << (i ? ";" : "") << r.notes[i];
            out << '\n';
            break;
        }
        case output_format::plain: {
            out << "value  = " << format_double(r.value.real()) << (r.value.imag() < 0 ? " - " : " + ")
                << format_double(std::abs(r.value.imag())) << "i\n";
            out << "method = " << to_string(r.method) << '\n';
            if (r.quadrature)
                out << "quad   = error " << format_double(r.quadrature->error_estimate) << ", "
                    << r.quadrature->evaluations << " evaluations\n";
            for (const auto& n : r.notes) out << "note   : " << n << '\n';
            break;
        }
    }
}

/// HP_k(n) with the configured method; "auto" picks exp when i b / a is not an integer, else the integer fallback.
inline method_report evaluate_hp(const hp_params& p, const cli_config& cfg) {
    p.validate();
    std::string method = cfg.method;
    if (method == "auto") method = p.valid_exp() ? "exp" : "integer";
    if (method == "direct") return hp_direct_report(p, cfg.skip_singular);
    if (method == "exp") return hpk_exponential(p, cfg.tol);
    if (method == "real_shift") return hp_via_shift(p, hp_method::real_shift, cfg.tol);
    if (method == "cos") return hp_via_shift(p, hp_method::cos, cfg.tol);
    if (method == "sin") return hp_via_shift(p, hp_method::sin, cfg.tol);
    if (method == "integer") return hp_integer_fallback(p, cfg.tol, cfg.skip_singular);
    throw std::invalid_argument("unknown method '" + method + "'");
}

}  // namespace hpsum::cli
