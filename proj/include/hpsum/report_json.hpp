// JSON form of method reports and polynomials.
//   {"value": [re, im], "method": str, "quad_error": num|null, "evals": int|null, "notes": [str]}
#pragma once

#include "hpsum/hp_formulas.hpp"
#include "hpsum/upolynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hpsum {

inline nlohmann::json complex_to_json(complex_t z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline complex_t complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json complex_list_to_json(const std::vector<complex_t>& zs) {
    auto out = nlohmann::json::array();
    for (const auto z : zs) out.push_back(complex_to_json(z));
    return out;
}

inline nlohmann::json to_json(const method_report& r) {
    nlohmann::json j;
    j["value"] = complex_to_json(r.value);
    j["method"] = std::string(to_string(r.method));
    if (r.quadrature) {
        j["quad_error"] = r.quadrature->error_estimate;
        j["evals"] = r.quadrature->evaluations;
    } else {
        j["quad_error"] = nullptr;
        j["evals"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

inline hp_method method_from_string(const std::string& s) {
    for (auto m : {hp_method::direct, hp_method::exp, hp_method::real_shift, hp_method::cos, hp_method::sin,
                   hp_method::integer_even, hp_method::integer_odd})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown method '" + s + "'");
}

/// Inverse of to_json; throws std::invalid_argument when the document does not follow the schema.
inline method_report report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("report: expected an object");
    for (const char* key : {"value", "method", "quad_error", "evals", "notes"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("report: missing key '") + key + "'");
    method_report r;
    r.value = complex_from_json(j["value"]);
    r.method = method_from_string(j["method"].get<std::string>());
    const auto& qe = j["quad_error"];
    const auto& ev = j["evals"];
    if (qe.is_null() != ev.is_null()) throw std::invalid_argument("report: quad_error and evals must both be null");
    if (!qe.is_null()) {
        quadrature_result q;
        q.value = r.value;
        q.error_estimate = qe.get<double>();
        q.evaluations = ev.get<std::size_t>();
        r.quadrature = q;
    }
    if (!j["notes"].is_array()) throw std::invalid_argument("report: notes must be an array");
    r.notes = j["notes"].get<std::vector<std::string>>();
    return r;
}

template <class T>
nlohmann::json to_json(const basic_upolynomial<T>& p) {
    return complex_list_to_json(p.coefficients());
}

}  // namespace hpsum
