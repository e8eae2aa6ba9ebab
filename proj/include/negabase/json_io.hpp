#pragma once

#include <string>

#include <json.hpp>

#include "negabase/classify.hpp"
#include "negabase/lattice.hpp"

namespace negabase {

using Json = nlohmann::ordered_json;

inline Json word_json(const EPWord& w) {
    Json j;
    j["preperiod"] = w.pre;
    j["period"] = w.per;
    j["text"] = w.str();
    return j;
}

inline Json periodic_data_json(const std::optional<PeriodicData>& d) {
    if (!d) return Json("inconclusive");
    Json j;
    j["m"] = d->m;
    j["p"] = d->p;
    j["word"] = word_json(d->word);
    return j;
}

inline const char* bound_check_str(BoundCheck b) {
    switch (b) {
        case BoundCheck::holds: return "true";
        case BoundCheck::fails: return "false";
        default: return "undecided";
    }
}

/// One classification report as a JSON object with fixed field order.
/// Exact values are strings; only decimal_approx fields are non-exact.
inline Json report_json(const ClassificationReport& rep) {
    Json j;
    j["base_poly"] = rep.base_poly.coeff_list_str();
    j["base_poly_pretty"] = rep.base_poly.pretty();
    j["beta_enclosure"] = {rat_str(rep.beta_enclosure.first), rat_str(rep.beta_enclosure.second)};
    j["perron"] = verdict_str(rep.is_perron);
    j["pisot"] = verdict_str(rep.is_pisot);
    j["salem"] = verdict_str(rep.is_salem);
    j["parry"] = periodic_data_json(rep.parry);
    j["ito_sadahiro"] = periodic_data_json(rep.ito_sadahiro);
    if (rep.is_poly) {
        Json ip;
        ip["coeffs"] = rep.is_poly->polynomial.coeff_list_str();
        ip["monic"] = rep.is_poly->monic_normalized.coeff_list_str();
        ip["pretty"] = rep.is_poly->monic_normalized.pretty();
        j["is_poly"] = ip;
    } else {
        j["is_poly"] = nullptr;
    }
    j["degree_bound_ok"] = rep.degree_bound_ok;
    j["minpoly_divides_isp"] = rep.minpoly_divides_isp;
    j["root_bound_ok"] = bound_check_str(rep.root_bound);
    if (rep.conjugate_max_modulus) {
        j["conjugate_max_modulus"] = {rat_str(rep.conjugate_max_modulus->first),
                                      rat_str(rep.conjugate_max_modulus->second)};
    } else {
        j["conjugate_max_modulus"] = nullptr;
    }
    return j;
}

inline Json lattice_point_json(const LatticePoint& p) {
    Json j;
    std::string w;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (i) w += " ";
        w += std::to_string(p.word[i]);
    }
    j["word"] = w;
    j["coords"] = p.value.coords_str();
    j["decimal_approx"] = p.value.decimal_approx(20);
    return j;
}

}  // namespace negabase
