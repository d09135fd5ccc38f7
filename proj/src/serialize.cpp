#include "kerov/serialize.hpp"

#include "kerov/errors.hpp"

namespace kerov {

nlohmann::json poly_to_json(const CumulantPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, c] : p.terms()) {
        nlohmann::json term;
        term["coeff"] = to_string(c);
        term["partition"] = key.parts();
        out.push_back(std::move(term));
    }
    return out;
}

CumulantPoly poly_from_json(Family f, const nlohmann::json& j) {
    if (!j.is_array()) throw ParseFailure("polynomial JSON must be an array");
    CumulantPoly out(f);
    for (const auto& term : j) {
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        std::vector<int> parts = term.at("partition").get<std::vector<int>>();
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

nlohmann::json symfn_to_json(const SymmetricFn& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [nu, c] : f.terms()) {
        nlohmann::json term;
        term["m"] = nu.parts();
        term["coeff"] = to_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

nlohmann::json fit_report_to_json(const FitReport& report) {
    nlohmann::json out;
    out["g"] = report.g;
    out["basis"] = report.basis == FitBasis::R ? "R" : "Q";
    out["degree_bound"] = report.degree_bound;
    out["fitted"] = symfn_to_json(report.fitted);
    out["equations_used"] = report.equations_used;
    out["residual_equations_checked"] = report.residual_equations_checked;
    out["consistent"] = report.consistent;
    out["tilde_note"] = report.tilde_note;
    return out;
}

}  // namespace kerov
