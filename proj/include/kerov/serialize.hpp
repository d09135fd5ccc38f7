#pragma once

#include <json.hpp>

#include "kerov/cumulant_poly.hpp"
#include "kerov/lassalle.hpp"
#include "kerov/symmetric_fn.hpp"

namespace kerov {

// Canonical-order JSON: [{"coeff":"35","partition":[5]}, ...], coefficients
// as decimal strings so nothing truncates at 64 bits.
nlohmann::json poly_to_json(const CumulantPoly& p);
CumulantPoly poly_from_json(Family f, const nlohmann::json& j);

nlohmann::json symfn_to_json(const SymmetricFn& f);
nlohmann::json fit_report_to_json(const FitReport& report);

}  // namespace kerov
