#pragma once

#include "json.hpp"

#include "erd/functional_equation.hpp"
#include "erd/identities.hpp"
#include "erd/series.hpp"

namespace erd {

nlohmann::ordered_json to_json(Complex z);
nlohmann::ordered_json to_json(const EvalResult& r);
nlohmann::ordered_json to_json(const IdentityReport& r);
nlohmann::ordered_json to_json(const Prop7Report& r);

IdentityReport identity_report_from_json(const nlohmann::ordered_json& j);

} // namespace erd
