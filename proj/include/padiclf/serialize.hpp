#pragma once

#include <string>

#include "json.hpp"
#include "padiclf/characters.hpp"
#include "padiclf/cyclo.hpp"
#include "padiclf/metaplectic.hpp"
#include "padiclf/padic.hpp"
#include "padiclf/ratfun.hpp"

namespace padiclf {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"N": order, "terms": [[k, "num", "den"], ...]}
json to_json(const CycNum& c);
CycNum cycnum_from_json(const json& j);
// {"q", "monomial_exp", "num_coeffs", "den_coeffs"}
json to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

json to_json(const PadicNum& x);
PadicNum padic_from_json(const json& j);
json to_json(const FieldCtx& ctx);
FieldCtx ctx_from_json(const json& j);
json to_json(const MultChar& chi);
MultChar multchar_from_json(const json& j);
json to_json(const AddChar& psi);
AddChar addchar_from_json(const json& j);
json to_json(const CoeffMatrix& m);

// "a/N" is zeta_N^a, "r:num/den" is the rational num/den
CycNum parse_value(const std::string& s);

}  // namespace padiclf
