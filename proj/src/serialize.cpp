#include "padiclf/serialize.hpp"

#include <utility>
#include <vector>

#include "padiclf/errors.hpp"

namespace padiclf {

namespace {

BigInt big(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  return BigInt(j.get<std::string>());
}

}  // namespace

json to_json(const CycNum& c) {
  json terms = json::array();
  for (const auto& [k, num, den] : c.terms()) terms.push_back({k, num.get_str(), den.get_str()});
  return {{"N", c.order()}, {"terms", terms}};
}

CycNum cycnum_from_json(const json& j) {
  try {
    std::vector<std::pair<std::int64_t, Rational>> t;
    for (const auto& term : j.at("terms")) {
      Rational r(big(term.at(1)), big(term.at(2)));
      r.canonicalize();
      t.emplace_back(term.at(0).get<std::int64_t>(), r);
    }
    return CycNum::from_terms(j.at("N").get<std::uint64_t>(), t);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed CycNum JSON: ") + e.what());
  }
}

json to_json(const RatFun& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num().coeffs()) num.push_back(to_json(c));
  for (const auto& c : f.den().coeffs()) den.push_back(to_json(c));
  return {{"q", f.q()}, {"monomial_exp", f.monomial_exp()}, {"num_coeffs", num}, {"den_coeffs", den}};
}

RatFun ratfun_from_json(const json& j) {
  try {
    std::vector<CycNum> num, den;
    for (const auto& c : j.at("num_coeffs")) num.push_back(cycnum_from_json(c));
    for (const auto& c : j.at("den_coeffs")) den.push_back(cycnum_from_json(c));
    if (den.empty()) throw DomainError("RatFun JSON with a zero denominator");
    RatFun f = RatFun::fraction(j.at("monomial_exp").get<int>(), Poly(num), Poly(den));
    const auto q = j.at("q").get<std::uint32_t>();
    if (q != 0) f.with_q(q);
    return f;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed RatFun JSON: ") + e.what());
  }
}

json to_json(const PadicNum& x) {
  if (x.is_zero()) return {{"p", x.prime()}, {"zero", true}};
  return {{"p", x.prime()}, {"valuation", x.valuation()}, {"unit", x.unit()}, {"precision", x.precision()}};
}

PadicNum padic_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    if (j.value("zero", false)) return PadicNum::zero(p);
    return PadicNum::make(p, j.at("valuation").get<int>(), j.at("unit").get<std::uint64_t>(),
                          j.value("precision", 0));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed p-adic JSON: ") + e.what());
  }
}

json to_json(const FieldCtx& ctx) {
  return {{"p", ctx.p()}, {"n", ctx.n()}, {"g", ctx.g()}, {"u0", ctx.u0()}, {"uniformizer_unit", ctx.uniformizer_unit()}};
}

FieldCtx ctx_from_json(const json& j) {
  try {
    return FieldCtx(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(),
                    j.value("uniformizer_unit", std::uint64_t{1}));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed field context JSON: ") + e.what());
  }
}

json to_json(const MultChar& chi) {
  return {{"p", chi.prime()},
          {"e", chi.conductor()},
          {"unit_part_exponent", chi.unit_exponent()},
          {"value_at_pi", to_json(chi.value_at_pi())}};
}

MultChar multchar_from_json(const json& j) {
  try {
    return MultChar(j.at("p").get<std::uint32_t>(), j.at("e").get<int>(), j.at("unit_part_exponent").get<std::int64_t>(),
                    cycnum_from_json(j.at("value_at_pi")));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed character JSON: ") + e.what());
  }
}

json to_json(const AddChar& psi) { return {{"twist", to_json(psi.twist())}, {"conductor", psi.conductor()}}; }

AddChar addchar_from_json(const json& j) {
  try {
    return AddChar(padic_from_json(j.at("twist")));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed additive character JSON: ") + e.what());
  }
}

json to_json(const CoeffMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return {{"schema", kSchemaVersion}, {"d", m.d},     {"n", m.n},
          {"chi_case", to_string(m.chi_case)}, {"chi", to_json(m.chi)}, {"psi", to_json(m.psi)},
          {"uniformizer_unit", m.uniformizer_unit}, {"entries", rows}};
}

CycNum parse_value(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw DomainError("expected a/N or r:num/den, got " + s);
  try {
    if (s.rfind("r:", 0) == 0) {
      long den = std::stol(s.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in " + s);
      return CycNum(Rational(std::stol(s.substr(2, slash - 2)), den));
    }
    long long N = std::stoll(s.substr(slash + 1));
    if (N <= 0) throw DomainError("root order must be positive in " + s);
    return CycNum::root_of_unity(static_cast<std::uint64_t>(N), std::stoll(s.substr(0, slash)));
  } catch (const std::logic_error&) {
    throw DomainError("malformed value " + s);
  }
}

}  // namespace padiclf
