#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padiclf/characters.hpp"
#include "padiclf/cyclo.hpp"
#include "padiclf/padic.hpp"
#include "padiclf/ratfun.hpp"

namespace padiclf {

// coeff * psi_0(modulation * x) * 1_{center + P^level}(x); a zero center or
// modulation means none.
struct SchwartzTerm {
  CycNum coeff{1L};
  PadicNum center;
  int level = 0;
  PadicNum modulation;
};

// Finite sum of modulated indicator functions of cosets.
class SchwartzFn {
 public:
  explicit SchwartzFn(std::uint32_t p) : p_(p) {}
  static SchwartzFn indicator(std::uint32_t p, const PadicNum& center, int level, CycNum coeff = CycNum(1L));
  // q^r 1_{a(1 + P^r)}
  static SchwartzFn unit_coset(const PadicNum& a, int r);

  std::uint32_t prime() const { return p_; }
  const std::vector<SchwartzTerm>& terms() const { return terms_; }
  SchwartzFn& add_term(SchwartzTerm t);
  SchwartzFn& operator+=(const SchwartzFn& o);
  friend SchwartzFn operator+(SchwartzFn a, const SchwartzFn& b) { return a += b; }
  SchwartzFn scaled(const CycNum& c) const;
  // x -> phi(a x)
  SchwartzFn dilated(const PadicNum& a) const;
  CycNum eval(const PadicNum& x) const;
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::vector<SchwartzTerm> terms_;
};

// is x in center + P^level
bool in_coset(const PadicNum& x, const PadicNum& center, int level);

// q^(h/2) as an exact number
CycNum q_half_power(std::uint32_t p, int h);

// Fourier transform for the self-dual measure of psi.
SchwartzFn fourier(const SchwartzFn& phi, const AddChar& psi);

// Integral of chi(t) psi_0(c t) dt over 1 + P^level (over all units when
// level = 0), additive measure with vol(O) = 1.
CycNum coset_character_sum(const MultChar& chi, const PadicNum& c, int level, const FieldCtx& ctx);

// Integral over F^* (or the shells v >= v_min) of
//   chi(x) |x|^s weight(v(x), leg(t)) psi_0(modulation x) d^*x,  x = pi^v t,
// optionally restricted to v = residue mod modulus. The weight must be
// periodic in v with the given period.
struct ShellSpec {
  MultChar chi;
  std::optional<int> v_min;
  PadicNum modulation;
  std::function<CycNum(int v, int leg)> weight;  // empty means 1
  int weight_period = 1;
  int modulus = 1;
  int residue = 0;
  // shells summed directly beyond both analytic bounds; the result must not change
  int extra_depth = 0;
};
RatFun integrate_shells(const ShellSpec& spec, const FieldCtx& ctx);

// zeta(s, chi, phi) with d^*x, or d^*_psi x when a psi is passed
RatFun mellin(const SchwartzFn& phi, const MultChar& chi, const FieldCtx& ctx,
              const std::optional<AddChar>& measure = std::nullopt, int extra_depth = 0);
// the same integral restricted to F^*_{n,k}
RatFun zeta_nk(const SchwartzFn& phi, const MultChar& chi, int n, int k, const FieldCtx& ctx,
               const std::optional<AddChar>& measure = std::nullopt, int extra_depth = 0);

// Pointwise value of the Weil-index-twisted transform of phi; phi must be a
// combination of unmodulated indicators of unit cosets a(1 + P^r), r >= 1.
CycNum tilde_eval(const SchwartzFn& phi, const AddChar& psi, const PadicNum& x, const FieldCtx& ctx);
// zeta(s, chi, tilde phi) for the same family
RatFun mellin_tilde(const SchwartzFn& phi, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx,
                    const std::optional<AddChar>& measure = std::nullopt, int extra_depth = 0);
RatFun zeta_nk_tilde(const SchwartzFn& phi, const MultChar& chi, int n, int k, const AddChar& psi,
                     const FieldCtx& ctx, const std::optional<AddChar>& measure = std::nullopt,
                     int extra_depth = 0);

}  // namespace padiclf
