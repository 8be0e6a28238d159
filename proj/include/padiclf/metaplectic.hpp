#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padiclf/characters.hpp"
#include "padiclf/cyclo.hpp"
#include "padiclf/padic.hpp"
#include "padiclf/ratfun.hpp"

namespace padiclf {

// 2x2 matrix of determinant 1 with exact rational entries
struct SL2 {
  Rational a{1}, b{0}, c{0}, d{1};

  static SL2 n(const Rational& x) { return {1, x, 0, 1}; }
  static SL2 h(const Rational& t) { return {t, 0, 0, 1 / t}; }
  static SL2 w() { return {0, 1, -1, 0}; }
  SL2 operator*(const SL2& o) const;
  bool operator==(const SL2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  std::string to_string() const;
};

// c(g1, g2) = zeta_n^(returned exponent)
std::uint64_t kubota_cocycle(const SL2& g1, const SL2& g2, const FieldCtx& ctx);

// (g, zeta_n^root)
struct CoverElement {
  SL2 g;
  std::uint64_t root = 0;

  static CoverElement section(const SL2& g) { return {g, 0}; }
  CoverElement mul(const CoverElement& o, const FieldCtx& ctx) const;
};

std::uint32_t whittaker_dimension(std::uint32_t n);

// eta_pi = (pi, .)_n for the ctx uniformizer
MultChar eta_pi(const FieldCtx& ctx);
// the same character written against another uniformizer of the same field
MultChar rebase_char(const MultChar& chi, const FieldCtx& from, const FieldCtx& to);

// (h(a), eps) -> eps chi(a) xi_{pi,psi}(a) on the cover of H_d
struct GenuineChar {
  MultChar chi;
  FieldCtx ctx;
  AddChar psi;

  // a must lie in F^*_d
  CycNum eval(const PadicNum& a, std::uint64_t root = 0) const;
  // the s-twisted value eval(a) |a|^s
  RatFun eval_s(const PadicNum& a, std::uint64_t root = 0) const;
};

// chi and chi2 agree on F^*_d
bool same_on_Fd(const MultChar& chi, const MultChar& chi2, const FieldCtx& ctx);
// m in [0, d) with chi2 = chi eta_pi^{2m} on F^*_d, if any
std::optional<int> equivalent_inducing_data(const MultChar& chi, const MultChar& chi2, const FieldCtx& ctx);

enum class CharCase { trivial, eta_pi, ramified_power, other };
CharCase classify(const MultChar& chi, const FieldCtx& ctx);
std::string to_string(CharCase c);

// trivial, eta_pi (n even) and up to two characters with chi^n ramified per conductor
std::vector<MultChar> canonical_characters(const FieldCtx& ctx, int max_conductor = 2);
// one chi per class of chi|_{F^*_d}: unit parts of conductor <= max_conductor, chi(pi) in mu_{2n}
std::vector<MultChar> character_classes(const FieldCtx& ctx, int max_conductor = 1);

// exponent e with s(w) s(n(y)) s(h(pi^i)) s(w) s(n(-z)) = (b, zeta_n^e) s(h(pi^j)) s(w),
// y = -pi^{2i}/z, b upper triangular; v(z) = i + j mod d
std::uint64_t whittaker_phase(int i, int j, const Rational& z, const FieldCtx& ctx);
// whittaker_phase minus the exponent of eta_pi^{i-j}(z), taken at z = pi^{i+j}. It does not
// depend on z and equals (-1, pi)_n^{j(i+1)}.
std::uint64_t whittaker_phase_defect(int i, int j, const FieldCtx& ctx);

// tau(i, j, chi, s, psi') from the defining integral; psi' defaults to psi
RatFun tau_entry_integral(int i, int j, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx,
                          const std::optional<AddChar>& psi_prime = std::nullopt);
// tau(i, j, chi, s, psi) from the case formulas; needs psi spherical, gamma_psi(pi) = 1
// when 4 | n, and chi in a canonical case
RatFun tau_entry_closed(int i, int j, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);

// tau(i, j) through the coefficients of the restricted functional equations
// (any chi; psi spherical; not for n even, d > 1 odd, p = 3 mod 4)
RatFun tau_entry_theta(int i, int j, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);

enum class DMethod { closed, integral, theta };

struct CoeffMatrix {
  std::uint32_t d = 0;
  std::vector<std::vector<RatFun>> entries;
  MultChar chi;
  AddChar psi;
  std::uint32_t n = 0;
  CharCase chi_case = CharCase::other;
  std::uint64_t uniformizer_unit = 1;
};

CoeffMatrix dmatrix(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, DMethod method);
// rows of a times columns of b
std::vector<std::vector<RatFun>> matmul(const std::vector<std::vector<RatFun>>& a,
                                        const std::vector<std::vector<RatFun>>& b);
// c when m = c Id, otherwise nullopt
std::optional<RatFun> scalar_of(const std::vector<std::vector<RatFun>>& m);

// the L-function ratio L(ns, chi^n) L(-ns, chi^-n) / (L(1-ns, chi^-n) L(1+ns, chi^n))
RatFun plancherel_l_ratio(const MultChar& chi, std::uint32_t n);

enum class PlancherelMethod { formula, matrices };

struct PlancherelProduct {
  std::vector<std::vector<RatFun>> product;  // D(chi, s) D(chi^-1, -s)
  std::optional<RatFun> scalar;
  RatFun expected;  // chi(-1) q^{-e(chi^n)} L-ratio
};

// D(chi, s, psi) D(chi^-1, -s, psi) for spherical psi, with the uniformizer
// normalized so that gamma_psi(pi) = 1 when 4 | n
PlancherelProduct plancherel_product(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, DMethod method);
// mu^{-1}(tau, s); the matrix route uses the integral entries
RatFun plancherel(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, PlancherelMethod method);

struct Reducibility {
  bool predicate = false;  // n odd and the central character projection is quadratic nontrivial
  bool self_dual = false;  // tau = tau^w
  bool analytic_at_zero = false;
  bool analytic = false;  // self_dual and analytic_at_zero
  bool reducible() const { return predicate; }
  bool agree() const { return predicate == analytic; }
};

// throws Error when the two routes disagree
Reducibility reducible_at_zero(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);

}  // namespace padiclf
