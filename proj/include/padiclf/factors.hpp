#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padiclf/characters.hpp"
#include "padiclf/padic.hpp"
#include "padiclf/ratfun.hpp"
#include "padiclf/zeta.hpp"

namespace padiclf {

// L(s, chi)
RatFun lfactor(const MultChar& chi);
// test-function depth used for the Tate gamma factor
int default_test_depth(const MultChar& chi);
// gamma(s, chi, psi) from zeta(1-s, chi^-1, hat phi) / zeta(s, chi, phi), phi = q^r 1_{1+P^r}
RatFun tate_gamma(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, int r = 0);
// epsilon(s, chi, psi) = gamma(s, chi, psi) L(s, chi) / L(1-s, chi^-1)
RatFun epsilon(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);
// epsilon(s, chi, psi) = c X^k; throws if it is not a monomial
std::pair<CycNum, int> epsilon_monomial(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);

// x -> psi(2x)
AddChar psi_two(const AddChar& psi);
// e(psi, chi) = e(psi) - e(chi)
inline int relative_conductor(const AddChar& psi, const MultChar& chi) { return psi.conductor() - chi.conductor(); }

// gamma_F(psi_-1)^-1 chi(-1) gamma(2s, chi^2, psi_2)^-1 gamma(s + 1/2, chi, psi),
// which is the metaplectic gamma factor at (1 - s, chi^-1, psi)
RatFun meta_gamma_reflected(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);
// the metaplectic gamma factor at (s, chi, psi)
RatFun meta_gamma(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx);
// shell-sum value of the integral of gamma_psi^-1(x) chi(x) |x|^s psi(x) d^*_psi x over P^-M
RatFun sweet_integral(const MultChar& chi, const AddChar& psi, int M, const FieldCtx& ctx);
// smallest M for which the integral above no longer depends on M
int sweet_min_depth(const MultChar& chi, const AddChar& psi);

// coefficients of the restricted functional equations
RatFun theta(int m, const MultChar& chi, const AddChar& psi, int n, const FieldCtx& ctx);
RatFun theta_tilde(int m, const MultChar& chi, const AddChar& psi, int n, const FieldCtx& ctx);

enum class FeVariant { tate, metaplectic };

struct FeCheck {
  int k = 0;
  RatFun lhs, rhs;
  bool pass = false;
};

// zeta_{n,k}(s, chi, T phi) against sum_m theta_m zeta_{n, m + shift - k}(1-s, chi^-1, phi)
// for every k, with T the Fourier transform (tate) or the tilde transform (metaplectic).
std::vector<FeCheck> verify_functional_equation(int n, const MultChar& chi, const AddChar& psi,
                                                const SchwartzFn& phi, const FieldCtx& ctx, FeVariant variant);

}  // namespace padiclf
