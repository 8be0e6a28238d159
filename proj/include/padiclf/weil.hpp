#pragma once

#include <cstdint>

#include "padiclf/characters.hpp"
#include "padiclf/cyclo.hpp"
#include "padiclf/padic.hpp"

namespace padiclf {

// Riemann sum for the integral of x -> psi(a x^2) over P^-M (additive Haar
// measure, vol(O) = 1); requires |a| >= q^-M for the twisted character.
CycNum c_psi(const PadicNum& a, const AddChar& psi, int M);

// Weil index of x -> psi(x^2), normalized to 1 for the standard character.
CycNum weil_gamma_F(const AddChar& psi, const FieldCtx& ctx);
// gamma_psi(a) = gamma_F(psi_a) / gamma_F(psi), a fourth root of unity
CycNum weil_index(const PadicNum& a, const AddChar& psi, const FieldCtx& ctx);
int weil_index_exponent(const PadicNum& a, const AddChar& psi, const FieldCtx& ctx);
int weil_gamma_F_exponent(const AddChar& psi, const FieldCtx& ctx);
// exponent of zeta_4 of gamma_psi on the square class (v mod 2, legendre of unit)
int weil_index_class_exponent(int vparity, int leg, const AddChar& psi, const FieldCtx& ctx);

// beta_pi(u pi^{md}) = u pi^m, defined on F^*_d
PadicNum beta_pi(const PadicNum& a, const FieldCtx& ctx);
// the splitting xi_{psi,pi} of the n-th Hilbert symbol on F^*_d
CycNum xi_splitting(const PadicNum& a, const FieldCtx& ctx, const AddChar& psi);
// For 4 | n, the ctx whose uniformizer u*p satisfies gamma_psi(u p) = 1.
FieldCtx normalize_uniformizer(const FieldCtx& ctx, const AddChar& psi);

// indicator of F^*_{n,k} = {x : v(x) = k mod n}
int beta_nk(const PadicNum& x, int n, int k);
// the same indicator as (1/n) sum_l (u0, x pi^-k)^l with the ctx's symbol
CycNum beta_nk_symbol_sum(const PadicNum& x, int k, const FieldCtx& ctx);

// both sides of the quadratic Gauss integral identity in z
CycNum sweet_lemma_lhs(const PadicNum& z, const AddChar& psi, int M);
CycNum sweet_lemma_rhs(const PadicNum& z, const AddChar& psi, int M, const FieldCtx& ctx);

}  // namespace padiclf
