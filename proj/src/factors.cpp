#include "padiclf/factors.hpp"

#include <algorithm>

#include "padiclf/errors.hpp"
#include "padiclf/weil.hpp"

namespace padiclf {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

// (chi(pi) X)^m
RatFun pi_power(const MultChar& chi, int m) { return RatFun::monomial(chi.value_at_pi().pow(m), m); }

RatFun one_minus_inv_q(std::uint32_t p) {
  return RatFun(CycNum(Rational(static_cast<long>(p) - 1, static_cast<long>(p))));
}

}  // namespace

RatFun lfactor(const MultChar& chi) {
  if (chi.is_ramified()) return RatFun(1L).with_q(chi.prime());
  return RatFun::geometric(chi.value_at_pi(), 1).with_q(chi.prime());
}

int default_test_depth(const MultChar& chi) { return std::max(2, chi.conductor() + 1); }

RatFun tate_gamma(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, int r) {
  if (r <= 0) r = default_test_depth(chi);
  if (r < std::max(1, chi.conductor())) throw DomainError("test function too coarse for the character");
  SchwartzFn phi = SchwartzFn::unit_coset(ctx.from_int(1), r);
  RatFun num = mellin(fourier(phi, psi), chi.inverse(), ctx).substitute(SubstRule::reflected());
  return (num / mellin(phi, chi, ctx)).with_q(ctx.p());
}

RatFun epsilon(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  RatFun Lr = lfactor(chi.inverse()).substitute(SubstRule::reflected());
  return (tate_gamma(chi, psi, ctx) * lfactor(chi) / Lr).with_q(ctx.p());
}

std::pair<CycNum, int> epsilon_monomial(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  auto m = epsilon(chi, psi, ctx).as_monomial();
  if (!m) throw Error("epsilon factor is not a monomial for " + chi.to_string());
  return *m;
}

AddChar psi_two(const AddChar& psi) { return psi.dilate(PadicNum::from_int(psi.prime(), 2)); }

RatFun meta_gamma_reflected(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  const std::uint32_t p = ctx.p();
  CycNum c = weil_gamma_F(psi.dilate(PadicNum::from_int(p, -1)), ctx).inverse() *
             CycNum(static_cast<long>(chi.at_minus_one()));
  RatFun g2 = tate_gamma(chi.pow(2), psi_two(psi), ctx).substitute(SubstRule::doubled());
  RatFun gh = tate_gamma(chi, psi, ctx).substitute(SubstRule::shift_half());
  return (RatFun(c) * gh / g2).with_q(p);
}

RatFun meta_gamma(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  return meta_gamma_reflected(chi.inverse(), psi, ctx).substitute(SubstRule::reflected());
}

int sweet_min_depth(const MultChar& chi, const AddChar& psi) {
  return std::max(1, chi.conductor()) - psi.conductor();
}

RatFun sweet_integral(const MultChar& chi, const AddChar& psi, int M, const FieldCtx& ctx) {
  if (M < sweet_min_depth(chi, psi)) throw DomainError("integration domain P^-M too small");
  const int lpi = ctx.legendre(ctx.uniformizer_unit());
  ShellSpec sp;
  sp.chi = chi;
  sp.v_min = -M;
  sp.modulation = psi.twist();
  sp.weight = [&psi, &ctx, lpi](int v, int leg) {
    int l = (v % 2 != 0) ? leg * lpi : leg;
    return CycNum::root_of_unity(4, -weil_index_class_exponent(v & 1, l, psi, ctx));
  };
  sp.weight_period = 2;
  return (integrate_shells(sp, ctx) * RatFun(q_half_power(ctx.p(), psi.conductor()))).with_q(ctx.p());
}

RatFun theta(int m, const MultChar& chi, const AddChar& psi, int n, const FieldCtx& ctx) {
  if (n < 1 || m < 0 || m >= n) throw DomainError("theta index out of range");
  const std::uint32_t p = ctx.p();
  RatFun einv = epsilon(chi, psi, ctx).inverse();
  if (chi.is_ramified()) {
    if (m != 0) return RatFun(0L).with_q(p);
    return (RatFun(static_cast<long>(chi.at_minus_one())) * einv).with_q(p);
  }
  MultChar chin = chi.pow(n);
  RatFun Ln = lfactor(chin).substitute({n, 0});
  RatFun r = einv * Ln * pi_power(chi, m);
  if (m <= n - 2) return (r * one_minus_inv_q(p)).with_q(p);
  RatFun Lr = lfactor(chin.inverse()).substitute({-n, 2});
  return (r / Lr).with_q(p);
}

RatFun theta_tilde(int m, const MultChar& chi, const AddChar& psi, int n, const FieldCtx& ctx) {
  if (n < 2 || n % 2 != 0) throw DomainError("theta_tilde needs an even n");
  if (m < 0 || m >= n) throw DomainError("theta_tilde index out of range");
  const std::uint32_t p = ctx.p();
  const MultChar chi2 = chi.pow(2);
  CycNum gF = weil_gamma_F(psi.dilate(PadicNum::from_int(p, -1)), ctx).inverse();
  RatFun pre = RatFun(gF) * epsilon(chi2, psi_two(psi), ctx).substitute(SubstRule::doubled()).inverse() *
               epsilon(chi, psi, ctx).substitute(SubstRule::shift_half());
  RatFun zero = RatFun(0L).with_q(p);
  if (chi2.is_ramified()) {
    if (m != 0) return zero;
    return (pre * RatFun(static_cast<long>(chi.at_minus_one()))).with_q(p);
  }
  MultChar chin = chi.pow(n);
  RatFun Ln = lfactor(chin).substitute({n, 0});
  if (!chi.is_ramified()) {
    if (m == n - 1)
      return (pre * RatFun::monomial(q_half_power(p, -1) * chi.value_at_pi().inverse(), -1)).with_q(p);
    if (m % 2 == 0) return (pre * one_minus_inv_q(p) * pi_power(chi, m) * Ln).with_q(p);
    return zero;
  }
  // this branch carries chi(-1)
  RatFun base = pre * RatFun(static_cast<long>(chi.at_minus_one())) * pi_power(chi, m - 1) * Ln;
  if (m == n - 1) return (base / lfactor(chin.inverse()).substitute({-n, 2})).with_q(p);
  if (m % 2 == 1) return (base * one_minus_inv_q(p)).with_q(p);
  return zero;
}

std::vector<FeCheck> verify_functional_equation(int n, const MultChar& chi, const AddChar& psi,
                                                const SchwartzFn& phi, const FieldCtx& ctx, FeVariant variant) {
  std::vector<FeCheck> out;
  const bool meta = variant == FeVariant::metaplectic;
  std::vector<RatFun> th;
  for (int m = 0; m < n; ++m) th.push_back(meta ? theta_tilde(m, chi, psi, n, ctx) : theta(m, chi, psi, n, ctx));
  const int shift = meta ? relative_conductor(psi, chi.pow(2)) : relative_conductor(psi, chi);
  std::vector<RatFun> rest;
  for (int j = 0; j < n; ++j)
    rest.push_back(zeta_nk(phi, chi.inverse(), n, j, ctx).substitute(SubstRule::reflected()));
  SchwartzFn ph = meta ? phi : fourier(phi, psi);
  for (int k = 0; k < n; ++k) {
    FeCheck c;
    c.k = k;
    c.lhs = meta ? zeta_nk_tilde(phi, chi, n, k, psi, ctx) : zeta_nk(ph, chi, n, k, ctx);
    c.rhs = RatFun(0L).with_q(ctx.p());
    for (int m = 0; m < n; ++m) {
      if (th[static_cast<std::size_t>(m)].is_zero()) continue;
      c.rhs += th[static_cast<std::size_t>(m)] * rest[static_cast<std::size_t>(floor_mod(m + shift - k, n))];
    }
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace padiclf
