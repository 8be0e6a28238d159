#include "padiclf/metaplectic.hpp"

#include <numeric>
#include <sstream>

#include "padiclf/errors.hpp"
#include "padiclf/factors.hpp"
#include "padiclf/weil.hpp"
#include "padiclf/zeta.hpp"

namespace padiclf {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

const Rational& x_entry(const SL2& g) { return g.c != 0 ? g.c : g.d; }

RatFun qpow(std::uint32_t p, int k) { return RatFun(q_half_power(p, 2 * k)); }

RatFun one_minus_inv_q(std::uint32_t p) {
  return RatFun(CycNum(Rational(static_cast<long>(p) - 1, static_cast<long>(p))));
}

// eps(s, chi, psi), eps(2s, chi, psi), eps(s + 1/2, chi, psi)
RatFun eps_s(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) { return epsilon(chi, psi, ctx); }
RatFun eps_2s(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  return epsilon(chi, psi, ctx).substitute(SubstRule::doubled());
}
RatFun eps_half(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  return epsilon(chi, psi, ctx).substitute(SubstRule::shift_half());
}

MultChar pow_signed(const MultChar& chi, int k) { return k >= 0 ? chi.pow(k) : chi.inverse().pow(-k); }

// L(a s + b/2, 1)
RatFun l_one(std::uint32_t p, int a, int b) { return lfactor(MultChar::trivial(p)).substitute({a, b}); }

}  // namespace

SL2 SL2::operator*(const SL2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string SL2::to_string() const {
  std::ostringstream os;
  os << "[[" << a.get_str() << ", " << b.get_str() << "], [" << c.get_str() << ", " << d.get_str() << "]]";
  return os.str();
}

std::uint64_t kubota_cocycle(const SL2& g1, const SL2& g2, const FieldCtx& ctx) {
  if (g1.a * g1.d - g1.b * g1.c != 1 || g2.a * g2.d - g2.b * g2.c != 1)
    throw DomainError("kubota_cocycle needs determinant 1");
  const Rational x12 = x_entry(g1 * g2);
  PadicNum u = ctx.from_rational(x12 / x_entry(g1));
  PadicNum v = ctx.from_rational(x12 / x_entry(g2));
  return hilbert_exponent(u, v, ctx);
}

CoverElement CoverElement::mul(const CoverElement& o, const FieldCtx& ctx) const {
  return {g * o.g, (root + o.root + kubota_cocycle(g, o.g, ctx)) % ctx.n()};
}

std::uint32_t whittaker_dimension(std::uint32_t n) {
  if (n == 0) throw DomainError("n must be positive");
  return n / std::gcd(n, 2u);
}

MultChar eta_pi(const FieldCtx& ctx) { return eta_char(ctx.uniformizer(), ctx); }

MultChar rebase_char(const MultChar& chi, const FieldCtx& from, const FieldCtx& to) {
  return chi.with_value_at_pi(chi.eval(to.uniformizer(), from));
}

CycNum GenuineChar::eval(const PadicNum& a, std::uint64_t root) const {
  if (a.is_zero() || a.valuation() % static_cast<int>(ctx.d()) != 0)
    throw DomainError("genuine character evaluated outside F^*_d");
  return CycNum::root_of_unity(ctx.n(), static_cast<std::int64_t>(root)) * chi.eval(a, ctx) *
         xi_splitting(a, ctx, psi);
}

RatFun GenuineChar::eval_s(const PadicNum& a, std::uint64_t root) const {
  return RatFun::monomial(eval(a, root), a.valuation()).with_q(ctx.p());
}

bool same_on_Fd(const MultChar& chi, const MultChar& chi2, const FieldCtx& ctx) {
  const int d = static_cast<int>(ctx.d());
  return chi.same_unit_part(chi2) && chi.value_at_pi().pow(d) == chi2.value_at_pi().pow(d);
}

std::optional<int> equivalent_inducing_data(const MultChar& chi, const MultChar& chi2, const FieldCtx& ctx) {
  const MultChar eta2 = eta_pi(ctx).pow(2);
  MultChar cur = chi;
  for (int m = 0; m < static_cast<int>(ctx.d()); ++m) {
    if (same_on_Fd(cur, chi2, ctx)) return m;
    cur = cur * eta2;
  }
  return std::nullopt;
}

CharCase classify(const MultChar& chi, const FieldCtx& ctx) {
  if (same_on_Fd(chi, MultChar::trivial(ctx.p()), ctx)) return CharCase::trivial;
  if (ctx.n() % 2 == 0 && same_on_Fd(chi, eta_pi(ctx), ctx)) return CharCase::eta_pi;
  if (chi.pow(ctx.n()).is_ramified()) return CharCase::ramified_power;
  return CharCase::other;
}

std::vector<MultChar> canonical_characters(const FieldCtx& ctx, int max_conductor) {
  const std::uint32_t p = ctx.p();
  const long n = ctx.n();
  std::vector<MultChar> out{MultChar::trivial(p)};
  if (n % 2 == 0) out.push_back(eta_pi(ctx));
  for (int e = 1; e <= max_conductor; ++e) {
    const std::uint64_t order = ipow(p, static_cast<unsigned>(e - 1)) * (p - 1);
    int found = 0;
    for (std::uint64_t k = 1; k < order && found < 2; ++k) {
      MultChar c(p, e, static_cast<std::int64_t>(k), CycNum::root_of_unity(4, 1));
      if (c.conductor() != e || classify(c, ctx) != CharCase::ramified_power) continue;
      out.push_back(c);
      ++found;
    }
  }
  return out;
}

std::vector<MultChar> character_classes(const FieldCtx& ctx, int max_conductor) {
  const std::uint32_t p = ctx.p();
  const std::uint64_t n = ctx.n();
  std::vector<MultChar> out;
  const std::uint64_t order = max_conductor == 0 ? 1 : ipow(p, static_cast<unsigned>(max_conductor - 1)) * (p - 1);
  for (std::uint64_t k = 0; k < order; ++k)
    for (std::uint64_t a = 0; a < 2 * n; ++a) {
      MultChar c = k == 0 ? MultChar::unramified(p, CycNum::root_of_unity(2 * n, static_cast<std::int64_t>(a)))
                          : MultChar(p, max_conductor, static_cast<std::int64_t>(k),
                                     CycNum::root_of_unity(2 * n, static_cast<std::int64_t>(a)));
      bool seen = false;
      for (const auto& o : out) seen = seen || same_on_Fd(o, c, ctx);
      if (!seen) out.push_back(c);
    }
  return out;
}

std::string to_string(CharCase c) {
  switch (c) {
    case CharCase::trivial: return "trivial";
    case CharCase::eta_pi: return "eta_pi";
    case CharCase::ramified_power: return "ramified_power";
    case CharCase::other: return "other";
  }
  return "other";
}

std::uint64_t whittaker_phase(int i, int j, const Rational& zr, const FieldCtx& ctx) {
  const int d = static_cast<int>(ctx.d());
  const std::uint32_t n = ctx.n();
  if (i < 0 || j < 0 || i >= d || j >= d) throw DomainError("tau index out of range");
  if (zr == 0 || floor_mod(ctx.from_rational(zr).valuation() - i - j, d) != 0)
    throw DomainError("z must have valuation i + j mod d");
  const Rational pi(static_cast<long>(ctx.p() * ctx.uniformizer_unit()));
  auto pw = [&pi](int k) {
    Rational r(1);
    for (int t = 0; t < std::abs(k); ++t) r *= pi;
    return k >= 0 ? r : Rational(1 / r);
  };
  auto S = [](const SL2& g) { return CoverElement::section(g); };
  CoverElement G = S(SL2::w())
                       .mul(S(SL2::n(-pw(2 * i) / zr)), ctx)
                       .mul(S(SL2::h(pw(i))), ctx)
                       .mul(S(SL2::w()), ctx)
                       .mul(S(SL2::n(-zr)), ctx);
  const SL2 hw = SL2::h(pw(j)) * SL2::w();
  const SL2 B = G.g * SL2{hw.d, -hw.b, -hw.c, hw.a};
  if (B.c != 0 || !(B.a == zr * pw(-i - j))) throw Error("unexpected Bruhat decomposition");
  const std::uint64_t c = kubota_cocycle(B, SL2::h(pw(j)), ctx) + kubota_cocycle(B * SL2::h(pw(j)), SL2::w(), ctx);
  return (G.root + 2 * n - c % n) % n;
}

std::uint64_t whittaker_phase_defect(int i, int j, const FieldCtx& ctx) {
  const std::uint32_t n = ctx.n();
  Rational z(1);
  for (int t = 0; t < i + j; ++t) z *= Rational(static_cast<long>(ctx.p() * ctx.uniformizer_unit()));
  std::uint64_t claimed = (static_cast<std::uint64_t>(floor_mod(i - j, static_cast<int>(n))) *
                           hilbert_exponent(ctx.uniformizer(), ctx.from_rational(z), ctx)) % n;
  return (whittaker_phase(i, j, z, ctx) + n - claimed) % n;
}

RatFun tau_entry_integral(int i, int j, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx,
                          const std::optional<AddChar>& psi_prime) {
  const int n = static_cast<int>(ctx.n()), d = static_cast<int>(ctx.d());
  if (i < 0 || j < 0 || i >= d || j >= d) throw DomainError("tau index out of range");
  const std::uint32_t p = ctx.p();
  const AddChar& pp = psi_prime ? *psi_prime : psi;
  ShellSpec sp;
  sp.chi = chi * pow_signed(eta_pi(ctx), i - j);
  sp.modulation = pp.twist();
  sp.modulus = d;
  sp.residue = floor_mod(i + j, d);
  if (n % 2 == 0) {
    // xi(pi^{-i-j} z) = gamma_psi^{-1}(t pi^m) for z = t pi^{i+j+md}
    const int lpi = ctx.legendre(ctx.uniformizer_unit());
    const int ij = i + j;
    sp.weight = [&psi, &ctx, lpi, ij, d](int v, int leg) {
      int m = (v - ij) / d;
      int l = (m % 2 != 0) ? leg * lpi : leg;
      return CycNum::root_of_unity(4, -weil_index_class_exponent(m & 1, l, psi, ctx));
    };
    sp.weight_period = 2 * d;
  }
  RatFun r = integrate_shells(sp, ctx);
  CycNum pre = q_half_power(p, 2 * (j - i)) * q_half_power(p, pp.conductor()) *
               CycNum::root_of_unity(static_cast<std::uint64_t>(n), whittaker_phase_defect(i, j, ctx));
  return (RatFun::monomial(pre * chi.value_at_pi().pow(-i - j), -i - j) * r).with_q(p);
}

RatFun tau_entry_closed(int i, int j, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  const int n = static_cast<int>(ctx.n()), d = static_cast<int>(ctx.d());
  if (i < 0 || j < 0 || i >= d || j >= d) throw DomainError("tau index out of range");
  if (psi.conductor() != 0) throw DomainError("closed tau formulas need a spherical psi");
  if (n % 4 == 0 && !weil_index(ctx.uniformizer(), psi, ctx).is_one())
    throw DomainError("closed tau formulas need gamma_psi(pi) = 1 when 4 | n");
  const std::uint32_t p = ctx.p();
  const CharCase cc = classify(chi, ctx);
  const MultChar eta = eta_pi(ctx);
  const AddChar psi2 = psi_two(psi);
  const RatFun zero = RatFun(0L).with_q(p);
  const RatFun Ln = l_one(p, n, 0);
  const RatFun Lr = l_one(p, -n, 2);
  auto with_q = [p](RatFun r) { return r.with_q(p); };

  if (cc == CharCase::other) throw DomainError("character is not in a canonical case: " + chi.to_string());

  if (n % 2 == 1) {
    if (cc == CharCase::trivial) {
      if (i == j) {
        if (2 * j < n - 1) return with_q(Ln * one_minus_inv_q(p));
        if (2 * j == n - 1) return with_q(Ln / Lr);
        return with_q(Ln * one_minus_inv_q(p) * RatFun::monomial(CycNum(1L), -n));
      }
      if (i + j != n - 1) return zero;
      return with_q(qpow(p, j - i) * RatFun::monomial(CycNum(1L), -(n - 1)) *
                    eps_s(pow_signed(eta, i - j), psi, ctx).inverse());
    }
    if (floor_mod(i + j + chi.conductor(), n) != 0) return zero;
    return with_q(RatFun(static_cast<long>(chi.at_minus_one())) * qpow(p, j - i) *
                  RatFun::monomial(chi.value_at_pi().pow(-i - j), -i - j) *
                  eps_s(chi * pow_signed(eta, i - j), psi, ctx).inverse());
  }

  const int alpha = n % 4 == 0 ? 1 : 0;
  if (cc == CharCase::trivial) {
    if (i == j) {
      if (d % 2 == 1 && 2 * j == d - 1) return with_q(Ln * l_one(p, -d, 1) / (Lr * l_one(p, d, 1)));
      return with_q(one_minus_inv_q(p) * Ln);
    }
    if (i + j != d - 1) return zero;
    return with_q(qpow(p, j - i) * RatFun::monomial(CycNum(1L), -(d - 1)) *
                  eps_2s(pow_signed(eta, 2 * (i - j)), psi2, ctx).inverse() *
                  eps_half(pow_signed(eta, i - j), psi, ctx));
  }
  if (cc == CharCase::eta_pi) {
    if (floor_mod(j - i - 1, d) == 0) {
      RatFun r = qpow(p, j - i) * RatFun::monomial(CycNum(1L), -(j - i)) * eps_half(eta.pow(d), psi, ctx) * Ln;
      if (i == d - 1 && j == 0) return with_q(r / Lr);
      return with_q(r * one_minus_inv_q(p));
    }
    if (i + j != d - 1) return zero;
    return with_q(qpow(p, j - i) * RatFun::monomial(CycNum(1L), -(d - 1)) *
                  eps_half(pow_signed(eta, i - j + 1), psi, ctx) *
                  eps_2s(pow_signed(eta, 2 * (i - j + 1)), psi2, ctx).inverse());
  }
  const int e = chi.conductor();
  if (floor_mod(i + j + e, d) != 0) return zero;
  const int k = (d + 1) * (i - j) + alpha * (e + i + j);
  return with_q(qpow(p, j - i) * RatFun::monomial(chi.value_at_pi().pow(-i - j), -i - j) *
                RatFun(static_cast<long>(chi.at_minus_one())) *
                eps_2s(chi.pow(2) * pow_signed(eta, 2 * (i - j)), psi2, ctx).inverse() *
                eps_half(chi * pow_signed(eta, k), psi, ctx));
}

RatFun tau_entry_theta(int i, int j, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  const int n = static_cast<int>(ctx.n()), d = static_cast<int>(ctx.d());
  if (i < 0 || j < 0 || i >= d || j >= d) throw DomainError("tau index out of range");
  if (psi.conductor() != 0) throw DomainError("theta tau formulas need a spherical psi");
  const std::uint32_t p = ctx.p();
  // off by +-i against the integral on some entries when d > 1 is odd and -1 is not a square
  if (n % 2 == 0 && d % 2 == 1 && d > 1 && p % 4 == 3)
    throw DomainError("theta tau route does not hold for odd d > 1 when p = 3 mod 4");
  const MultChar eta = eta_pi(ctx);
  RatFun pre = qpow(p, j - i) * RatFun::monomial(chi.value_at_pi().pow(-i - j), -i - j) *
               RatFun(CycNum::root_of_unity(static_cast<std::uint64_t>(n), whittaker_phase_defect(i, j, ctx)));
  if (n % 2 == 1) {
    MultChar c = chi * pow_signed(eta, i - j);
    return (pre * theta(floor_mod(i + j + c.conductor(), n), c, psi, n, ctx)).with_q(p);
  }
  const int alpha = n % 4 == 0 ? 1 : 0;
  const int e2 = (chi.pow(2) * pow_signed(eta, 2 * (i - j))).conductor();
  MultChar c1 = chi * pow_signed(eta, (d + 1) * (i - j));
  MultChar c2 = c1 * pow_signed(eta, d * alpha);
  RatFun t = theta_tilde(floor_mod(e2 + i + j, n), c1, psi, n, ctx) +
             theta_tilde(floor_mod(e2 + d + i + j, n), c2, psi, n, ctx);
  return (pre * t).with_q(p);
}

CoeffMatrix dmatrix(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, DMethod method) {
  CoeffMatrix m;
  m.d = ctx.d();
  m.chi = chi;
  m.psi = psi;
  m.n = ctx.n();
  m.chi_case = classify(chi, ctx);
  m.uniformizer_unit = ctx.uniformizer_unit();
  const int d = static_cast<int>(m.d);
  m.entries.assign(m.d, std::vector<RatFun>(m.d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.entries[i][j] = method == DMethod::closed   ? tau_entry_closed(i, j, chi, psi, ctx)
                        : method == DMethod::theta  ? tau_entry_theta(i, j, chi, psi, ctx)
                                                    : tau_entry_integral(i, j, chi, psi, ctx);
  return m;
}

std::vector<std::vector<RatFun>> matmul(const std::vector<std::vector<RatFun>>& a,
                                        const std::vector<std::vector<RatFun>>& b) {
  const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<RatFun>> out(r, std::vector<RatFun>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
  return out;
}

std::optional<RatFun> scalar_of(const std::vector<std::vector<RatFun>>& m) {
  if (m.empty()) return std::nullopt;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && !m[i][j].is_zero()) return std::nullopt;
      if (i == j && !(m[i][j] == m[0][0])) return std::nullopt;
    }
  return m[0][0];
}

RatFun plancherel_l_ratio(const MultChar& chi, std::uint32_t n) {
  const int k = static_cast<int>(n);
  const MultChar cn = chi.pow(k), cin = cn.inverse();
  RatFun num = lfactor(cn).substitute({k, 0}) * lfactor(cin).substitute({-k, 0});
  RatFun den = lfactor(cin).substitute({-k, 2}) * lfactor(cn).substitute({k, 2});
  return (num / den).with_q(chi.prime());
}

PlancherelProduct plancherel_product(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, DMethod method) {
  if (psi.conductor() != 0) throw DomainError("matrix Plancherel route needs a spherical psi");
  FieldCtx nctx = ctx.n() % 4 == 0 ? normalize_uniformizer(ctx, psi) : ctx;
  MultChar c = rebase_char(chi, ctx, nctx);
  auto D = dmatrix(c, psi, nctx, method).entries;
  DMethod inv_method = method;
  if (method == DMethod::closed && classify(c.inverse(), nctx) == CharCase::other) inv_method = DMethod::theta;
  auto Dm = dmatrix(c.inverse(), psi, nctx, inv_method).entries;
  for (auto& row : Dm)
    for (auto& e : row) e = e.substitute(SubstRule::negated());
  PlancherelProduct out;
  out.product = matmul(D, Dm);
  out.scalar = scalar_of(out.product);
  const int en = chi.pow(static_cast<long>(ctx.n())).conductor();
  out.expected = (RatFun(static_cast<long>(chi.at_minus_one()) * q_half_power(ctx.p(), -2 * en)) *
                  plancherel_l_ratio(chi, ctx.n()))
                     .with_q(ctx.p());
  return out;
}

RatFun plancherel(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, PlancherelMethod method) {
  const std::uint32_t p = ctx.p();
  if (method == PlancherelMethod::formula) {
    const int e = psi.conductor() - chi.pow(static_cast<long>(ctx.n())).conductor();
    return (RatFun(q_half_power(p, 2 * e)) * plancherel_l_ratio(chi, ctx.n())).with_q(p);
  }
  auto pr = plancherel_product(chi, psi, ctx, DMethod::integral);
  if (!pr.scalar) throw Error("D(chi, s) D(chi^-1, -s) is not scalar for " + chi.to_string());
  return (RatFun(static_cast<long>(chi.at_minus_one())) * *pr.scalar).with_q(p);
}

Reducibility reducible_at_zero(const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
  const long n = ctx.n();
  Reducibility r;
  const MultChar cn = chi.pow(n);
  r.predicate = n % 2 == 1 && chi.pow(2 * n).is_trivial() && !cn.is_trivial();
  r.self_dual = equivalent_inducing_data(chi, chi.inverse(), ctx).has_value();
  RatFun mu = plancherel(chi, psi, ctx, PlancherelMethod::formula);
  r.analytic_at_zero = mu.pole_order_at(CycNum(1L)) <= 0;
  r.analytic = r.self_dual && r.analytic_at_zero;
  if (!r.agree()) throw Error("reducibility routes disagree for " + chi.to_string());
  return r;
}

}  // namespace padiclf
