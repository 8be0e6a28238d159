#include "padiclf/weil.hpp"

#include <algorithm>
#include <vector>

#include "padiclf/errors.hpp"

namespace padiclf {

namespace {

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

int zeta4_exponent(const CycNum& c) {
  for (int k = 0; k < 4; ++k)
    if (c == CycNum::root_of_unity(4, k)) return k;
  throw Error("Weil index is not a fourth root of unity: " + c.to_string());
}

int mod4(int k) { return ((k % 4) + 4) % 4; }

}  // namespace

namespace detail {

int weil_class_exponent_by_sum(std::uint32_t p, int vparity, std::uint64_t unit) {
  PadicNum y = PadicNum::make(p, vparity, unit);
  CycNum c = c_psi(y, AddChar::standard(p), 1);
  return zeta4_exponent(c * sqrt_q(p).pow(-vparity));
}

}  // namespace detail

CycNum c_psi(const PadicNum& a, const AddChar& psi, int M) {
  PadicNum y = a * psi.twist();
  std::uint32_t p = y.prime();
  int v = y.valuation();
  if (v > M) throw DomainError("c_psi needs |a| >= q^-M");
  int D = 2 * M - v;
  if (D <= 0) return CycNum(static_cast<long>(p)).pow(M);
  int K = std::max({M - v, ceil_half(-v), 0});
  std::uint64_t modD = ipow(p, static_cast<unsigned>(D));
  std::uint64_t uy = y.unit_mod(D);
  std::uint64_t npts = ipow(p, static_cast<unsigned>(M + K));
  std::vector<std::int64_t> counts(modD, 0);
  for (std::uint64_t t = 0; t < npts; ++t) {
    std::uint64_t tt = t % modD;
    counts[mulmod(uy, mulmod(tt, tt, modD), modD)] += 1;
  }
  return CycNum::from_counts(modD, counts) * CycNum(static_cast<long>(p)).pow(-K);
}

int weil_gamma_F_exponent(const AddChar& psi, const FieldCtx& ctx) {
  const PadicNum& b = psi.twist();
  return ctx.weil_class_exponent(b.valuation() & 1, ctx.legendre_of_unit(b));
}

CycNum weil_gamma_F(const AddChar& psi, const FieldCtx& ctx) {
  return CycNum::root_of_unity(4, weil_gamma_F_exponent(psi, ctx));
}

int weil_index_class_exponent(int vparity, int leg, const AddChar& psi, const FieldCtx& ctx) {
  const PadicNum& b = psi.twist();
  int vp = (vparity + b.valuation()) & 1;
  int l = leg * ctx.legendre_of_unit(b);
  return mod4(ctx.weil_class_exponent(vp, l) - weil_gamma_F_exponent(psi, ctx));
}

int weil_index_exponent(const PadicNum& a, const AddChar& psi, const FieldCtx& ctx) {
  return weil_index_class_exponent(a.valuation() & 1, ctx.legendre_of_unit(a), psi, ctx);
}

CycNum weil_index(const PadicNum& a, const AddChar& psi, const FieldCtx& ctx) {
  return CycNum::root_of_unity(4, weil_index_exponent(a, psi, ctx));
}

PadicNum beta_pi(const PadicNum& a, const FieldCtx& ctx) {
  int v = a.valuation();
  int d = static_cast<int>(ctx.d());
  if (v % d != 0) throw DomainError("beta_pi is defined on F^*_d only");
  return ctx.pi_unit(a) * ctx.uniformizer_power(v / d);
}

CycNum xi_splitting(const PadicNum& a, const FieldCtx& ctx, const AddChar& psi) {
  if (a.valuation() % static_cast<int>(ctx.d()) != 0)
    throw DomainError("the splitting is defined on F^*_d only");
  if (ctx.n() % 2 == 1) return CycNum(1L);
  return CycNum::root_of_unity(4, -weil_index_exponent(beta_pi(a, ctx), psi, ctx));
}

FieldCtx normalize_uniformizer(const FieldCtx& ctx, const AddChar& psi) {
  if (ctx.n() % 4 != 0) return ctx;
  std::vector<std::uint64_t> candidates{ctx.uniformizer_unit() % ctx.p(), 1, ctx.nonresidue()};
  for (std::uint64_t u = 2; u < ctx.p(); ++u) candidates.push_back(u);
  for (auto u : candidates) {
    if (u == 0) continue;
    if (weil_index_exponent(PadicNum::make(ctx.p(), 1, u), psi, ctx) == 0)
      return u == ctx.uniformizer_unit() ? ctx : ctx.with_uniformizer(u);
  }
  throw DomainError("no uniformizer with trivial Weil index");
}

int beta_nk(const PadicNum& x, int n, int k) {
  int r = (x.valuation() - k) % n;
  return r == 0 ? 1 : 0;
}

CycNum beta_nk_symbol_sum(const PadicNum& x, int k, const FieldCtx& ctx) {
  PadicNum y = x * ctx.uniformizer_power(-k);
  CycNum s = hilbert_symbol(ctx.from_int(static_cast<std::int64_t>(ctx.u0())), y, ctx);
  CycNum acc(0L), pw(1L);
  for (std::uint32_t l = 0; l < ctx.n(); ++l) {
    acc += pw;
    pw *= s;
  }
  return acc * CycNum(Rational(1, ctx.n()));
}

CycNum sweet_lemma_lhs(const PadicNum& z, const AddChar& psi, int M) {
  // integral over P^-M of psi_0(y1 c^2 + y2 c), y1 = -b z, y2 = 2b
  std::uint32_t p = z.prime();
  PadicNum y1 = -(psi.twist() * z);
  PadicNum y2 = psi.twist() * PadicNum::from_int(p, 2);
  int v1 = y1.valuation(), v2 = y2.valuation();
  int D = std::max({2 * M - v1, M - v2, 0});
  int K = std::max({0, M - v1, ceil_half(-v1), -v2});
  if (D == 0) return CycNum(static_cast<long>(p)).pow(M);
  std::uint64_t modD = ipow(p, static_cast<unsigned>(D));
  auto scaled_unit = [&](const PadicNum& y, int shift) -> std::uint64_t {
    if (shift >= D) return 0;
    return mulmod(y.unit_mod(D - shift), ipow(p, static_cast<unsigned>(shift)), modD);
  };
  std::uint64_t c1 = scaled_unit(y1, D - 2 * M + v1);
  std::uint64_t c2 = scaled_unit(y2, D - M + v2);
  std::uint64_t npts = ipow(p, static_cast<unsigned>(M + K));
  std::vector<std::int64_t> counts(modD, 0);
  for (std::uint64_t t = 0; t < npts; ++t) {
    std::uint64_t tt = t % modD;
    counts[(mulmod(c1, mulmod(tt, tt, modD), modD) + mulmod(c2, tt, modD)) % modD] += 1;
  }
  return CycNum::from_counts(modD, counts) * CycNum(static_cast<long>(p)).pow(-K);
}

CycNum sweet_lemma_rhs(const PadicNum& z, const AddChar& psi, int M, const FieldCtx& ctx) {
  int v = z.valuation();
  if (v > M) return CycNum(0L);
  PadicNum minus_one = ctx.from_int(-1);
  int Mc = std::max({M, psi.twist().valuation(), 1});
  return psi.eval(z.inverse()) * sqrt_q(ctx.p()).pow(v) * weil_index(z, psi, ctx).inverse() *
         c_psi(minus_one, psi, Mc);
}

}  // namespace padiclf
