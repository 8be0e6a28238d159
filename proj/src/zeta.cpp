#include "padiclf/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "padiclf/errors.hpp"
#include "padiclf/weil.hpp"

namespace padiclf {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

bool trivial_center(const SchwartzTerm& t) { return t.center.is_zero() || t.center.valuation() >= t.level; }

PadicNum product_or_zero(const PadicNum& a, const PadicNum& b) {
  if (a.is_zero() || b.is_zero()) return PadicNum::zero(a.prime());
  return a * b;
}

RatFun scaled_by_measure(RatFun f, const std::optional<AddChar>& measure, std::uint32_t p) {
  if (measure) f *= RatFun(q_half_power(p, measure->conductor()));
  return f.with_q(p);
}

}  // namespace

bool in_coset(const PadicNum& x, const PadicNum& center, int level) {
  if (center.is_zero() || center.valuation() >= level) return x.is_zero() || x.valuation() >= level;
  if (x.is_zero() || x.valuation() != center.valuation()) return false;
  int k = level - x.valuation();
  return x.unit_mod(k) == center.unit_mod(k);
}

CycNum q_half_power(std::uint32_t p, int h) {
  if (h < 0) return q_half_power(p, -h).inverse();
  CycNum r(Rational(BigInt(ipow(p, static_cast<unsigned>(h / 2)))));
  if (h % 2 != 0) r *= sqrt_q(p);
  return r;
}

SchwartzFn SchwartzFn::indicator(std::uint32_t p, const PadicNum& center, int level, CycNum coeff) {
  SchwartzFn f(p);
  f.add_term({std::move(coeff), center.is_zero() ? PadicNum::zero(p) : center, level, PadicNum::zero(p)});
  return f;
}

SchwartzFn SchwartzFn::unit_coset(const PadicNum& a, int r) {
  if (a.is_zero() || r < 1) throw DomainError("unit coset needs a nonzero center and r >= 1");
  return indicator(a.prime(), a, a.valuation() + r, q_half_power(a.prime(), 2 * r));
}

SchwartzFn& SchwartzFn::add_term(SchwartzTerm t) {
  if (t.center.prime() == 0) t.center = PadicNum::zero(p_);
  if (t.modulation.prime() == 0) t.modulation = PadicNum::zero(p_);
  if (t.center.prime() != p_ || t.modulation.prime() != p_) throw DomainError("Schwartz term over another prime");
  if (t.coeff.is_zero()) return *this;
  if (trivial_center(t)) t.center = PadicNum::zero(p_);
  terms_.push_back(std::move(t));
  return *this;
}

SchwartzFn& SchwartzFn::operator+=(const SchwartzFn& o) {
  if (o.p_ != p_) throw DomainError("adding Schwartz functions over different primes");
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

SchwartzFn SchwartzFn::scaled(const CycNum& c) const {
  SchwartzFn r(p_);
  for (auto t : terms_) {
    t.coeff *= c;
    r.add_term(std::move(t));
  }
  return r;
}

SchwartzFn SchwartzFn::dilated(const PadicNum& a) const {
  if (a.is_zero()) throw DomainError("dilation by zero");
  SchwartzFn r(p_);
  for (const auto& t : terms_) {
    SchwartzTerm s = t;
    if (!s.center.is_zero()) s.center = t.center / a;
    s.level = t.level - a.valuation();
    s.modulation = product_or_zero(t.modulation, a);
    r.add_term(std::move(s));
  }
  return r;
}

CycNum SchwartzFn::eval(const PadicNum& x) const {
  CycNum r(0L);
  for (const auto& t : terms_) {
    if (!in_coset(x, t.center, t.level)) continue;
    r += t.coeff * psi0(product_or_zero(t.modulation, x));
  }
  return r;
}

std::string SchwartzFn::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) os << " + ";
    os << "(" << t.coeff << ")";
    if (!t.modulation.is_zero()) os << "*psi0(" << t.modulation.to_string() << " x)";
    os << "*1[" << t.center.to_string() << " + P^" << t.level << "]";
  }
  if (terms_.empty()) os << "0";
  return os.str();
}

SchwartzFn fourier(const SchwartzFn& phi, const AddChar& psi) {
  const std::uint32_t p = phi.prime();
  const PadicNum& a = psi.twist();
  const int e = psi.conductor();
  SchwartzFn r(p);
  for (const auto& t : phi.terms()) {
    SchwartzTerm s;
    s.coeff = t.coeff * q_half_power(p, e - 2 * t.level) * psi0(product_or_zero(t.modulation, t.center));
    s.center = t.modulation.is_zero() ? PadicNum::zero(p) : -(t.modulation / a);
    s.level = e - t.level;
    s.modulation = product_or_zero(a, t.center);
    r.add_term(std::move(s));
  }
  return r;
}

CycNum coset_character_sum(const MultChar& chi, const PadicNum& c, int level, const FieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  const int e = chi.conductor();
  const int dep = c.is_zero() ? 0 : std::max(0, -c.valuation());
  const int K = std::max({level, e, dep});
  if (K == 0) return CycNum(Rational(static_cast<long>(p - 1), static_cast<long>(p)));
  const std::uint64_t phiE = chi.unit_group_order();
  const std::uint64_t pdep = ipow(p, static_cast<unsigned>(dep));
  const std::uint64_t L = std::lcm(phiE, pdep);
  const std::uint64_t pe = ipow(p, static_cast<unsigned>(e));
  const std::uint64_t uc = dep > 0 ? c.unit_mod(dep) : 0;
  std::vector<std::int64_t> counts(L, 0);
  auto add = [&](std::uint64_t t) {
    std::uint64_t x = 0;
    if (e > 0) x = chi.unit_value_exponent(t % pe, ctx) * (L / phiE);
    if (dep > 0) x += mulmod(uc, t % pdep, pdep) * (L / pdep);
    ++counts[x % L];
  };
  const std::uint64_t PK = ipow(p, static_cast<unsigned>(K));
  if (level >= 1) {
    const std::uint64_t step = ipow(p, static_cast<unsigned>(level));
    for (std::uint64_t t = 1; t < PK; t += step) add(t);
  } else {
    for (std::uint64_t t = 1; t < PK; ++t)
      if (t % p != 0) add(t);
  }
  return CycNum::from_counts(L, counts) * CycNum(Rational(BigInt(1), BigInt(PK)));
}

RatFun integrate_shells(const ShellSpec& sp, const FieldCtx& ctx) {
  const std::uint32_t p = ctx.p();
  if (sp.modulus < 1 || sp.weight_period < 1) throw DomainError("shell periods must be positive");
  const MultChar& chiA = sp.chi;
  const MultChar chiB = sp.chi * MultChar::legendre(p);
  const bool modulated = !sp.modulation.is_zero();
  int v_start, v_tail;
  if (modulated) {
    const int vb = sp.modulation.valuation();
    const int cutoff = -vb - std::max({1, chiA.conductor(), chiB.conductor()});
    v_start = sp.v_min ? std::max(*sp.v_min, cutoff) : cutoff;
    v_tail = std::max(v_start, -vb);
  } else {
    if (!sp.v_min) throw DomainError("unmodulated shell integral over all of F^* diverges");
    v_start = v_tail = *sp.v_min;
  }
  v_start -= sp.extra_depth;
  if (sp.v_min) v_start = std::max(v_start, *sp.v_min);
  v_tail += sp.extra_depth;

  auto selected = [&](int v) { return floor_mod(v - sp.residue, sp.modulus) == 0; };
  auto split = [&](int v) {
    CycNum wp = sp.weight ? sp.weight(v, 1) : CycNum(1L);
    CycNum wm = sp.weight ? sp.weight(v, -1) : CycNum(1L);
    CycNum half(Rational(1, 2));
    return std::pair<CycNum, CycNum>{(wp + wm) * half, (wp - wm) * half};
  };
  const CycNum& cpi = sp.chi.value_at_pi();

  RatFun acc;
  for (int v = v_start; v < v_tail; ++v) {
    if (!selected(v)) continue;
    auto [A, B] = split(v);
    PadicNum c = modulated ? sp.modulation * ctx.uniformizer_power(v) : PadicNum::zero(p);
    CycNum J(0L);
    if (!A.is_zero()) J += A * coset_character_sum(chiA, c, 0, ctx);
    if (!B.is_zero()) J += B * coset_character_sum(chiB, c, 0, ctx);
    if (!J.is_zero()) acc += RatFun::monomial(cpi.pow(v) * J, v);
  }

  // from v_tail on the additive character is trivial on the shell
  const int P = std::lcm(sp.weight_period, sp.modulus);
  const CycNum vol(Rational(static_cast<long>(p - 1), static_cast<long>(p)));
  std::vector<CycNum> num(static_cast<std::size_t>(P), CycNum(0L));
  bool any = false;
  for (int t = 0; t < P; ++t) {
    int v = v_tail + t;
    if (!selected(v)) continue;
    auto [A, B] = split(v);
    CycNum w(0L);
    if (chiA.conductor() == 0) w += A;
    if (chiB.conductor() == 0) w += B;
    if (w.is_zero()) continue;
    num[static_cast<std::size_t>(t)] = vol * w * cpi.pow(v);
    any = true;
  }
  if (any) {
    Poly den = Poly::constant(CycNum(1L)) - Poly::monomial(cpi.pow(P), static_cast<std::size_t>(P));
    acc += RatFun::fraction(v_tail, Poly(std::move(num)), std::move(den));
  }
  return acc.with_q(p);
}

namespace {

RatFun mellin_restricted(const SchwartzFn& phi, const MultChar& chi, int modulus, int residue,
                         const FieldCtx& ctx, int extra_depth) {
  if (phi.prime() != ctx.p()) throw DomainError("Schwartz function over another prime");
  RatFun acc;
  for (const auto& t : phi.terms()) {
    if (t.center.is_zero()) {
      ShellSpec sp;
      sp.chi = chi;
      sp.v_min = t.level;
      sp.modulation = t.modulation;
      sp.modulus = modulus;
      sp.residue = residue;
      sp.extra_depth = extra_depth;
      acc += RatFun(t.coeff) * integrate_shells(sp, ctx);
      continue;
    }
    // a single coset alpha (1 + P^r) inside one shell
    const int va = t.center.valuation();
    if (floor_mod(va - residue, modulus) != 0) continue;
    CycNum val = t.coeff * chi.eval(t.center, ctx) *
                 coset_character_sum(chi, product_or_zero(t.modulation, t.center), t.level - va, ctx);
    acc += RatFun::monomial(val, va);
  }
  return acc.with_q(ctx.p());
}

}  // namespace

RatFun mellin(const SchwartzFn& phi, const MultChar& chi, const FieldCtx& ctx, const std::optional<AddChar>& measure,
              int extra_depth) {
  return scaled_by_measure(mellin_restricted(phi, chi, 1, 0, ctx, extra_depth), measure, ctx.p());
}

RatFun zeta_nk(const SchwartzFn& phi, const MultChar& chi, int n, int k, const FieldCtx& ctx,
               const std::optional<AddChar>& measure, int extra_depth) {
  if (n < 1) throw DomainError("zeta_nk needs n >= 1");
  return scaled_by_measure(mellin_restricted(phi, chi, n, k, ctx, extra_depth), measure, ctx.p());
}

namespace {

void check_tilde_family(const SchwartzFn& phi) {
  for (const auto& t : phi.terms())
    if (!t.modulation.is_zero() || t.center.is_zero())
      throw DomainError("tilde transform is implemented for unit cosets a(1 + P^r) only");
}

// coefficient of gamma_psi^-1(a x) psi(a x) 1[v(b a x) >= -r] in the transform of c 1_{a(1+P^r)}
CycNum tilde_scale(const SchwartzTerm& t, const AddChar& psi, std::uint32_t p) {
  const int va = t.center.valuation();
  const int r = t.level - va;
  return t.coeff * q_half_power(p, psi.conductor() - 2 * r - 2 * va);
}

}  // namespace

CycNum tilde_eval(const SchwartzFn& phi, const AddChar& psi, const PadicNum& x, const FieldCtx& ctx) {
  check_tilde_family(phi);
  if (x.is_zero()) throw DomainError("tilde transform is defined on F^*");
  CycNum acc(0L);
  for (const auto& t : phi.terms()) {
    PadicNum y = t.center * x;
    const int r = t.level - t.center.valuation();
    if ((psi.twist() * y).valuation() < -r) continue;
    acc += tilde_scale(t, psi, ctx.p()) * weil_index(y, psi, ctx).inverse() * psi.eval(y);
  }
  return acc;
}

namespace {

RatFun tilde_restricted(const SchwartzFn& phi, const MultChar& chi, int modulus, int residue, const AddChar& psi,
                        const FieldCtx& ctx, int extra_depth) {
  check_tilde_family(phi);
  const std::uint32_t p = ctx.p();
  const int lpi = ctx.legendre(ctx.uniformizer_unit());
  RatFun acc;
  for (const auto& t : phi.terms()) {
    const int va = t.center.valuation();
    const int r = t.level - va;
    ShellSpec sp;
    sp.chi = chi;
    sp.v_min = psi.conductor() - r;
    sp.modulation = psi.twist();
    sp.weight = [&psi, &ctx, lpi](int v, int leg) {
      int l = (v % 2 != 0) ? leg * lpi : leg;
      return CycNum::root_of_unity(4, -weil_index_class_exponent(v & 1, l, psi, ctx));
    };
    sp.weight_period = 2;
    sp.modulus = modulus;
    sp.residue = floor_mod(residue + va, modulus);
    sp.extra_depth = extra_depth;
    CycNum pre = tilde_scale(t, psi, p) * chi.eval(t.center, ctx).inverse();
    acc += RatFun::monomial(pre, -va) * integrate_shells(sp, ctx);
  }
  return acc.with_q(p);
}

}  // namespace

RatFun mellin_tilde(const SchwartzFn& phi, const MultChar& chi, const AddChar& psi, const FieldCtx& ctx,
                    const std::optional<AddChar>& measure, int extra_depth) {
  return scaled_by_measure(tilde_restricted(phi, chi, 1, 0, psi, ctx, extra_depth), measure, ctx.p());
}

RatFun zeta_nk_tilde(const SchwartzFn& phi, const MultChar& chi, int n, int k, const AddChar& psi,
                     const FieldCtx& ctx, const std::optional<AddChar>& measure, int extra_depth) {
  if (n < 1) throw DomainError("zeta_nk needs n >= 1");
  return scaled_by_measure(tilde_restricted(phi, chi, n, k, psi, ctx, extra_depth), measure, ctx.p());
}

}  // namespace padiclf
