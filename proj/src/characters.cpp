#include "padiclf/characters.hpp"

#include <numeric>
#include <sstream>

#include "padiclf/errors.hpp"

namespace padiclf {

namespace {

std::uint64_t phi_pe(std::uint32_t p, int e) {
  return e == 0 ? 1 : ipow(p, static_cast<unsigned>(e - 1)) * (p - 1);
}

std::uint64_t lift_exponent(std::uint64_t k, std::uint32_t p, int from, int to) {
  if (from == 0) return 0;
  return k * ipow(p, static_cast<unsigned>(to - from));
}

}  // namespace

MultChar::MultChar(std::uint32_t p, int conductor, std::int64_t unit_exponent, CycNum value_at_pi)
    : p_(p), e_(conductor), pi_(std::move(value_at_pi)) {
  if (conductor < 0) throw DomainError("negative conductor");
  if (pi_.is_zero()) throw DomainError("character value at the uniformizer must be nonzero");
  auto m = static_cast<std::int64_t>(phi_pe(p, conductor));
  std::int64_t k = unit_exponent % m;
  if (k < 0) k += m;
  k_ = static_cast<std::uint64_t>(k);
  while (e_ >= 2 && k_ % p == 0) {
    k_ /= p;
    --e_;
  }
  if (e_ == 1 && k_ % (p - 1) == 0) e_ = 0;
  if (e_ == 0) k_ = 0;
}

MultChar MultChar::trivial(std::uint32_t p) { return MultChar(p, 0, 0, CycNum(1L)); }

MultChar MultChar::unramified(std::uint32_t p, CycNum value_at_pi) {
  return MultChar(p, 0, 0, std::move(value_at_pi));
}

MultChar MultChar::legendre(std::uint32_t p) { return MultChar(p, 1, (p - 1) / 2, CycNum(1L)); }

std::uint64_t MultChar::unit_group_order() const { return phi_pe(p_, e_); }

std::uint64_t MultChar::unit_order() const {
  std::uint64_t m = unit_group_order();
  return m / std::gcd(k_, m);
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (p_ != o.p_) throw DomainError("characters of different fields");
  int e = std::max(e_, o.e_);
  std::uint64_t m = phi_pe(p_, e);
  std::uint64_t k = (lift_exponent(k_, p_, e_, e) + lift_exponent(o.k_, p_, o.e_, e)) % m;
  return MultChar(p_, e, static_cast<std::int64_t>(k), pi_ * o.pi_);
}

MultChar MultChar::inverse() const {
  std::uint64_t m = unit_group_order();
  return MultChar(p_, e_, static_cast<std::int64_t>((m - k_) % m), pi_.inverse());
}

MultChar MultChar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  std::uint64_t m = unit_group_order();
  return MultChar(p_, e_, static_cast<std::int64_t>(mulmod(k_, static_cast<std::uint64_t>(k), m)), pi_.pow(k));
}

MultChar MultChar::with_value_at_pi(CycNum v) const {
  MultChar r = *this;
  if (v.is_zero()) throw DomainError("character value at the uniformizer must be nonzero");
  r.pi_ = std::move(v);
  return r;
}

std::uint64_t MultChar::unit_value_exponent(std::uint64_t u, const FieldCtx& ctx) const {
  if (e_ == 0) return 0;
  std::uint64_t m = unit_group_order();
  return mulmod(k_, ctx.dlog(u, e_), m);
}

CycNum MultChar::eval_unit(std::uint64_t u, const FieldCtx& ctx) const {
  if (e_ == 0) return CycNum(1L);
  return CycNum::root_of_unity(unit_group_order(), static_cast<std::int64_t>(unit_value_exponent(u, ctx)));
}

CycNum MultChar::eval(const PadicNum& x, const FieldCtx& ctx) const {
  if (x.is_zero()) throw DomainError("multiplicative character at zero");
  int v = x.valuation();
  CycNum r = pi_.pow(v);
  if (e_ > 0) r *= eval_unit(ctx.pi_unit(x).unit_mod(e_), ctx);
  return r;
}

int MultChar::at_minus_one() const { return (e_ > 0 && k_ % 2 == 1) ? -1 : 1; }

std::string MultChar::to_string() const {
  std::ostringstream os;
  os << "chi(e=" << e_ << ", k=" << k_ << ", pi->" << pi_ << ")";
  return os.str();
}

AddChar::AddChar(PadicNum twist) : a_(std::move(twist)) {
  if (a_.is_zero()) throw DomainError("additive character with zero twist is trivial");
}

AddChar AddChar::standard(std::uint32_t p) { return AddChar(PadicNum::from_int(p, 1)); }

CycNum AddChar::eval(const PadicNum& x) const { return psi0(a_ * x); }

std::string AddChar::to_string() const { return "psi(" + a_.to_string() + " x)"; }

std::pair<int, std::uint64_t> psi0_exponent(const PadicNum& y) {
  if (y.is_zero() || y.valuation() >= 0) return {0, 0};
  int k = -y.valuation();
  return {k, y.unit_mod(k)};
}

CycNum psi0(const PadicNum& y) {
  auto [k, m] = psi0_exponent(y);
  if (k == 0) return CycNum(1L);
  return CycNum::root_of_unity(ipow(y.prime(), static_cast<unsigned>(k)), static_cast<std::int64_t>(m));
}

namespace {

// (-1)^(v(x)v(y)) x^v(y) / y^v(x) mod p
std::uint64_t tame_unit(const PadicNum& x, const PadicNum& y) {
  if (x.is_zero() || y.is_zero()) throw DomainError("Hilbert symbol at zero");
  std::uint32_t p = x.prime();
  int vx = x.valuation(), vy = y.valuation();
  std::uint64_t ux = x.unit_mod(1), uy = y.unit_mod(1);
  auto pw = [p](std::uint64_t u, int e) {
    return e >= 0 ? powmod(u, static_cast<std::uint64_t>(e), p)
                  : powmod(invmod(u, p), static_cast<std::uint64_t>(-e), p);
  };
  std::uint64_t r = mulmod(pw(ux, vy), pw(uy, -vx), p);
  if ((static_cast<long>(vx) * vy) % 2 != 0) r = (p - r) % p;
  return r;
}

}  // namespace

std::uint64_t hilbert_exponent(const PadicNum& x, const PadicNum& y, const FieldCtx& ctx) {
  return ctx.dlog(tame_unit(x, y), 1) % ctx.n();
}

CycNum hilbert_symbol(const PadicNum& x, const PadicNum& y, const FieldCtx& ctx) {
  return CycNum::root_of_unity(ctx.n(), static_cast<std::int64_t>(hilbert_exponent(x, y, ctx)));
}

int hilbert2(const PadicNum& x, const PadicNum& y, const FieldCtx& ctx) {
  return ctx.legendre(tame_unit(x, y));
}

MultChar eta_char(const PadicNum& x, const FieldCtx& ctx) {
  std::uint32_t p = ctx.p();
  std::int64_t k = -static_cast<std::int64_t>(x.valuation()) * ((p - 1) / ctx.n());
  return MultChar(p, 1, k, hilbert_symbol(x, ctx.uniformizer(), ctx));
}

}  // namespace padiclf
