#include "padiclf/padic.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "padiclf/errors.hpp"

namespace padiclf {

namespace detail {
int weil_class_exponent_by_sum(std::uint32_t p, int vparity, std::uint64_t unit);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw DomainError("not invertible modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

int max_precision(std::uint32_t p) {
  int k = 0;
  unsigned __int128 x = 1;
  while (x * p < (static_cast<unsigned __int128>(1) << 62)) {
    x *= p;
    ++k;
  }
  return k;
}

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t l = 3; l * l <= p; l += 2)
    if (p % l == 0) return false;
  return true;
}

PadicNum PadicNum::zero(std::uint32_t p) {
  PadicNum z;
  z.p_ = p;
  return z;
}

PadicNum PadicNum::make(std::uint32_t p, int valuation, std::uint64_t unit, int precision) {
  if (precision <= 0) precision = max_precision(p);
  if (precision > max_precision(p)) throw DomainError("requested p-adic precision too large");
  if (unit % p == 0) throw DomainError("unit part divisible by p");
  PadicNum r;
  r.p_ = p;
  r.zero_ = false;
  r.val_ = valuation;
  r.prec_ = precision;
  r.unit_ = unit % ipow(p, static_cast<unsigned>(precision));
  return r;
}

PadicNum PadicNum::from_int(std::uint32_t p, std::int64_t x, int precision) {
  return from_rational(p, Rational(x), precision);
}

PadicNum PadicNum::from_rational(std::uint32_t p, const Rational& x, int precision) {
  if (sgn(x) == 0) return zero(p);
  if (precision <= 0) precision = max_precision(p);
  BigInt num = x.get_num(), den = x.get_den();
  int v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= p;
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    --v;
  }
  std::uint64_t m = ipow(p, static_cast<unsigned>(precision));
  std::uint64_t a = mpz_fdiv_ui(num.get_mpz_t(), m);
  std::uint64_t b = mpz_fdiv_ui(den.get_mpz_t(), m);
  return make(p, v, mulmod(a, invmod(b, m), m), precision);
}

int PadicNum::valuation() const {
  if (zero_) throw DomainError("valuation of zero");
  return val_;
}

int PadicNum::abs_precision() const {
  if (zero_) throw DomainError("absolute precision of exact zero is infinite");
  return val_ + prec_;
}

std::uint64_t PadicNum::unit_mod(int k) const {
  if (zero_) throw DomainError("unit part of zero");
  if (k > prec_)
    throw PrecisionError("unit known to " + std::to_string(prec_) + " digits, " + std::to_string(k) +
                         " needed");
  return unit_ % ipow(p_, static_cast<unsigned>(k));
}

std::uint64_t PadicNum::residue(int k) const {
  if (k <= 0 || zero_) return 0;
  if (val_ < 0) throw DomainError("residue of a non-integral p-adic number");
  if (val_ >= k) return 0;
  std::uint64_t m = ipow(p_, static_cast<unsigned>(k));
  return mulmod(unit_mod(k - val_), ipow(p_, static_cast<unsigned>(val_)), m);
}

PadicNum PadicNum::operator*(const PadicNum& o) const {
  if (p_ != o.p_) throw DomainError("mixing p-adic numbers of different primes");
  if (zero_ || o.zero_) return zero(p_);
  int k = std::min(prec_, o.prec_);
  std::uint64_t m = ipow(p_, static_cast<unsigned>(k));
  return make(p_, val_ + o.val_, mulmod(unit_ % m, o.unit_ % m, m), k);
}

PadicNum PadicNum::inverse() const {
  if (zero_) throw DomainError("inverse of p-adic zero");
  return make(p_, -val_, invmod(unit_, ipow(p_, static_cast<unsigned>(prec_))), prec_);
}

PadicNum PadicNum::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (zero_) return e == 0 ? from_int(p_, 1) : *this;
  std::uint64_t m = ipow(p_, static_cast<unsigned>(prec_));
  return make(p_, val_ * e, powmod(unit_, static_cast<std::uint64_t>(e), m), prec_);
}

PadicNum PadicNum::operator-() const {
  if (zero_) return *this;
  PadicNum r = *this;
  std::uint64_t m = ipow(p_, static_cast<unsigned>(prec_));
  r.unit_ = (m - unit_) % m;
  return r;
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
  if (p_ != o.p_) throw DomainError("mixing p-adic numbers of different primes");
  if (zero_) return o;
  if (o.zero_) return *this;
  int a = std::min(abs_precision(), o.abs_precision());
  int vmin = std::min(val_, o.val_);
  int width = a - vmin;
  if (width <= 0) throw PrecisionError("sum has no significant digits");
  std::uint64_t m = ipow(p_, static_cast<unsigned>(width));
  std::uint64_t s1 = val_ - vmin < width ? mulmod(unit_ % m, ipow(p_, static_cast<unsigned>(val_ - vmin)), m) : 0;
  std::uint64_t s2 =
      o.val_ - vmin < width ? mulmod(o.unit_ % m, ipow(p_, static_cast<unsigned>(o.val_ - vmin)), m) : 0;
  std::uint64_t s = (s1 + s2) % m;
  if (s == 0) throw PrecisionError("sum cancels to zero at the available precision");
  int t = 0;
  while (s % p_ == 0) {
    s /= p_;
    ++t;
  }
  return make(p_, vmin + t, s, width - t);
}

PadicNum PadicNum::with_precision(int k) const {
  if (zero_) return *this;
  if (k > prec_) throw PrecisionError("cannot raise p-adic precision");
  return make(p_, val_, unit_, k);
}

bool PadicNum::operator==(const PadicNum& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  if (p_ != o.p_ || val_ != o.val_) return false;
  int k = std::min(prec_, o.prec_);
  std::uint64_t m = ipow(p_, static_cast<unsigned>(k));
  return unit_ % m == o.unit_ % m;
}

std::string PadicNum::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << abs_precision() << ")";
  return os.str();
}

namespace detail {

struct PrimeTables {
  std::uint64_t g, gstar, nonres;
  std::vector<std::vector<std::int32_t>> dlog;  // dlog[e][u mod p^e]
  std::array<int, 4> weil{};
};

}  // namespace detail

namespace {

using detail::PrimeTables;

std::shared_ptr<const PrimeTables> build_tables(std::uint32_t p) {
  auto t = std::make_shared<PrimeTables>();
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool prim = true;
    for (auto l : factors) prim = prim && powmod(g, (p - 1) / l, p) != 1;
    if (prim) {
      t->g = g;
      break;
    }
  }
  t->gstar = powmod(t->g, p - 1, static_cast<std::uint64_t>(p) * p) == 1 ? t->g + p : t->g;
  for (std::uint64_t x = 2;; ++x) {
    if (powmod(x, (p - 1) / 2, p) == p - 1) {
      t->nonres = x;
      break;
    }
  }
  constexpr std::uint64_t kTableLimit = 300000;
  t->dlog.emplace_back(1, 0);
  for (int e = 1;; ++e) {
    std::uint64_t m = ipow(p, static_cast<unsigned>(e));
    if (e > 2 && m > kTableLimit) break;
    std::vector<std::int32_t> tab(m, -1);
    std::uint64_t phi = m / p * (p - 1), x = 1;
    for (std::uint64_t k = 0; k < phi; ++k) {
      tab[x] = static_cast<std::int32_t>(k);
      x = mulmod(x, t->gstar, m);
    }
    t->dlog.push_back(std::move(tab));
  }
  for (int vp = 0; vp < 2; ++vp) {
    t->weil[2 * vp] = detail::weil_class_exponent_by_sum(p, vp, 1);
    t->weil[2 * vp + 1] = detail::weil_class_exponent_by_sum(p, vp, t->nonres);
  }
  return t;
}

std::shared_ptr<const PrimeTables> tables_for(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const PrimeTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_tables(p)).first;
  return it->second;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t n, std::uint64_t uniformizer_unit)
    : p_(p), n_(n), d_(n % 2 == 0 ? n / 2 : n) {
  if (!is_odd_prime(p)) throw DomainError("residue characteristic must be an odd prime, got " + std::to_string(p));
  if (n == 0 || (p - 1) % n != 0)
    throw DomainError("cover degree " + std::to_string(n) + " must divide p - 1 = " + std::to_string(p - 1));
  prec_ = max_precision(p);
  if (uniformizer_unit % p == 0) throw DomainError("uniformizer unit must be prime to p");
  upi_ = uniformizer_unit % ipow(p, static_cast<unsigned>(prec_));
  auto t = tables_for(p);
  g_ = t->g;
  gstar_ = t->gstar;
  nonres_ = t->nonres;
  tables_ = t;
}

PadicNum FieldCtx::uniformizer() const { return PadicNum::make(p_, 1, upi_, prec_); }

PadicNum FieldCtx::uniformizer_power(int k) const { return uniformizer().pow(k); }

PadicNum FieldCtx::pi_unit(const PadicNum& x) const {
  if (x.is_zero()) throw DomainError("unit part of zero");
  return PadicNum::make(p_, 0, x.unit(), x.precision()) * PadicNum::make(p_, 0, upi_, prec_).pow(-x.valuation());
}

FieldCtx FieldCtx::with_uniformizer(std::uint64_t unit) const { return FieldCtx(p_, n_, unit); }

FieldCtx FieldCtx::with_degree(std::uint32_t n) const { return FieldCtx(p_, n, upi_); }

int FieldCtx::max_dlog_level() const { return static_cast<int>(tables_->dlog.size()) - 1; }

std::uint64_t FieldCtx::dlog(std::uint64_t u, int level) const {
  if (level <= 0) return 0;
  if (level > max_dlog_level())
    throw DomainError("discrete log table only reaches level " + std::to_string(max_dlog_level()));
  std::uint64_t m = ipow(p_, static_cast<unsigned>(level));
  std::int32_t r = tables_->dlog[static_cast<std::size_t>(level)][u % m];
  if (r < 0) throw DomainError("discrete log of a non-unit");
  return static_cast<std::uint64_t>(r);
}

int FieldCtx::legendre(std::uint64_t u) const {
  if (u % p_ == 0) throw DomainError("legendre symbol of a non-unit");
  return dlog(u, 1) % 2 == 0 ? 1 : -1;
}

int FieldCtx::legendre_of_unit(const PadicNum& x) const { return legendre(x.unit_mod(1)); }

int FieldCtx::weil_class_exponent(int vparity, int leg) const {
  return tables_->weil[static_cast<std::size_t>(2 * (vparity & 1) + (leg == 1 ? 0 : 1))];
}

}  // namespace padiclf
