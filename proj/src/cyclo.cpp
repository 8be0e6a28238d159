#include "padiclf/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "padiclf/errors.hpp"

namespace padiclf {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 22;

struct CyclotomicPoly {
  std::uint64_t order;
  std::size_t phi;
  // x^phi + sum c x^d over these (d, c) with d < phi
  std::vector<std::pair<std::size_t, std::int64_t>> low;
};

std::vector<std::int64_t> poly_exact_div(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
  // b is monic
  std::vector<std::int64_t> r = a;
  std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  return q;
}

std::shared_ptr<const CyclotomicPoly> build_cyclotomic(std::uint64_t n) {
  std::vector<std::int64_t> poly{-1, 1};
  std::uint64_t rad = 1;
  for (std::uint64_t l : prime_factors(n)) {
    std::vector<std::int64_t> up((poly.size() - 1) * l + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) up[i * l] = poly[i];
    poly = poly_exact_div(up, poly);
    rad *= l;
  }
  std::uint64_t spread = n / rad;
  auto cp = std::make_shared<CyclotomicPoly>();
  cp->order = n;
  cp->phi = (poly.size() - 1) * spread;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    if (poly[i] != 0) cp->low.emplace_back(i * spread, poly[i]);
  return cp;
}

const CyclotomicPoly& cyclotomic(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const CyclotomicPoly>> cache;
  if (n == 0 || n > kMaxOrder) throw DomainError("cyclotomic order out of range: " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_cyclotomic(n)).first;
  return *it->second;
}

void reduce_mod_cyclotomic(std::vector<BigInt>& a, const CyclotomicPoly& cp) {
  BigInt t;
  for (std::size_t i = a.size(); i-- > cp.phi;) {
    if (sgn(a[i]) == 0) continue;
    for (auto [d, c] : cp.low) {
      mpz_mul_si(t.get_mpz_t(), a[i].get_mpz_t(), c);
      a[i - cp.phi + d] -= t;
    }
    a[i] = 0;
  }
  a.resize(cp.phi);
}

std::uint64_t canonical_order(std::uint64_t n) { return n % 4 == 2 ? n / 2 : n; }

// zeta_n^k for n = 2 (mod 4) rewritten at order n/2: returns (sign, exponent)
std::pair<int, std::uint64_t> halve_exponent(std::uint64_t n, std::uint64_t k) {
  std::uint64_t m = n / 2;
  int sign = (k % 2 == 0) ? 1 : -1;
  std::uint64_t e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(k) * ((m + 1) / 2)) % m);
  return {sign, e};
}

std::uint64_t mod_exponent(std::int64_t k, std::uint64_t n) {
  std::int64_t r = k % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r);
}

std::size_t max_bits(const std::vector<BigInt>& a) {
  std::size_t b = 0;
  for (const auto& x : a)
    if (sgn(x) != 0) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

void set_i128(BigInt& z, __int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  auto hi = static_cast<std::uint64_t>(u >> 64);
  auto lo = static_cast<std::uint64_t>(u);
  mpz_set_ui(z.get_mpz_t(), hi);
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
  mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), lo);
  if (neg) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<std::size_t> ia, ib;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) ia.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (sgn(b[i]) != 0) ib.push_back(i);
  std::vector<BigInt> out(a.size() + b.size() - 1);
  if (ia.empty() || ib.empty()) return out;
  std::size_t ba = max_bits(a), bb = max_bits(b);
  std::size_t terms = std::min(ia.size(), ib.size());
  std::size_t tb = 1;
  while ((std::size_t{1} << tb) < terms) ++tb;
  if (ba <= 62 && bb <= 62 && ba + bb + tb <= 124) {
    std::vector<std::int64_t> sa(a.size()), sb(b.size());
    for (auto i : ia) sa[i] = a[i].get_si();
    for (auto i : ib) sb[i] = b[i].get_si();
    std::vector<__int128> acc(out.size(), 0);
    for (auto i : ia)
      for (auto j : ib) acc[i + j] += static_cast<__int128>(sa[i]) * sb[j];
    for (std::size_t k = 0; k < out.size(); ++k)
      if (acc[k] != 0) set_i128(out[k], acc[k]);
    return out;
  }
  for (auto i : ia)
    for (auto j : ib) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return out;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t l = 2; l * l <= n; ++l) {
    if (n % l) continue;
    out.push_back(l);
    while (n % l == 0) n /= l;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto l : prime_factors(n)) r = r / l * (l - 1);
  return r;
}

CycNum::CycNum(long value) : num_{BigInt(value)} {}

CycNum::CycNum(const Rational& value) : den_(value.get_den()), num_{value.get_num()} {
  if (sgn(den_) == 0) throw DomainError("zero denominator");
  normalize();
}

CycNum CycNum::from_poly(std::uint64_t order, std::vector<BigInt> coeffs, BigInt den) {
  const auto& cp = cyclotomic(order);
  if (coeffs.size() < cp.phi) coeffs.resize(cp.phi);
  reduce_mod_cyclotomic(coeffs, cp);
  CycNum r;
  r.order_ = order;
  r.num_ = std::move(coeffs);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

CycNum CycNum::root_of_unity(std::uint64_t order, std::int64_t exponent) {
  if (order == 0) throw DomainError("root of unity of order 0");
  std::uint64_t k = mod_exponent(exponent, order);
  int sign = 1;
  if (order % 4 == 2) {
    std::tie(sign, k) = halve_exponent(order, k);
    order /= 2;
  }
  std::vector<BigInt> c(std::max<std::uint64_t>(k + 1, 1));
  c[k] = sign;
  return from_poly(order, std::move(c), 1);
}

CycNum CycNum::from_counts(std::uint64_t order, std::span<const std::int64_t> counts) {
  std::uint64_t target = canonical_order(order);
  std::vector<BigInt> c(target);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    std::uint64_t k = i % order;
    int sign = 1;
    if (target != order) std::tie(sign, k) = halve_exponent(order, k);
    c[k] += sign * counts[i];
  }
  return from_poly(target, std::move(c), 1);
}

CycNum CycNum::from_terms(std::uint64_t order,
                          const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  std::uint64_t target = canonical_order(order);
  BigInt den = 1;
  for (const auto& [k, c] : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> c(target);
  for (const auto& [e, v] : terms) {
    std::uint64_t k = mod_exponent(e, order);
    int sign = 1;
    if (target != order) std::tie(sign, k) = halve_exponent(order, k);
    BigInt scaled = v.get_num() * (den / v.get_den());
    if (sign < 0) c[k] -= scaled;
    else c[k] += scaled;
  }
  return from_poly(target, std::move(c), den);
}

void CycNum::normalize() {
  BigInt g = den_;
  bool nonzero = false;
  for (const auto& x : num_) {
    if (sgn(x) == 0) continue;
    nonzero = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (!nonzero) {
    order_ = 1;
    num_.assign(1, BigInt(0));
    den_ = 1;
    return;
  }
  if (sgn(den_) < 0) g = -g;
  if (g != 1) {
    for (auto& x : num_)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  for (;;) {
    if (order_ == 1) return;
    bool rational = true;
    for (std::size_t k = 1; k < num_.size() && rational; ++k) rational = sgn(num_[k]) == 0;
    if (rational) {
      order_ = 1;
      num_.resize(1);
      return;
    }
    bool demoted = false;
    for (auto l : prime_factors(order_)) {
      if (order_ % (l * l) != 0) continue;
      bool ok = true;
      for (std::size_t k = 0; k < num_.size() && ok; ++k) ok = (k % l == 0) || sgn(num_[k]) == 0;
      if (!ok) continue;
      std::vector<BigInt> c((num_.size() + l - 1) / l);
      for (std::size_t k = 0; k < num_.size(); k += l) c[k / l] = std::move(num_[k]);
      order_ /= l;
      if (order_ % 4 == 2) {
        std::uint64_t m = order_ / 2;
        std::vector<BigInt> h(m);
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (sgn(c[k]) == 0) continue;
          auto [sign, e] = halve_exponent(order_, k);
          if (sign < 0) h[e] -= c[k];
          else h[e] += c[k];
        }
        order_ = m;
        c = std::move(h);
        if (c.size() < cyclotomic(m).phi) c.resize(cyclotomic(m).phi);
        reduce_mod_cyclotomic(c, cyclotomic(m));
      }
      num_ = std::move(c);
      num_.resize(cyclotomic(order_).phi);
      demoted = true;
      break;
    }
    if (!demoted) return;
  }
}

CycNum CycNum::promote(std::uint64_t order) const {
  order = canonical_order(order);
  if (order == order_) return *this;
  if (order % order_ != 0) throw DomainError("cannot promote to a non-multiple order");
  std::uint64_t r = order / order_;
  std::vector<BigInt> c((num_.size() - 1) * r + 1);
  for (std::size_t k = 0; k < num_.size(); ++k) c[k * r] = num_[k];
  const auto& cp = cyclotomic(order);
  if (c.size() < cp.phi) c.resize(cp.phi);
  reduce_mod_cyclotomic(c, cp);
  CycNum out;
  out.order_ = order;
  out.num_ = std::move(c);
  out.den_ = den_;
  return out;
}

bool CycNum::is_zero() const { return order_ == 1 && sgn(num_[0]) == 0; }

bool CycNum::is_one() const { return order_ == 1 && num_[0] == den_; }

Rational CycNum::to_rational() const {
  if (order_ != 1) throw DomainError("cyclotomic number is not rational: " + to_string());
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

std::vector<std::tuple<std::uint64_t, BigInt, BigInt>> CycNum::terms() const {
  std::vector<std::tuple<std::uint64_t, BigInt, BigInt>> out;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (sgn(num_[k]) == 0) continue;
    Rational r(num_[k], den_);
    r.canonicalize();
    out.emplace_back(k, r.get_num(), r.get_den());
  }
  return out;
}

CycNum CycNum::galois(std::int64_t a) const {
  if (order_ == 1) return *this;
  std::uint64_t am = mod_exponent(a, order_);
  if (std::gcd(am, order_) != 1) throw DomainError("galois exponent not coprime to the order");
  std::vector<BigInt> c(order_);
  for (std::size_t k = 0; k < num_.size(); ++k)
    if (sgn(num_[k]) != 0)
      c[static_cast<std::uint64_t>((static_cast<unsigned __int128>(k) * am) % order_)] += num_[k];
  return from_poly(order_, std::move(c), den_);
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (order_ == 1) return CycNum(Rational(den_, num_[0]));
  // Multiply by Galois conjugates, one coset of the subgroup fixing the
  // running product at a time, until the product is rational.
  const std::uint64_t n = order_;
  std::vector<char> in_h(n, 0);
  in_h[1] = 1;
  std::vector<std::uint64_t> h{1};
  CycNum z = *this;
  CycNum cof(1L);
  std::vector<std::uint64_t> candidates{n - 1};
  for (std::uint64_t a = 2; a < n - 1; ++a)
    if (std::gcd(a, n) == 1) candidates.push_back(a);
  for (std::uint64_t a : candidates) {
    if (z.is_rational()) break;
    if (in_h[a]) continue;
    std::uint64_t o = 1, pw = a;
    while (!in_h[pw]) {
      pw = pw * a % n;
      ++o;
    }
    CycNum prod(1L);
    std::uint64_t ai = a;
    for (std::uint64_t i = 1; i < o; ++i) {
      prod *= z.galois(static_cast<std::int64_t>(ai % z.order()));
      ai = ai * a % n;
    }
    cof *= prod;
    z *= prod;
    std::vector<std::uint64_t> grown;
    std::uint64_t ai2 = 1;
    for (std::uint64_t i = 0; i < o; ++i) {
      for (auto x : h) {
        std::uint64_t y = x * ai2 % n;
        if (!in_h[y]) {
          in_h[y] = 1;
          grown.push_back(y);
        }
      }
      ai2 = ai2 * a % n;
    }
    h.insert(h.end(), grown.begin(), grown.end());
  }
  Rational nz = z.to_rational();
  return cof * CycNum(Rational(1) / nz);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this, acc(1L);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::uint64_t l = std::lcm(order_, o.order_);
  CycNum a = promote(l);
  CycNum b = o.promote(l);
  if (a.den_ == b.den_) {
    for (std::size_t k = 0; k < a.num_.size(); ++k) a.num_[k] += b.num_[k];
  } else {
    for (std::size_t k = 0; k < a.num_.size(); ++k) {
      a.num_[k] *= b.den_;
      mpz_addmul(a.num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), a.den_.get_mpz_t());
    }
    a.den_ *= b.den_;
  }
  a.normalize();
  return *this = std::move(a);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum(0L);
  if (a.order_ == 1 && b.order_ == 1) {
    CycNum r;
    r.num_[0] = a.num_[0] * b.num_[0];
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  std::uint64_t l = std::lcm(a.order_, b.order_);
  CycNum ta, tb;
  const CycNum* pa = &a;
  const CycNum* pb = &b;
  if (a.order_ != l) {
    ta = a.promote(l);
    pa = &ta;
  }
  if (b.order_ != l) {
    tb = b.promote(l);
    pb = &tb;
  }
  return CycNum::from_poly(l, convolve(pa->num_, pb->num_), pa->den_ * pb->den_);
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.order_ == 1 || b.order_ == 1) return false;
  std::uint64_t l = std::lcm(a.order_, b.order_);
  CycNum pa = a.promote(l), pb = b.promote(l);
  return pa.den_ == pb.den_ && pa.num_ == pb.num_;
}

std::string CycNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, nu, de] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << nu;
    if (de != 1) os << "/" << de;
    if (k > 0) os << "*z" << order_ << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& c) { return os << c.to_string(); }

CycNum sqrt_q(std::uint32_t p) {
  if (p < 3 || prime_factors(p).size() != 1 || prime_factors(p)[0] != p)
    throw DomainError("sqrt_q needs an odd prime, got " + std::to_string(p));
  static std::mutex mu;
  static std::map<std::uint32_t, CycNum> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t x = 1; x < p; ++x) counts[(static_cast<std::uint64_t>(x) * x) % p] += 1;
  // sum over squares counted twice minus the sum over all nonzero residues
  // equals the quadratic Gauss sum
  for (std::uint32_t x = 1; x < p; ++x) counts[x] -= 1;
  CycNum g = CycNum::from_counts(p, counts);
  if (p % 4 == 3) g *= CycNum::root_of_unity(4, -1);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(p, g);
  return g;
}

}  // namespace padiclf
