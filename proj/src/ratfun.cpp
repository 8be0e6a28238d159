#include "padiclf/ratfun.hpp"

#include <sstream>

#include "padiclf/errors.hpp"

namespace padiclf {

Poly::Poly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const CycNum& c) { return Poly(std::vector<CycNum>{c}); }

Poly Poly::monomial(const CycNum& c, std::size_t deg) {
  std::vector<CycNum> v(deg + 1);
  v[deg] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  return k;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CycNum> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(const CycNum& c) const {
  if (c.is_one()) return *this;
  std::vector<CycNum> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(x * c);
  return Poly(std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<CycNum> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::dropped(std::size_t k) const {
  if (k > low_order() && !is_zero()) throw DomainError("polynomial not divisible by X^k");
  if (k >= c_.size()) return {};
  return Poly(std::vector<CycNum>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::dilated(const CycNum& c) const {
  if (c.is_one()) return *this;
  std::vector<CycNum> v;
  v.reserve(c_.size());
  CycNum pw(1L);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v.push_back(c_[i] * pw);
    if (i + 1 < c_.size()) pw *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::spread(std::size_t k) const {
  if (k == 1 || is_zero()) return *this;
  std::vector<CycNum> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::reversed() const {
  std::vector<CycNum> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

CycNum Poly::eval(const CycNum& x) const {
  CycNum acc(0L);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int Poly::root_multiplicity(const CycNum& x0) const {
  if (x0.is_zero()) return static_cast<int>(low_order());
  Poly p = *this;
  int m = 0;
  while (!p.is_zero()) {
    // synthetic division by (X - x0)
    std::vector<CycNum> q(p.c_.size() - 1);
    CycNum carry(0L);
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      carry = carry * x0 + p.c_[i];
      if (i > 0) q[i - 1] = carry;
    }
    if (!carry.is_zero()) break;
    ++m;
    p = Poly(std::move(q));
  }
  return m;
}

RatFun::RatFun(const CycNum& c) : num_(Poly::constant(c)), den_(Poly::constant(CycNum(1L))) {}

RatFun RatFun::monomial(const CycNum& c, int exp) {
  RatFun r(c);
  if (!r.is_zero()) r.mono_ = exp;
  return r;
}

RatFun RatFun::fraction(int mono, Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RatFun r;
  r.mono_ = mono;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

RatFun RatFun::geometric(const CycNum& c, int k) {
  if (k <= 0) throw DomainError("geometric series needs a positive exponent");
  return fraction(0, Poly::constant(CycNum(1L)), Poly::constant(CycNum(1L)) - Poly::monomial(c, k));
}

RatFun& RatFun::with_q(std::uint32_t q) {
  q_ = q;
  return *this;
}

std::uint32_t RatFun::merge_q(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("combining rational functions over different residue fields");
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    mono_ = 0;
    den_ = Poly::constant(CycNum(1L));
    return;
  }
  if (std::size_t k = num_.low_order(); k > 0) {
    num_ = num_.dropped(k);
    mono_ += static_cast<int>(k);
  }
  if (std::size_t k = den_.low_order(); k > 0) {
    den_ = den_.dropped(k);
    mono_ -= static_cast<int>(k);
  }
  if (!den_[0].is_one()) {
    CycNum inv = den_[0].inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (num_ == den_) {
    num_ = den_ = Poly::constant(CycNum(1L));
  }
}

std::optional<std::pair<CycNum, int>> RatFun::as_monomial() const {
  if (is_zero()) return std::make_pair(CycNum(0L), 0);
  // den_[0] == 1 after normalize, so num_ / den_ is constant iff num_ = num_[0] den_
  if (num_.degree() != den_.degree() || !(num_ == den_.scaled(num_[0]))) return std::nullopt;
  return std::make_pair(num_[0], mono_);
}

std::optional<CycNum> RatFun::as_constant() const {
  auto m = as_monomial();
  if (!m || (m->second != 0 && !m->first.is_zero())) return std::nullopt;
  return m->first;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  q_ = merge_q(q_, o.q_);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    std::uint32_t q = q_;
    *this = o;
    q_ = q;
    return *this;
  }
  int m = std::min(mono_, o.mono_);
  Poly a = num_.shifted(static_cast<std::size_t>(mono_ - m));
  Poly b = o.num_.shifted(static_cast<std::size_t>(o.mono_ - m));
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    num_ = a * o.den_ + b * den_;
    den_ = den_ * o.den_;
  }
  mono_ = m;
  normalize();
  return *this;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = r.num_.scaled(CycNum(-1L));
  return r;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  q_ = merge_q(q_, o.q_);
  if (is_zero() || o.is_zero()) {
    std::uint32_t q = q_;
    *this = RatFun();
    q_ = q;
    return *this;
  }
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (n1 == d2) n1 = d2 = Poly::constant(CycNum(1L));
  if (n2 == d1) n2 = d1 = Poly::constant(CycNum(1L));
  num_ = n1 * n2;
  den_ = d1 * d2;
  mono_ += o.mono_;
  normalize();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  RatFun r;
  r.q_ = q_;
  r.mono_ = -mono_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun acc(1L), base = *this;
  acc.q_ = q_;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.mono_ != b.mono_) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun RatFun::substitute(const SubstRule& rule) const { return substitute(rule, q_); }

RatFun RatFun::substitute(const SubstRule& rule, std::uint32_t q) const {
  if (rule.scale == 0) throw DomainError("substitution with zero scale");
  RatFun r = *this;
  r.q_ = merge_q(q_, q);
  if (r.is_zero()) return r;
  if (rule.half_shift != 0) {
    if (r.q_ == 0) throw DomainError("shifting s needs the residue field size");
    // X -> q^(-shift) X
    CycNum c = rule.half_shift % 2 == 0
                   ? CycNum(static_cast<long>(r.q_)).pow(-rule.half_shift / 2)
                   : sqrt_q(r.q_).pow(-rule.half_shift);
    r.num_ = r.num_.dilated(c).scaled(c.pow(r.mono_));
    r.den_ = r.den_.dilated(c);
  }
  auto k = static_cast<std::size_t>(std::abs(rule.scale));
  r.num_ = r.num_.spread(k);
  r.den_ = r.den_.spread(k);
  r.mono_ *= static_cast<int>(k);
  if (rule.scale < 0) {
    r.mono_ = -r.mono_ - r.num_.degree() + r.den_.degree();
    r.num_ = r.num_.reversed();
    r.den_ = r.den_.reversed();
  }
  r.normalize();
  return r;
}

int RatFun::pole_order_at(const CycNum& x0) const {
  if (x0.is_zero()) throw DomainError("pole order at X = 0 is the monomial exponent");
  if (is_zero()) throw DomainError("pole order of the zero function");
  return den_.root_multiplicity(x0) - num_.root_multiplicity(x0);
}

std::pair<CycNum, CycNum> RatFun::eval_fraction(const CycNum& x) const {
  CycNum n = num_.eval(x), d = den_.eval(x);
  if (mono_ >= 0) n *= x.pow(mono_);
  else d *= x.pow(-mono_);
  return {n, d};
}

CycNum RatFun::eval(const CycNum& x) const {
  auto [n, d] = eval_fraction(x);
  if (d.is_zero()) throw DomainError("evaluation at a pole");
  return n / d;
}

std::string RatFun::to_string() const {
  auto poly_str = [](const Poly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ", " : "") << p[i];
    os << "]";
    return os.str();
  };
  std::ostringstream os;
  os << "X^" << mono_ << " * " << poly_str(num_) << " / " << poly_str(den_);
  return os.str();
}

}  // namespace padiclf
