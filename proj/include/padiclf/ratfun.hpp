#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padiclf/cyclo.hpp"

namespace padiclf {

// Dense polynomial in X with cyclotomic coefficients; no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CycNum> coeffs);
  static Poly constant(const CycNum& c);
  static Poly monomial(const CycNum& c, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<CycNum>& coeffs() const { return c_; }
  const CycNum& operator[](std::size_t i) const { return c_[i]; }
  CycNum coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CycNum(0L); }
  std::size_t low_order() const;  // number of leading zero coefficients

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CycNum& c) const;
  Poly shifted(std::size_t k) const;  // times X^k
  Poly dropped(std::size_t k) const;  // divided by X^k, exact
  Poly dilated(const CycNum& c) const;  // P(cX)
  Poly spread(std::size_t k) const;     // P(X^k)
  Poly reversed() const;                // X^deg P(1/X)
  CycNum eval(const CycNum& x) const;
  // multiplicity of x0 as a root
  int root_multiplicity(const CycNum& x0) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  std::vector<CycNum> c_;
  void trim();
};

// Affine change of variable s -> scale*s + half_shift/2.
struct SubstRule {
  int scale = 1;
  int half_shift = 0;

  static SubstRule doubled() { return {2, 0}; }            // s -> 2s
  static SubstRule shift_half() { return {1, 1}; }         // s -> s + 1/2
  static SubstRule negated() { return {-1, 0}; }           // s -> -s
  static SubstRule reflected() { return {-1, 2}; }         // s -> 1 - s
  static SubstRule shifted(int half_shift) { return {1, half_shift}; }
  // (this after first): s -> first(this(s))
  SubstRule then(const SubstRule& next) const {
    return {scale * next.scale, scale * next.half_shift + half_shift};
  }
};

// Rational function X^mono * num(X) / den(X) in X = q^-s with num(0) != 0 (or
// num = 0) and den(0) = 1 whenever that coefficient is invertible.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(CycNum(1L))) {}
  RatFun(const CycNum& c);  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(CycNum(c)) {}  // NOLINT
  RatFun(int c) : RatFun(CycNum(static_cast<long>(c))) {}  // NOLINT
  static RatFun monomial(const CycNum& c, int exp);
  static RatFun fraction(int mono, Poly num, Poly den);
  // 1 / (1 - c X^k)
  static RatFun geometric(const CycNum& c, int k);

  int monomial_exp() const { return mono_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::uint32_t q() const { return q_; }
  RatFun& with_q(std::uint32_t q);

  bool is_zero() const { return num_.is_zero(); }
  // (c, k) when the function is c X^k
  std::optional<std::pair<CycNum, int>> as_monomial() const;
  std::optional<CycNum> as_constant() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o) { return *this *= o.inverse(); }
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;
  RatFun inverse() const;
  RatFun pow(int e) const;
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // f(scale*s + shift) as a function of s; needs q set when shift != 0.
  RatFun substitute(const SubstRule& rule) const;
  RatFun substitute(const SubstRule& rule, std::uint32_t q) const;

  // order of the pole at X = x0 (negative for a zero), x0 != 0
  int pole_order_at(const CycNum& x0) const;
  // (numerator, denominator) values at X = x, x != 0
  std::pair<CycNum, CycNum> eval_fraction(const CycNum& x) const;
  CycNum eval(const CycNum& x) const;

  std::string to_string() const;

 private:
  int mono_ = 0;
  Poly num_;
  Poly den_;
  std::uint32_t q_ = 0;

  void normalize();
  static std::uint32_t merge_q(std::uint32_t a, std::uint32_t b);
};

}  // namespace padiclf
