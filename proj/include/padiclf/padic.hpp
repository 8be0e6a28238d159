#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "padiclf/cyclo.hpp"

namespace padiclf {

namespace detail {
struct PrimeTables;
}

std::uint64_t ipow(std::uint64_t b, unsigned e);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
// largest K with p^K < 2^62
int max_precision(std::uint32_t p);
bool is_odd_prime(std::uint32_t p);

// Element u * p^v of Q_p with u a unit known modulo p^K (relative precision K).
// Zero is exact. Nothing is ever rounded: an operation that would need digits
// beyond the stored precision throws PrecisionError.
class PadicNum {
 public:
  PadicNum() = default;
  static PadicNum zero(std::uint32_t p);
  static PadicNum from_int(std::uint32_t p, std::int64_t x, int precision = 0);
  static PadicNum from_rational(std::uint32_t p, const Rational& x, int precision = 0);
  // unit must be coprime to p; precision 0 means the maximal one
  static PadicNum make(std::uint32_t p, int valuation, std::uint64_t unit, int precision = 0);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return zero_; }
  int valuation() const;
  std::uint64_t unit() const { return unit_; }
  int precision() const { return prec_; }
  int abs_precision() const;  // valuation + precision
  std::uint64_t unit_mod(int k) const;
  // (x mod p^k) for x integral, as an integer in [0, p^k)
  std::uint64_t residue(int k) const;

  PadicNum operator*(const PadicNum& o) const;
  PadicNum operator/(const PadicNum& o) const { return *this * o.inverse(); }
  PadicNum operator+(const PadicNum& o) const;
  PadicNum operator-(const PadicNum& o) const { return *this + (-o); }
  PadicNum operator-() const;
  PadicNum inverse() const;
  PadicNum pow(int e) const;
  PadicNum with_precision(int k) const;
  // equality at the common precision
  bool operator==(const PadicNum& o) const;
  bool operator!=(const PadicNum& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  bool zero_ = true;
  int val_ = 0;
  std::uint64_t unit_ = 0;
  int prec_ = 0;
};

// Residue characteristic p, cover degree n, and the fixed choices every other
// quantity depends on: the primitive root g (also a generator of the units
// mod p^2 after adjusting by p if needed) and the uniformizer u_pi * p.
class FieldCtx {
 public:
  FieldCtx(std::uint32_t p, std::uint32_t n, std::uint64_t uniformizer_unit = 1);

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t d() const { return d_; }
  std::uint64_t g() const { return g_; }
  std::uint64_t gstar() const { return gstar_; }
  std::uint64_t u0() const { return g_; }
  std::uint64_t uniformizer_unit() const { return upi_; }
  std::uint64_t nonresidue() const { return nonres_; }
  int precision() const { return prec_; }
  int max_dlog_level() const;

  PadicNum uniformizer() const;
  PadicNum uniformizer_power(int k) const;
  PadicNum from_int(std::int64_t x) const { return PadicNum::from_int(p_, x, prec_); }
  PadicNum from_rational(const Rational& x) const { return PadicNum::from_rational(p_, x, prec_); }
  // x = pi^v * u with u a unit: returns u (relative to this uniformizer)
  PadicNum pi_unit(const PadicNum& x) const;
  FieldCtx with_uniformizer(std::uint64_t unit) const;
  FieldCtx with_degree(std::uint32_t n) const;

  // discrete log base gstar of the unit u modulo p^level
  std::uint64_t dlog(std::uint64_t u, int level) const;
  int legendre(std::uint64_t u) const;  // of u mod p, u a unit
  // legendre symbol of the unit part of x relative to p (not pi)
  int legendre_of_unit(const PadicNum& x) const;

  // gamma_F(psi_0 composed with a): depends on (v(a) mod 2, legendre(unit of a)),
  // returned as an exponent of zeta_4
  int weil_class_exponent(int vparity, int leg) const;

  bool operator==(const FieldCtx& o) const {
    return p_ == o.p_ && n_ == o.n_ && upi_ == o.upi_;
  }

 private:
  std::uint32_t p_, n_, d_;
  std::uint64_t g_, gstar_, upi_, nonres_;
  int prec_;
  std::shared_ptr<const detail::PrimeTables> tables_;
};

}  // namespace padiclf
