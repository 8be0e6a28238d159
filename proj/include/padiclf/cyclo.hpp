#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace padiclf {

using BigInt = mpz_class;
using Rational = mpq_class;

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Exact element of Q(zeta_N). The value is den^-1 * sum num[k] zeta_N^k with
// k < phi(N), i.e. the power basis modulo the N-th cyclotomic polynomial.
// Orders are never 2 mod 4, and an element is stored at order 1 whenever it is
// rational, so two values are equal iff their promotions to a common order
// have identical coefficient lists.
class CycNum {
 public:
  CycNum() : CycNum(0L) {}
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(int value) : CycNum(static_cast<long>(value)) {}  // NOLINT
  explicit CycNum(const Rational& value);

  static CycNum root_of_unity(std::uint64_t order, std::int64_t exponent);
  // sum_k counts[k] * zeta_order^k, for k < counts.size() (exponents taken mod order)
  static CycNum from_counts(std::uint64_t order, std::span<const std::int64_t> counts);
  static CycNum from_terms(std::uint64_t order,
                           const std::vector<std::pair<std::int64_t, Rational>>& terms);

  std::uint64_t order() const { return order_; }
  std::size_t degree() const { return num_.size(); }
  const BigInt& denominator() const { return den_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  // nonzero terms as (exponent, numerator, denominator) in lowest terms
  std::vector<std::tuple<std::uint64_t, BigInt, BigInt>> terms() const;

  CycNum promote(std::uint64_t order) const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return order_ == 1; }
  Rational to_rational() const;

  CycNum conj() const;
  // field automorphism zeta -> zeta^a, a coprime to the order
  CycNum galois(std::int64_t a) const;
  CycNum inverse() const;
  CycNum pow(long e) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  CycNum operator-() const;
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::uint64_t order_ = 1;
  BigInt den_ = 1;
  std::vector<BigInt> num_;

  void normalize();
  static CycNum from_poly(std::uint64_t order, std::vector<BigInt> coeffs, BigInt den);
};

std::ostream& operator<<(std::ostream& os, const CycNum& c);

// The positive square root of p (p odd prime) as a Gauss sum, in Q(zeta_p) or
// Q(zeta_4p).
CycNum sqrt_q(std::uint32_t p);

}  // namespace padiclf
