#pragma once

#include <cstdint>
#include <string>

#include "padiclf/cyclo.hpp"
#include "padiclf/padic.hpp"

namespace padiclf {

// Quasi-character of F^*. On units it is chi(gstar) = zeta_{phi(p^e)}^k with e
// the (minimal) conductor; on the uniformizer of the ambient FieldCtx it takes
// value_at_pi.
class MultChar {
 public:
  MultChar() = default;
  MultChar(std::uint32_t p, int conductor, std::int64_t unit_exponent, CycNum value_at_pi);
  static MultChar trivial(std::uint32_t p);
  static MultChar unramified(std::uint32_t p, CycNum value_at_pi);
  static MultChar legendre(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  int conductor() const { return e_; }
  std::uint64_t unit_exponent() const { return k_; }
  const CycNum& value_at_pi() const { return pi_; }
  std::uint64_t unit_group_order() const;  // phi(p^e)
  std::uint64_t unit_order() const;        // order of the restriction to units
  bool is_ramified() const { return e_ > 0; }
  bool is_trivial() const { return e_ == 0 && pi_.is_one(); }

  MultChar operator*(const MultChar& o) const;
  MultChar inverse() const;
  MultChar pow(long k) const;
  // the same unit part with a different value at pi
  MultChar with_value_at_pi(CycNum v) const;
  bool same_unit_part(const MultChar& o) const { return p_ == o.p_ && e_ == o.e_ && k_ == o.k_; }
  bool operator==(const MultChar& o) const { return same_unit_part(o) && pi_ == o.pi_; }
  bool operator!=(const MultChar& o) const { return !(*this == o); }

  CycNum eval(const PadicNum& x, const FieldCtx& ctx) const;
  // value on an integer unit u
  CycNum eval_unit(std::uint64_t u, const FieldCtx& ctx) const;
  // chi(u) = zeta_{phi(p^e)}^(returned exponent)
  std::uint64_t unit_value_exponent(std::uint64_t u, const FieldCtx& ctx) const;
  int at_minus_one() const;  // chi(-1) = +-1
  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  int e_ = 0;
  std::uint64_t k_ = 0;
  CycNum pi_{1L};
};

// x -> psi_0(a x), psi_0 the standard character of Q_p (trivial on Z_p).
class AddChar {
 public:
  AddChar() = default;
  explicit AddChar(PadicNum twist);
  static AddChar standard(std::uint32_t p);

  const PadicNum& twist() const { return a_; }
  std::uint32_t prime() const { return a_.prime(); }
  // e(psi): psi is trivial exactly on P^e(psi)
  int conductor() const { return -a_.valuation(); }
  AddChar dilate(const PadicNum& c) const { return AddChar(a_ * c); }
  CycNum eval(const PadicNum& x) const;
  std::string to_string() const;

 private:
  PadicNum a_;
};

// psi_0(y) = zeta_{p^k}^m; returns (k, m) with k = max(0, -v(y))
std::pair<int, std::uint64_t> psi0_exponent(const PadicNum& y);
CycNum psi0(const PadicNum& y);

// n-th order Hilbert symbol (x, y)_n = zeta_n^(returned exponent)
std::uint64_t hilbert_exponent(const PadicNum& x, const PadicNum& y, const FieldCtx& ctx);
CycNum hilbert_symbol(const PadicNum& x, const PadicNum& y, const FieldCtx& ctx);
// quadratic Hilbert symbol, +-1
int hilbert2(const PadicNum& x, const PadicNum& y, const FieldCtx& ctx);
// eta_x = (x, .)_n as a character of F^*
MultChar eta_char(const PadicNum& x, const FieldCtx& ctx);

}  // namespace padiclf
