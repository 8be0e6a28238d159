#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "padiclf/cyclo.hpp"
#include "padiclf/ratfun.hpp"
#include "padiclf/sampling.hpp"
#include "padiclf/zeta.hpp"

namespace testsupport {

using cplx = std::complex<long double>;

inline cplx to_complex(const padiclf::CycNum& c) {
  const long double two_pi = 6.283185307179586476925286766559L;
  cplx acc = 0;
  for (const auto& [k, nu, de] : c.terms()) {
    long double coef = static_cast<long double>(nu.get_d()) / static_cast<long double>(de.get_d());
    long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(c.order());
    acc += coef * cplx(std::cos(ang), std::sin(ang));
  }
  return acc;
}

inline cplx eval_complex(const padiclf::Poly& p, cplx x) {
  cplx acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + to_complex(p[i]);
  return acc;
}

inline cplx eval_complex(const padiclf::RatFun& f, cplx x) {
  return std::pow(x, f.monomial_exp()) * eval_complex(f.num(), x) / eval_complex(f.den(), x);
}

inline bool close(cplx a, cplx b, long double tol = 1e-9L) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

using padiclf::random_cyc;
using padiclf::random_padic;
using padiclf::random_schwartz;
using padiclf::random_unit_cosets;

inline padiclf::RatFun random_ratfun(std::mt19937_64& rng, std::uint64_t order, int deg = 2) {
  std::vector<padiclf::CycNum> n, d;
  for (int i = 0; i <= deg; ++i) n.push_back(random_cyc(rng, order, 2, 3));
  d.push_back(padiclf::CycNum(1L));
  for (int i = 0; i < deg; ++i) d.push_back(random_cyc(rng, order, 1, 2));
  std::uniform_int_distribution<int> m(-2, 2);
  padiclf::RatFun f = padiclf::RatFun::fraction(m(rng), padiclf::Poly(n), padiclf::Poly(d));
  return f;
}

// Laurent coefficients of f at X = 0 for exponents lo..hi
inline std::vector<padiclf::CycNum> laurent(const padiclf::RatFun& f, int lo, int hi) {
  using padiclf::CycNum;
  std::vector<CycNum> out(static_cast<std::size_t>(hi - lo + 1), CycNum(0L));
  if (f.is_zero()) return out;
  int len = hi - f.monomial_exp() + 1;
  if (len <= 0) return out;
  CycNum d0inv = f.den()[0].inverse();
  std::vector<CycNum> s(static_cast<std::size_t>(len), CycNum(0L));
  for (int k = 0; k < len; ++k) {
    CycNum acc = f.num().coeff(static_cast<std::size_t>(k));
    for (int i = 1; i <= k && i <= f.den().degree(); ++i)
      acc -= f.den()[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc * d0inv;
  }
  for (int v = lo; v <= hi; ++v) {
    int k = v - f.monomial_exp();
    if (k >= 0 && k < len) out[static_cast<std::size_t>(v - lo)] = s[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace testsupport
