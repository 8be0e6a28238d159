#include <doctest.h>

#include <random>

#include "padiclf/characters.hpp"
#include "padiclf/errors.hpp"
#include "padiclf/padic.hpp"

using namespace padiclf;

namespace {

// all elements u p^v, |v| <= vmax, u over a set of unit representatives
std::vector<PadicNum> grid(std::uint32_t p, int vmax, int units) {
  std::vector<PadicNum> out;
  for (int v = -vmax; v <= vmax; ++v)
    for (int u = 1, taken = 0; taken < units; ++u) {
      if (u % static_cast<int>(p) == 0) continue;
      out.push_back(PadicNum::make(p, v, static_cast<std::uint64_t>(u)));
      ++taken;
    }
  return out;
}

// value of the tame symbol through x^((p-1)/n) in F_p, matched against g^j
std::uint64_t hilbert_oracle(std::int64_t x_num, int x_val, std::int64_t y_num, int y_val, std::uint32_t p,
                             std::uint32_t n, std::uint64_t g) {
  auto md = [p](std::int64_t a) { return static_cast<std::uint64_t>(((a % p) + p) % p); };
  std::uint64_t ux = md(x_num), uy = md(y_num);
  std::uint64_t t = powmod(ux, static_cast<std::uint64_t>((y_val % (int)(p - 1) + (int)(p - 1)) % (int)(p - 1)), p);
  std::uint64_t inv = invmod(uy, p);
  t = t * powmod(inv, static_cast<std::uint64_t>((x_val % (int)(p - 1) + (int)(p - 1)) % (int)(p - 1)), p) % p;
  if ((x_val * y_val) % 2 != 0) t = (p - t) % p;
  std::uint64_t w = powmod(t, (p - 1) / n, p);
  for (std::uint64_t j = 0; j < n; ++j)
    if (powmod(g, j * ((p - 1) / n), p) == w) return j;
  return n;
}

}  // namespace

TEST_CASE("p-adic arithmetic on rationals") {
  const std::uint32_t p = 5;
  PadicNum a = PadicNum::from_rational(p, Rational(3, 25));
  CHECK(a.valuation() == -2);
  CHECK(a.unit_mod(1) == 3);
  PadicNum b = PadicNum::from_rational(p, Rational(10, 7));
  CHECK((a * b) == PadicNum::from_rational(p, Rational(30, 175)));
  CHECK((a + b) == PadicNum::from_rational(p, Rational(3 * 7 + 250, 175)));
  CHECK_THROWS_AS(a - a.with_precision(5), PrecisionError);
  CHECK(a.inverse() * a == PadicNum::from_int(p, 1));
  CHECK(PadicNum::from_int(p, 1) - PadicNum::from_int(p, 26) == PadicNum::from_int(p, -25));
  CHECK(PadicNum::from_int(p, 7).residue(1) == 2);
  CHECK(PadicNum::from_int(p, 35).residue(2) == 10);
}

TEST_CASE("cancellation beyond the stored precision is reported, not rounded") {
  PadicNum a = PadicNum::make(7, 0, 3, 2);
  PadicNum b = PadicNum::make(7, 0, 7 * 7 - 3, 2);
  CHECK_THROWS_AS(a + b, PrecisionError);
  CHECK_THROWS_AS(a.unit_mod(3), PrecisionError);
  CHECK_THROWS_AS(psi0(PadicNum::make(7, -3, 1, 2)), PrecisionError);
}

TEST_CASE("field context choices") {
  FieldCtx c7(7, 3);
  CHECK(c7.g() == 3);
  CHECK(c7.d() == 3);
  FieldCtx c13(13, 12);
  CHECK(c13.g() == 2);
  CHECK(c13.d() == 6);
  CHECK(FieldCtx(5, 2).nonresidue() == 2);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 29u, 31u}) {
    FieldCtx c(p, 1);
    std::uint64_t m = static_cast<std::uint64_t>(p) * p;
    CHECK(c.gstar() % p == c.g());
    CHECK(powmod(c.gstar(), p - 1, m) != 1);
  }
  CHECK_THROWS_AS(FieldCtx(2, 1), DomainError);
  CHECK_THROWS_AS(FieldCtx(7, 4), DomainError);
  CHECK_THROWS_AS(FieldCtx(15, 2), DomainError);
  for (std::uint32_t p : {5u, 7u, 13u})
    for (int e = 1; e <= 3; ++e) {
      FieldCtx c(p, 1);
      std::uint64_t m = ipow(p, static_cast<unsigned>(e));
      std::uint64_t k = c.dlog(m - 1, e);
      CHECK(powmod(c.gstar(), k, m) == m - 1);
    }
}

TEST_CASE("Hilbert symbol reference value") {
  FieldCtx ctx(7, 3);
  CHECK(hilbert_symbol(ctx.from_int(3), ctx.from_int(7), ctx) == CycNum::root_of_unity(3, 1));
  for (std::uint32_t p : {5u, 7u, 13u}) {
    for (std::uint32_t n : {1u, 2u, 3u, 4u, 6u, 12u}) {
      if ((p - 1) % n) continue;
      FieldCtx c(p, n);
      CHECK(hilbert_symbol(c.uniformizer(), c.uniformizer(), c) ==
            CycNum::root_of_unity(n, static_cast<std::int64_t>((p - 1) / 2)));
    }
  }
}

TEST_CASE("Hilbert symbol matches the tame symbol on an integer grid") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
      if ((p - 1) % n) continue;
      FieldCtx ctx(p, n);
      for (std::int64_t xn : {1, 2, 3, 6, 11})
        for (int xv = -2; xv <= 2; ++xv)
          for (std::int64_t yn : {std::int64_t{1}, std::int64_t{2}, 5 + 2 * static_cast<std::int64_t>(p), std::int64_t{7}})
            for (int yv = -2; yv <= 2; ++yv) {
              if (xn % p == 0 || yn % p == 0) continue;
              PadicNum x = PadicNum::make(p, xv, static_cast<std::uint64_t>(xn));
              PadicNum y = PadicNum::make(p, yv, static_cast<std::uint64_t>(yn));
              CHECK(hilbert_exponent(x, y, ctx) == hilbert_oracle(xn, xv, yn, yv, p, n, ctx.g()));
            }
    }
  }
}

TEST_CASE("Hilbert symbol structural identities, exhaustive on small grids") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    for (std::uint32_t n : {2u, 3u, 4u, 6u, 12u}) {
      if ((p - 1) % n) continue;
      FieldCtx ctx(p, n);
      auto g = grid(p, 2, 4);
      for (const auto& x : g)
        for (const auto& y : g) {
          CycNum xy = hilbert_symbol(x, y, ctx);
          CHECK(xy * hilbert_symbol(y, x, ctx) == CycNum(1L));
          for (const auto& z : {g[1], g[7]}) {
            CHECK(hilbert_symbol(x * z, y, ctx) == xy * hilbert_symbol(z, y, ctx));
          }
        }
      for (const auto& x : g) CHECK(hilbert_symbol(x, -x, ctx) == CycNum(1L));
      // Steinberg relation on rationals
      for (long a = -7; a <= 9; ++a)
        for (long b : {1L, 2L, 3L, 25L}) {
          Rational r(a, b);
          r.canonicalize();
          if (r == 0 || r == 1) continue;
          CHECK(hilbert_symbol(ctx.from_rational(r), ctx.from_rational(1 - r), ctx) == CycNum(1L));
        }
    }
  }
}

TEST_CASE("multiplicative characters") {
  FieldCtx ctx(13, 12);
  MultChar chi(13, 2, 5 * 13 + 3, CycNum::root_of_unity(24, 5));
  CHECK(chi.conductor() == 2);
  CHECK(MultChar(13, 2, 13 * 4, CycNum(1L)).conductor() == 1);
  CHECK(MultChar(13, 2, 13 * 12, CycNum(1L)).conductor() == 0);
  CHECK((chi * chi.inverse()).is_trivial());
  CHECK(chi.pow(12 * 13) == MultChar::unramified(13, CycNum::root_of_unity(24, 5 * 156)));
  std::mt19937_64 rng(1);
  for (int it = 0; it < 100; ++it) {
    PadicNum x = PadicNum::make(13, static_cast<int>(rng() % 7) - 3, 1 + rng() % 12 + 13 * (rng() % 13));
    PadicNum y = PadicNum::make(13, static_cast<int>(rng() % 7) - 3, 1 + rng() % 12 + 13 * (rng() % 13));
    CHECK(chi.eval(x * y, ctx) == chi.eval(x, ctx) * chi.eval(y, ctx));
    CHECK((chi * chi).eval(x, ctx) == chi.eval(x, ctx).pow(2));
  }
  CHECK(chi.eval(ctx.from_int(-1), ctx) == CycNum(static_cast<long>(chi.at_minus_one())));
  CHECK(MultChar::legendre(13).eval(ctx.from_int(2), ctx) == CycNum(-1L));
  CHECK(MultChar::legendre(13).eval(ctx.from_int(4), ctx) == CycNum(1L));
}

TEST_CASE("eta characters are the Hilbert symbol in the second slot") {
  for (std::uint32_t n : {3u, 4u, 6u}) {
    FieldCtx ctx(13, n);
    for (int v = -2; v <= 2; ++v)
      for (std::uint64_t u : {1u, 2u, 5u, 11u}) {
        PadicNum x = PadicNum::make(13, v, u);
        MultChar eta = eta_char(x, ctx);
        for (const auto& y : grid(13, 2, 3)) CHECK(eta.eval(y, ctx) == hilbert_symbol(x, y, ctx));
      }
  }
}

TEST_CASE("additive characters") {
  AddChar psi = AddChar::standard(5);
  CHECK(psi.conductor() == 0);
  CHECK(psi.eval(PadicNum::from_rational(5, Rational(1, 5))) == CycNum::root_of_unity(5, 1));
  CHECK(psi.eval(PadicNum::from_rational(5, Rational(7, 25))) == CycNum::root_of_unity(25, 7));
  CHECK(psi.eval(PadicNum::from_int(5, 17)) == CycNum(1L));
  AddChar psi2 = psi.dilate(PadicNum::from_rational(5, Rational(1, 25)));
  CHECK(psi2.conductor() == 2);
  // trivial on P^e(psi) but not on P^(e(psi)-1)
  CHECK(psi2.eval(PadicNum::from_int(5, 25)) == CycNum(1L));
  CHECK(psi2.eval(PadicNum::from_int(5, 5)) != CycNum(1L));
  std::mt19937_64 rng(2);
  for (int it = 0; it < 50; ++it) {
    Rational a(static_cast<long>(rng() % 1000) - 500, 125), b(static_cast<long>(rng() % 1000) - 500, 25);
    a.canonicalize();
    b.canonicalize();
    if (a == 0 || b == 0 || a + b == 0) continue;
    PadicNum x = PadicNum::from_rational(5, a), y = PadicNum::from_rational(5, b);
    CHECK(psi2.eval(x + y) == psi2.eval(x) * psi2.eval(y));
  }
}
