#include <doctest.h>

#include <cmath>

#include "padiclf/characters.hpp"
#include "padiclf/errors.hpp"
#include "padiclf/weil.hpp"
#include "support.hpp"

using namespace padiclf;
using testsupport::close;
using testsupport::cplx;
using testsupport::to_complex;

namespace {

std::vector<PadicNum> grid(std::uint32_t p, int vmin, int vmax, std::vector<std::uint64_t> units) {
  std::vector<PadicNum> out;
  for (int v = vmin; v <= vmax; ++v)
    for (auto u : units)
      if (u % p != 0) out.push_back(PadicNum::make(p, v, u));
  return out;
}

// quadratic Gauss sum evaluated in C
cplx gauss_sum(std::uint32_t p) {
  cplx s = 0;
  for (std::uint32_t x = 1; x < p; ++x) {
    int leg = powmod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
    long double ang = 2 * M_PIl * x / p;
    s += static_cast<long double>(leg) * cplx(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::vector<AddChar> sample_psis(std::uint32_t p, std::uint64_t nonres) {
  return {AddChar::standard(p), AddChar(PadicNum::make(p, 0, nonres)), AddChar(PadicNum::make(p, 1, 1)),
          AddChar(PadicNum::make(p, -1, nonres)), AddChar(PadicNum::make(p, -2, 4))};
}

}  // namespace

TEST_CASE("Weil index of the standard character in closed form") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    FieldCtx ctx(p, 1);
    AddChar psi = AddChar::standard(p);
    CHECK(weil_gamma_F(psi, ctx) == CycNum(1L));
    cplx g = gauss_sum(p) / std::sqrt(static_cast<long double>(p));
    for (const auto& a : grid(p, -3, 3, {1, 2, 3, ctx.nonresidue()})) {
      CycNum w = weil_index(a, psi, ctx);
      cplx expect = 1;
      if (a.valuation() % 2 != 0) expect = static_cast<long double>(ctx.legendre(a.unit_mod(1))) * g;
      CHECK(close(to_complex(w), expect));
      CHECK(w.pow(4) == CycNum(1L));
    }
  }
}

TEST_CASE("Weil index through normalized Riemann sums") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    FieldCtx ctx(p, 1);
    AddChar psi = AddChar::standard(p);
    CHECK(c_psi(ctx.from_int(1), psi, 1) == CycNum(1L));
    for (const auto& a : grid(p, -2, 2, {1, ctx.nonresidue()})) {
      int M = std::max(1, a.valuation());
      CycNum viaSum = sqrt_q(p).pow(-a.valuation()) * c_psi(a, psi, M);
      CHECK(viaSum == weil_index(a, psi, ctx));
      // the Riemann sum has stabilized
      if (p < 13) CHECK(c_psi(a, psi, M + 1) == c_psi(a, psi, M));
    }
  }
}

TEST_CASE("Weil index cocycle and eighth power, exhaustive on square classes") {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    FieldCtx ctx(p, 2);
    auto g = grid(p, -2, 2, {1, ctx.nonresidue()});
    for (const auto& psi : sample_psis(p, ctx.nonresidue())) {
      CHECK(weil_index(ctx.from_int(1), psi, ctx) == CycNum(1L));
      for (const auto& x : g) {
        CHECK(weil_index(x, psi, ctx).pow(8) == CycNum(1L));
        CHECK(weil_index(x, psi, ctx).inverse() == weil_index(x, psi.dilate(ctx.from_int(-1)), ctx));
        CHECK(weil_index(x, psi, ctx) ==
              weil_gamma_F(psi.dilate(x), ctx) / weil_gamma_F(psi, ctx));
        for (const auto& y : g)
          CHECK(weil_index(x * y, psi, ctx) ==
                weil_index(x, psi, ctx) * weil_index(y, psi, ctx) * CycNum(static_cast<long>(hilbert2(x, y, ctx))));
      }
    }
  }
}

TEST_CASE("splitting of the Hilbert symbol on F^*_d") {
  struct Case {
    std::uint32_t p, n;
  };
  for (auto c : {Case{13, 2}, Case{13, 4}, Case{13, 6}, Case{13, 12}, Case{5, 2}, Case{5, 4}, Case{7, 3}}) {
    FieldCtx ctx(c.p, c.n);
    int d = static_cast<int>(ctx.d());
    std::vector<PadicNum> g;
    for (int m = -2; m <= 2; ++m)
      for (std::uint64_t u : {std::uint64_t{1}, ctx.nonresidue(), std::uint64_t{3}})
        g.push_back(PadicNum::make(c.p, m * d, u));
    for (const auto& psi : sample_psis(c.p, ctx.nonresidue())) {
      for (const auto& x : g)
        for (const auto& y : g)
          CHECK(xi_splitting(x * y, ctx, psi) ==
                xi_splitting(x, ctx, psi) * xi_splitting(y, ctx, psi) * hilbert_symbol(x, y, ctx));
      if (c.n % 2 == 1) continue;
      for (const auto& x : g) {
        CycNum xi = xi_splitting(x, ctx, psi);
        if (d % 2 == 1) {
          CHECK(xi == weil_index(x, psi, ctx).inverse());
        } else if (x.valuation() % static_cast<int>(c.n) == 0) {
          CHECK(xi == weil_index(x, psi, ctx).inverse());
        } else {
          CHECK(xi == weil_index(x * ctx.uniformizer(), psi, ctx).inverse());
        }
      }
    }
  }
  FieldCtx ctx(13, 4);
  CHECK_THROWS_AS(xi_splitting(PadicNum::make(13, 1, 1), ctx, AddChar::standard(13)), DomainError);
}

TEST_CASE("uniformizer normalization for 4 | n") {
  for (std::uint32_t p : {5u, 13u}) {
    FieldCtx ctx(p, 4);
    for (const auto& psi : sample_psis(p, ctx.nonresidue())) {
      const PadicNum& b = psi.twist();
      if (b.valuation() % 2 != 0 && ctx.legendre(b.unit_mod(1)) == -1) {
        // gamma_psi(u p) does not depend on u here and equals -1
        CHECK_THROWS_AS(normalize_uniformizer(ctx, psi), DomainError);
        continue;
      }
      FieldCtx nc = normalize_uniformizer(ctx, psi);
      CHECK(weil_index(nc.uniformizer(), psi, nc) == CycNum(1L));
    }
    CHECK(normalize_uniformizer(ctx, AddChar::standard(p)).uniformizer_unit() == 1);
  }
}

TEST_CASE("beta_{n,k} as a sum of Hilbert symbols") {
  for (std::uint32_t n : {2u, 3u, 4u, 6u, 12u}) {
    FieldCtx ctx(13, n);
    for (int v = -3; v <= 3; ++v)
      for (std::uint64_t u : {1u, 2u, 7u})
        for (int k = 0; k < static_cast<int>(n); ++k) {
          PadicNum x = PadicNum::make(13, v, u);
          int expect = ((v - k) % static_cast<int>(n) == 0) ? 1 : 0;
          CHECK(beta_nk(x, static_cast<int>(n), k) == expect);
          CHECK(beta_nk_symbol_sum(x, k, ctx) == CycNum(static_cast<long>(expect)));
        }
  }
}

TEST_CASE("quadratic Gauss integral identity on both sides of the threshold") {
  const std::uint32_t p = 5;
  FieldCtx ctx(p, 2);
  AddChar psi = AddChar::standard(p);
  int count = 0;
  for (int M : {1, 2}) {
    for (int v = -2; v <= M + 2; ++v)
      for (std::uint64_t u : {1u, 2u, 3u}) {
        PadicNum z = PadicNum::make(p, v, u);
        CHECK(sweet_lemma_lhs(z, psi, M) == sweet_lemma_rhs(z, psi, M, ctx));
        ++count;
      }
  }
  CHECK(count >= 20);
}
