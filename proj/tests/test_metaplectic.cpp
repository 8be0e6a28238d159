#include <doctest.h>

#include <random>

#include "padiclf/errors.hpp"
#include "padiclf/factors.hpp"
#include "padiclf/metaplectic.hpp"
#include "padiclf/weil.hpp"

using namespace padiclf;

namespace {

using PN = std::pair<std::uint32_t, std::uint32_t>;

FieldCtx make_ctx(std::uint32_t p, std::uint32_t n) {
  FieldCtx ctx(p, n);
  return n % 4 == 0 ? normalize_uniformizer(ctx, AddChar::standard(p)) : ctx;
}

Rational rand_rational(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<long> num(1, 60), vd(-2, 2);
  long a = num(rng) * (rng() % 2 ? 1 : -1);
  Rational r(a);
  int v = static_cast<int>(vd(rng));
  for (int t = 0; t < std::abs(v); ++t) r = v > 0 ? Rational(r * p) : Rational(r / p);
  return r;
}

SL2 rand_sl2(std::mt19937_64& rng, std::uint32_t p) {
  SL2 g = SL2::n(rand_rational(rng, p)) * SL2::h(rand_rational(rng, p));
  if (rng() % 2) g = g * SL2::w();
  return g * SL2::n(rand_rational(rng, p));
}

PadicNum in_Fd(std::mt19937_64& rng, const FieldCtx& ctx) {
  std::uniform_int_distribution<std::uint64_t> u(1, ctx.p() * ctx.p() - 1);
  std::uint64_t unit = u(rng);
  while (unit % ctx.p() == 0) unit = u(rng);
  int m = static_cast<int>(rng() % 5) - 2;
  return ctx.uniformizer_power(m * static_cast<int>(ctx.d())) * ctx.from_int(static_cast<std::int64_t>(unit));
}

}  // namespace

TEST_CASE("Kubota cocycle") {
  FieldCtx ctx(7, 3);
  const Rational a(3), b(Rational(14, 5));
  CHECK(kubota_cocycle(SL2::h(a), SL2::h(b), ctx) ==
        hilbert_exponent(ctx.from_rational(b), ctx.from_rational(a), ctx));
  CHECK(kubota_cocycle(SL2::n(a), SL2::n(b), ctx) == 0);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    SL2 g1 = rand_sl2(rng, 7), g2 = rand_sl2(rng, 7), g3 = rand_sl2(rng, 7);
    std::uint64_t lhs = kubota_cocycle(g1, g2, ctx) + kubota_cocycle(g1 * g2, g3, ctx);
    std::uint64_t rhs = kubota_cocycle(g1, g2 * g3, ctx) + kubota_cocycle(g2, g3, ctx);
    CHECK(lhs % 3 == rhs % 3);
  }
  SL2 bad{2, 0, 0, 2};
  CHECK_THROWS_AS(kubota_cocycle(bad, SL2::w(), ctx), DomainError);
}

TEST_CASE("genuine characters") {
  std::mt19937_64 rng(5);
  {
    FieldCtx ctx(7, 3);
    MultChar chi(7, 1, 2, CycNum::root_of_unity(3, 1));
    GenuineChar g{chi, ctx, AddChar::standard(7)};
    for (int it = 0; it < 10; ++it) {
      PadicNum a = in_Fd(rng, ctx);
      CHECK(g.eval(a) == chi.eval(a, ctx));
      CHECK(g.eval(a, 2) == CycNum::root_of_unity(3, 2) * chi.eval(a, ctx));
    }
    CHECK_THROWS_AS(g.eval(ctx.uniformizer()), DomainError);
  }
  FieldCtx ctx = make_ctx(13, 4);
  GenuineChar g{MultChar(13, 1, 5, CycNum::root_of_unity(4, 1)), ctx, AddChar::standard(13)};
  for (int it = 0; it < 30; ++it) {
    PadicNum a = in_Fd(rng, ctx), b = in_Fd(rng, ctx);
    // (h(a), 1)(h(b), 1) = (h(ab), (b, a))
    CHECK(g.eval(a) * g.eval(b) == g.eval(a * b, hilbert_exponent(b, a, ctx)));
  }
}

TEST_CASE("n-th Hilbert symbol on F^*_d through beta and the quadratic symbol") {
  std::mt19937_64 rng(9);
  for (PN pn : {PN{13, 4}, PN{13, 6}, PN{7, 6}, PN{5, 2}}) {
    FieldCtx ctx(pn.first, pn.second);
    FieldCtx c2 = ctx.with_degree(2);
    for (int it = 0; it < 25; ++it) {
      PadicNum x = in_Fd(rng, ctx), y = in_Fd(rng, ctx);
      CHECK(CycNum::root_of_unity(ctx.n(), static_cast<std::int64_t>(hilbert_exponent(x, y, ctx))) ==
            CycNum::root_of_unity(2, static_cast<std::int64_t>(
                                         hilbert_exponent(beta_pi(x, ctx), beta_pi(y, ctx), c2))));
    }
  }
}

TEST_CASE("equivalent inducing data and case classification") {
  FieldCtx ctx = make_ctx(13, 4);
  MultChar eta = eta_pi(ctx);
  MultChar chi(13, 1, 1, CycNum::root_of_unity(4, 1));
  CHECK(equivalent_inducing_data(chi, chi, ctx) == 0);
  CHECK(equivalent_inducing_data(chi, chi * eta.pow(2), ctx) == 1);
  CHECK_FALSE(equivalent_inducing_data(chi, chi * eta, ctx).has_value());
  CHECK(same_on_Fd(MultChar::trivial(13), MultChar::unramified(13, CycNum(-1L)), ctx));
  CHECK(classify(MultChar::unramified(13, CycNum(-1L)), ctx) == CharCase::trivial);
  CHECK(classify(eta, ctx) == CharCase::eta_pi);
  CHECK(classify(chi, ctx) == CharCase::ramified_power);
  CHECK(classify(MultChar(13, 1, 3, CycNum(1L)), ctx) == CharCase::other);
  CHECK(whittaker_dimension(1) == 1);
  CHECK(whittaker_dimension(2) == 1);
  CHECK(whittaker_dimension(3) == 3);
  CHECK(whittaker_dimension(12) == 6);
  for (PN pn : {PN{7, 3}, PN{5, 2}, PN{13, 4}, PN{13, 6}}) {
    FieldCtx c = make_ctx(pn.first, pn.second);
    auto cs = canonical_characters(c, 1);
    CHECK(cs.size() >= 2);
    for (const auto& x : cs) CHECK(classify(x, c) != CharCase::other);
  }
}

TEST_CASE("cocycle phase in the Whittaker integral") {
  for (PN pn : {PN{7, 3}, PN{13, 4}, PN{13, 6}, PN{7, 6}, PN{5, 4}, PN{13, 12}}) {
    FieldCtx ctx = make_ctx(pn.first, pn.second);
    const int d = static_cast<int>(ctx.d()), n = static_cast<int>(ctx.n());
    const std::uint64_t m1 = hilbert_exponent(ctx.from_int(-1), ctx.uniformizer(), ctx);
    const Rational pi(static_cast<long>(ctx.p() * ctx.uniformizer_unit()));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const std::uint64_t defect = whittaker_phase_defect(i, j, ctx);
        CHECK(defect == (m1 * static_cast<std::uint64_t>(j * (i + 1))) % static_cast<std::uint64_t>(n));
        for (long t : {2L, -3L, 6L})
          for (int m : {-1, 1}) {
            Rational z(t);
            for (int k = 0; k < std::abs(i + j + m * d); ++k) z = i + j + m * d > 0 ? Rational(z * pi) : Rational(z / pi);
            std::uint64_t claimed = (static_cast<std::uint64_t>(((i - j) % n + n) % n) *
                                     hilbert_exponent(ctx.uniformizer(), ctx.from_rational(z), ctx)) % n;
            CHECK(whittaker_phase(i, j, z, ctx) == (claimed + defect) % n);
          }
      }
  }
}

TEST_CASE("D matrix: closed formulas against the integral") {
  AddChar psi;
  for (PN pn : {PN{7, 3}, PN{5, 2}, PN{13, 6}}) {
    FieldCtx ctx = make_ctx(pn.first, pn.second);
    psi = AddChar::standard(pn.first);
    for (const auto& chi : canonical_characters(ctx, pn.first == 13 ? 1 : 2)) {
      auto cl = dmatrix(chi, psi, ctx, DMethod::closed), in = dmatrix(chi, psi, ctx, DMethod::integral);
      for (unsigned i = 0; i < cl.d; ++i)
        for (unsigned j = 0; j < cl.d; ++j) {
          INFO("p=" << pn.first << " n=" << pn.second << " chi=" << chi.to_string() << " i=" << i << " j=" << j);
          CHECK(cl.entries[i][j] == in.entries[i][j]);
        }
    }
  }
  // when (-1, pi)_n = -1 the closed formulas disagree with the integral at entry (1, 0)
  FieldCtx ctx = make_ctx(13, 4);
  psi = AddChar::standard(13);
  for (const auto& chi : canonical_characters(ctx, 1)) {
    auto cl = dmatrix(chi, psi, ctx, DMethod::closed), in = dmatrix(chi, psi, ctx, DMethod::integral);
    INFO("chi=" << chi.to_string());
    CHECK(cl.entries[0][0] == in.entries[0][0]);
    CHECK(cl.entries[1][1] == in.entries[1][1]);
    CHECK_FALSE(in.entries[1][0].is_zero());
    CHECK(cl.entries[1][0] == -in.entries[1][0]);
  }
  CHECK_THROWS_AS(tau_entry_closed(0, 0, MultChar(13, 1, 3, CycNum(1L)), psi, ctx), DomainError);
  CHECK_THROWS_AS(tau_entry_closed(0, 0, MultChar::trivial(13), AddChar(PadicNum::make(13, -1, 1)), ctx),
                  DomainError);
}

TEST_CASE("D matrix: restricted functional equation route against the integral") {
  for (PN pn : {PN{7, 3}, PN{5, 2}, PN{13, 4}, PN{13, 6}, PN{7, 2}, PN{5, 4}}) {
    FieldCtx ctx = make_ctx(pn.first, pn.second);
    AddChar psi = AddChar::standard(pn.first);
    std::vector<MultChar> cs = canonical_characters(ctx, 1);
    cs.push_back(MultChar(pn.first, 1, 2, CycNum::root_of_unity(3, 1)));
    for (const auto& chi : cs) {
      INFO("p=" << pn.first << " n=" << pn.second << " chi=" << chi.to_string());
      CHECK(dmatrix(chi, psi, ctx, DMethod::theta).entries == dmatrix(chi, psi, ctx, DMethod::integral).entries);
    }
  }
  FieldCtx ctx(7, 6);
  CHECK_THROWS_AS(tau_entry_theta(0, 1, MultChar::trivial(7), AddChar::standard(7), ctx), DomainError);
}

TEST_CASE("D matrix depends only on chi restricted to F^*_d") {
  FieldCtx ctx = make_ctx(13, 6);
  AddChar psi = AddChar::standard(13);
  MultChar chi(13, 1, 1, CycNum::root_of_unity(4, 1));
  MultChar twist = MultChar::unramified(13, CycNum::root_of_unity(3, 1));
  CHECK(dmatrix(chi, psi, ctx, DMethod::integral).entries ==
        dmatrix(chi * twist, psi, ctx, DMethod::integral).entries);
}

TEST_CASE("Plancherel: matrix product against the closed formula") {
  for (PN pn : {PN{7, 3}, PN{5, 2}, PN{13, 4}, PN{13, 6}, PN{13, 12}, PN{5, 4}, PN{7, 6}, PN{7, 1}}) {
    FieldCtx ctx = make_ctx(pn.first, pn.second);
    AddChar psi = AddChar::standard(pn.first);
    std::vector<MultChar> cs = canonical_characters(ctx, pn.first == 5 ? 2 : 1);
    cs.push_back(MultChar(pn.first, 1, 2, CycNum::root_of_unity(3, 1)));
    for (const auto& chi : cs) {
      INFO("p=" << pn.first << " n=" << pn.second << " chi=" << chi.to_string());
      auto pr = plancherel_product(chi, psi, ctx, DMethod::integral);
      REQUIRE(pr.scalar.has_value());
      CHECK(*pr.scalar == pr.expected);
      CHECK(plancherel(chi, psi, ctx, PlancherelMethod::matrices) ==
            plancherel(chi, psi, ctx, PlancherelMethod::formula));
    }
  }
  // the closed formulas give a non-scalar product for eta_pi at (13, 4)
  FieldCtx ctx = make_ctx(13, 4);
  CHECK_FALSE(plancherel_product(eta_pi(ctx), AddChar::standard(13), ctx, DMethod::closed).scalar.has_value());
}

TEST_CASE("Plancherel formula: trivial chi^n has a pole at zero") {
  FieldCtx ctx(13, 3);
  RatFun mu = plancherel(MultChar::trivial(13), AddChar::standard(13), ctx, PlancherelMethod::formula);
  CHECK(mu.pole_order_at(CycNum(1L)) > 0);
  RatFun mu2 = plancherel(MultChar::trivial(13), AddChar(PadicNum::make(13, -1, 1)), ctx, PlancherelMethod::formula);
  CHECK(mu2 == RatFun(CycNum(13L)) * mu);
}

TEST_CASE("reducibility at zero: sweep of character classes") {
  for (PN pn : {PN{7, 1}, PN{7, 3}, PN{5, 2}, PN{13, 4}, PN{13, 6}, PN{13, 12}}) {
    FieldCtx ctx = make_ctx(pn.first, pn.second);
    AddChar psi = AddChar::standard(pn.first);
    int reducible = 0;
    for (const auto& chi : character_classes(ctx, 1)) {
      INFO("p=" << pn.first << " n=" << pn.second << " chi=" << chi.to_string());
      Reducibility r = reducible_at_zero(chi, psi, ctx);
      CHECK(r.agree());
      if (r.reducible()) {
        ++reducible;
        CHECK(pn.second % 2 == 1);
        CHECK(chi.pow(2L * pn.second).is_trivial());
      }
    }
    if (pn.second % 2 == 0) CHECK(reducible == 0);
    else CHECK(reducible > 0);
  }
  FieldCtx ctx(7, 1);
  CHECK(reducible_at_zero(MultChar::legendre(7), AddChar::standard(7), ctx).reducible());
  CHECK_FALSE(reducible_at_zero(MultChar::trivial(7), AddChar::standard(7), ctx).reducible());
}
