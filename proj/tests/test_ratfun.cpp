#include <doctest.h>

#include <random>

#include "padiclf/errors.hpp"
#include "padiclf/ratfun.hpp"
#include "support.hpp"

using namespace padiclf;
using testsupport::close;
using testsupport::cplx;
using testsupport::eval_complex;
using testsupport::random_ratfun;

namespace {

cplx x_of_s(std::uint32_t q, cplx s) { return std::exp(-s * std::log(static_cast<long double>(q))); }

}  // namespace

TEST_CASE("geometric series times its denominator is one") {
  CycNum c = CycNum::root_of_unity(5, 2);
  RatFun g = RatFun::geometric(c, 3);
  RatFun d = RatFun(1L) - RatFun::monomial(c, 3);
  CHECK(g * d == RatFun(1L));
  CHECK(g.pole_order_at(CycNum::root_of_unity(15, -2)) == 1);
}

TEST_CASE("arithmetic agrees with evaluation") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    RatFun f = random_ratfun(rng, 12), g = random_ratfun(rng, 5);
    cplx x(0.37L, 0.21L);
    cplx fx = eval_complex(f, x), gx = eval_complex(g, x);
    CHECK(close(eval_complex(f + g, x), fx + gx, 1e-7L));
    CHECK(close(eval_complex(f * g, x), fx * gx, 1e-7L));
    CHECK(close(eval_complex(f / g, x), fx / gx, 1e-6L));
    CHECK((f + g) - g == f);
    CHECK((f * g) / g == f);
  }
}

TEST_CASE("equality by cross multiplication matches values at rational points") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    RatFun f = random_ratfun(rng, 4), g = random_ratfun(rng, 4);
    RatFun h = f * g / g;
    for (long x : {2L, 3L, -5L, 7L, 11L}) {
      auto [n1, d1] = f.eval_fraction(CycNum(Rational(x, 3)));
      auto [n2, d2] = h.eval_fraction(CycNum(Rational(x, 3)));
      CHECK(n1 * d2 == n2 * d1);
    }
    CHECK(h == f);
    CHECK((f + RatFun(1L)) != f);
  }
}

TEST_CASE("substitutions act on s as affine maps") {
  std::mt19937_64 rng(17);
  const std::uint32_t q = 7;
  const SubstRule rules[] = {SubstRule::doubled(), SubstRule::shift_half(), SubstRule::negated(),
                             SubstRule::reflected(), SubstRule::shifted(-3), SubstRule{-2, 1}};
  for (int it = 0; it < 10; ++it) {
    RatFun f = random_ratfun(rng, 8);
    f.with_q(q);
    for (const auto& r : rules) {
      RatFun g = f.substitute(r);
      for (long double s0 : {0.13L, 0.71L}) {
        cplx s(s0, 0.05L);
        cplx lhs = eval_complex(g, x_of_s(q, s));
        cplx rhs = eval_complex(f, x_of_s(q, static_cast<long double>(r.scale) * s + r.half_shift / 2.0L));
        CHECK(close(lhs, rhs, 1e-7L));
      }
    }
  }
}

TEST_CASE("composition of substitutions is composition of affine maps") {
  std::mt19937_64 rng(23);
  const SubstRule rules[] = {SubstRule::doubled(), SubstRule::shift_half(), SubstRule::negated(),
                             SubstRule::reflected(), SubstRule::shifted(4)};
  for (int it = 0; it < 6; ++it) {
    RatFun f = random_ratfun(rng, 3);
    f.with_q(5);
    for (const auto& a : rules)
      for (const auto& b : rules) CHECK(f.substitute(a).substitute(b) == f.substitute(a.then(b)));
  }
}

TEST_CASE("pole orders from repeated synthetic division") {
  RatFun L = RatFun::geometric(CycNum(1L), 1);
  CHECK(L.pole_order_at(CycNum(1L)) == 1);
  CHECK((L * L).pole_order_at(CycNum(1L)) == 2);
  CHECK((L.inverse()).pole_order_at(CycNum(1L)) == -1);
  CHECK(L.pole_order_at(CycNum(2L)) == 0);
  RatFun f = RatFun::geometric(CycNum(1L), 2) * (RatFun(1L) - RatFun::monomial(CycNum(-1L), 1));
  CHECK(f.pole_order_at(CycNum(1L)) == 1);
  CHECK(f.pole_order_at(CycNum(-1L)) == 0);
}

TEST_CASE("monomial detection") {
  RatFun m = RatFun::monomial(CycNum::root_of_unity(3, 1), -2);
  auto mm = m.as_monomial();
  REQUIRE(mm.has_value());
  CHECK(mm->first == CycNum::root_of_unity(3, 1));
  CHECK(mm->second == -2);
  CHECK_FALSE(RatFun::geometric(CycNum(2L), 1).as_monomial().has_value());
  CHECK_THROWS_AS(RatFun(1L).with_q(5) + RatFun(1L).with_q(7), DomainError);
}
