#include <doctest.h>

#include <random>

#include "padiclf/errors.hpp"
#include "padiclf/factors.hpp"
#include "padiclf/metaplectic.hpp"
#include "padiclf/serialize.hpp"
#include "padiclf/verify.hpp"
#include "support.hpp"

using namespace padiclf;

namespace {

JobConfig config(std::vector<std::string> suites, std::vector<std::pair<std::uint32_t, std::uint32_t>> pts = {}) {
  JobConfig c;
  c.suites = std::move(suites);
  c.points = std::move(pts);
  c.threads = 2;
  return c;
}

}  // namespace

TEST_CASE("cyclotomic and rational function JSON round-trips") {
  std::mt19937_64 rng(11);
  for (std::uint64_t N : {1u, 3u, 4u, 8u, 12u, 24u}) {
    for (int it = 0; it < 20; ++it) {
      CycNum c = testsupport::random_cyc(rng, N, 3, 5);
      CHECK(cycnum_from_json(json::parse(to_json(c).dump())) == c);
      RatFun f = testsupport::random_ratfun(rng, N);
      CHECK(ratfun_from_json(json::parse(to_json(f).dump())) == f);
      RatFun g = f.with_q(13);
      RatFun back = ratfun_from_json(to_json(g));
      CHECK(back == g);
      CHECK(back.q() == 13);
    }
  }
  CHECK(ratfun_from_json(to_json(RatFun(0L))).is_zero());
}

TEST_CASE("factor outputs survive serialization") {
  FieldCtx ctx(7, 1);
  AddChar psi = AddChar::standard(7);
  for (const auto& chi : enumerate_characters(7, 2, 3, false)) {
    for (const RatFun& f : {lfactor(chi), epsilon(chi, psi, ctx), tate_gamma(chi, psi, ctx)})
      CHECK(ratfun_from_json(json::parse(to_json(f).dump())) == f);
    MultChar back = multchar_from_json(to_json(chi));
    CHECK(back.conductor() == chi.conductor());
    CHECK(lfactor(back) == lfactor(chi));
    CHECK(epsilon(back, psi, ctx) == epsilon(chi, psi, ctx));
  }
}

TEST_CASE("p-adic, context and additive character round-trips") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    PadicNum x = testsupport::random_padic(rng, 13, -3, 3);
    CHECK(padic_from_json(to_json(x)) == x);
  }
  CHECK(padic_from_json(to_json(PadicNum::zero(13))).is_zero());
  FieldCtx ctx(13, 6);
  FieldCtx back = ctx_from_json(to_json(ctx));
  CHECK(back.p() == 13);
  CHECK(back.n() == 6);
  CHECK(back.uniformizer_unit() == ctx.uniformizer_unit());
  AddChar psi(PadicNum::make(13, -1, 2));
  CHECK(addchar_from_json(to_json(psi)).conductor() == psi.conductor());
  CHECK_THROWS_AS(ratfun_from_json(json::parse(R"({"q": 5})")), DomainError);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(validate(config({}, {{9, 2}})), DomainError);
  CHECK_THROWS_AS(validate(config({}, {{7, 4}})), DomainError);
  CHECK_THROWS_AS(validate(config({"nonsense"})), DomainError);
  JobConfig c = config({"tate-fe"});
  c.max_conductor = 5;
  CHECK_THROWS_AS(validate(c), DomainError);
  CHECK_NOTHROW(validate(config({"tate-fe"}, {{13, 12}})));
}

TEST_CASE("empty suite list gives an empty passing report") {
  VerifyReport r = run_suite(config({}));
  CHECK(r.records.empty());
  CHECK(r.ok());
  json j = to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["failures"] == 0);
}

TEST_CASE("epsilon identities at p = 5") {
  VerifyReport r = run_suite(config({"epsilon-identities"}, {{5, 1}}));
  CHECK(r.records.size() > 100);
  CHECK(r.ok());
}

TEST_CASE("plancherel suite at (7, 3) carries the product") {
  VerifyReport r = run_suite(config({"plancherel"}, {{7, 3}}));
  REQUIRE_FALSE(r.records.empty());
  CHECK(r.ok());
  json j = to_json(r);
  bool found = false;
  for (const auto& rec : j["records"])
    if (rec["id"] == "matrix-product") {
      found = true;
      CHECK(ratfun_from_json(rec["lhs"]) == ratfun_from_json(rec["rhs"]));
    }
  CHECK(found);
}

TEST_CASE("reports are deterministic in the seed, independent of thread count") {
  JobConfig a = config({"tate-fe", "restricted-fe"}, {{7, 3}});
  a.samples = 3;
  a.max_conductor = 1;
  JobConfig b = a;
  b.threads = 1;
  CHECK(to_json(run_suite(a)).dump() == to_json(run_suite(b)).dump());
  JobConfig c = a;
  c.seed = 2;
  CHECK(to_json(run_suite(a), false, true).dump() != to_json(run_suite(c), false, true).dump());
}

TEST_CASE("failing records carry both sides") {
  VerifyReport r;
  VerifyRecord rec;
  rec.suite = "x";
  rec.id = "x";
  rec.params = json::object();
  rec.lhs = RatFun(1L);
  rec.rhs = RatFun(2L);
  rec.pass = false;
  r.records.push_back(rec);
  rec.pass = true;
  rec.rhs = RatFun(1L);
  r.records.push_back(rec);
  json j = to_json(r);
  CHECK(j["failures"] == 1);
  CHECK(j["records"][0].contains("lhs"));
  CHECK(j["records"][0].contains("rhs"));
  CHECK_FALSE(j["records"][1].contains("lhs"));
  CHECK(to_json(r, false, true)["records"][1].contains("lhs"));
  CHECK_FALSE(j["records"][0].contains("wall_ms"));
}

TEST_CASE("reducibility table at p = 13") {
  JobConfig c = config({}, {{13, 1}, {13, 2}, {13, 3}, {13, 4}, {13, 6}, {13, 12}});
  Table t = emit_table(TableKind::reducibility, c);
  std::size_t reducible = 0;
  for (const auto& row : t.data["rows"]) {
    CHECK(row.contains("chi_class"));
    CHECK(row.contains("pole_at_zero"));
    if (row["verdict"] == "reducible") {
      ++reducible;
      CHECK(row["n_parity"] == "odd");
    }
  }
  CHECK(reducible > 0);
  CHECK(emit_table(TableKind::reducibility, c).data.dump() == t.data.dump());
  CHECK(t.latex.find("tabular") != std::string::npos);
}

TEST_CASE("dmatrix table at (5, 2) for the trivial character is 1x1") {
  Table t = emit_table(TableKind::dmatrix, config({}, {{5, 2}}));
  bool seen = false;
  for (const auto& row : t.data["rows"])
    if (row["chi_case"] == "trivial") {
      seen = true;
      CHECK(row["d"] == 1);
      CHECK(row["entries"].size() == 1);
      CHECK(row["entries"][0].size() == 1);
    }
  CHECK(seen);
}

TEST_CASE("factors table has L = 1 for ramified characters") {
  JobConfig c = config({}, {{7, 1}});
  Table t = emit_table(TableKind::factors, c);
  std::size_t ramified = 0;
  for (const auto& row : t.data["rows"]) {
    if (row["chi"]["e"].get<int>() > 0) {
      ++ramified;
      CHECK(ratfun_from_json(row["L"]) == RatFun(1L));
    } else {
      CHECK_FALSE(ratfun_from_json(row["L"]) == RatFun(1L));
    }
  }
  CHECK(ramified > 0);
}

TEST_CASE("character enumeration") {
  auto full = enumerate_characters(13, 1, 3);
  auto small = enumerate_characters(13, 1, 3, false);
  CHECK(full.size() > small.size());
  for (const auto& c : full) CHECK(c.conductor() <= 1);
  // unramified: the six roots of order dividing 6 and 2/3
  CHECK(std::count_if(full.begin(), full.end(), [](const MultChar& c) { return c.conductor() == 0; }) == 7);
}
