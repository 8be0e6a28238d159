#include "padiclf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "padiclf/errors.hpp"
#include "padiclf/factors.hpp"
#include "padiclf/metaplectic.hpp"
#include "padiclf/sampling.hpp"
#include "padiclf/weil.hpp"
#include "padiclf/zeta.hpp"

namespace padiclf {

namespace {

using Point = std::pair<std::uint32_t, std::uint32_t>;

struct Job {
  std::string key;
  std::function<std::vector<VerifyRecord>(std::mt19937_64&)> run;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

VerifyRecord record(const std::string& suite, const std::string& id, const std::string& anchor, json params,
                    const RatFun& lhs, const RatFun& rhs) {
  VerifyRecord r;
  r.suite = suite;
  r.id = id;
  r.anchor = anchor;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs == rhs;
  return r;
}

RatFun flag(bool b) { return RatFun(b ? 1L : 0L); }

std::string chi_tag(const MultChar& chi) { return chi.to_string(); }

std::vector<Point> points_or(const JobConfig& cfg, std::vector<Point> dflt) {
  return cfg.points.empty() ? dflt : cfg.points;
}

std::vector<std::uint32_t> primes_or(const JobConfig& cfg, std::vector<std::uint32_t> dflt) {
  if (cfg.points.empty()) return dflt;
  std::vector<std::uint32_t> out;
  for (const auto& [p, n] : cfg.points)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

FieldCtx cover_ctx(std::uint32_t p, std::uint32_t n) {
  FieldCtx ctx(p, n);
  return n % 4 == 0 ? normalize_uniformizer(ctx, AddChar::standard(p)) : ctx;
}

std::vector<AddChar> sample_psis(std::uint32_t p) {
  return {AddChar::standard(p), AddChar(PadicNum::make(p, -1, 2)), AddChar(PadicNum::make(p, 1, 3))};
}

// ---- suites -------------------------------------------------------------

void tate_fe(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (std::uint32_t p : primes_or(cfg, {5, 7, 13}))
    for (const auto& chi : enumerate_characters(p, cfg.max_conductor, 1, false))
      for (const auto& psi : sample_psis(p)) {
        const int samples = cfg.samples;
        jobs.push_back({"tate-fe/" + std::to_string(p) + "/" + chi_tag(chi) + "/" + psi.to_string(),
                        [p, chi, psi, samples](std::mt19937_64& rng) {
                          FieldCtx ctx(p, 1);
                          RatFun g = tate_gamma(chi, psi, ctx);
                          std::vector<VerifyRecord> out;
                          for (int it = 0; it < samples; ++it) {
                            SchwartzFn phi = random_schwartz(rng, p, 3);
                            RatFun lhs = mellin(fourier(phi, psi), chi.inverse(), ctx).substitute(SubstRule::reflected());
                            out.push_back(record("tate-fe", "tate-fe", "tate-functional-equation",
                                                 {{"p", p}, {"chi", to_json(chi)}, {"psi", to_json(psi)}, {"sample", it}},
                                                 lhs, g * mellin(phi, chi, ctx)));
                          }
                          return out;
                        }});
      }
}

void epsilon_identities(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (std::uint32_t p : primes_or(cfg, {5, 7, 13}))
    for (const auto& chi : enumerate_characters(p, cfg.max_conductor, 1, false))
      for (const auto& psi : sample_psis(p))
        jobs.push_back({"eps/" + std::to_string(p) + "/" + chi_tag(chi) + "/" + psi.to_string(),
                        [p, chi, psi](std::mt19937_64&) {
                          FieldCtx ctx(p, 1);
                          const std::string S = "epsilon-identities";
                          json par = {{"p", p}, {"chi", to_json(chi)}, {"psi", to_json(psi)}};
                          std::vector<VerifyRecord> out;
                          RatFun m1(static_cast<long>(chi.at_minus_one()));
                          RatFun g = tate_gamma(chi, psi, ctx);
                          out.push_back(record(S, "gamma-reflection", "tate-gamma-reflection", par,
                                               g * tate_gamma(chi.inverse(), psi, ctx).substitute(SubstRule::reflected()), m1));
                          RatFun eps = epsilon(chi, psi, ctx);
                          auto mono = eps.as_monomial();
                          out.push_back(record(S, "epsilon-monomial", "epsilon-monomial-exponent", par,
                                               mono ? RatFun::monomial(CycNum(1L), mono->second) : eps,
                                               RatFun::monomial(CycNum(1L), -relative_conductor(psi, chi))));
                          out.push_back(record(S, "epsilon-reflection", "epsilon-reflection", par,
                                               epsilon(chi.inverse(), psi, ctx).substitute(SubstRule::reflected()),
                                               m1 * eps.inverse()));
                          out.push_back(record(
                              S, "epsilon-product", "epsilon-product", par,
                              eps * epsilon(chi.inverse(), psi, ctx).substitute(SubstRule::negated()),
                              RatFun(static_cast<long>(chi.at_minus_one()) * q_half_power(p, -2 * relative_conductor(psi, chi)))));
                          for (const auto& a : {PadicNum::make(p, 0, 2), ctx.uniformizer(), PadicNum::make(p, 2, 3)}) {
                            json pa = par;
                            pa["a"] = to_json(a);
                            const int v = a.valuation();
                            out.push_back(record(S, "epsilon-change-psi", "epsilon-change-of-character", pa,
                                                 epsilon(chi, psi.dilate(a), ctx),
                                                 RatFun::monomial(chi.eval(a, ctx) * q_half_power(p, v), v) * eps));
                          }
                          return out;
                        }});
}

void restricted_fe(const JobConfig& cfg, std::vector<Job>& jobs, bool meta) {
  const std::string S = meta ? "restricted-fe-metaplectic" : "restricted-fe";
  std::vector<Point> dflt = meta ? std::vector<Point>{{13, 2}, {13, 4}, {13, 6}, {13, 12}, {5, 2}}
                                 : std::vector<Point>{{7, 1}, {7, 3}, {13, 3}, {13, 6}, {13, 12}};
  for (const auto& [p, n] : points_or(cfg, dflt)) {
    if (meta && n % 2 != 0) continue;
    std::vector<MultChar> chars;
    if (meta) {
      // chi unramified; chi ramified with chi^2 unramified; chi^2 ramified
      chars = {MultChar::trivial(p), MultChar::unramified(p, CycNum::root_of_unity(3, 1)), MultChar::legendre(p),
               MultChar(p, 1, 1, CycNum::root_of_unity(4, 1))};
    } else {
      chars = enumerate_characters(p, 1, n, false);
    }
    std::vector<AddChar> psis = meta ? std::vector<AddChar>{AddChar::standard(p), AddChar(PadicNum::make(p, -1, 2))}
                                     : sample_psis(p);
    for (const auto& chi : chars)
      for (const auto& psi : psis) {
        const int samples = cfg.samples;
        jobs.push_back({S + "/" + std::to_string(p) + "/" + std::to_string(n) + "/" + chi_tag(chi) + "/" + psi.to_string(),
                        [p, n, chi, psi, samples, meta, S](std::mt19937_64& rng) {
                          FieldCtx ctx(p, n);
                          std::vector<VerifyRecord> out;
                          for (int it = 0; it < samples; ++it) {
                            SchwartzFn phi = meta ? random_unit_cosets(rng, p, 2) : random_schwartz(rng, p, 3);
                            auto checks = verify_functional_equation(static_cast<int>(n), chi, psi, phi, ctx,
                                                                     meta ? FeVariant::metaplectic : FeVariant::tate);
                            for (const auto& c : checks)
                              out.push_back(record(S, S, meta ? "restricted-metaplectic-functional-equation"
                                                              : "restricted-tate-functional-equation",
                                                   {{"p", p}, {"n", n}, {"k", c.k}, {"chi", to_json(chi)},
                                                    {"psi", to_json(psi)}, {"sample", it}},
                                                   c.lhs, c.rhs));
                          }
                          return out;
                        }});
      }
  }
}

void gamma_integral(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (std::uint32_t p : primes_or(cfg, {5, 13}))
    for (const auto& chi : enumerate_characters(p, cfg.max_conductor, 1, false))
      jobs.push_back({"gamma-integral/" + std::to_string(p) + "/" + chi_tag(chi), [p, chi](std::mt19937_64&) {
                        const std::string S = "gamma-integral";
                        FieldCtx ctx(p, 2);
                        AddChar psi = AddChar::standard(p);
                        std::vector<VerifyRecord> out;
                        RatFun target = meta_gamma_reflected(chi, psi, ctx);
                        const int M0 = sweet_min_depth(chi, psi);
                        RatFun I = sweet_integral(chi, psi, M0, ctx);
                        for (int M : {M0, M0 + 1})
                          out.push_back(record(S, "weil-twisted-integral", "metaplectic-gamma-as-integral",
                                               {{"p", p}, {"chi", to_json(chi)}, {"M", M}},
                                               M == M0 ? I : sweet_integral(chi, psi, M, ctx), target));
                        for (const auto& a : {PadicNum::make(p, -1, 1), PadicNum::make(p, -1, ctx.nonresidue())}) {
                          AddChar pa = psi.dilate(a);
                          RatFun Ia = sweet_integral(chi, pa, std::max(1, sweet_min_depth(chi, pa)), ctx);
                          RatFun red = RatFun::monomial(chi.eval(a, ctx).inverse() * weil_index(a, psi, ctx) *
                                                            q_half_power(p, pa.conductor()),
                                                        -a.valuation()) *
                                       I;
                          json par = {{"p", p}, {"chi", to_json(chi)}, {"psi", to_json(pa)}};
                          out.push_back(record(S, "ramified-psi-reduction", "ramified-character-reduction", par, Ia, red));
                          out.push_back(record(S, "weil-twisted-integral", "metaplectic-gamma-as-integral", par, Ia,
                                               meta_gamma_reflected(chi, pa, ctx)));
                        }
                        return out;
                      }});
}

void gauss_integral(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (std::uint32_t p : primes_or(cfg, {5}))
    for (int M : {1, 2})
      jobs.push_back({"gauss-integral/" + std::to_string(p) + "/" + std::to_string(M), [p, M](std::mt19937_64&) {
                        FieldCtx ctx(p, 2);
                        AddChar psi = AddChar::standard(p);
                        std::vector<VerifyRecord> out;
                        for (int v = -2; v <= M + 5; ++v)
                          for (std::uint64_t u : {1u, 2u, 3u}) {
                            PadicNum z = PadicNum::make(p, v, u);
                            out.push_back(record("gauss-integral", "quadratic-gauss-integral", "quadratic-gauss-integral",
                                                 {{"p", p}, {"M", M}, {"z", to_json(z)}},
                                                 RatFun(sweet_lemma_lhs(z, psi, M)), RatFun(sweet_lemma_rhs(z, psi, M, ctx))));
                          }
                        return out;
                      }});
}

const std::vector<Point> kMatrixGrid = {{7, 3}, {5, 2}, {13, 4}, {13, 6}};

void dmatrix_suite(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (const auto& [p, n] : points_or(cfg, kMatrixGrid)) {
    FieldCtx ctx = cover_ctx(p, n);
    for (const auto& chi : canonical_characters(ctx, std::min(cfg.max_conductor, p == 13 ? 1 : 2)))
      jobs.push_back({"dmatrix/" + std::to_string(p) + "/" + std::to_string(n) + "/" + chi_tag(chi),
                      [p, n, chi](std::mt19937_64&) {
                        FieldCtx ctx = cover_ctx(p, n);
                        AddChar psi = AddChar::standard(p);
                        auto cl = dmatrix(chi, psi, ctx, DMethod::closed);
                        auto in = dmatrix(chi, psi, ctx, DMethod::integral);
                        std::vector<VerifyRecord> out;
                        for (unsigned i = 0; i < cl.d; ++i)
                          for (unsigned j = 0; j < cl.d; ++j)
                            out.push_back(record("dmatrix", "closed-vs-integral", "coefficient-matrix-entry",
                                                 {{"p", p}, {"n", n}, {"i", i}, {"j", j}, {"chi", to_json(chi)},
                                                  {"chi_case", to_string(cl.chi_case)}},
                                                 cl.entries[i][j], in.entries[i][j]));
                        for (auto& r : out) r.keep_sides = true;
                        return out;
                      }});
  }
}

void plancherel_suite(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (const auto& [p, n] : points_or(cfg, kMatrixGrid)) {
    FieldCtx ctx = cover_ctx(p, n);
    std::vector<MultChar> chars = canonical_characters(ctx, std::min(cfg.max_conductor, p == 13 ? 1 : 2));
    chars.push_back(MultChar(p, 1, 2, CycNum::root_of_unity(3, 1)));
    for (const auto& chi : chars)
      jobs.push_back({"plancherel/" + std::to_string(p) + "/" + std::to_string(n) + "/" + chi_tag(chi),
                      [p, n, chi](std::mt19937_64&) {
                        FieldCtx ctx = cover_ctx(p, n);
                        AddChar psi = AddChar::standard(p);
                        json par = {{"p", p}, {"n", n}, {"chi", to_json(chi)}, {"chi_case", to_string(classify(chi, ctx))}};
                        std::vector<VerifyRecord> out;
                        auto pr = plancherel_product(chi, psi, ctx, DMethod::integral);
                        VerifyRecord r = record("plancherel", "matrix-product", "plancherel-matrix-product", par,
                                                pr.scalar ? *pr.scalar : pr.product[0][0], pr.expected);
                        if (!pr.scalar) {
                          r.pass = false;
                          r.note = "product is not a scalar matrix";
                        }
                        out.push_back(std::move(r));
                        VerifyRecord f;
                        try {
                          f = record("plancherel", "formula-vs-matrices", "plancherel-routes", par,
                                     plancherel(chi, psi, ctx, PlancherelMethod::formula),
                                     plancherel(chi, psi, ctx, PlancherelMethod::matrices));
                        } catch (const Error& e) {
                          f = record("plancherel", "formula-vs-matrices", "plancherel-routes", par,
                                     plancherel(chi, psi, ctx, PlancherelMethod::formula), RatFun(0L));
                          f.pass = false;
                          f.note = e.what();
                        }
                        out.push_back(std::move(f));
                        for (auto& r : out) r.keep_sides = true;
                        return out;
                      }});
  }
}

void reducibility_suite(const JobConfig& cfg, std::vector<Job>& jobs) {
  for (const auto& [p, n] : points_or(cfg, {{7, 1}, {7, 3}, {5, 2}, {13, 4}, {13, 6}, {13, 12}}))
    jobs.push_back({"reducibility/" + std::to_string(p) + "/" + std::to_string(n), [p, n](std::mt19937_64&) {
                      FieldCtx ctx = cover_ctx(p, n);
                      AddChar psi = AddChar::standard(p);
                      std::vector<VerifyRecord> out;
                      for (const auto& chi : character_classes(ctx, 1)) {
                        json par = {{"p", p}, {"n", n}, {"chi", to_json(chi)}};
                        VerifyRecord r;
                        try {
                          Reducibility red = reducible_at_zero(chi, psi, ctx);
                          r = record("reducibility", "predicate-vs-analytic", "reducibility-at-zero", par,
                                     flag(red.predicate), flag(red.analytic));
                          const bool shape = !red.reducible() ||
                                             (n % 2 == 1 && chi.pow(2L * n).is_trivial() && !chi.pow(n).is_trivial());
                          if (!shape) {
                            r.pass = false;
                            r.note = "reducible verdict outside odd n with quadratic central projection";
                          }
                          r.params["reducible"] = red.reducible();
                        } catch (const Error& e) {
                          r = record("reducibility", "predicate-vs-analytic", "reducibility-at-zero", par, flag(true),
                                     flag(false));
                          r.pass = false;
                          r.note = e.what();
                        }
                        out.push_back(std::move(r));
                      }
                      return out;
                    }});
}

// (x, y) over representatives of F^*/F^*n(1 + P): u0^a pi^b with 0 <= a, b < n
std::vector<PadicNum> symbol_reps(const FieldCtx& ctx) {
  std::vector<PadicNum> out;
  const int n = static_cast<int>(ctx.n());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.push_back(ctx.from_int(static_cast<std::int64_t>(powmod(ctx.u0(), static_cast<std::uint64_t>(a), ctx.p()))) *
                    ctx.uniformizer_power(b));
  return out;
}

void structural_suite(const JobConfig& cfg, std::vector<Job>& jobs) {
  const std::string S = "structural";
  std::vector<Point> pts;
  if (cfg.points.empty()) {
    for (std::uint32_t p : {5u, 7u, 13u})
      for (std::uint32_t n : {2u, 3u, 4u, 6u, 12u})
        if ((p - 1) % n == 0) pts.emplace_back(p, n);
  } else {
    pts = cfg.points;
  }
  for (const auto& [p, n] : pts)
    jobs.push_back({"structural/hilbert/" + std::to_string(p) + "/" + std::to_string(n), [p, n, S](std::mt19937_64&) {
                      FieldCtx ctx(p, n);
                      auto reps = symbol_reps(ctx);
                      bool bil = true, anti = true, nondeg = true;
                      for (const auto& x : reps) {
                        bool some = false;
                        for (const auto& y : reps) {
                          CycNum xy = hilbert_symbol(x, y, ctx);
                          some = some || !xy.is_one();
                          anti = anti && (xy * hilbert_symbol(y, x, ctx)).is_one();
                          for (const auto& z : reps)
                            bil = bil && hilbert_symbol(x * z, y, ctx) == xy * hilbert_symbol(z, y, ctx);
                        }
                        if (!(x.valuation() % static_cast<int>(n) == 0 && hilbert_symbol(x, ctx.uniformizer(), ctx).is_one()))
                          nondeg = nondeg && some;
                      }
                      json par = {{"p", p}, {"n", n}, {"representatives", reps.size()}};
                      return std::vector<VerifyRecord>{
                          record(S, "hilbert-bilinear", "hilbert-symbol-bilinearity", par, flag(bil), flag(true)),
                          record(S, "hilbert-antisymmetric", "hilbert-symbol-antisymmetry", par, flag(anti), flag(true)),
                          record(S, "hilbert-nondegenerate", "hilbert-symbol-nondegeneracy", par, flag(nondeg), flag(true))};
                    }});
  for (std::uint32_t p : primes_or(cfg, {5, 7, 13}))
    jobs.push_back({"structural/weil/" + std::to_string(p), [p, S](std::mt19937_64&) {
                      FieldCtx ctx(p, 2);
                      std::vector<PadicNum> g;
                      for (int v = -1; v <= 2; ++v)
                        for (std::uint64_t u : {std::uint64_t{1}, ctx.nonresidue()}) g.push_back(PadicNum::make(p, v, u));
                      bool cocycle = true, eighth = true;
                      for (const auto& psi : sample_psis(p))
                        for (const auto& x : g) {
                          eighth = eighth && weil_index(x, psi, ctx).pow(8).is_one();
                          for (const auto& y : g)
                            cocycle = cocycle && weil_index(x * y, psi, ctx) ==
                                                     weil_index(x, psi, ctx) * weil_index(y, psi, ctx) *
                                                         CycNum(static_cast<long>(hilbert2(x, y, ctx)));
                        }
                      json par = {{"p", p}};
                      return std::vector<VerifyRecord>{
                          record(S, "weil-cocycle", "weil-index-cocycle", par, flag(cocycle), flag(true)),
                          record(S, "weil-eighth-power", "weil-index-eighth-power", par, flag(eighth), flag(true))};
                    }});
  for (const auto& [p, n] : pts)
    jobs.push_back({"structural/beta/" + std::to_string(p) + "/" + std::to_string(n), [p, n, S](std::mt19937_64&) {
                      FieldCtx ctx(p, n);
                      std::vector<VerifyRecord> out;
                      for (int v = -3; v <= 3; ++v)
                        for (std::uint64_t u : {1u, 2u, 3u})
                          for (int k = 0; k < static_cast<int>(n); ++k) {
                            PadicNum x = PadicNum::make(p, v, u);
                            out.push_back(record(S, "beta-symbol-sum", "valuation-indicator-as-symbol-sum",
                                                 {{"p", p}, {"n", n}, {"x", to_json(x)}, {"k", k}},
                                                 RatFun(beta_nk_symbol_sum(x, k, ctx)),
                                                 RatFun(static_cast<long>(beta_nk(x, static_cast<int>(n), k)))));
                          }
                      return out;
                    }});
  jobs.push_back({"structural/kubota", [S](std::mt19937_64& rng) {
                    FieldCtx ctx(7, 3);
                    auto rr = [&rng]() {
                      std::uniform_int_distribution<long> num(1, 60), vd(-2, 2);
                      Rational r(num(rng) * (rng() % 2 ? 1 : -1));
                      int v = static_cast<int>(vd(rng));
                      for (int t = 0; t < std::abs(v); ++t) r = v > 0 ? Rational(r * 7) : Rational(r / 7);
                      return r;
                    };
                    auto rg = [&]() {
                      SL2 g = SL2::n(rr()) * SL2::h(rr());
                      if (rng() % 2) g = g * SL2::w();
                      return g * SL2::n(rr());
                    };
                    std::vector<VerifyRecord> out;
                    for (int it = 0; it < 100; ++it) {
                      SL2 a = rg(), b = rg(), c = rg();
                      std::uint64_t l = (kubota_cocycle(a, b, ctx) + kubota_cocycle(a * b, c, ctx)) % 3;
                      std::uint64_t r = (kubota_cocycle(a, b * c, ctx) + kubota_cocycle(b, c, ctx)) % 3;
                      out.push_back(record(S, "kubota-cocycle", "kubota-two-cocycle", {{"p", 7}, {"n", 3}, {"triple", it}},
                                           RatFun(CycNum::root_of_unity(3, static_cast<std::int64_t>(l))),
                                           RatFun(CycNum::root_of_unity(3, static_cast<std::int64_t>(r)))));
                    }
                    return out;
                  }});
  for (const auto& [p, n] : pts)
    jobs.push_back({"structural/unramified/" + std::to_string(p) + "/" + std::to_string(n), [p, n, S](std::mt19937_64&) {
                      std::vector<VerifyRecord> out;
                      AddChar psi = AddChar::standard(p);
                      for (const auto& v : {CycNum(1L), CycNum::root_of_unity(2 * n, 1), CycNum(Rational(2, 3))}) {
                        MultChar chi = MultChar::unramified(p, v);
                        out.push_back(record(S, "unramified-conductor", "unramified-conductor-consistency",
                                             {{"p", p}, {"n", n}, {"chi", to_json(chi)}},
                                             RatFun(q_half_power(p, 2 * relative_conductor(psi, chi.pow(n)))), RatFun(1L)));
                      }
                      return out;
                    }});
}

using SuiteFn = std::function<void(const JobConfig&, std::vector<Job>&)>;

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> t = {
      {"tate-fe", tate_fe},
      {"epsilon-identities", epsilon_identities},
      {"restricted-fe", [](const JobConfig& c, std::vector<Job>& j) { restricted_fe(c, j, false); }},
      {"restricted-fe-metaplectic", [](const JobConfig& c, std::vector<Job>& j) { restricted_fe(c, j, true); }},
      {"gamma-integral", gamma_integral},
      {"gauss-integral", gauss_integral},
      {"dmatrix", dmatrix_suite},
      {"plancherel", plancherel_suite},
      {"reducibility", reducibility_suite},
      {"structural", structural_suite},
  };
  return t;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void validate(const JobConfig& cfg) {
  for (const auto& [p, n] : cfg.points) {
    if (p % 2 == 0 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
    if (n == 0 || (p - 1) % n != 0) throw DomainError("n must divide p - 1, got n = " + std::to_string(n));
  }
  if (cfg.max_conductor < 0 || cfg.max_conductor > 2) throw DomainError("conductor bound must be in [0, 2]");
  if (cfg.samples < 1 || cfg.samples > 100) throw DomainError("samples must be in [1, 100]");
  for (const auto& s : cfg.suites)
    if (!suite_table().count(s)) throw DomainError("unknown suite " + s);
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tate-fe",       "epsilon-identities", "restricted-fe",
                                                 "restricted-fe-metaplectic", "gamma-integral", "gauss-integral",
                                                 "dmatrix",       "plancherel",         "reducibility",
                                                 "structural"};
  return names;
}

std::vector<MultChar> enumerate_characters(std::uint32_t p, int max_conductor, std::uint32_t n, bool all_values) {
  std::vector<CycNum> values;
  if (all_values) {
    for (std::uint64_t k = 0; k < 2 * n; ++k) {
      CycNum v = CycNum::root_of_unity(2 * n, static_cast<std::int64_t>(k));
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
  } else {
    values = {CycNum(1L)};
    if (n > 1 || true) {
      CycNum z = CycNum::root_of_unity(2 * n, 1);
      if (!z.is_one()) values.push_back(z);
    }
  }
  values.push_back(CycNum(Rational(2, 3)));
  std::vector<MultChar> out;
  for (int e = 0; e <= max_conductor; ++e) {
    std::vector<std::uint64_t> ks{0};
    if (e > 0) {
      ks.clear();
      const std::uint64_t phi = ipow(p, static_cast<unsigned>(e - 1)) * (p - 1);
      for (std::uint64_t k = 1; k < phi; ++k)
        if (phi % k == 0) ks.push_back(k);
    }
    for (std::uint64_t k : ks)
      for (const auto& v : values) {
        MultChar c(p, e, static_cast<std::int64_t>(k), v);
        if (c.conductor() == e) out.push_back(c);
      }
  }
  return out;
}

VerifyReport run_suite(const JobConfig& cfg) {
  validate(cfg);
  std::vector<Job> jobs;
  for (const auto& s : cfg.suites) suite_table().at(s)(cfg, jobs);
  std::vector<std::vector<VerifyRecord>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                        static_cast<std::uint32_t>(fnv1a(jobs[i].key)),
                        static_cast<std::uint32_t>(fnv1a(jobs[i].key) >> 32)};
      std::mt19937_64 rng(seq);
      auto t0 = std::chrono::steady_clock::now();
      std::vector<VerifyRecord> recs;
      try {
        recs = jobs[i].run(rng);
      } catch (const std::exception& e) {
        VerifyRecord r;
        r.suite = jobs[i].key.substr(0, jobs[i].key.find('/'));
        r.id = jobs[i].key;
        r.anchor = "exception";
        r.params = json::object();
        r.pass = false;
        r.note = e.what();
        recs.push_back(std::move(r));
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      for (auto& r : recs) r.wall_ms = ms / static_cast<double>(std::max<std::size_t>(1, recs.size()));
      results[i] = std::move(recs);
    }
  };
  unsigned nt = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport rep;
  json pts = json::array();
  for (const auto& [p, n] : cfg.points) pts.push_back({p, n});
  rep.config = {{"suites", cfg.suites}, {"points", pts},         {"max_conductor", cfg.max_conductor},
                {"samples", cfg.samples}, {"seed", cfg.seed}};
  for (auto& v : results)
    for (auto& r : v) rep.records.push_back(std::move(r));
  return rep;
}

json to_json(const VerifyReport& report, bool timing, bool full) {
  json recs = json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  for (const auto& r : report.records) {
    json j = {{"suite", r.suite}, {"id", r.id}, {"anchor", r.anchor}, {"params", r.params},
              {"status", r.pass ? "pass" : "fail"}};
    if (!r.pass || r.keep_sides || full) {
      if (r.lhs) j["lhs"] = to_json(*r.lhs);
      if (r.rhs) j["rhs"] = to_json(*r.rhs);
    }
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["wall_ms"] = r.wall_ms;
    recs.push_back(std::move(j));
    auto& c = per_suite[r.suite];
    ++c.first;
    if (!r.pass) ++c.second;
  }
  json summary = json::object();
  for (const auto& [s, c] : per_suite) summary[s] = {{"records", c.first}, {"failures", c.second}};
  return {{"schema", kSchemaVersion},
          {"config", report.config},
          {"summary", summary},
          {"failures", report.failures()},
          {"records", recs}};
}

TableKind table_kind_from_string(const std::string& s) {
  if (s == "reducibility") return TableKind::reducibility;
  if (s == "dmatrix") return TableKind::dmatrix;
  if (s == "factors") return TableKind::factors;
  throw DomainError("unknown table kind " + s);
}

Table emit_table(TableKind kind, const JobConfig& cfg) {
  validate(cfg);
  Table t;
  json rows = json::array();
  std::ostringstream tex;
  if (kind == TableKind::reducibility) {
    std::vector<Point> pts = points_or(cfg, {{13, 1}, {13, 2}, {13, 3}, {13, 4}, {13, 6}, {13, 12}});
    tex << "\\begin{tabular}{rrlllll}\n$p$ & $n$ & parity & $\\chi$ & predicate & pole at $0$ & verdict \\\\\n\\hline\n";
    for (const auto& [p, n] : pts) {
      FieldCtx ctx = cover_ctx(p, n);
      AddChar psi = AddChar::standard(p);
      for (const auto& chi : character_classes(ctx, std::min(cfg.max_conductor, 1))) {
        Reducibility r = reducible_at_zero(chi, psi, ctx);
        const bool pole = !r.analytic_at_zero;
        rows.push_back({{"p", p},
                        {"n", n},
                        {"n_parity", n % 2 ? "odd" : "even"},
                        {"chi", to_json(chi)},
                        {"chi_class", chi.to_string()},
                        {"self_dual", r.self_dual},
                        {"predicate", r.predicate ? "reducible" : "irreducible"},
                        {"pole_at_zero", pole},
                        {"verdict", r.reducible() ? "reducible" : "irreducible"}});
        tex << p << " & " << n << " & " << (n % 2 ? "odd" : "even") << " & \\texttt{" << chi.to_string() << "} & "
            << (r.predicate ? "red." : "irr.") << " & " << (pole ? "yes" : "no") << " & "
            << (r.reducible() ? "reducible" : "irreducible") << " \\\\\n";
      }
    }
    tex << "\\end{tabular}\n";
  } else if (kind == TableKind::dmatrix) {
    for (const auto& [p, n] : points_or(cfg, kMatrixGrid)) {
      FieldCtx ctx = cover_ctx(p, n);
      for (const auto& chi : canonical_characters(ctx, std::min(cfg.max_conductor, 1))) {
        json m = to_json(dmatrix(chi, AddChar::standard(p), ctx, DMethod::integral));
        m["p"] = p;
        rows.push_back(std::move(m));
      }
    }
  } else {
    tex << "\\begin{tabular}{rlll}\n$p$ & $\\chi$ & $L(s,\\chi)$ & $\\epsilon(s,\\chi,\\psi)$ \\\\\n\\hline\n";
    for (std::uint32_t p : primes_or(cfg, {5, 7, 13})) {
      FieldCtx ctx(p, 1);
      AddChar psi = AddChar::standard(p);
      for (const auto& chi : enumerate_characters(p, cfg.max_conductor, 1, false)) {
        RatFun L = lfactor(chi), eps = epsilon(chi, psi, ctx);
        rows.push_back({{"p", p},
                        {"chi", to_json(chi)},
                        {"L", to_json(L)},
                        {"epsilon", to_json(eps)},
                        {"gamma", to_json(tate_gamma(chi, psi, ctx))}});
        tex << p << " & \\texttt{" << chi.to_string() << "} & \\texttt{" << L.to_string() << "} & \\texttt{"
            << eps.to_string() << "} \\\\\n";
      }
    }
    tex << "\\end{tabular}\n";
  }
  const char* names[] = {"reducibility", "dmatrix", "factors"};
  t.data = {{"schema", kSchemaVersion}, {"kind", names[static_cast<int>(kind)]}, {"rows", rows}};
  t.latex = tex.str();
  return t;
}

}  // namespace padiclf
