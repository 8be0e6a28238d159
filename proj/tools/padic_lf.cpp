#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "padiclf/errors.hpp"
#include "padiclf/factors.hpp"
#include "padiclf/metaplectic.hpp"
#include "padiclf/serialize.hpp"
#include "padiclf/verify.hpp"
#include "padiclf/weil.hpp"

using namespace padiclf;
namespace fs = std::filesystem;

namespace {

struct CharOpts {
  std::uint32_t p = 5, n = 1;
  int e = 0;
  std::int64_t k = 0;
  std::string chi_pi = "0/1";  // a/N means zeta_N^a; r:num/den means the rational num/den
  int psi_val = 0;
  std::uint64_t psi_unit = 1;
};

void add_char_opts(CLI::App* app, CharOpts& o, bool with_n) {
  app->add_option("--p", o.p, "odd prime")->required();
  if (with_n) app->add_option("--n", o.n, "cover degree, dividing p - 1")->required();
  app->add_option("--e", o.e, "conductor of chi");
  app->add_option("--k", o.k, "exponent of chi on the generator of the unit group");
  app->add_option("--chi-pi", o.chi_pi, "chi(pi): a/N for zeta_N^a, or r:num/den for a rational");
  app->add_option("--psi-val", o.psi_val, "valuation of the twist a in psi_a");
  app->add_option("--psi-unit", o.psi_unit, "unit residue of the twist a in psi_a");
}

MultChar make_chi(const CharOpts& o) { return MultChar(o.p, o.e, o.k, parse_value(o.chi_pi)); }
AddChar make_psi(const CharOpts& o) { return AddChar(PadicNum::make(o.p, o.psi_val, o.psi_unit)); }

FieldCtx cover_ctx(std::uint32_t p, std::uint32_t n) {
  FieldCtx ctx(p, n);
  return n % 4 == 0 ? normalize_uniformizer(ctx, AddChar::standard(p)) : ctx;
}

fs::path out_path(const std::string& name) {
  fs::path p(name);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("PADIC_LF_OUT_DIR"); dir && *dir) return fs::path(dir) / p;
  return p;
}

void write(const std::string& target, const std::string& text) {
  if (target.empty() || target == "-") {
    std::cout << text;
    return;
  }
  fs::path path = out_path(target);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + path.string());
  f << text;
  if (!f) throw Error("write failed for " + path.string());
}

void emit(const std::string& target, const json& j) { write(target, j.dump(2) + "\n"); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_points(const std::vector<std::string>& pts,
                                                                  const std::vector<std::uint32_t>& ps,
                                                                  const std::vector<std::uint32_t>& ns) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& s : pts) {
    auto c = s.find(',');
    if (c == std::string::npos) throw DomainError("point must be p,n: " + s);
    out.emplace_back(std::stoul(s.substr(0, c)), std::stoul(s.substr(c + 1)));
  }
  for (auto p : ps) {
    if (ns.empty()) out.emplace_back(p, 1);
    for (auto n : ns) out.emplace_back(p, n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local factors and metaplectic coefficient matrices over Q_p"};
  app.require_subcommand(1);
  std::string out;

  // verify
  auto* v = app.add_subcommand("verify", "run identity suites and write a JSON report");
  JobConfig cfg;
  std::vector<std::string> pts;
  std::vector<std::uint32_t> ps, ns;
  bool timing = false, all = false, full = false;
  v->add_option("--suite", cfg.suites, "suite name (repeatable)")->delimiter(',');
  v->add_flag("--all", all, "run every suite");
  v->add_option("--p", ps, "primes (repeatable)")->delimiter(',');
  v->add_option("--n", ns, "cover degrees, crossed with --p")->delimiter(',');
  v->add_option("--point", pts, "explicit p,n point (repeatable)");
  v->add_option("--seed", cfg.seed);
  v->add_option("--samples", cfg.samples, "random test functions per point");
  v->add_option("--max-conductor", cfg.max_conductor);
  v->add_option("--threads", cfg.threads);
  v->add_flag("--timing", timing, "include wall times (breaks byte-stability)");
  v->add_flag("--full", full, "write both sides of every record, not only failures");
  v->add_option("--json", out, "output file, - for stdout");
  bool quiet = false;
  v->add_flag("-q,--quiet", quiet);

  // factor
  auto* f = app.add_subcommand("factor", "L, epsilon and gamma factors of a character");
  CharOpts fo;
  add_char_opts(f, fo, false);
  f->add_option("--json", out);

  // theta
  auto* th = app.add_subcommand("theta", "the theta or theta-tilde coefficients of a restricted functional equation");
  CharOpts to;
  bool tilde = false;
  add_char_opts(th, to, true);
  th->add_flag("--tilde", tilde, "metaplectic variant");
  th->add_option("--json", out);

  // dmatrix
  auto* dm = app.add_subcommand("dmatrix", "local coefficient matrix");
  CharOpts dmo;
  std::string method = "integral", chi_case;
  add_char_opts(dm, dmo, true);
  dm->add_option("--method", method)->check(CLI::IsMember({"closed", "integral", "theta"}));
  dm->add_option("--case", chi_case, "use the canonical character of this case")
      ->check(CLI::IsMember({"trivial", "eta_pi", "ramified_power"}));
  dm->add_option("--json", out);

  // plancherel
  auto* pl = app.add_subcommand("plancherel", "inverse Plancherel measure by both routes");
  CharOpts plo;
  add_char_opts(pl, plo, true);
  pl->add_option("--json", out);

  // reducibility-table and table
  auto* rt = app.add_subcommand("reducibility-table", "reducibility verdicts at s = 0");
  auto* tb = app.add_subcommand("table", "emit a JSON table, with LaTeX alongside");
  std::string kind = "reducibility", latex;
  for (auto* a : {rt, tb}) {
    a->add_option("--p", ps)->delimiter(',');
    a->add_option("--n", ns)->delimiter(',');
    a->add_option("--point", pts);
    a->add_option("--max-conductor", cfg.max_conductor);
    a->add_option("--json", out);
    a->add_option("--latex", latex, "LaTeX output file");
  }
  tb->add_option("--kind", kind)->check(CLI::IsMember({"reducibility", "dmatrix", "factors"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*v) {
      if (all || cfg.suites.empty()) cfg.suites = suite_names();
      cfg.points = parse_points(pts, ps, ns);
      VerifyReport rep = run_suite(cfg);
      emit(out.empty() ? "-" : out, to_json(rep, timing, full));
      if (!quiet || !rep.ok())
        std::cerr << rep.records.size() << " records, " << rep.failures() << " failures\n";
      for (const auto& r : rep.records)
        if (!r.pass) std::cerr << "FAIL " << r.suite << " " << r.id << " " << r.params.dump() << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*f) {
      MultChar chi = make_chi(fo);
      AddChar psi = make_psi(fo);
      FieldCtx ctx(fo.p, 1);
      json j = {{"schema", kSchemaVersion},
                {"chi", to_json(chi)},
                {"psi", to_json(psi)},
                {"L", to_json(lfactor(chi))},
                {"epsilon", to_json(epsilon(chi, psi, ctx))},
                {"gamma", to_json(tate_gamma(chi, psi, ctx))}};
      if (fo.p % 2 == 1) j["metaplectic_gamma"] = to_json(meta_gamma(chi, psi, FieldCtx(fo.p, 2)));
      emit(out, j);
      return 0;
    }
    if (*th) {
      MultChar chi = make_chi(to);
      AddChar psi = make_psi(to);
      FieldCtx ctx(to.p, to.n);
      json coeffs = json::array();
      for (int m = 0; m < static_cast<int>(to.n); ++m)
        coeffs.push_back(to_json(tilde ? theta_tilde(m, chi, psi, static_cast<int>(to.n), ctx)
                                       : theta(m, chi, psi, static_cast<int>(to.n), ctx)));
      emit(out, {{"schema", kSchemaVersion}, {"ctx", to_json(ctx)}, {"chi", to_json(chi)}, {"psi", to_json(psi)},
                 {"tilde", tilde}, {"theta", coeffs}});
      return 0;
    }
    if (*dm) {
      FieldCtx ctx = cover_ctx(dmo.p, dmo.n);
      MultChar chi = make_chi(dmo);
      if (!chi_case.empty()) {
        bool found = false;
        for (const auto& c : canonical_characters(ctx))
          if (to_string(classify(c, ctx)) == chi_case) {
            chi = c;
            found = true;
            break;
          }
        if (!found) throw DomainError("no canonical character of case " + chi_case + " at this point");
      }
      DMethod m = method == "closed" ? DMethod::closed : method == "theta" ? DMethod::theta : DMethod::integral;
      json j = to_json(dmatrix(chi, make_psi(dmo), ctx, m));
      j["method"] = method;
      emit(out, j);
      return 0;
    }
    if (*pl) {
      FieldCtx ctx = cover_ctx(plo.p, plo.n);
      MultChar chi = make_chi(plo);
      AddChar psi = make_psi(plo);
      RatFun a = plancherel(chi, psi, ctx, PlancherelMethod::formula);
      json j = {{"schema", kSchemaVersion}, {"chi", to_json(chi)}, {"formula", to_json(a)}};
      bool ok = true;
      if (psi.conductor() == 0) {
        RatFun b = plancherel(chi, psi, ctx, PlancherelMethod::matrices);
        j["matrices"] = to_json(b);
        ok = a == b;
        j["agree"] = ok;
      }
      emit(out, j);
      return ok ? 0 : 1;
    }
    if (*rt || *tb) {
      cfg.points = parse_points(pts, ps, ns);
      Table t = emit_table(*rt ? TableKind::reducibility : table_kind_from_string(kind), cfg);
      emit(out, t.data);
      if (!latex.empty()) write(latex, t.latex);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
