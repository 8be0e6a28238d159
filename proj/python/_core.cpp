#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padiclf/errors.hpp"
#include "padiclf/factors.hpp"
#include "padiclf/metaplectic.hpp"
#include "padiclf/serialize.hpp"
#include "padiclf/verify.hpp"
#include "padiclf/weil.hpp"

namespace py = pybind11;
using namespace padiclf;

namespace {

FieldCtx cover_context(std::uint32_t p, std::uint32_t n) {
  FieldCtx ctx(p, n);
  return n % 4 == 0 ? normalize_uniformizer(ctx, AddChar::standard(p)) : ctx;
}

DMethod dmethod(const std::string& s) {
  if (s == "closed") return DMethod::closed;
  if (s == "integral") return DMethod::integral;
  if (s == "theta") return DMethod::theta;
  throw DomainError("unknown method " + s);
}

JobConfig job(const std::vector<std::string>& suites, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& points,
              std::uint64_t seed, int samples, int max_conductor, unsigned threads) {
  JobConfig c;
  c.suites = suites;
  c.points = points;
  c.seed = seed;
  c.samples = samples;
  c.max_conductor = max_conductor;
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // translators run in reverse registration order, so the subclass goes last
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<CycNum>(m, "CycNum")
      .def(py::init([](const std::string& s) { return parse_value(s); }), py::arg("value"))
      .def(py::self == py::self)
      .def(py::self * py::self)
      .def("inverse", &CycNum::inverse)
      .def("to_json", [](const CycNum& c) { return to_json(c).dump(); })
      .def_static("from_json", [](const std::string& s) { return cycnum_from_json(json::parse(s)); })
      .def("__str__", &CycNum::to_string)
      .def("__repr__", [](const CycNum& c) { return "CycNum(" + c.to_string() + ")"; });

  py::class_<RatFun>(m, "RatFun")
      .def(py::init([](long c) { return RatFun(c); }), py::arg("constant") = 0)
      .def(py::self == py::self)
      .def(py::self * py::self)
      .def(py::self + py::self)
      .def("inverse", &RatFun::inverse)
      .def("is_zero", &RatFun::is_zero)
      .def_property_readonly("q", &RatFun::q)
      .def("to_json", [](const RatFun& f) { return to_json(f).dump(); })
      .def_static("from_json", [](const std::string& s) { return ratfun_from_json(json::parse(s)); })
      .def("__str__", &RatFun::to_string)
      .def("__repr__", [](const RatFun& f) { return "RatFun(" + f.to_string() + ")"; });

  py::class_<FieldCtx>(m, "FieldCtx")
      .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("p"), py::arg("n") = 1)
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("n", &FieldCtx::n)
      .def_property_readonly("uniformizer_unit", &FieldCtx::uniformizer_unit)
      .def("to_json", [](const FieldCtx& c) { return to_json(c).dump(); });
  m.def("cover_context", &cover_context, py::arg("p"), py::arg("n"),
        "FieldCtx with the uniformizer normalized so that the Weil index of pi is 1 when 4 | n");

  py::class_<MultChar>(m, "MultChar")
      .def(py::init([](std::uint32_t p, int e, std::int64_t k, const std::string& v) {
             return MultChar(p, e, k, parse_value(v));
           }),
           py::arg("p"), py::arg("e") = 0, py::arg("k") = 0, py::arg("value_at_pi") = "0/1")
      .def_property_readonly("conductor", &MultChar::conductor)
      .def("inverse", &MultChar::inverse)
      .def("pow", &MultChar::pow)
      .def(py::self == py::self)
      .def("to_json", [](const MultChar& c) { return to_json(c).dump(); })
      .def("__repr__", &MultChar::to_string);

  py::class_<AddChar>(m, "AddChar")
      .def(py::init([](std::uint32_t p, int v, std::uint64_t u) { return AddChar(PadicNum::make(p, v, u)); }),
           py::arg("p"), py::arg("valuation") = 0, py::arg("unit") = 1)
      .def_property_readonly("conductor", &AddChar::conductor)
      .def("__repr__", &AddChar::to_string);

  m.def("lfactor", &lfactor, py::arg("chi"));
  m.def("tate_gamma", &tate_gamma, py::arg("chi"), py::arg("psi"), py::arg("ctx"), py::arg("r") = 0);
  m.def("epsilon", &epsilon, py::arg("chi"), py::arg("psi"), py::arg("ctx"));
  m.def("meta_gamma", &meta_gamma, py::arg("chi"), py::arg("psi"), py::arg("ctx"));
  m.def("sweet_integral", &sweet_integral, py::arg("chi"), py::arg("psi"), py::arg("M"), py::arg("ctx"));
  m.def("theta", &theta, py::arg("m"), py::arg("chi"), py::arg("psi"), py::arg("n"), py::arg("ctx"));
  m.def("theta_tilde", &theta_tilde, py::arg("m"), py::arg("chi"), py::arg("psi"), py::arg("n"), py::arg("ctx"));
  m.def(
      "dmatrix",
      [](const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, const std::string& method) {
        return dmatrix(chi, psi, ctx, dmethod(method)).entries;
      },
      py::arg("chi"), py::arg("psi"), py::arg("ctx"), py::arg("method") = "integral");
  m.def(
      "plancherel",
      [](const MultChar& chi, const AddChar& psi, const FieldCtx& ctx, const std::string& method) {
        if (method != "formula" && method != "matrices") throw DomainError("unknown method " + method);
        return plancherel(chi, psi, ctx, method == "formula" ? PlancherelMethod::formula : PlancherelMethod::matrices);
      },
      py::arg("chi"), py::arg("psi"), py::arg("ctx"), py::arg("method") = "formula");
  m.def(
      "reducible_at_zero",
      [](const MultChar& chi, const AddChar& psi, const FieldCtx& ctx) {
        Reducibility r = reducible_at_zero(chi, psi, ctx);
        py::dict d;
        d["predicate"] = r.predicate;
        d["self_dual"] = r.self_dual;
        d["analytic_at_zero"] = r.analytic_at_zero;
        d["analytic"] = r.analytic;
        return d;
      },
      py::arg("chi"), py::arg("psi"), py::arg("ctx"));
  m.def("canonical_characters", &canonical_characters, py::arg("ctx"), py::arg("max_conductor") = 2);
  m.def("character_classes", &character_classes, py::arg("ctx"), py::arg("max_conductor") = 1);
  m.def("suite_names", &suite_names);

  m.def(
      "_run_suite",
      [](const std::vector<std::string>& suites, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& points,
         std::uint64_t seed, int samples, int max_conductor, unsigned threads, bool full) {
        JobConfig c = job(suites, points, seed, samples, max_conductor, threads);
        VerifyReport r;
        {
          py::gil_scoped_release nogil;
          r = run_suite(c);
        }
        return to_json(r, false, full).dump();
      },
      py::arg("suites"), py::arg("points"), py::arg("seed"), py::arg("samples"), py::arg("max_conductor"),
      py::arg("threads"), py::arg("full"));
  m.def(
      "_emit_table",
      [](const std::string& kind, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& points, int max_conductor) {
        JobConfig c = job({}, points, 1, 10, max_conductor, 0);
        Table t = emit_table(table_kind_from_string(kind), c);
        return std::make_pair(t.data.dump(), t.latex);
      },
      py::arg("kind"), py::arg("points"), py::arg("max_conductor"));
}
