#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symcert/certificate.hpp"
#include "symcert/errors.hpp"
#include "symcert/inequalities.hpp"
#include "symcert/json_io.hpp"
#include "symcert/reduction.hpp"
#include "symcert/report.hpp"
#include "symcert/search.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction. Accepts int, Fraction and "p/q" or
// decimal strings; floats are rejected so that every input stays exact.
namespace pybind11::detail {
template <>
struct type_caster<symcert::Rational> {
  PYBIND11_TYPE_CASTER(symcert::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    try {
      if (PyLong_Check(src.ptr())) {
        value = symcert::parse_rational(py::str(src).cast<std::string>());
        return true;
      }
      if (py::isinstance<py::str>(src)) {
        value = symcert::parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance(src, fraction_type())) {
        const std::string num = py::str(src.attr("numerator"));
        const std::string den = py::str(src.attr("denominator"));
        value = symcert::parse_rational(num + "/" + den);
        return true;
      }
    } catch (const std::invalid_argument&) {
      return false;
    }
    return false;
  }

  static handle cast(const symcert::Rational& q, return_value_policy, handle) {
    return fraction_type()(py::int_(py::str(q.get_num().get_str())),
                           py::int_(py::str(q.get_den().get_str())))
        .release();
  }

  static py::object fraction_type() {
    return py::module_::import("fractions").attr("Fraction");
  }
};
}  // namespace pybind11::detail

namespace {

using symcert::Rational;
using symcert::Tuple;

Tuple to_tuple(const std::vector<Rational>& v) { return Tuple(v); }

std::vector<Rational> to_vector(std::span<const Rational> s) { return {s.begin(), s.end()}; }

py::object from_json(const symcert::json::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict gap(const symcert::GapReport& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["gap"] = r.gap;
  d["relation"] = std::string(symcert::to_string(r.relation));
  d["equality_case"] = std::string(symcert::to_string(r.equality_case));
  return d;
}

py::dict chain(const symcert::ChainResult& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["last_index"] = r.last_index;
  py::list steps;
  for (auto s : r.steps) steps.append(std::string(symcert::to_string(s)));
  d["steps"] = steps;
  d["first_failure"] = r.first_failure ? py::object(py::int_(*r.first_failure)) : py::none();
  d["precondition_break"] =
      r.precondition_break ? py::object(py::int_(*r.precondition_break)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact symmetric-function inequalities and their certificates";

  py::register_exception<symcert::RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<symcert::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<symcert::CertificateViolation>(m, "CertificateViolation", PyExc_RuntimeError);

  m.def("sigma", [](const std::vector<Rational>& x) {
    const symcert::SymProfile s = symcert::sigma_all(to_tuple(x));
    return to_vector(s.values());
  }, py::arg("x"), "Elementary symmetric functions sigma_0..sigma_n.");
  m.def("sigma_naive", [](const std::vector<Rational>& x) {
    const symcert::SymProfile s = symcert::sigma_naive(to_tuple(x));
    return to_vector(s.values());
  }, py::arg("x"));
  m.def("means", [](const std::vector<Rational>& x) { return symcert::e_all(to_tuple(x)); },
        py::arg("x"), "Normalized means E_0..E_n.");

  m.def("newton_gap", [](const std::vector<Rational>& x, int k) {
    return gap(symcert::newton_gap(to_tuple(x), k));
  }, py::arg("x"), py::arg("k"));
  m.def("gen_nm_gap", [](const std::vector<Rational>& x, const Rational& alpha, int k) {
    return gap(symcert::gen_nm_gap(to_tuple(x), alpha, k));
  }, py::arg("x"), py::arg("alpha"), py::arg("k"));
  m.def("linear_combo_gap", [](const std::vector<Rational>& x, const std::vector<Rational>& coeffs) {
    return gap(symcert::linear_combo_gap(to_tuple(x), symcert::CoeffVector(coeffs)));
  }, py::arg("x"), py::arg("coeffs"));
  m.def("quantitative_gap", [](const std::vector<Rational>& x, const Rational& alpha, int k,
                               std::optional<Rational> theta) {
    const Tuple t = to_tuple(x);
    const int n = static_cast<int>(t.size());
    return gap(symcert::quantitative_gap(t, alpha, k, theta ? *theta : symcert::theta_for(n, k)));
  }, py::arg("x"), py::arg("alpha"), py::arg("k"), py::arg("theta") = py::none());
  m.def("liu_ren_gap", [](const std::vector<Rational>& x, const Rational& alpha, int k) {
    return gap(symcert::liu_ren_gap(to_tuple(x), alpha, k));
  }, py::arg("x"), py::arg("alpha"), py::arg("k"));
  m.def("maclaurin_chain", [](const std::vector<Rational>& x) {
    return chain(symcert::maclaurin_chain_check(to_tuple(x)));
  }, py::arg("x"));
  m.def("gen_maclaurin_chain", [](const std::vector<Rational>& x, const Rational& alpha) {
    return chain(symcert::gen_maclaurin_chain(to_tuple(x), alpha));
  }, py::arg("x"), py::arg("alpha"));
  m.def("remark_violation", [](int n, int k) {
    const auto w = symcert::remark_violation(n, k);
    py::dict d;
    d["x"] = to_vector(w.x.entries());
    d["alpha"] = w.alpha;
    d["k"] = w.k;
    d["report"] = gap(w.report);
    return d;
  }, py::arg("n"), py::arg("k"));

  m.def("theta_for", &symcert::theta_for, py::arg("n"), py::arg("k"));
  m.def("cert_constants", [](int n, int k) {
    const auto cc = symcert::cert_constants(n, k);
    py::dict d;
    d["theta1"] = cc.theta1;
    d["theta2"] = cc.theta2;
    d["t"] = cc.t;
    d["A1"] = cc.A1;
    d["A2"] = cc.A2;
    d["A3"] = cc.A3;
    d["discriminant"] = cc.discriminant();
    return d;
  }, py::arg("n"), py::arg("k"));
  m.def("decomposition_residual", [](const std::vector<Rational>& z, const Rational& alpha, int n, int k) {
    if (z.size() != 3) throw symcert::RangeError("decomposition_residual: z must have 3 entries");
    return symcert::decomposition_residual(z, alpha, n, k);
  }, py::arg("z"), py::arg("alpha"), py::arg("n"), py::arg("k"));
  m.def("symbolic_check", [](int n, int k) {
    return from_json(symcert::json::symbolic_check(symcert::symbolic_decomposition_check(n, k)));
  }, py::arg("n"), py::arg("k"));
  m.def("lemma_scan", [](int n_min, int n_max, unsigned threads) {
    py::list rows;
    for (const auto& row : symcert::lemma_scan(n_min, n_max, threads))
      rows.append(from_json(symcert::json::lemma_row(row)));
    return rows;
  }, py::arg("n_min"), py::arg("n_max"), py::arg("threads") = 1);

  m.def("associated_cubic", [](const std::vector<Rational>& x, int k) {
    const auto c = symcert::associated_cubic(to_tuple(x), k);
    return std::vector<Rational>{c.c0, c.c1, c.c2, c.c3};
  }, py::arg("x"), py::arg("k"));
  m.def("cubic_discriminant", [](const std::vector<Rational>& c) {
    if (c.size() != 4) throw symcert::RangeError("cubic_discriminant: expected 4 coefficients");
    return symcert::cubic_discriminant({c[0], c[1], c[2], c[3]});
  }, py::arg("coeffs"));
  m.def("reduce_to_three", [](const std::vector<Rational>& x, int k, const Rational& alpha) {
    const Tuple t = to_tuple(x);
    const auto r = symcert::reduce_to_three(t, k, alpha);
    py::dict d = from_json(symcert::json::root_triple(r));
    d["reduced_gap"] = symcert::reduced_gap(r, alpha);
    return d;
  }, py::arg("x"), py::arg("k"), py::arg("alpha") = Rational(0));

  m.def("find_counterexample", [](int m_, int n, std::uint64_t seed, std::uint64_t budget, unsigned threads) {
    symcert::Conjecture15Options opts;
    opts.threads = threads;
    const auto r = [&] {
      py::gil_scoped_release release;
      return symcert::find_counterexample_15(m_, n, seed, budget, opts);
    }();
    return from_json(symcert::json::conjecture15(r, m_, n, budget));
  }, py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("budget"), py::arg("threads") = 1);
  m.def("empirical_theta", [](int n, int k, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
    const auto s = [&] {
      py::gil_scoped_release release;
      return symcert::empirical_theta(n, k, samples, seed, threads);
    }();
    return from_json(symcert::json::theta_summary(s));
  }, py::arg("n"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);
  m.def("report", [](int n_max, std::uint64_t seed, std::uint64_t samples) {
    symcert::ReportConfig cfg;
    cfg.n_max = n_max;
    cfg.seed = seed;
    cfg.samples = samples;
    return symcert::report_bundle(cfg).dump(2);
  }, py::arg("n_max") = 8, py::arg("seed") = 1, py::arg("samples") = 200,
     "Report bundle as a JSON string.");
}
