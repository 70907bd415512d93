// _qzeta: python bindings for the exact q-zeta approximant library.
// Scalars cross the boundary exactly: mpz_class <-> int,
// mpq_class <-> fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qzeta/suites.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// decimal digits of any python integer-like (bool included)
inline std::string int_digits(handle h) {
  object as_long = reinterpret_steal<object>(PyNumber_Long(h.ptr()));
  if (!as_long) throw error_already_set();
  return std::string(str(as_long));
}

template <>
struct type_caster<qzeta::BigInt> {
 public:
  PYBIND11_TYPE_CASTER(qzeta::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!isinstance<py::int_>(src)) return false;
    value = qzeta::BigInt(int_digits(src));
    return true;
  }

  static handle cast(const qzeta::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<qzeta::BigRational> {
 public:
  PYBIND11_TYPE_CASTER(qzeta::BigRational, const_name("Fraction"));

  bool load(handle src, bool) {
    if (isinstance<py::int_>(src)) {
      value = qzeta::BigRational(qzeta::BigInt(int_digits(src)));
      return true;
    }
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
    qzeta::BigInt num(int_digits(src.attr("numerator")));
    qzeta::BigInt den(int_digits(src.attr("denominator")));
    value = qzeta::make_rational(std::move(num), std::move(den));
    return true;
  }

  static handle cast(const qzeta::BigRational& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
    py::object den = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace qzeta;

std::vector<BigRational> poly_coeffs(const RatPoly& f) { return f.coeffs(); }

RatPoly poly_from_coeffs(const std::vector<BigRational>& coeffs) {
  return RatPoly(coeffs);
}

}  // namespace

PYBIND11_MODULE(_qzeta, mod) {
  mod.doc() =
      "Exact rational approximants to zeta_q(1), zeta_q(2) for q = 1/p: "
      "multiple little q-Jacobi polynomials, cyclotomic normalizers, interval "
      "enclosures, and the congruence certificates for linear independence.";

  py::class_<QContext>(mod, "QContext")
      .def(py::init<long>(), py::arg("p"))
      .def_readonly("p", &QContext::p)
      .def_readonly("q", &QContext::q)
      .def("__repr__",
           [](const QContext& c) { return "QContext(p=" + std::to_string(c.p) + ")"; });

  py::class_<RationalInterval>(mod, "RationalInterval")
      .def(py::init<BigRational, BigRational>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &RationalInterval::lo)
      .def_readonly("hi", &RationalInterval::hi)
      .def("width", &RationalInterval::width)
      .def("midpoint", &RationalInterval::midpoint)
      .def("contains_zero", &RationalInterval::contains_zero)
      .def("__repr__", [](const RationalInterval& iv) { return to_string(iv, 17); });

  // q-calculus
  mod.def("qpochhammer", &qpochhammer, py::arg("a"), py::arg("q"), py::arg("n"));
  mod.def(
      "gauss_binomial",
      [](int n, int k, const BigRational& base) { return gauss_binomial(n, k, base); },
      py::arg("n"), py::arg("k"), py::arg("base"));
  mod.def(
      "q_derivative",
      [](const std::vector<BigRational>& coeffs, const BigRational& r) {
        return poly_coeffs(q_derivative(poly_from_coeffs(coeffs), r));
      },
      py::arg("coeffs"), py::arg("r"),
      "coefficients of D_r f, f given by its monomial coefficients");
  mod.def("power_moment",
          [](int s, long p) { return power_moment(s, QContext(p)); }, py::arg("s"),
          py::arg("p"));
  mod.def("log_moment", [](int s, long p) { return log_moment(s, QContext(p)); },
          py::arg("s"), py::arg("p"));
  mod.def("modified_moment",
          [](int r, long p) { return modified_moment(r, QContext(p)); }, py::arg("r"),
          py::arg("p"));
  mod.def("log_modified_moment",
          [](int r, long p) { return log_modified_moment(r, QContext(p)); }, py::arg("r"),
          py::arg("p"));

  // cyclotomic
  mod.def(
      "cyclotomic_coeffs",
      [](int n) {
        CycloTable table;
        return table.phi(n).coeffs();
      },
      py::arg("n"), "coefficients of Phi_n, ascending degree");
  mod.def(
      "d_eval",
      [](int n, long p) {
        CycloTable table;
        return table.d_eval(n, p);
      },
      py::arg("n"), py::arg("p"));
  mod.def(
      "d_is_common_multiple",
      [](int n, long p) {
        CycloTable table;
        return d_is_common_multiple(n, p, table);
      },
      py::arg("n"), py::arg("p"));
  mod.def(
      "d_growth_exponent",
      [](int n, long p) {
        CycloTable table;
        return d_growth_exponent(n, p, table);
      },
      py::arg("n"), py::arg("p"));

  // q-Jacobi
  py::class_<QJacobiPoly>(mod, "QJacobiPoly")
      .def_readonly("n", &QJacobiPoly::n)
      .def_readonly("m", &QJacobiPoly::m)
      .def_readonly("p", &QJacobiPoly::p)
      .def("coefficients", [](const QJacobiPoly& f) { return poly_coeffs(f.monomial); })
      .def("__repr__", [](const QJacobiPoly& f) {
        return "QJacobiPoly(n=" + std::to_string(f.n) + ", m=" + std::to_string(f.m) +
               ", p=" + std::to_string(f.p) + ")";
      });
  mod.def("build_explicit",
          [](int n, int m, long p) { return build_explicit(n, m, QContext(p)); },
          py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def("build_pochhammer",
          [](int n, int m, long p) { return build_pochhammer(n, m, QContext(p)); },
          py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def("build_rodrigues",
          [](int n, int m, long p) { return build_rodrigues(n, m, QContext(p)); },
          py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def("verify_orthogonality", &verify_orthogonality, py::arg("poly"));
  mod.def("leading_coefficient",
          [](int n, int m, long p) { return leading_coefficient(n, m, QContext(p)); },
          py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def("count_roots_in_unit_interval", &count_roots_in_unit_interval, py::arg("poly"));
  mod.def("eval_at_power", &eval_at_power, py::arg("poly"), py::arg("N"));

  // approximants
  py::class_<ApproximantRow>(mod, "ApproximantRow")
      .def_readonly("p", &ApproximantRow::p)
      .def_readonly("n", &ApproximantRow::n)
      .def_readonly("d", &ApproximantRow::d)
      .def_readonly("pnm_value", &ApproximantRow::pnm_value)
      .def_readonly("qnm_value", &ApproximantRow::qnm_value)
      .def_readonly("rnm_value", &ApproximantRow::rnm_value)
      .def_readonly("beta", &ApproximantRow::beta)
      .def_readonly("alpha", &ApproximantRow::alpha)
      .def_readonly("b", &ApproximantRow::b)
      .def_readonly("a", &ApproximantRow::a)
      .def_readonly("p_star", &ApproximantRow::p_star)
      .def_readonly("q_star", &ApproximantRow::q_star)
      .def_readonly("r_star", &ApproximantRow::r_star)
      .def_readonly("residual_bound1", &ApproximantRow::residual_bound1)
      .def_readonly("residual_bound2", &ApproximantRow::residual_bound2)
      .def("__repr__", [](const ApproximantRow& r) {
        return "ApproximantRow(p=" + std::to_string(r.p) + ", n=" + std::to_string(r.n) +
               ")";
      });
  mod.def(
      "q_numerator_at_power",
      [](int n, int m, long p) { return q_numerator_at_power(n, m, QContext(p)); },
      py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def(
      "r_numerator_at_power",
      [](int n, int m, long p) { return r_numerator_at_power(n, m, QContext(p)); },
      py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def(
      "build_row",
      [](int n, long p) {
        CycloTable table;
        return build_row(n, QContext(p), table);
      },
      py::arg("n"), py::arg("p"));
  mod.def(
      "residual_zeta1",
      [](const ApproximantRow& row, long depth) {
        const long eff = depth > 0 ? depth : default_depth(row.n);
        return residual_zeta1(row, zeta_q1(QContext(row.p), eff), eff);
      },
      py::arg("row"), py::arg("depth") = 0);
  mod.def(
      "residual_zeta2",
      [](const ApproximantRow& row, long depth) {
        const long eff = depth > 0 ? depth : default_depth(row.n);
        return residual_zeta2(row, zeta_q2(QContext(row.p), eff), eff);
      },
      py::arg("row"), py::arg("depth") = 0);
  mod.def(
      "extralemma_identity",
      [](int n, int m, long p) { return extralemma_identity(n, m, QContext(p)); },
      py::arg("n"), py::arg("m"), py::arg("p"));
  mod.def(
      "remainder_integral_check",
      [](int n, int m, long p, long depth) {
        return remainder_integral_check(n, m, QContext(p), depth);
      },
      py::arg("n"), py::arg("m"), py::arg("p"), py::arg("depth"));

  // zeta enclosures and constants
  mod.def("zeta_q1", [](long p, long depth) { return zeta_q1(QContext(p), depth); },
          py::arg("p"), py::arg("depth"));
  mod.def("zeta_q2", [](long p, long depth) { return zeta_q2(QContext(p), depth); },
          py::arg("p"), py::arg("depth"));
  mod.def("default_depth", &default_depth, py::arg("n"));
  mod.def("pi_squared", [] { return pi_squared(); });
  mod.def("irrationality_measure_constants", [] {
    auto [m1, m2] = irrationality_measure_constants();
    return py::make_tuple(m1, m2);
  });

  // independence
  mod.def("jonathan_congruence", &jonathan_congruence, py::arg("n"), py::arg("m"));
  mod.def(
      "step1_congruence",
      [](const ApproximantRow& row, long a, long b, long c) {
        CycloTable table;
        return step1_congruence(row, {a, b, c}, table);
      },
      py::arg("row"), py::arg("a"), py::arg("b"), py::arg("c"));
  mod.def(
      "step3_nondivisibility",
      [](int n, long p) {
        CycloTable table;
        return step3_nondivisibility(n, p, table);
      },
      py::arg("n"), py::arg("p"));
  mod.def(
      "legendre_divisor_check",
      [](int n, long p) -> std::string {
        CycloTable table;
        switch (legendre_divisor_check(n, p, table)) {
          case CheckStatus::Pass: return "PASS";
          case CheckStatus::Fail: return "FAIL";
          default: return "NOT_ATTEMPTED";
        }
      },
      py::arg("n"), py::arg("p"));

  // suite / sweep front ends (JSON and CSV strings, same as the CLI)
  mod.def(
      "verify_report_json",
      [](const std::string& suite, std::vector<long> ps, int n_max, long abc_bound,
         long depth) {
        RunConfig cfg;
        cfg.suite = suite;
        cfg.ps = std::move(ps);
        cfg.n_max = n_max;
        cfg.abc_bound = abc_bound;
        cfg.depth = depth;
        return run_verify(cfg).to_json();
      },
      py::arg("suite"), py::arg("ps"), py::arg("n_max") = 8, py::arg("abc_bound") = 3,
      py::arg("depth") = 0);
  mod.def(
      "sweep_csv",
      [](long p, int n_max, long depth) { return sweep_csv(run_sweep(p, n_max, depth)); },
      py::arg("p"), py::arg("n_max"), py::arg("depth") = 0);
}
