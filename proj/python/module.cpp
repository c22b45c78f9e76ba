#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conglab/report.hpp"

namespace py = pybind11;
using namespace conglab;

namespace {

py::object py_sqrt_mod(i64 a, u64 pv) {
  Prime p(pv);
  auto r = p.sqrt_mod(p.reduce(a));
  if (!r) return py::none();
  return py::int_(*r);
}

py::object py_represent(u64 pv, u64 d, int scale) {
  auto r = represent(pv, d, scale);
  if (!r) return py::none();
  return py::make_tuple(r->first, r->second);
}

u64 py_legendre_eval(u64 n, i64 t, u64 pv) {
  Prime p(pv);
  FpField f(p);
  return legendre_eval(f, n, p.reduce(t));
}

std::vector<i64> py_eta_coeffs(u64 a1, u64 a2, u64 a3, u64 a4, u64 degree) {
  auto c = eta_quotient_coeffs({a1, a2, a3, a4}, degree);
  std::vector<i64> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = static_cast<i64>(c[i]);
  return out;
}

std::vector<u64> py_franel(u64 pv) { return build_franel(Prime(pv)); }

std::vector<u64> py_t_sequence(u64 pv) {
  PrimeContext c(pv);
  return c.T2;
}

std::vector<u64> py_d_sequence(u64 pv) {
  PrimeContext c(pv);
  return c.D2;
}

py::tuple py_quartic_image(u64 pv) {
  auto q = quartic_image_count(Prime(pv));
  return py::make_tuple(q.n_p, q.delta_defined ? py::object(py::int_(q.delta)) : py::none());
}

py::tuple py_lemma31_sides(long n) {
  auto [l, r] = lemma31_sides(n);
  return py::make_tuple(py::cast(l.str()), py::cast(r.str()));
}

std::string py_run(u64 lo, u64 hi, const std::vector<std::string>& suites, int samples, u64 seed,
                   int workers, u64 thm31_bound) {
  RunConfig cfg;
  cfg.prime_lo = lo;
  cfg.prime_hi = hi;
  if (!suites.empty()) cfg.suites = suites;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.thm31_bound = thm31_bound;
  auto rep = run_suites(cfg);
  return report_emit(rep, cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "verification engine for Legendre-polynomial and binomial-sum congruences";

  m.def("primes_in", &primes_in, py::arg("lo"), py::arg("hi"),
        "primes p with lo <= p <= hi and p > 3, ascending");
  m.def("is_prime", &is_prime_u64, py::arg("n"));
  m.def("legendre_symbol", [](i64 a, u64 pv) { return Prime(pv).legendre(a); }, py::arg("a"),
        py::arg("p"), "Legendre symbol (a/p)");
  m.def("jacobi_symbol", &jacobi_symbol, py::arg("a"), py::arg("n"));
  m.def("sqrt_mod", &py_sqrt_mod, py::arg("a"), py::arg("p"),
        "canonical square root mod p, or None");
  m.def("char_sum_cubic", [](i64 mm, i64 nn, u64 pv) { return char_sum_cubic(mm, nn, Prime(pv)); },
        py::arg("m"), py::arg("n"), py::arg("p"), "sum of ((x^3+mx+n)/p) over F_p");
  m.def("point_count", [](i64 mm, i64 nn, u64 pv) { return point_count(mm, nn, Prime(pv)); },
        py::arg("m"), py::arg("n"), py::arg("p"));
  m.def("point_count_11a", [](u64 pv) { return point_count_11a(Prime(pv)); }, py::arg("p"));
  m.def("eichler_c", [](u64 pv) { return eichler_c(Prime(pv)); }, py::arg("p"));
  m.def("quartic_image_count", &py_quartic_image, py::arg("p"),
        "(N_p, delta) with delta None for p = 1 mod 4");
  m.def("represent", &py_represent, py::arg("p"), py::arg("d"), py::arg("scale") = 1,
        "smallest-x solution of scale*p = x^2 + d y^2, or None");
  m.def("legendre_eval", &py_legendre_eval, py::arg("n"), py::arg("t"), py::arg("p"),
        "P_n(t) mod p by the three-term recurrence");
  m.def("trunc_sum_864", [](i64 x, u64 pv) { Prime p(pv); return trunc_sum_864(p.reduce(x), p); },
        py::arg("x"), py::arg("p"));
  m.def("franel", &py_franel, py::arg("p"), "Franel numbers mod p^2 for n < p");
  m.def("t_sequence", &py_t_sequence, py::arg("p"),
        "C(2k,k)C(3k,k)C(6k,3k) mod p^2 for k < p");
  m.def("d_sequence", &py_d_sequence, py::arg("p"), "C(3k,k)C(6k,3k) mod p^2 for k < p");
  m.def("eta_coeffs", &py_eta_coeffs, py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"),
        py::arg("degree"), "c(a1,a2,a3,a4; n) for n <= degree (index 0 unused)");
  m.def("lemma31_sides", &py_lemma31_sides, py::arg("n"),
        "both sides of the exact product-sequence identity, as decimal strings");
  m.def("run", &py_run, py::arg("lo"), py::arg("hi"),
        py::arg("suites") = std::vector<std::string>{}, py::arg("samples") = 50,
        py::arg("seed") = 0, py::arg("workers") = 1, py::arg("thm31_bound") = 499,
        "run verification suites and return the JSON report");
  m.attr("__version__") = kEngineVersion;
}
