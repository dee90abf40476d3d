#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pairwords/asymptotics.hpp"
#include "pairwords/cli.hpp"
#include "pairwords/core.hpp"
#include "pairwords/exactgf.hpp"
#include "pairwords/montecarlo.hpp"
#include "pairwords/oracle.hpp"
#include "pairwords/pairset.hpp"
#include "pairwords/transfer.hpp"

namespace py = pybind11;
using namespace pairwords;

namespace {

py::dict fourier_dict(const FourierValue& v) {
  py::dict d;
  d["value"] = v.value();
  d["smooth"] = v.smooth;
  d["periodic"] = v.periodic;
  d["correction"] = v.correction;
  d["terms"] = v.terms;
  d["truncation_bound"] = v.truncation_bound;
  d["imag_residue"] = v.imag_residue;
  return d;
}

py::dict summary_dict(const StatSummary& s) {
  py::dict d;
  d["mean"] = s.mean;
  d["variance"] = s.variance;
  d["histogram"] = s.histogram;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pairwords, m) {
  m.doc() = "Distinct adjacent pairs in random words over a geometric alphabet";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ResourceCapExceeded>(m, "ResourceCapExceeded", PyExc_RuntimeError);

  m.def("letter_prob", [](double p, long i) { return GeomParams(p).letter_prob(i); }, py::arg("p"), py::arg("i"));
  m.def(
      "sample_word",
      [](double p, std::size_t n, std::uint64_t seed, std::uint64_t index) {
        Rng rng = Rng::substream(seed, index);
        return sample_word(GeomParams(p), n, rng);
      },
      py::arg("p"), py::arg("n"), py::arg("seed"), py::arg("index") = 0);
  m.def("pair_counts", [](const Word& w) {
    const auto c = count_distinct_pairs(w);
    return py::make_tuple(c.x1, c.x2, c.x3);
  });
  m.def("parse_pairs", [](const std::string& text) { return parse_pairs(text).pairs(); });

  m.def(
      "avoid_prob_matrix",
      [](double p, const std::vector<Pair>& pairs, int n) { return avoid_prob_matrix(GeomParams(p), PairSet(pairs), n); },
      py::arg("p"), py::arg("pairs"), py::arg("n"));
  m.def(
      "avoid_prob_enum",
      [](double p, const std::vector<Pair>& pairs, int n) { return avoid_prob_enum(GeomParams(p), pairs, n); },
      py::arg("p"), py::arg("pairs"), py::arg("n"));
  m.def(
      "avoidance_gf_coefficients",
      [](double p, const std::vector<Pair>& pairs, std::size_t count) {
        return avoidance_gf(GeomParams(p), PairSet(pairs)).coefficients(count);
      },
      py::arg("p"), py::arg("pairs"), py::arg("count"));
  m.def(
      "dominant_eigen",
      [](double p, const std::vector<Pair>& pairs) {
        const auto r = dominant_eigen(GeomParams(p), PairSet(pairs));
        return py::make_tuple(r.lambda, r.c1);
      },
      py::arg("p"), py::arg("pairs"));
  m.def(
      "series",
      [](const std::string& pairs, int order) {
        const auto sp = parse_symbolic_pairs(pairs);
        std::vector<std::string> names;
        for (const auto& nm : sp.names) names.push_back("P" + nm);
        const auto r = algorithm1_series(sp.pairs, order);
        py::dict d;
        d["lambda"] = r.lambda.to_string(names);
        d["C1"] = r.c1.to_string(names);
        return d;
      },
      py::arg("pairs"), py::arg("order"));

  m.def(
      "prob_pair_occurs", [](double p, Letter i, Letter j, long n) { return prob_pair_occurs(GeomParams(p), i, j, n); },
      py::arg("p"), py::arg("i"), py::arg("j"), py::arg("n"));
  m.def(
      "joint_prob", [](double p, Pair a, Pair b, long n) { return joint_prob(GeomParams(p), a, b, n); }, py::arg("p"),
      py::arg("a"), py::arg("b"), py::arg("n"));
  m.def(
      "mean_total",
      [](double p, long n, double tol) {
        const auto r = mean_total(GeomParams(p), n, tol);
        py::dict d;
        d["x1"] = r.diagonal;
        d["x2"] = r.total;
        d["x3"] = r.off_diagonal;
        d["tail_bound"] = r.tail_bound;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("tol") = 1e-10);

  auto stat_fn = [&m](const char* name, FourierValue (*fn)(double, const GeomParams&)) {
    m.def(name, [fn](double p, double n) { return fourier_dict(fn(n, GeomParams(p))); }, py::arg("p"), py::arg("n"));
  };
  stat_fn("mean_x1", &mean_x1);
  stat_fn("mean_x3", &mean_x3);
  stat_fn("var_x1", &var_x1);
  stat_fn("var_x2", &var_x2);
  stat_fn("var_x3", &var_x3);
  m.def(
      "cumulant", [](double p, double n, int order) { return fourier_dict(cumulant(n, order, GeomParams(p))); },
      py::arg("p"), py::arg("n"), py::arg("order"));
  m.def("cumulant_coefficients", &cumulant_coefficients, py::arg("m"));
  m.def(
      "G_sum", [](double p, double x) { return fourier_dict(G_sum(x, GeomParams(p))); }, py::arg("p"), py::arg("x"));
  m.def("F1_prime_at_0", [](double p) { return F1_prime_at_0(GeomParams(p)); }, py::arg("p"));
  m.def(
      "limit_density_f", [](double p, double eta) { return limit_density_f(GeomParams(p), eta); }, py::arg("p"),
      py::arg("eta"));
  m.def(
      "limit_cdf_F", [](double p, double eta) { return limit_cdf_F(GeomParams(p), eta); }, py::arg("p"),
      py::arg("eta"));
  m.def(
      "cov_main_term",
      [](double p, Pair a, Pair b, double n) {
        const auto t = cov_main_term(a, b, n, GeomParams(p));
        py::dict d;
        d["label"] = t.label;
        d["main"] = t.main;
        d["error_scale"] = t.error_scale;
        d["error_form"] = t.error_form;
        return d;
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "simulate",
      [](double p, std::uint64_t n, std::uint64_t words, std::uint64_t seed, unsigned workers) {
        SimResult r;
        {
          py::gil_scoped_release release;
          r = simulate(GeomParams(p), n, words, seed, workers);
        }
        py::dict d;
        d["n"] = r.n;
        d["words"] = r.words;
        d["seed"] = r.seed;
        d["x1"] = summary_dict(r.stats[0]);
        d["x2"] = summary_dict(r.stats[1]);
        d["x3"] = summary_dict(r.stats[2]);
        d["clamped_letters"] = r.clamped_letters;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("words"), py::arg("seed"), py::arg("workers") = 0);

  m.def("run_cli", [](std::vector<std::string> args) {
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
