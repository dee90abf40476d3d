#include "pairwords/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairwords/asymptotics.hpp"
#include "pairwords/exactgf.hpp"
#include "pairwords/montecarlo.hpp"
#include "pairwords/oracle.hpp"
#include "pairwords/pairset.hpp"
#include "pairwords/parallel.hpp"
#include "pairwords/transfer.hpp"

namespace pairwords {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  json inputs = json::object();
  Table table;
  std::optional<double> tail_bound;
  std::optional<double> periodic_part;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> text;  // used by --format text
};

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return number(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    return std::isfinite(v) ? json(v) : json(number(v));
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void write_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json doc;
    doc["inputs"] = r.inputs;
    json rows = json::array();
    for (const auto& row : r.table.rows) {
      json obj = json::object();
      for (std::size_t k = 0; k < r.table.columns.size(); ++k) obj[r.table.columns[k]] = cell_json(row[k]);
      rows.push_back(obj);
    }
    doc["values"] = rows;
    doc["tail_bound"] = optional_json(r.tail_bound);
    doc["periodic_part"] = optional_json(r.periodic_part);
    doc["seed"] = optional_json(r.seed);
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "text" && !r.text.empty()) {
    for (const auto& line : r.text) out << line << "\n";
    return;
  }
  for (std::size_t k = 0; k < r.table.columns.size(); ++k)
    out << (k ? "," : "") << csv_field(r.table.columns[k]);
  out << "\r\n";
  for (const auto& row : r.table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(cell_text(row[k]));
    out << "\r\n";
  }
}

// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_grid(const std::string& text) {
  double a, b, step;
  char c1, c2;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) || b < a ||
      !(in >> std::ws).eof())
    throw std::invalid_argument("grid must look like a:b:step with step > 0 and a <= b");
  std::vector<double> grid;
  const long count = static_cast<long>(std::floor((b - a) / step + 1e-9));
  if (count > 1'000'000) throw std::invalid_argument("grid has too many points");
  for (long k = 0; k <= count; ++k) grid.push_back(a + k * step);
  return grid;
}

double max_abs(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

FourierValue asymptotic_value(const std::string& what, Stat stat, double n, int order, const GeomParams& g) {
  if (what == "cumulant") {
    if (stat != Stat::X1) throw std::invalid_argument("cumulants are available for x1 only");
    return cumulant(n, order, g);
  }
  if (what == "mean") {
    if (stat == Stat::X1) return mean_x1(n, g);
    if (stat == Stat::X3) return mean_x3(n, g);
    const auto a = mean_x1(n, g), b = mean_x3(n, g);
    FourierValue v;
    v.smooth = a.smooth + b.smooth;
    v.periodic = a.periodic + b.periodic;
    v.terms = std::max(a.terms, b.terms);
    v.truncation_bound = a.truncation_bound + b.truncation_bound;
    v.imag_residue = a.imag_residue + b.imag_residue;
    return v;
  }
  if (stat == Stat::X1) return var_x1(n, g);
  if (stat == Stat::X2) return var_x2(n, g);
  return var_x3(n, g);
}

std::vector<Stat> parse_stats(const std::string& list) {
  std::vector<Stat> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_stat(item));
  if (out.empty()) throw std::invalid_argument("empty statistic list");
  return out;
}

std::string lower_name(Stat s) {
  std::string name = stat_name(s);
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return name;
}

// Simulated histogram rows: value, frequency and a 5-sigma binomial tolerance.
void add_simulation_rows(Report& r, const SimResult& sim, Stat stat, double shift) {
  const double N = static_cast<double>(sim.words);
  for (const auto& [v, count] : sim.stat(stat).histogram) {
    const double f = static_cast<double>(count) / N;
    r.table.rows.push_back({std::string("simulation"), static_cast<double>(v) - shift, f,
                            5.0 * std::sqrt(std::max(f * (1 - f), 1.0 / N) / N)});
  }
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinct adjacent pairs in geometric random words"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format = "csv", output;
  double p = 0.0, tol = 1e-10;
  auto p_check = CLI::Range(0.0, 1.0).description("0 < p < 1");
  auto positive = CLI::PositiveNumber;

  auto common = [&](CLI::App* sub, bool need_p = true) {
    auto* opt = sub->add_option("--p", p, "geometric parameter, 0 < p < 1")->check(p_check);
    if (need_p) opt->required();
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--output", output, "write to this file instead of stdout");
  };

  // simulate
  std::uint64_t n_words = 0, seed = 0, n_len = 0;
  unsigned workers = 0;
  bool histogram = false;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo sample means, variances and histograms");
  common(sim);
  sim->add_option("--n", n_len, "word length")->required();
  sim->add_option("--words", n_words, "number of words")->required()->check(CLI::Range(2ull, ~0ull));
  sim->add_option("--seed", seed, "random seed")->required();
  sim->add_option("--workers", workers, "worker threads (0 = all, capped by PAIRWORDS_THREADS)");
  sim->add_flag("--histogram", histogram, "emit histogram rows instead of summaries");

  // exact
  std::string exact_what;
  long n_exact = 0;
  auto* exact = app.add_subcommand("exact", "Exact E[X] (mean) or second moments (m2) with certified tails");
  common(exact);
  exact->add_option("quantity", exact_what, "mean or m2")->required()->check(CLI::IsMember({"mean", "m2"}));
  exact->add_option("--n", n_exact, "word length")->required()->check(CLI::NonNegativeNumber);
  exact->add_option("--tol", tol, "tail tolerance")->check(positive);
  exact->add_option("--workers", workers, "worker threads");

  // asymptotic
  std::string asym_what, stat_text = "x1";
  std::vector<double> n_list;
  int order = 2;
  auto* asym = app.add_subcommand("asymptotic", "Large-n mean, variance or cumulant with Fourier breakdown");
  common(asym);
  asym->add_option("quantity", asym_what, "mean, var or cumulant")
      ->required()
      ->check(CLI::IsMember({"mean", "var", "cumulant"}));
  asym->add_option("--stat", stat_text, "x1, x2 or x3")->check(CLI::IsMember({"x1", "x2", "x3"}));
  asym->add_option("--n", n_list, "word length(s), comma separated")->required()->delimiter(',')->check(positive);
  asym->add_option("--order", order, "cumulant order")->check(CLI::Range(1, 20));

  // avoid
  std::string pairs_text;
  int n_avoid = 0;
  bool with_gf = false;
  auto* avoid = app.add_subcommand("avoid", "Probability that a word avoids a set of pairs");
  common(avoid);
  avoid->add_option("--pairs", pairs_text, "pairs such as \"(1,1),(2,3)\"")->required();
  avoid->add_option("--n", n_avoid, "word length")->required()->check(CLI::NonNegativeNumber);
  avoid->add_flag("--gf", with_gf, "also print the rational generating function");

  // series
  int series_order = 4;
  bool symbolic = true;
  auto* series = app.add_subcommand("series", "Exact power series of the Perron root and constant");
  series->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
  series->add_option("--output", output, "write to this file instead of stdout");
  series->add_flag("--p-symbolic", symbolic, "letter probabilities as symbols (the only mode)");
  series->add_option("--pairs", pairs_text, "pairs over named letters, e.g. \"(i,r),(r,t)\"")->required();
  series->add_option("--order", series_order, "total degree kept")->check(CLI::Range(1, 12));

  // dist
  std::string dist_what, grid_text = "-3:5:0.25";
  double n_dist = 0.0, width = 4.0;
  auto* dist = app.add_subcommand("dist", "Limit law of X1 or Gaussian comparison for X3");
  common(dist);
  dist->add_option("which", dist_what, "x1 or x3")->required()->check(CLI::IsMember({"x1", "x3"}));
  dist->add_option("--n", n_dist, "word length")->required()->check(positive);
  dist->add_option("--eta-grid", grid_text, "eta grid a:b:step (x1)");
  dist->add_option("--width", width, "half-width in standard deviations (x3)")->check(positive);
  dist->add_option("--tol", tol, "window tolerance (x1), at least 1e-9");

  // compare
  std::string compare_stats = "x1,x3";
  auto* cmp = app.add_subcommand("compare", "Theory next to simulation, one row per n and statistic");
  common(cmp);
  cmp->add_option("--n", n_list, "word length(s), comma separated")->required()->delimiter(',')->check(positive);
  cmp->add_option("--words", n_words, "words per n")->required()->check(CLI::Range(2ull, ~0ull));
  cmp->add_option("--seed", seed, "random seed")->required();
  cmp->add_option("--workers", workers, "worker threads");
  cmp->add_option("--stat", compare_stats, "statistics, comma separated");

  // figure
  std::string fig_what, q_grid = "0.005:0.995:0.005";
  auto* fig = app.add_subcommand("figure", "Plot-ready data: f1 limit density, f2 constant of T2, f3 X3 vs Gaussian");
  common(fig, false);
  fig->add_option("which", fig_what, "f1, f2 or f3")->required()->check(CLI::IsMember({"f1", "f2", "f3"}));
  fig->add_option("--n", n_dist, "word length (f1 with simulation, f3)")->check(positive);
  fig->add_option("--words", n_words, "simulate this many words alongside");
  fig->add_option("--seed", seed, "random seed (required with --words)");
  fig->add_option("--workers", workers, "worker threads");
  fig->add_option("--eta-grid", grid_text, "eta grid for f1");
  fig->add_option("--q-grid", q_grid, "q grid for f2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* failing = &app;
    for (auto* s : app.get_subcommands()) failing = s;
    err << failing->help();
    return 2;
  }

  Report report;
  try {
    if (sim->parsed()) {
      GeomParams g(p);
      const auto r = simulate(g, n_len, n_words, seed, workers);
      report.inputs = {{"command", "simulate"}, {"p", p}, {"n", n_len}, {"words", n_words}, {"seed", seed},
                       {"workers", resolve_workers(workers)}};
      report.seed = seed;
      const double N = static_cast<double>(n_words);
      if (histogram) {
        report.table.columns = {"stat", "value", "count", "frequency", "tolerance"};
        for (Stat s : {Stat::X1, Stat::X2, Stat::X3})
          for (const auto& [v, c] : r.stat(s).histogram) {
            const double f = static_cast<double>(c) / N;
            report.table.rows.push_back({lower_name(s), static_cast<long long>(v), static_cast<long long>(c), f,
                                         5.0 * std::sqrt(std::max(f * (1 - f), 1.0 / N) / N)});
          }
      } else {
        report.table.columns = {"stat", "mean", "variance", "mean_std_error", "variance_std_error", "words",
                                "clamped_letters"};
        for (Stat s : {Stat::X1, Stat::X2, Stat::X3}) {
          const auto& st = r.stat(s);
          report.table.rows.push_back({lower_name(s), st.mean, st.variance, std::sqrt(st.variance / N),
                                       st.variance * std::sqrt(2.0 / (N - 1)), static_cast<long long>(n_words),
                                       static_cast<long long>(r.clamped_letters)});
        }
      }
    } else if (exact->parsed()) {
      GeomParams g(p);
      report.inputs = {{"command", "exact " + exact_what}, {"p", p}, {"n", n_exact}, {"tol", tol}};
      const auto m = mean_total(g, n_exact, tol);
      if (exact_what == "mean") {
        report.table.columns = {"stat", "mean", "tail_bound"};
        report.table.rows = {{std::string("x1"), m.diagonal, m.tail_bound},
                             {std::string("x2"), m.total, m.tail_bound},
                             {std::string("x3"), m.off_diagonal, m.tail_bound}};
        report.tail_bound = m.tail_bound;
      } else {
        const auto s = second_moment_total(g, n_exact, tol, workers);
        auto var_tail = [&](double mean) { return s.tail_bound + (2 * mean + m.tail_bound) * m.tail_bound; };
        report.table.columns = {"stat", "second_moment", "variance", "tail_bound"};
        report.table.rows = {
            {std::string("x1"), s.x1, s.x1 - m.diagonal * m.diagonal, var_tail(m.diagonal)},
            {std::string("x2"), s.total, s.total - m.total * m.total, var_tail(m.total)},
            {std::string("x3"), s.x3, s.x3 - m.off_diagonal * m.off_diagonal, var_tail(m.off_diagonal)},
            {std::string("x1*x3"), s.cross, s.cross - m.diagonal * m.off_diagonal, var_tail(m.total)}};
        report.tail_bound = var_tail(m.total);
      }
    } else if (asym->parsed()) {
      GeomParams g(p);
      const Stat stat = parse_stat(stat_text);
      report.inputs = {{"command", "asymptotic " + asym_what}, {"p", p}, {"n", n_list}, {"stat", stat_text}};
      if (asym_what == "cumulant") report.inputs["order"] = order;
      report.table.columns = {"n", "stat", "value", "smooth", "periodic", "truncation_bound", "terms",
                              "imag_residue"};
      double tb = 0.0, per = 0.0;
      for (double n : n_list) {
        const auto v = asymptotic_value(asym_what, stat, n, order, g);
        report.table.rows.push_back({n, stat_text, v.value(), v.smooth, v.periodic, v.truncation_bound,
                                     static_cast<long long>(v.terms), v.imag_residue});
        tb = std::max(tb, v.truncation_bound);
        per = n_list.size() == 1 ? v.periodic : max_abs(per, v.periodic);
      }
      report.tail_bound = tb;
      report.periodic_part = per;
    } else if (avoid->parsed()) {
      GeomParams g(p);
      const PairSet pairs = parse_pairs(pairs_text);
      report.inputs = {{"command", "avoid"}, {"p", p}, {"pairs", format_pairs(pairs.pairs())}, {"n", n_avoid}};
      report.tail_bound = 0.0;
      report.table.columns = {"kind", "index", "value", "tail_bound"};
      report.table.rows.push_back(
          {std::string("probability"), static_cast<long long>(n_avoid), avoid_prob_matrix(g, pairs, n_avoid), 0.0});
      if (with_gf) {
        const auto gf = avoidance_gf(g, pairs);
        for (std::size_t k = 0; k < gf.numerator().size(); ++k)
          report.table.rows.push_back({std::string("numerator"), static_cast<long long>(k), gf.numerator()[k], 0.0});
        for (std::size_t k = 0; k < gf.denominator().size(); ++k)
          report.table.rows.push_back(
              {std::string("denominator"), static_cast<long long>(k), gf.denominator()[k], 0.0});
        const auto coeffs = gf.coefficients(static_cast<std::size_t>(n_avoid) + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          report.table.rows.push_back({std::string("coefficient"), static_cast<long long>(k), coeffs[k], 0.0});
      }
    } else if (series->parsed()) {
      if (format == "csv" && !series->count("--format")) format = "text";
      const auto sp = parse_symbolic_pairs(pairs_text);
      std::vector<std::string> names;
      for (const auto& nm : sp.names) names.push_back("P" + nm);
      const auto res = algorithm1_series(sp.pairs, series_order);
      report.inputs = {{"command", "series"}, {"pairs", pairs_text}, {"order", series_order}, {"variables", names}};
      report.table.columns = {"quantity", "expansion", "error_order"};
      const std::string lam = res.lambda.to_string(names), c1 = res.c1.to_string(names);
      const long long err_order = series_order + 1;
      report.table.rows = {{std::string("lambda"), lam, err_order}, {std::string("C1"), c1, err_order}};
      report.text = {"lambda = " + lam, "C1 = " + c1};
    } else if (dist->parsed()) {
      GeomParams g(p);
      const auto c = constants(g, n_dist);
      if (dist_what == "x1") {
        if (!dist->count("--tol")) tol = 1e-9;
        const auto grid = parse_grid(grid_text);
        report.inputs = {{"command", "dist x1"}, {"p", p}, {"n", n_dist}, {"eta_grid", grid_text},
                         {"tol", tol}, {"i_star", c.i_star}};
        report.table.columns = {"eta", "x1", "density", "cdf", "tail_bound"};
        for (double eta : grid) {
          const auto w = choose_density_window(g, eta, tol);
          report.table.rows.push_back({eta, c.i_star + eta, limit_density_f(g, eta, tol), limit_cdf_F(g, eta, tol),
                                       w.upper_tail + w.lower_tail});
        }
        report.tail_bound = tol;
      } else {
        const auto m = mean_x3(n_dist, g), v = var_x3(n_dist, g);
        const double sd = std::sqrt(v.value());
        report.inputs = {{"command", "dist x3"}, {"p", p}, {"n", n_dist}, {"mean", m.value()}, {"variance", v.value()}};
        report.table.columns = {"x3", "density", "cdf"};
        for (long x = static_cast<long>(std::floor(m.value() - width * sd));
             x <= static_cast<long>(std::ceil(m.value() + width * sd)); ++x)
          report.table.rows.push_back({static_cast<long long>(x), gaussian_density(x, m.value(), v.value()),
                                       gaussian_cdf(x + 0.5, m.value(), v.value())});
        report.tail_bound = m.truncation_bound + v.truncation_bound;
        report.periodic_part = m.periodic;
      }
    } else if (cmp->parsed()) {
      GeomParams g(p);
      const auto stats = parse_stats(compare_stats);
      report.inputs = {{"command", "compare"}, {"p", p}, {"n", n_list}, {"words", n_words}, {"seed", seed},
                       {"stat", compare_stats}};
      report.seed = seed;
      report.table.columns = {"n", "stat", "expected", "sample_mean", "variance", "sample_variance",
                              "mean_tolerance", "variance_tolerance"};
      const double N = static_cast<double>(n_words);
      for (double n : n_list) {
        const auto r = simulate(g, static_cast<std::uint64_t>(n), n_words, seed, workers);
        for (Stat s : stats) {
          const double mean = asymptotic_value("mean", s, n, 2, g).value();
          const double var = asymptotic_value("var", s, n, 2, g).value();
          report.table.rows.push_back({n, lower_name(s), mean, r.stat(s).mean, var, r.stat(s).variance,
                                       5.0 * std::sqrt(var / N), 5.0 * var * std::sqrt(2.0 / (N - 1))});
        }
      }
    } else if (fig->parsed()) {
      report.inputs = {{"command", "figure " + fig_what}};
      report.table.columns = {"series", "x", "value", "tolerance"};
      const bool with_sim = fig->count("--words") > 0;
      if (with_sim && !fig->count("--seed")) throw std::invalid_argument("--seed is required with --words");
      if (fig_what != "f2" && !fig->count("--p")) throw std::invalid_argument("--p is required for " + fig_what);
      if (fig_what == "f2") {
        report.inputs["q_grid"] = q_grid;
        for (double q : parse_grid(q_grid)) {
          if (!(q > 0 && q < 1)) throw std::invalid_argument("q grid must lie in (0,1)");
          GeomParams g(1 - q);
          report.table.rows.push_back({std::string("2(1-q)F1'(0)"), q, 2 * (1 - q) * F1_prime_at_0(g), 1e-15});
        }
      } else if (fig_what == "f1") {
        GeomParams g(p);
        report.inputs["p"] = p;
        report.inputs["eta_grid"] = grid_text;
        for (double eta : parse_grid(grid_text)) {
          report.table.rows.push_back({std::string("f"), eta, limit_density_f(g, eta), 1e-9});
          report.table.rows.push_back({std::string("F"), eta, limit_cdf_F(g, eta), 1e-9});
        }
        if (with_sim) {
          if (!fig->count("--n")) throw std::invalid_argument("--n is required with --words");
          const auto r = simulate(g, static_cast<std::uint64_t>(n_dist), n_words, seed, workers);
          report.inputs["n"] = n_dist;
          report.inputs["words"] = n_words;
          report.seed = seed;
          add_simulation_rows(report, r, Stat::X1, constants(g, n_dist).i_star);
        }
      } else {
        GeomParams g(p);
        if (!fig->count("--n")) throw std::invalid_argument("--n is required for f3");
        const auto m = mean_x3(n_dist, g), v = var_x3(n_dist, g);
        const double sd = std::sqrt(v.value());
        report.inputs["p"] = p;
        report.inputs["n"] = n_dist;
        for (long x = static_cast<long>(std::floor(m.value() - 4 * sd)); x <= static_cast<long>(std::ceil(m.value() + 4 * sd));
             ++x)
          report.table.rows.push_back({std::string("gaussian"), static_cast<double>(x),
                                       gaussian_density(x, m.value(), v.value()),
                                       m.truncation_bound + v.truncation_bound});
        report.periodic_part = m.periodic;
        if (with_sim) {
          const auto r = simulate(g, static_cast<std::uint64_t>(n_dist), n_words, seed, workers);
          report.inputs["words"] = n_words;
          report.seed = seed;
          add_simulation_rows(report, r, Stat::X3, 0.0);
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    if (format == "json")
      out << json{{"error", {{"reason", "budget"}, {"required", e.required()}, {"budget", e.budget()}}}}.dump(2) << "\n";
    err << "refused: " << e.what() << "\n";
    return 1;
  } catch (const ResourceCapExceeded& e) {
    if (format == "json")
      out << json{{"error", {{"reason", "resource_cap"}, {"required", e.letters}, {"budget", e.cap}}}}.dump(2) << "\n";
    err << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot open " << output << "\n";
      return 2;
    }
    write_report(report, format, file);
  } else {
    write_report(report, format, out);
  }
  return 0;
}

}  // namespace pairwords
