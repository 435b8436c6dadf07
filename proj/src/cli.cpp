#include "steinchar/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "steinchar/json_io.hpp"
#include "steinchar/oracle.hpp"
#include "steinchar/sampling.hpp"
#include "steinchar/spherical.hpp"
#include "steinchar/stats.hpp"
#include "steinchar/stein.hpp"

namespace steinchar {

namespace {

struct Output {
  std::string format = "json";
  std::string path;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
};

std::string cell(double x) { return format_double(x); }
std::string cell(std::size_t x) { return std::to_string(x); }
std::string cell(bool x) { return x ? "true" : "false"; }

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + o.path + " for writing");
  file << text;
}

void emit(const Output& o, const Json& j, const CsvTable& csv, std::ostream& out) {
  emit(o, o.format == "csv" ? csv.str() : dump_json(j) + "\n", out);
}

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("STEINCHAR_FORMAT")
      ->capture_default_str();
  cmd->add_option("--out", o.path, "Write output to this file instead of stdout")->envname("STEINCHAR_OUT");
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (Family f : all_families()) names.push_back(family_name(f));
  return names;
}

void require_size(Family f, std::size_t n) {
  if (n < min_size(f)) {
    throw std::invalid_argument("n ≥ " + std::to_string(min_size(f)) + " required for " + family_name(f));
  }
}

struct BoundArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<double> theta;
  std::optional<double> x;
  bool limit = false;
  Output out;
};

int run_bound(const BoundArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  require_size(f, a.n);
  const DecompositionTable table = builtin_table(f, a.n);
  if (a.limit) {
    const LimitReport lim = limit_report(table);
    Json j = limit_json(lim);
    j["case"] = table.case_kind == CaseKind::Real ? "real" : "complex";
    j["total"] = lim.stated_bound;
    CsvTable csv{{"n", "a", "term1", "term2", "total", "paper_bound"},
                 {{cell(a.n), cell(0.0), cell(lim.exact_limit), cell(0.0), cell(lim.exact_limit), cell(lim.stated_bound)}}};
    emit(a.out, j, csv, out);
    return 0;
  }
  if (a.x && f != Family::Sphere) throw std::invalid_argument("--x applies to the sphere only");
  const ClassParameter p = a.x ? ClassParameter::cosine(*a.x) : ClassParameter::for_family(f, *a.theta);
  const BoundReport r = stein_bound(table, p);
  Json j;
  j["family"] = family_name(f);
  j["n"] = a.n;
  j["case"] = table.case_kind == CaseKind::Real ? "real" : "complex";
  const Json report = bound_json(r);
  for (const auto& [k, v] : report.items()) j[k] = v;
  j["paper_bound"] = stated_bound(f, a.n);
  j["exact_limit"] = exact_limit_closed_form(f, a.n);
  j["moments"] = moments_json(moments(table, p));
  CsvTable csv{{"n", "a", "term1", "term2", "total", "paper_bound"},
               {{cell(a.n), cell(r.a), cell(r.term1), cell(r.term2), cell(r.total), cell(stated_bound(f, a.n))}}};
  emit(a.out, j, csv, out);
  return 0;
}

struct VerifyArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t count = 200000;
  std::uint64_t seed = 1;
  double delta = kDefaultDelta;
  Output out;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  require_size(f, a.n);
  if (a.count < 2) throw std::invalid_argument("count must be at least 2");
  const SampleBatch batch = sample_w(f, a.n, a.count, a.seed);
  const double bound = stated_bound(f, a.n);
  const KolmogorovReport k = kolmogorov_distance(batch.values, bound, a.delta);
  Json j;
  j["family"] = family_name(f);
  j["n"] = a.n;
  j["seed"] = a.seed;
  j["paper_bound"] = bound;
  j["exact_limit"] = exact_limit_closed_form(f, a.n);
  j["kolmogorov"] = kolmogorov_json(k);
  j["passed"] = k.passed;
  CsvTable csv{{"family", "n", "count", "seed", "d_stat", "dkw_epsilon", "delta", "bound_compared", "passed"},
               {{family_name(f), cell(a.n), cell(k.count), std::to_string(a.seed), cell(k.d_stat), cell(k.dkw_epsilon),
                 cell(k.delta), cell(k.bound_compared), cell(k.passed)}}};
  emit(a.out, j, csv, out);
  return k.passed ? 0 : 1;
}

struct SampleArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::optional<double> theta;
  Output out;
};

int run_sample(const SampleArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  require_size(f, a.n);
  Json j;
  j["family"] = family_name(f);
  j["n"] = a.n;
  j["count"] = a.count;
  j["seed"] = a.seed;
  CsvTable csv;
  if (a.theta) {
    const PairBatch batch = sample_pairs(f, a.n, *a.theta, a.count, a.seed);
    j["theta"] = *a.theta;
    j["pairs"] = Json::array();
    csv.header = {"w", "w_prime"};
    for (const auto& [w, wp] : batch.pairs) {
      j["pairs"].push_back(Json::array({w, wp}));
      csv.rows.push_back({cell(w), cell(wp)});
    }
  } else {
    const SampleBatch batch = sample_w(f, a.n, a.count, a.seed);
    j["values"] = batch.values;
    csv.header = {"w"};
    for (double w : batch.values) csv.rows.push_back({cell(w)});
  }
  emit(a.out, j, csv, out);
  return 0;
}

struct DecomposeArgs {
  std::string family;
  std::size_t n = 0;
  double theta = 1.0;
  Output out;
};

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  require_size(f, a.n);
  const DecompositionTable table = builtin_table(f, a.n);
  const ClassParameter p = ClassParameter::for_family(f, a.theta);
  CsvTable csv{{"label", "multiplicity", "dim", "ratio_at_theta", "is_trivial"}, {}};
  for (const auto& c : table.components) {
    csv.rows.push_back({c.label, cell(c.multiplicity), cell(c.dim), cell(c.ratio(p)), cell(c.is_trivial)});
  }
  emit(a.out, table_json(table, p), csv, out);
  return 0;
}

struct OracleArgs {
  std::string check;
  std::optional<std::size_t> n;
  std::string family;
  std::size_t count = 100000;
  std::uint64_t seed = 1;
  Output out;
};

struct CheckRow {
  std::string name;
  double estimate = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CheckRow within(std::string name, double estimate, double target, double tolerance) {
  return {std::move(name), estimate, target, tolerance, std::abs(estimate - target) <= tolerance};
}

std::vector<CheckRow> oracle_rows(const OracleArgs& a) {
  std::vector<CheckRow> rows;
  if (a.check == "jack-gs") {
    const std::size_t n_vars = a.n.value_or(2);
    for (int beta : {1, 2, 4}) {
      const GramSchmidtResult r = jack_gram_schmidt(n_vars, beta);
      const double alpha = 2.0 / beta;
      rows.push_back(within("beta=" + std::to_string(beta), r.coefficient, 2.0 / (alpha + 1.0), 1e-6));
    }
  } else if (a.check == "pieri") {
    const std::size_t n = a.n.value_or(4);
    for (Ensemble e : {Ensemble::Unitary, Ensemble::COE, Ensemble::CSE}) {
      const PieriFit fit = pieri_least_squares(n, e, 120, a.seed);
      std::vector<double> expected;
      if (e == Ensemble::Unitary) {
        expected = {2, 1, 1, 2, 1, 1};
      } else {
        const JackContext ctx = e == Ensemble::COE ? JackContext::coe(n) : JackContext::cse(n);
        for (const auto& t : p_square_expansion(ctx)) expected.push_back(to_double(t.coeff));
      }
      for (std::size_t i = 0; i < fit.terms.size(); ++i) {
        rows.push_back(within(ensemble_name(e) + " " + fit.terms[i].label, fit.terms[i].coefficient, expected[i], 1e-8));
      }
      rows.push_back(within(ensemble_name(e) + " residual", fit.residual, 0.0, 1e-8));
    }
  } else if (a.check == "multiplicity") {
    const std::size_t n = a.n.value_or(4);
    std::vector<Family> families;
    if (a.family.empty()) {
      families = all_families();
    } else {
      families = {parse_family(a.family)};
    }
    for (Family f : families) {
      require_size(f, n);
      const DecompositionTable table = builtin_table(f, n);
      const auto tau = monte_carlo_multiplicity(f, n, "tau", 1, a.count, a.seed);
      rows.push_back(within(family_name(f) + " tau in tau", tau.estimate, 1.0, 3.0 * tau.standard_error));
      for (const auto& c : table.components) {
        const auto est = monte_carlo_multiplicity(f, n, c.label, 2, a.count, a.seed);
        rows.push_back(within(family_name(f) + " " + c.label, est.estimate, c.multiplicity, 3.0 * est.standard_error));
      }
    }
  } else if (a.check == "limits") {
    const std::size_t n = a.n.value_or(4);
    for (Family f : all_families()) {
      require_size(f, n);
      const DecompositionTable table = builtin_table(f, n);
      const LimitEstimate lim = numeric_limit(
          [&](double theta) { return stein_bound(table, ClassParameter::for_family(f, theta)).term1; });
      rows.push_back(within(family_name(f) + " term1 limit", lim.value, exact_limit_closed_form(f, n), 1e-8));
    }
  }
  return rows;
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const std::vector<CheckRow> rows = oracle_rows(a);
  bool all = true;
  Json j;
  j["check"] = a.check;
  j["results"] = Json::array();
  CsvTable csv{{"check", "name", "estimate", "target", "tolerance", "passed"}, {}};
  for (const auto& r : rows) {
    all = all && r.passed;
    Json row;
    row["name"] = r.name;
    row["estimate"] = r.estimate;
    row["target"] = r.target;
    row["tolerance"] = r.tolerance;
    row["passed"] = r.passed;
    j["results"].push_back(row);
    csv.rows.push_back({a.check, r.name, cell(r.estimate), cell(r.target), cell(r.tolerance), cell(r.passed)});
  }
  j["passed"] = all;
  emit(a.out, j, csv, out);
  return all ? 0 : 1;
}

struct TableArgs {
  std::vector<std::size_t> sizes{2, 5, 10, 50};
  Output out;
};

int run_table(const TableArgs& a, std::ostream& out) {
  Json j;
  j["rows"] = Json::array();
  CsvTable csv{{"family", "n", "paper_bound", "exact_limit", "limit_coeff_term2"}, {}};
  for (std::size_t n : a.sizes) {
    for (Family f : all_families()) {
      if (n < min_size(f)) continue;
      Json row;
      row["family"] = family_name(f);
      row["n"] = n;
      row["paper_bound"] = stated_bound(f, n);
      row["exact_limit"] = exact_limit_closed_form(f, n);
      row["limit_coeff_term2"] = term2_coefficient_closed_form(f, n);
      j["rows"].push_back(row);
      csv.rows.push_back({family_name(f), cell(n), cell(stated_bound(f, n)), cell(exact_limit_closed_form(f, n)),
                          cell(term2_coefficient_closed_form(f, n))});
    }
  }
  emit(a.out, j, csv, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stein's-method normal approximation bounds for traces of random matrices, with Monte-Carlo checks.",
               "steinchar"};
  app.footer(
      "Precedence: command-line flags, then STEINCHAR_* environment variables (SEED, COUNT, DELTA, FORMAT, OUT), "
      "then defaults.\nExit codes: 0 all checks passed, 1 a check failed, 2 usage or precondition error.");
  app.require_subcommand(1);
  const auto families = family_names();

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate the Stein bound for a family at a class or in the limit");
  bound_cmd->add_option("--family", bound.family, "Model")->required()->check(CLI::IsMember(families));
  bound_cmd->add_option("--n", bound.n, "Size parameter")->required();
  auto* theta_opt = bound_cmd->add_option("--theta", bound.theta, "Rotation angle of the class");
  auto* x_opt = bound_cmd->add_option("--x", bound.x, "Sphere coordinate of the double coset");
  auto* limit_opt = bound_cmd->add_flag("--limit", bound.limit, "Report the theta -> 0 limit and the stated bound");
  theta_opt->excludes(x_opt)->excludes(limit_opt);
  x_opt->excludes(limit_opt);
  add_output_options(bound_cmd, bound.out);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Sample W and compare its Kolmogorov distance with the bound");
  verify_cmd->add_option("--family", verify.family, "Model")->required()->check(CLI::IsMember(families));
  verify_cmd->add_option("--n", verify.n, "Size parameter")->required();
  verify_cmd->add_option("--count", verify.count, "Number of samples")->envname("STEINCHAR_COUNT")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->envname("STEINCHAR_SEED")->capture_default_str();
  verify_cmd->add_option("--delta", verify.delta, "DKW confidence parameter")
      ->envname("STEINCHAR_DELTA")
      ->check(CLI::Range(1e-12, 0.999999))
      ->capture_default_str();
  add_output_options(verify_cmd, verify.out);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw W values, or exchangeable pairs when --theta is given");
  sample_cmd->add_option("--family", sample.family, "Model")->required()->check(CLI::IsMember(families));
  sample_cmd->add_option("--n", sample.n, "Size parameter")->required();
  sample_cmd->add_option("--count", sample.count, "Number of draws")->envname("STEINCHAR_COUNT")->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "Random seed")->envname("STEINCHAR_SEED")->capture_default_str();
  sample_cmd->add_option("--theta", sample.theta, "Class angle for exchangeable pairs");
  add_output_options(sample_cmd, sample.out);

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Print the decomposition table of a family");
  decompose_cmd->add_option("--family", decompose.family, "Model")->required()->check(CLI::IsMember(families));
  decompose_cmd->add_option("--n", decompose.n, "Size parameter")->required();
  decompose_cmd->add_option("--theta", decompose.theta, "Class angle for the ratios")->capture_default_str();
  add_output_options(decompose_cmd, decompose.out);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an independent brute-force check");
  oracle_cmd->add_option("--check", oracle.check, "Which oracle")
      ->required()
      ->check(CLI::IsMember({"jack-gs", "pieri", "multiplicity", "limits"}));
  oracle_cmd->add_option("--n", oracle.n, "Size parameter (variables for jack-gs)");
  oracle_cmd->add_option("--family", oracle.family, "Restrict the multiplicity check to one model")
      ->check(CLI::IsMember(families));
  oracle_cmd->add_option("--count", oracle.count, "Monte-Carlo samples")->envname("STEINCHAR_COUNT")->capture_default_str();
  oracle_cmd->add_option("--seed", oracle.seed, "Random seed")->envname("STEINCHAR_SEED")->capture_default_str();
  add_output_options(oracle_cmd, oracle.out);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Stated bounds and exact limits of every family side by side");
  table_cmd->add_option("--n", table.sizes, "Sizes")->delimiter(',')->capture_default_str();
  add_output_options(table_cmd, table.out);

  std::vector<const char*> argv{"steinchar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "Run with --help for usage.\n";
    return 2;
  }

  try {
    if (*bound_cmd) {
      if (!bound.limit && !bound.theta && !bound.x) throw std::invalid_argument("one of --theta, --x, --limit is required");
      return run_bound(bound, out);
    }
    if (*verify_cmd) return run_verify(verify, out);
    if (*sample_cmd) return run_sample(sample, out);
    if (*decompose_cmd) return run_decompose(decompose, out);
    if (*oracle_cmd) return run_oracle(oracle, out);
    if (*table_cmd) return run_table(table, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace steinchar
