#include "berezin/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berezin/bergman_space.hpp"
#include "berezin/gaussian_calculus.hpp"
#include "berezin/oscillator.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/run_record.hpp"
#include "berezin/semiclassics.hpp"
#include "berezin/verification.hpp"

namespace berezin::cli {
namespace {

constexpr double kTransformTolerance = 1e-6;
constexpr double kTraceTolerance = 1e-6;
constexpr double kUncertaintyTolerance = 1e-9;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not a number: '" + s + "'");
  return v;
}

/// "x,y;x,y" -> point of C^n.
ComplexPoint parse_point(const std::string& text) {
  const auto coords = split(text, ';');
  if (coords.empty()) throw DomainError("empty point");
  ComplexPoint z(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const auto parts = split(coords[j], ',');
    if (parts.size() != 2) throw DomainError("point coordinates must be 're,im' pairs separated by ';'");
    z(static_cast<Eigen::Index>(j)) = {parse_double(parts[0]), parse_double(parts[1])};
  }
  require_finite(z);
  return z;
}

Json point_json(const ComplexPoint& z) {
  Json arr = Json::array();
  for (Eigen::Index j = 0; j < z.size(); ++j) arr.push_back(Json::array({z(j).real(), z(j).imag()}));
  return arr;
}

std::vector<double> parse_grid(const std::optional<std::string>& logspace, const std::optional<std::string>& linspace,
                               const std::optional<std::string>& values) {
  const int given = int(logspace.has_value()) + int(linspace.has_value()) + int(values.has_value());
  if (given != 1) throw DomainError("give exactly one of --logspace, --linspace, --values");
  if (values) {
    std::vector<double> out;
    for (const auto& v : split(*values, ',')) out.push_back(parse_double(v));
    if (out.empty()) throw DomainError("--values is empty");
    return out;
  }
  const auto parts = split(logspace ? *logspace : *linspace, ':');
  if (parts.size() != 3) throw DomainError("grid ranges are written start:stop:count");
  const double a = parse_double(parts[0]);
  const double b = parse_double(parts[1]);
  const double count_d = parse_double(parts[2]);
  const int count = static_cast<int>(count_d);
  if (count < 1 || count != count_d) throw DomainError("grid count must be a positive integer");
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? a : a + (b - a) * i / (count - 1);
    out.push_back(logspace ? std::pow(10.0, t) : t);
  }
  return out;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("BEREZIN_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw DomainError("BEREZIN_SEED is not an unsigned integer");
  }
}

RunRecord make_record(const std::string& command) {
  RunRecord r;
  r.command = command;
  r.tool_version = tool_version();
  r.timestamp = current_timestamp();
  return r;
}

// transform ------------------------------------------------------------------

struct TransformArgs {
  int n = 1;
  double lambda = 0.0;
  double alpha = 1.0;
  double amplitude = 1.0;
  std::optional<int> numeric;
  std::optional<std::string> at;
};

RunRecord cmd_transform(const TransformArgs& a) {
  const GaussianSymbol g(a.n, a.amplitude, a.lambda);
  const QuantParams q(a.alpha);
  const GaussianSymbol out = berezin_transform_closed(g, q);

  RunRecord r = make_record("transform");
  r.parameters = {{"n", a.n}, {"lambda", a.lambda}, {"alpha", a.alpha}, {"amplitude", a.amplitude}};
  r.results = {{"amplitude", out.amplitude()}, {"compression", out.compression()}};
  if (a.numeric) {
    const ComplexPoint z = a.at ? parse_point(*a.at) : ComplexPoint(ComplexPoint::Zero(a.n));
    require_dim(z, a.n);
    const double closed = eval(out, z).real();
    const std::complex<double> numeric = berezin_transform_numeric(as_symbol(g), z, q, *a.numeric);
    const double deviation = std::abs(numeric - std::complex<double>(closed, 0.0));
    r.parameters["numeric"] = *a.numeric;
    r.parameters["at"] = point_json(z);
    r.results["closed_value"] = closed;
    r.results["numeric_value"] = numeric.real();
    r.results["numeric_imag"] = numeric.imag();
    r.results["deviation"] = deviation;
    r.results["within_tolerance"] = deviation <= kTransformTolerance;
  }
  return r;
}

// trace ----------------------------------------------------------------------

struct TraceArgs {
  int n = 1;
  double lambda = 1.0;
  double alpha = 1.0;
  std::optional<int> numeric;
};

RunRecord cmd_trace(const TraceArgs& a) {
  const QuantParams q(a.alpha);
  const TraceReport report = purity_index(a.lambda, q, a.n);
  RunRecord r = make_record("trace");
  r.parameters = {{"n", a.n}, {"lambda", a.lambda}, {"alpha", a.alpha}};
  r.results = {{"raw_trace", report.raw_trace}, {"normalized_trace", report.normalized_trace}};
  if (a.n <= 2) {
    const int m = a.numeric.value_or(a.n == 1 ? 80 : 24);
    const TraceReport numeric = purity_index_numeric(a.lambda, q, a.n, m);
    const double deviation = std::abs(numeric.normalized_trace - report.normalized_trace);
    r.parameters["numeric"] = m;
    r.results["quadrature"] = {{"raw_trace", numeric.raw_trace},
                               {"normalized_trace", numeric.normalized_trace},
                               {"deviation", deviation},
                               {"within_tolerance", deviation <= kTraceTolerance}};
  } else {
    r.results["quadrature"] = nullptr;
  }
  return r;
}

// uncertainty ----------------------------------------------------------------

struct UncertaintyArgs {
  double lambda = 1.0;
  double k = 1.0;
  int numeric = 80;
};

Json report_json(const UncertaintyReport& u) {
  return {{"lambda", u.lambda},     {"amplitude", u.amplitude},
          {"var_x", u.var_x},       {"var_p", u.var_p},
          {"rhs", u.rhs},           {"ratio", u.ratio},
          {"normalized_var_x", u.normalized_var_x}, {"normalized_var_p", u.normalized_var_p}};
}

RunRecord cmd_uncertainty(const UncertaintyArgs& a) {
  const UncertaintyReport closed = uncertainty_report(a.lambda, a.k);
  const UncertaintyReport numeric = uncertainty_report_numeric(a.lambda, a.k, a.numeric);
  RunRecord r = make_record("uncertainty");
  r.parameters = {{"lambda", a.lambda}, {"K", a.k}, {"numeric", a.numeric}};
  r.results = report_json(closed);
  r.results["quadrature"] = report_json(numeric);
  r.results["within_tolerance"] = std::abs(closed.ratio - 1.0) <= kUncertaintyTolerance &&
                                  std::abs(numeric.ratio - 1.0) <= kUncertaintyTolerance;
  return r;
}

// sweep ----------------------------------------------------------------------

struct SweepArgs {
  std::string quantity;
  std::string over = "alpha";
  int n = 1;
  double lambda = 1.0;
  double alpha = 1.0;
  std::optional<std::string> logspace;
  std::optional<std::string> linspace;
  std::optional<std::string> values;
  std::string at = "0.3,0";
  std::optional<std::string> out;
  bool csv = false;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << "\n";
  }
  return os.str();
}

ComplexPoint diagonal_point(int n, double x) { return ComplexPoint::Constant(n, std::complex<double>(x, 0.0)); }

RunRecord cmd_sweep(const SweepArgs& a, Table& table) {
  if (a.over != "alpha" && a.over != "lambda") throw DomainError("--over must be alpha or lambda");
  const std::vector<double> grid = parse_grid(a.logspace, a.linspace, a.values);

  RunRecord r = make_record("sweep");
  r.parameters = {{"quantity", a.quantity}, {"over", a.over}, {"n", a.n},
                  {"lambda", a.lambda},     {"alpha", a.alpha}, {"grid", grid}};
  table.columns = {"n", "lambda", "alpha", a.quantity};

  if (a.quantity == "expansion_residual") {
    if (a.over != "alpha") throw DomainError("expansion_residual sweeps over alpha");
    const std::vector<ComplexPoint> pts{diagonal_point(a.n, 0.0), diagonal_point(a.n, 0.3), diagonal_point(a.n, 0.7)};
    const ExpansionReport rep = expansion_check(GaussianSymbol(a.n, 1.0, a.lambda), grid, pts);
    for (std::size_t i = 0; i < grid.size(); ++i) table.rows.push_back({double(a.n), a.lambda, grid[i], rep.residual_norms[i]});
    r.results["slope"] = rep.fitted_slope;
  } else {
    const ComplexPoint z = a.quantity == "taylor_remainder" ? parse_point(a.at) : ComplexPoint();
    for (double v : grid) {
      const double lambda = a.over == "lambda" ? v : a.lambda;
      const double alpha = a.over == "alpha" ? v : a.alpha;
      const QuantParams q(alpha);
      const GaussianSymbol g(a.n, 1.0, lambda);
      double value = 0.0;
      if (a.quantity == "normalized_trace") {
        value = purity_index(lambda, q, a.n).normalized_trace;
      } else if (a.quantity == "raw_trace") {
        value = purity_index(lambda, q, a.n).raw_trace;
      } else if (a.quantity == "compression") {
        value = berezin_transform_closed(g, q).compression();
      } else if (a.quantity == "amplitude") {
        value = berezin_transform_closed(g, q).amplitude();
      } else if (a.quantity == "taylor_remainder") {
        value = taylor_remainder(g, q, z);
      } else {
        throw DomainError("unknown sweep quantity: " + a.quantity);
      }
      table.rows.push_back({double(a.n), lambda, alpha, value});
    }
    if (a.quantity == "taylor_remainder") {
      std::vector<double> xs, ys;
      for (const auto& row : table.rows) {
        xs.push_back(a.over == "alpha" ? row[2] : row[1]);
        ys.push_back(row[3]);
      }
      r.results["slope"] = xs.size() >= 2 ? log_log_slope(xs, ys) : std::nan("");
    }
  }
  r.results["columns"] = table.columns;
  r.results["rows"] = table.rows;
  if (a.out) r.parameters["out"] = *a.out;
  return r;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
};

RunRecord cmd_verify(const VerifyArgs& a, std::ostream& err, bool& all_passed) {
  const std::uint64_t seed = a.seed ? *a.seed : env_seed().value_or(0);
  const std::vector<CheckResult> checks = run_suite(a.suite, seed);
  RunRecord r = make_record("verify");
  r.seed = seed;
  r.parameters = {{"suite", a.suite}};
  Json arr = Json::array();
  all_passed = true;
  for (const auto& c : checks) {
    arr.push_back({{"suite", c.suite}, {"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    all_passed = all_passed && c.passed;
    err << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << c.suite << c.name << "  ["
        << format_number(c.value) << " <= " << format_number(c.tolerance) << "]\n";
  }
  r.results = {{"checks", std::move(arr)}, {"passed", all_passed}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berezin quantization of Gaussian symbols on C^n", "berezin"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Closed-form Berezin transform of a Gaussian symbol");
  transform->add_option("--n", ta.n, "complex dimension")->check(CLI::PositiveNumber);
  transform->add_option("--lambda", ta.lambda, "compression")->required();
  transform->add_option("--alpha", ta.alpha, "quantum parameter")->required();
  transform->add_option("--amplitude", ta.amplitude, "amplitude");
  transform->add_option("--numeric", ta.numeric, "cross-check with an m-point Gauss-Hermite rule");
  transform->add_option("--at", ta.at, "evaluation point 're,im;re,im'");

  TraceArgs tr;
  auto* trace_cmd = app.add_subcommand("trace", "Trace and purity index of the squared transformed Gaussian");
  trace_cmd->add_option("--n", tr.n)->check(CLI::PositiveNumber);
  trace_cmd->add_option("--lambda", tr.lambda)->required();
  trace_cmd->add_option("--alpha", tr.alpha)->required();
  trace_cmd->add_option("--numeric", tr.numeric, "Gauss-Hermite order for the cross-check");

  UncertaintyArgs ua;
  auto* unc = app.add_subcommand("uncertainty", "Uncertainty identity for the quantized Gaussian");
  unc->add_option("--lambda", ua.lambda)->required();
  unc->add_option("--K", ua.k, "amplitude");
  unc->add_option("--numeric", ua.numeric, "Gauss-Hermite order for the cross-check");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep with CSV export");
  sweep->add_option("--quantity", sa.quantity,
                    "normalized_trace | raw_trace | compression | amplitude | taylor_remainder | expansion_residual")
      ->required();
  sweep->add_option("--over", sa.over, "alpha | lambda");
  sweep->add_option("--n", sa.n)->check(CLI::PositiveNumber);
  sweep->add_option("--lambda", sa.lambda);
  sweep->add_option("--alpha", sa.alpha);
  sweep->add_option("--logspace", sa.logspace, "a:b:k, k points 10^a .. 10^b");
  sweep->add_option("--linspace", sa.linspace, "a:b:k");
  sweep->add_option("--values", sa.values, "comma-separated values");
  sweep->add_option("--at", sa.at, "point for taylor_remainder");
  sweep->add_option("--out", sa.out, "write CSV to this file");
  sweep->add_flag("--csv", sa.csv, "print CSV instead of JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", va.suite, "suite name or 'all'");
  verify->add_option("--seed", va.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    int code = kOk;
    RunRecord record;
    if (*transform) {
      record = cmd_transform(ta);
      if (record.results.contains("within_tolerance") && !record.results["within_tolerance"].get<bool>()) {
        code = kContractViolation;
      }
    } else if (*trace_cmd) {
      record = cmd_trace(tr);
      const Json& quad = record.results["quadrature"];
      if (!quad.is_null() && !quad["within_tolerance"].get<bool>()) code = kContractViolation;
    } else if (*unc) {
      record = cmd_uncertainty(ua);
      if (!record.results["within_tolerance"].get<bool>()) code = kContractViolation;
    } else if (*sweep) {
      Table table;
      record = cmd_sweep(sa, table);
      if (sa.out) {
        std::ofstream file(*sa.out);
        if (!file) throw std::runtime_error("cannot open " + *sa.out);
        file << to_csv(table);
      }
      if (sa.csv) {
        out << to_csv(table);
        return kOk;
      }
    } else if (*verify) {
      bool passed = false;
      record = cmd_verify(va, err, passed);
      if (!passed) code = kContractViolation;
    }
    out << serialize(record) << "\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kContractViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace berezin::cli
