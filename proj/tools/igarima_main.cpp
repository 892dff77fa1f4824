// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "igarima/data_io.hpp"
#include "igarima/igarima.hpp"
#include "igarima/inference.hpp"
#include "igarima/reproduce.hpp"
#include "igarima/table.hpp"

namespace {

using namespace igarima;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitReproDiff = 4;

constexpr int kTableDecimals = 4;  // fixed precision for reproduction tables

Dataset resolve_data(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    return builtin(source.substr(prefix.size()));
  }
  return load_csv(source);
}

std::vector<OutputTable::Cell> fit_row(const std::string& dataset,
                                       const FitResult& fit) {
  return {dataset,
          std::string(family_name(fit.family)),
          static_cast<std::int64_t>(fit.n),
          fit.theta_hat,
          fit.neg2_loglik,
          fit.aic,
          fit.bic,
          fit.ks_stat,
          fit.ks_pvalue};
}

const std::vector<std::string> kFitColumns = {
    "dataset", "family", "n",       "theta_hat", "neg2_loglik",
    "aic",     "bic",    "ks_stat", "ks_pvalue"};

struct CommonOpts {
  std::string format = "tsv";
};

int cmd_fit(const std::string& family_tag, const std::string& data_source,
            const std::string& format) {
  const Dataset data = resolve_data(data_source);
  const FitResult fit = fit_mle(family_from_string(family_tag), data);
  OutputTable table;
  table.columns = kFitColumns;
  table.add_row(fit_row(data.name(), fit));
  table.write(std::cout, format_from_string(format), kTableDecimals);
  return kExitOk;
}

int cmd_compare(const std::string& data_source,
                const std::vector<std::string>& family_tags,
                const std::string& format) {
  const Dataset data = resolve_data(data_source);
  std::vector<Family> families;
  if (family_tags.empty()) {
    families.assign(all_families().begin(), all_families().end());
  } else {
    for (const auto& tag : family_tags) families.push_back(family_from_string(tag));
  }
  const ComparisonTable table = compare_models(data, families);

  OutputTable out;
  out.columns = kFitColumns;
  out.columns.insert(out.columns.end(), {"min_aic", "min_bic", "min_ks", "note"});
  for (int i = 0; i < static_cast<int>(table.rows.size()); ++i) {
    auto row = fit_row(data.name(), table.rows[i]);
    row.emplace_back(std::string(i == table.min_aic ? "*" : ""));
    row.emplace_back(std::string(i == table.min_bic ? "*" : ""));
    row.emplace_back(std::string(i == table.min_ks ? "*" : ""));
    row.emplace_back(table.rows[i].converged ? std::string()
                                             : "fit failed: " + table.rows[i].message);
    out.add_row(std::move(row));
  }
  out.write(std::cout, format_from_string(format), kTableDecimals);
  return kExitOk;
}

struct EvalArgs {
  std::string quantity;
  std::optional<double> theta, x, p, eta, t, theta1, theta2;
  std::optional<int> r, m;
  std::vector<double> curve;  // x0 x1 steps
  std::string format = "tsv";
};

double required(const std::optional<double>& v, const char* flag) {
  if (!v) throw CLI::ValidationError(std::string("missing required flag ") + flag);
  return *v;
}

int required_int(const std::optional<int>& v, const char* flag) {
  if (!v) throw CLI::ValidationError(std::string("missing required flag ") + flag);
  return *v;
}

std::vector<double> curve_grid(const std::vector<double>& curve) {
  const int steps = static_cast<int>(curve[2]);
  if (steps < 2 || curve[2] != steps) {
    throw CLI::ValidationError("--curve steps must be an integer >= 2");
  }
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    grid[i] = curve[0] + (curve[1] - curve[0]) * i / (steps - 1.0);
  }
  return grid;
}

int cmd_eval(const EvalArgs& args) {
  OutputTable out;
  const auto format = format_from_string(args.format);

  const auto emit_curve = [&](const char* arg_name, auto&& f) {
    if (!args.curve.empty()) {
      out.columns = {arg_name, "value"};
      for (double v : curve_grid(args.curve)) out.add_row({v, f(v)});
    } else {
      const double v = required(arg_name == std::string("p") ? args.p : args.x,
                                arg_name == std::string("p") ? "--p" : "--x");
      out.columns = {arg_name, "value"};
      out.add_row({v, f(v)});
    }
  };

  const std::string& q = args.quantity;
  if (q == "stress-strength") {
    const Theta t1(required(args.theta1, "--theta1"));
    const Theta t2(required(args.theta2, "--theta2"));
    out.columns = {"theta1", "theta2", "value"};
    out.add_row({t1.value(), t2.value(), stress_strength(t1, t2)});
    out.write(std::cout, format);
    return kExitOk;
  }

  const IGarima dist{Theta(required(args.theta, "--theta"))};
  if (q == "pdf") {
    emit_curve("x", [&](double x) { return dist.pdf(x); });
  } else if (q == "cdf") {
    emit_curve("x", [&](double x) { return dist.cdf(x); });
  } else if (q == "survival") {
    emit_curve("x", [&](double x) { return dist.survival(x); });
  } else if (q == "hazard") {
    emit_curve("x", [&](double x) { return dist.hazard(x); });
  } else if (q == "mrl") {
    emit_curve("x", [&](double x) { return dist.mean_residual_life(x); });
  } else if (q == "quantile") {
    emit_curve("p", [&](double p) { return dist.quantile(p); });
  } else if (q == "lorenz") {
    emit_curve("p", [&](double p) { return dist.lorenz(p); });
  } else if (q == "bonferroni") {
    emit_curve("p", [&](double p) { return dist.bonferroni(p); });
  } else if (q == "moment") {
    const int r = required_int(args.r, "--r");
    out.columns = {"r", "value"};
    out.add_row({static_cast<std::int64_t>(r), dist.raw_moment(r)});
  } else if (q == "cumulant") {
    const int r = required_int(args.r, "--r");
    out.columns = {"r", "value"};
    out.add_row({static_cast<std::int64_t>(r), dist.cumulant(r)});
  } else if (q == "mean") {
    out.columns = {"value"};
    out.add_row({dist.mean()});
  } else if (q == "central-moments") {
    const CentralMoments m = dist.central_moments();
    out.columns = {"mean", "mu2", "mu3", "mu4"};
    out.add_row({m.mean, m.mu2, m.mu3, m.mu4});
  } else if (q == "shape") {
    const ShapeMeasures s = dist.shape_measures();
    out.columns = {"cv", "skewness", "kurtosis", "index_of_dispersion"};
    out.add_row({s.cv, s.skewness, s.kurtosis, s.index_of_dispersion});
  } else if (q == "mgf") {
    out.columns = {"t", "value"};
    const double t = required(args.t, "--t");
    out.add_row({t, dist.mgf(t)});
  } else if (q == "gini") {
    const GiniResult g = dist.gini();
    out.columns = {"closed_form", "numeric"};
    out.add_row({g.closed_form, g.numeric});
  } else if (q == "renyi") {
    const double eta = required(args.eta, "--eta");
    out.columns = {"eta", "value"};
    out.add_row({eta, dist.renyi_entropy(eta)});
  } else if (q == "shannon") {
    out.columns = {"value"};
    out.add_row({dist.shannon_entropy()});
  } else if (q == "order-pdf" || q == "order-cdf") {
    const int r = required_int(args.r, "--r");
    const int m = required_int(args.m, "--m");
    const double x = required(args.x, "--x");
    out.columns = {"r", "m", "x", "value"};
    const double v = (q == "order-pdf") ? dist.order_stat_pdf(r, m, x)
                                        : dist.order_stat_cdf(r, m, x);
    out.add_row({static_cast<std::int64_t>(r), static_cast<std::int64_t>(m), x, v});
  } else {
    throw CLI::ValidationError("unknown quantity: '" + q + "'");
  }
  out.write(std::cout, format);
  return kExitOk;
}

int cmd_sample(const std::string& family_tag, double theta, std::int64_t n,
               std::uint64_t seed) {
  const auto dist = make_distribution(family_from_string(family_tag), Theta(theta));
  const Eigen::ArrayXd draws = dist->sample(n, seed);
  for (Eigen::Index i = 0; i < draws.size(); ++i) {
    std::cout << format_double(draws[i]) << '\n';
  }
  return kExitOk;
}

int cmd_reproduce(const std::string& data_dir, const std::string& format) {
  const ReproductionReport report =
      data_dir.empty() ? reproduce_reference_table()
                       : reproduce_reference_table(data_dir);

  OutputTable out;
  out.columns = {"dataset", "family",   "metric", "expected",
                 "actual",  "abs_diff", "tol",    "status"};
  for (const CellDiff& cell : report.cells) {
    const char* status = cell.within_tol ? "pass"
                         : cell.advisory ? "advisory"
                                         : "FAIL";
    out.add_row({std::string(cell.dataset), std::string(family_name(cell.family)),
                 std::string(cell.metric), cell.expected, cell.actual,
                 std::abs(cell.actual - cell.expected), cell.tolerance,
                 std::string(status)});
  }
  out.write(std::cout, format_from_string(format), kTableDecimals);

  std::cerr << "reference table reproduction: i-Garima rows "
            << (report.igarima_ok ? "PASS" : "FAIL") << ", all binding cells "
            << (report.binding_ok ? "PASS" : "FAIL") << " ("
            << format_double_fixed(report.seconds, 2) << " s)\n";
  return report.igarima_ok ? kExitOk : kExitReproDiff;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"i-Garima lifetime distribution toolkit"};
  app.require_subcommand(1);

  // fit
  auto* fit = app.add_subcommand("fit", "fit one family to a dataset by maximum likelihood");
  std::string fit_family;
  std::string fit_data;
  std::string fit_format = "tsv";
  fit->add_option("family,--family", fit_family,
                  "family tag (igarima, garima, aradhana, sujatha, akash, shanker, lindley)");
  fit->add_option("--data", fit_data, "builtin:<name> or path to a CSV file")->required();
  fit->add_option("--format", fit_format, "tsv|json");

  // compare
  auto* compare = app.add_subcommand("compare", "fit several families and tabulate the comparison");
  std::string cmp_data;
  std::string cmp_format = "tsv";
  std::vector<std::string> cmp_families;
  compare->add_option("--data", cmp_data, "builtin:<name> or path to a CSV file")->required();
  compare->add_option("--families", cmp_families, "comma-separated family tags (default: all)")
      ->delimiter(',');
  compare->add_option("--format", cmp_format, "tsv|json");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate an i-Garima quantity");
  EvalArgs eval_args;
  eval->add_option("quantity", eval_args.quantity,
                   "pdf|cdf|survival|hazard|mrl|quantile|moment|cumulant|mean|"
                   "central-moments|shape|mgf|gini|lorenz|bonferroni|renyi|"
                   "shannon|stress-strength|order-pdf|order-cdf")
      ->required();
  eval->add_option("--theta", eval_args.theta, "distribution parameter");
  eval->add_option("--x", eval_args.x, "evaluation point");
  eval->add_option("--p", eval_args.p, "probability level");
  eval->add_option("--eta", eval_args.eta, "entropy order");
  eval->add_option("--t", eval_args.t, "mgf argument");
  eval->add_option("--theta1", eval_args.theta1, "strength parameter");
  eval->add_option("--theta2", eval_args.theta2, "stress parameter");
  eval->add_option("--r", eval_args.r, "moment/cumulant order or order-statistic rank");
  eval->add_option("--m", eval_args.m, "order-statistic sample size");
  eval->add_option("--curve", eval_args.curve, "sweep: start stop steps")
      ->expected(3);
  eval->add_option("--format", eval_args.format, "tsv|json");

  // sample
  auto* sample = app.add_subcommand("sample", "draw a sample, one value per line");
  std::string sample_family;
  double sample_theta = 0.0;
  std::int64_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  sample->add_option("family,--family", sample_family, "family tag");
  sample->add_option("--theta", sample_theta, "distribution parameter")->required();
  sample->add_option("--n", sample_n, "number of draws")->required();
  sample->add_option("--seed", sample_seed, "generator seed");

  // reproduce-table1
  auto* reproduce = app.add_subcommand(
      "reproduce-table1", "re-run the benchmark comparison and diff it against the reference values");
  std::string repro_data_dir;
  std::string repro_format = "tsv";
  reproduce->add_option("--data-dir", repro_data_dir, "directory with the bundled datasets");
  reproduce->add_option("--format", repro_format, "tsv|json");

  try {
    app.parse(argc, argv);
    if (fit->parsed()) {
      if (fit_family.empty()) throw CLI::ValidationError("fit: family is required");
      return cmd_fit(fit_family, fit_data, fit_format);
    }
    if (compare->parsed()) return cmd_compare(cmp_data, cmp_families, cmp_format);
    if (eval->parsed()) return cmd_eval(eval_args);
    if (sample->parsed()) {
      if (sample_family.empty()) throw CLI::ValidationError("sample: family is required");
      if (sample_n < 1) throw CLI::ValidationError("sample: --n must be >= 1");
      return cmd_sample(sample_family, sample_theta, sample_n, sample_seed);
    }
    if (reproduce->parsed()) return cmd_reproduce(repro_data_dir, repro_format);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
