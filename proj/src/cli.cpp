#include "gtn/cli.hpp"

#include "gtn/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gtn::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string compact(std::string label)
{
  label.erase(std::remove(label.begin(), label.end(), '_'), label.end());
  return label;
}

std::string id_str(ReducedStateId id) { return std::string(id_name(id)); }

struct Restarts {
  int count = kDefaultRestarts;
  bool from_env = false;
};

Restarts resolve_restarts(int flag_value, bool flag_given)
{
  if (flag_given) return {flag_value, false};
  const char* env = std::getenv(kRestartsEnv);
  if (env == nullptr || *env == '\0') return {};
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000000) throw std::invalid_argument(std::string(kRestartsEnv) + " must be a positive integer");
  return {static_cast<int>(v), true};
}

std::optional<std::string> restarts_comment(const Restarts& r)
{
  if (!r.from_env) return std::nullopt;
  return "restarts=" + std::to_string(r.count);
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file: " + path);
  f << text;
  f.flush();
  if (!f) throw IoError("cannot write output file: " + path);
}

std::vector<double> temperature_grid(double t_min, double t_max, int steps, bool log_scale)
{
  if (steps > 1 && !(t_max > t_min)) throw std::invalid_argument("--t-max must exceed --t-min");
  return log_scale ? log_grid(t_min, t_max, steps) : linear_grid(t_min, t_max, steps);
}

std::string sweep_csv(std::span<const SweepRecord> records, bool with_bf, const std::optional<std::string>& comment)
{
  const auto columns = sweep_columns(with_bf);
  std::vector<std::vector<double>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(sweep_row(r, with_bf));
  std::ostringstream os;
  write_csv(os, columns, rows, comment);
  return os.str();
}

struct Figure {
  std::vector<ReducedStateId> tripartite;
  std::vector<std::string> columns;
  double t_max;
};

Figure figure_spec(int figure)
{
  using R = ReducedStateId;
  switch (figure) {
    case 1: return {{R::A_BI_CI}, {"S_A_BI_CI", "C_A_BI_CI"}, 3.0};
    case 2: return {{R::A_BI_CII}, {"S_A_BI_CII", "C_A_BI_CII"}, 10.0};
    case 3: return {{R::A_BII_CII}, {"S_A_BII_CII", "C_A_BII_CII"}, 10.0};
    case 4: return {{R::A_BI_BII}, {"S_A_BI_BII", "C_A_BI_BII", "B_BI_BII", "C_BI_BII"}, 10.0};
    default: throw std::invalid_argument("unknown figure id");
  }
}

std::string reproduce_csv(int figure, int steps, bool log_scale, const BruteForceOptions& brute,
                          const std::optional<std::string>& comment)
{
  const Figure fig = figure_spec(figure);
  const auto all = sweep_columns(brute.enabled);
  std::vector<std::string> columns{"temperature", "alpha_sq", "omega"};
  columns.insert(columns.end(), fig.columns.begin(), fig.columns.end());
  if (brute.enabled)
    for (auto id : fig.tripartite) columns.push_back("SBF_" + id_str(id));

  std::vector<std::size_t> picks;
  for (const auto& c : columns)
    picks.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), c) - all.begin()));

  const auto grid = temperature_grid(1e-3, fig.t_max, steps, log_scale);
  std::vector<std::vector<double>> rows;
  for (double a2 : {0.5, 1.0 / 6.0})
    for (const auto& rec : sweep_temperature(a2, 1.0, grid, brute)) {
      const auto full = sweep_row(rec, brute.enabled);
      std::vector<double> row;
      row.reserve(picks.size());
      for (auto k : picks) row.push_back(full.at(k));
      rows.push_back(std::move(row));
    }
  std::ostringstream os;
  write_csv(os, columns, rows, comment);
  return os.str();
}

}  // namespace

std::string format_number(double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::vector<std::string> sweep_columns(bool with_bruteforce)
{
  std::vector<std::string> c{"temperature", "alpha_sq", "omega"};
  for (auto id : kTripartiteIds) {
    c.push_back("S_" + id_str(id));
    c.push_back("C_" + id_str(id));
  }
  for (auto id : kPairIds) {
    c.push_back("B_" + id_str(id));
    c.push_back("C_" + id_str(id));
  }
  c.push_back("B_BI_BII_literal");
  c.insert(c.end(), {"mono_sum_residual", "mono_square_sum_residual", "mono_weighted_4a2_residual",
                     "mono_weighted_4a4_residual"});
  const MonogamyReport labels = check_monogamy(ScenarioParams<double>{});
  for (const auto& l : labels.ckw_labels) c.push_back("ckw_" + compact(l[0]) + "_" + compact(l[1]) + "_" + compact(l[2]));
  if (with_bruteforce)
    for (auto id : kTripartiteIds) c.push_back("SBF_" + id_str(id));
  return c;
}

std::vector<double> sweep_row(const SweepRecord& r, bool with_bruteforce)
{
  std::vector<double> v{r.temperature, r.alpha_sq, r.omega};
  for (const auto& m : r.catalog.tripartite) {
    v.push_back(m.svetlichny_closed);
    v.push_back(m.gte_closed);
  }
  for (const auto& m : r.catalog.pairs) {
    v.push_back(m.bell_closed);
    v.push_back(m.concurrence_closed);
  }
  v.push_back(r.catalog.bell_bi_bii_literal);
  const auto& mono = r.monogamy;
  v.insert(v.end(), {mono.gte_sum.residual, mono.gte_square_sum.residual, mono.weighted_alpha2_rhs.residual,
                     mono.weighted_alpha4_rhs.residual});
  for (const auto& k : mono.ckw) v.push_back(k.residual);
  if (with_bruteforce) {
    if (!r.svetlichny_bruteforce) throw std::logic_error("record has no brute-force values");
    v.insert(v.end(), r.svetlichny_bruteforce->begin(), r.svetlichny_bruteforce->end());
  }
  return v;
}

void write_csv(std::ostream& out, std::span<const std::string> columns, std::span<const std::vector<double>> rows,
               const std::optional<std::string>& comment)
{
  if (comment) out << "# " << *comment << '\n';
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_number(row[k]);
    out << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Genuine tripartite nonlocality and entanglement of a GHZ-like state under Hawking radiation", "gtn"};
  app.require_subcommand(1);

  double alpha_sq = 0.5, omega = 1.0, t_min = 0.001, t_max = 3.0, temperature = 1.0;
  double a2_min = 0.0, a2_max = 1.0;
  int steps = 300, restarts_flag = kDefaultRestarts, figure = 1;
  std::uint64_t seed = 0;
  bool log_scale = false, with_bf = false, scan = false;
  std::string output;
  std::optional<double> tolerance_override;

  auto add_restarts = [&](CLI::App* sub) {
    sub->add_option("--restarts", restarts_flag, "optimizer restarts (default 64, or $GTN_RESTARTS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "optimizer seed")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "output file (default stdout)"); };
  auto add_omega = [&](CLI::App* sub) {
    sub->add_option("--omega", omega, "mode frequency")->check(CLI::PositiveNumber)->capture_default_str();
  };

  auto* sweep = app.add_subcommand("sweep", "all measures over a temperature grid");
  sweep->add_option("--alpha-sq", alpha_sq, "initial-state weight alpha^2")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  add_omega(sweep);
  sweep->add_option("--t-min", t_min, "first temperature")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--t-max", t_max, "last temperature")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--steps", steps, "number of grid points")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_flag("--log-scale", log_scale, "geometric spacing");
  sweep->add_flag("--with-bruteforce", with_bf, "add brute-force Svetlichny columns");
  add_restarts(sweep);
  add_output(sweep);

  auto* sweep_a = app.add_subcommand("sweep-alpha", "all measures over an alpha^2 grid at fixed temperature");
  sweep_a->add_option("--temperature", temperature, "Hawking temperature")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_omega(sweep_a);
  sweep_a->add_option("--alpha-sq-min", a2_min)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sweep_a->add_option("--alpha-sq-max", a2_max)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sweep_a->add_option("--steps", steps, "number of grid points (default 101)")->check(CLI::PositiveNumber);
  sweep_a->add_flag("--with-bruteforce", with_bf, "add brute-force Svetlichny columns");
  add_restarts(sweep_a);
  add_output(sweep_a);

  auto* crit = app.add_subcommand("critical", "critical temperature of the A B_I C_I Svetlichny value");
  crit->add_option("--alpha-sq", alpha_sq, "initial-state weight alpha^2")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  add_omega(crit);
  crit->add_flag("--scan", scan, "scan an alpha^2 grid and emit CSV");
  crit->add_option("--alpha-sq-min", a2_min, "scan start (default 0.01)")->check(CLI::Range(0.0, 1.0));
  crit->add_option("--alpha-sq-max", a2_max, "scan end (default 0.99)")->check(CLI::Range(0.0, 1.0));
  crit->add_option("--steps", steps, "scan points (default 99)")->check(CLI::PositiveNumber);
  add_output(crit);

  auto* verify = app.add_subcommand("verify", "run the oracle and invariant checks");
  add_restarts(verify);
  verify->add_option("--tolerance-override", tolerance_override)->group("");

  auto* repro = app.add_subcommand("reproduce", "data behind figures 1-4");
  repro->add_option("figure", figure, "figure id")->required()->check(CLI::Range(1, 4));
  repro->add_option("--steps", steps, "points per alpha")->check(CLI::PositiveNumber)->capture_default_str();
  repro->add_flag("--log-scale", log_scale, "geometric spacing");
  repro->add_flag("--with-bruteforce", with_bf, "add brute-force Svetlichny columns");
  add_restarts(repro);
  add_output(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    return kUsage;
  }

  try {
    auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    if (sweep->parsed()) {
      const auto r = resolve_restarts(restarts_flag, given(sweep, "--restarts"));
      const auto grid = temperature_grid(t_min, t_max, steps, log_scale);
      const auto records = sweep_temperature(alpha_sq, omega, grid, {with_bf, r.count, seed});
      emit(sweep_csv(records, with_bf, restarts_comment(r)), output, out);
    } else if (sweep_a->parsed()) {
      const auto r = resolve_restarts(restarts_flag, given(sweep_a, "--restarts"));
      if (!given(sweep_a, "--steps")) steps = 101;
      if (steps > 1 && !(a2_max > a2_min)) throw std::invalid_argument("--alpha-sq-max must exceed --alpha-sq-min");
      const auto records = sweep_alpha(temperature, omega, linear_grid(a2_min, a2_max, steps), {with_bf, r.count, seed});
      emit(sweep_csv(records, with_bf, restarts_comment(r)), output, out);
    } else if (crit->parsed()) {
      std::ostringstream os;
      if (scan) {
        if (!given(crit, "--alpha-sq-min")) a2_min = 0.01;
        if (!given(crit, "--alpha-sq-max")) a2_max = 0.99;
        if (!given(crit, "--steps")) steps = 99;
        if (steps > 1 && !(a2_max > a2_min)) throw std::invalid_argument("--alpha-sq-max must exceed --alpha-sq-min");
        os << "alpha_sq,T_c_closed_form,T_c_bisection\n";
        for (double a2 : linear_grid(a2_min, a2_max, steps)) {
          os << format_number(a2);
          if (const auto tc = critical_temperature(a2, omega))
            os << ',' << format_number(tc->closed_form) << ',' << format_number(tc->bisection) << '\n';
          else
            os << ",none,none\n";
        }
      } else if (const auto tc = critical_temperature(alpha_sq, omega)) {
        os << "T_c closed_form=" << format_number(tc->closed_form) << " bisection=" << format_number(tc->bisection)
           << '\n';
      } else {
        os << "T_c none\n";
      }
      emit(os.str(), output, out);
    } else if (verify->parsed()) {
      const auto r = resolve_restarts(restarts_flag, given(verify, "--restarts"));
      if (const auto c = restarts_comment(r)) out << "# " << *c << '\n';
      const auto results = run_verification({r.count, seed, tolerance_override});
      write_report(out, results);
      return all_passed(results) ? kOk : kVerifyFailed;
    } else if (repro->parsed()) {
      const auto r = resolve_restarts(restarts_flag, given(repro, "--restarts"));
      emit(reproduce_csv(figure, steps, log_scale, {with_bf, r.count, seed}, restarts_comment(r)), output, out);
    }
  } catch (const IoError& e) {
    err << "gtn: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "gtn: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace gtn::cli
