#include "cli.hpp"

#include <chrono>
#include <istream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ral/asymptotics.hpp"
#include "ral/greedy.hpp"
#include "ral/matrix_io.hpp"
#include "ral/plot.hpp"
#include "ral/solver.hpp"
#include "ral/stats.hpp"

namespace ral::cli {

std::string_view to_string(Subcommand s) {
  switch (s) {
    case Subcommand::Greedy: return "greedy";
    case Subcommand::Solve: return "solve";
    case Subcommand::Asymptotics: return "asymptotics";
    case Subcommand::Oracle: return "oracle";
    case Subcommand::Simulate: return "simulate";
    case Subcommand::Clt: return "clt";
    case Subcommand::Parisi: return "parisi";
    case Subcommand::Uniform: return "uniform";
    case Subcommand::Gap: return "gap";
    case Subcommand::Plot: return "plot";
  }
  return "unknown";
}

ExperimentConfig CliConfig::experiment() const {
  ExperimentConfig e;
  e.n_values = n_values;
  e.trials = trials;
  e.master_seed = seed.value_or(0);
  e.dist = dist;
  e.objective = objective;
  e.workers = workers;
  return e;
}

namespace {

const std::map<std::string, DistributionKind> kDists{
    {"gaussian", DistributionKind::Gaussian},
    {"exp", DistributionKind::Exponential},
    {"uniform", DistributionKind::Uniform}};

const std::map<std::string, Objective> kObjectives{
    {"greedy", Objective::GreedyMax}, {"max", Objective::ExactMax}, {"min", Objective::ExactMin}};

const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};

struct Flags {
  std::string dist = "gaussian";
  std::string objective;
  std::string format = "csv";
  std::string in, out;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

struct Builder {
  CLI::App app{"Gaussian assignment process: greedy and exact maxima, asymptotic constants "
               "and Monte Carlo checks.",
               "ral"};
  Flags f;
  CliConfig cfg;
  std::map<CLI::App*, Subcommand> kinds;
  std::map<Subcommand, CLI::Option*> seed_opts;
  std::map<Subcommand, std::pair<CLI::Option*, std::int64_t>> trial_opts;

  CLI::App* sub(Subcommand kind, const std::string& description) {
    auto* s = app.add_subcommand(std::string(to_string(kind)), description);
    kinds[s] = kind;
    return s;
  }

  static void n_list(CLI::App* s, std::vector<std::int64_t>& dst, const char* name,
                     const char* what, bool required) {
    auto* o = s->add_option(name, dst, what)->delimiter(',')->check(CLI::PositiveNumber);
    if (required) o->required();
  }

  void output(CLI::App* s, bool with_format) {
    s->add_option("--out", f.out, "Output file (default: stdout)");
    if (with_format) {
      s->add_option("--format", f.format, "Output format")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  }

  void sim(CLI::App* s, Subcommand kind, std::int64_t default_trials) {
    trial_opts[kind] = {s->add_option("--trials", f.trials, "Monte Carlo trials per n")
                            ->check(CLI::PositiveNumber)
                            ->default_str(std::to_string(default_trials)),
                        default_trials};
    seed_opts[kind] = s->add_option("--seed", f.seed, "Master seed (required)")->required();
    s->add_option("--workers", f.workers, "Worker threads, 0 = all cores")
        ->envname("RAL_WORKERS")
        ->check(CLI::NonNegativeNumber);
    s->add_flag("--records", cfg.records, "Emit per-trial records instead of the summary");
    output(s, true);
  }

  Builder() {
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Print help for every subcommand");

    auto* greedy = sub(Subcommand::Greedy, "Greedy row-by-row maximum of a CSV matrix, as JSON");
    greedy->add_option("--in", f.in, "Matrix CSV (default: stdin)");
    output(greedy, false);

    auto* solve = sub(Subcommand::Solve, "Exact assignment of a CSV matrix, as JSON");
    solve->add_option("--in", f.in, "Matrix CSV (default: stdin)");
    solve->add_option("--objective", f.objective, "max or min")
        ->check(CLI::IsMember({"max", "min"}));
    output(solve, false);

    auto* asym = sub(Subcommand::Asymptotics, "Closed-form constants per n");
    n_list(asym, cfg.n_values, "--n", "Comma-separated sizes", true);
    output(asym, true);

    auto* oracle = sub(Subcommand::Oracle, "Quadrature moments of the max of m normals");
    n_list(oracle, cfg.m_values, "--m", "Comma-separated m values", true);
    output(oracle, true);

    auto* simulate = sub(Subcommand::Simulate, "Monte Carlo ratio to n sqrt(2 log n)");
    n_list(simulate, cfg.n_values, "--n", "Comma-separated sizes", true);
    simulate->add_option("--dist", f.dist, "Cost law")
        ->check(CLI::IsMember({"gaussian", "exp", "uniform"}));
    simulate->add_option("--objective", f.objective, "greedy, max or min")
        ->check(CLI::IsMember({"greedy", "max", "min"}));
    sim(simulate, Subcommand::Simulate, 500);

    auto* clt = sub(Subcommand::Clt, "Normal approximation of the greedy sum at one n");
    n_list(clt, cfg.n_values, "--n", "Single size", true);
    sim(clt, Subcommand::Clt, 10000);

    auto* parisi = sub(Subcommand::Parisi, "Exact minimum with Exp(1) costs vs sum 1/k^2");
    n_list(parisi, cfg.n_values, "--n", "Comma-separated sizes", true);
    sim(parisi, Subcommand::Parisi, 10000);

    auto* uniform = sub(Subcommand::Uniform, "Exact minimum with U(0,1) costs vs the 1/n expansion");
    n_list(uniform, cfg.n_values, "--n", "Comma-separated sizes", true);
    sim(uniform, Subcommand::Uniform, 10000);

    auto* gap = sub(Subcommand::Gap, "Exact maximum minus greedy on shared matrices");
    n_list(gap, cfg.n_values, "--n", "Comma-separated sizes", true);
    sim(gap, Subcommand::Gap, 200);

    auto* plot = sub(Subcommand::Plot, "SVG line chart of a report CSV");
    plot->add_option("--in", f.in, "Report CSV")->required();
    plot->add_option("--out", f.out, "SVG path")->required();
    plot->add_option("--y", cfg.y_column, "Column plotted against n");
  }
};

}  // namespace

CliConfig parse_args(std::span<const std::string> args) {
  Builder b;
  std::vector<const char*> argv{"ral"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    b.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CliConfig help;
    help.help = true;
    const auto subs = b.app.get_subcommands();
    help.help_text = subs.empty() ? b.app.help() : subs.front()->help();
    return help;
  } catch (const CLI::CallForAllHelp&) {
    CliConfig help;
    help.help = true;
    help.help_text = b.app.help("", CLI::AppFormatMode::All);
    return help;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliConfig cfg = std::move(b.cfg);
  auto* chosen = b.app.get_subcommands().front();
  cfg.subcommand = b.kinds.at(chosen);
  cfg.dist = kDists.at(b.f.dist);
  cfg.format = kFormats.at(b.f.format);
  if (auto it = b.trial_opts.find(cfg.subcommand); it != b.trial_opts.end()) {
    cfg.trials = it->second.first->count() ? b.f.trials : it->second.second;
  }
  cfg.workers = b.f.workers;
  if (!b.f.in.empty()) cfg.in_path = b.f.in;
  if (!b.f.out.empty()) cfg.out_path = b.f.out;
  if (auto it = b.seed_opts.find(cfg.subcommand); it != b.seed_opts.end() && it->second->count()) {
    cfg.seed = b.f.seed;
  }

  switch (cfg.subcommand) {
    case Subcommand::Solve:
      cfg.objective = b.f.objective == "min" ? Objective::ExactMin : Objective::ExactMax;
      break;
    case Subcommand::Simulate:
      cfg.objective = b.f.objective.empty() ? Objective::GreedyMax : kObjectives.at(b.f.objective);
      break;
    case Subcommand::Clt:
      cfg.objective = Objective::GreedyMax;
      if (cfg.n_values.size() != 1) throw UsageError("--n: clt takes exactly one size");
      break;
    case Subcommand::Parisi:
      cfg.objective = Objective::ExactMin;
      cfg.dist = DistributionKind::Exponential;
      break;
    case Subcommand::Uniform:
      cfg.objective = Objective::ExactMin;
      cfg.dist = DistributionKind::Uniform;
      break;
    case Subcommand::Gap:
      cfg.objective = Objective::ExactMax;
      break;
    default: break;
  }
  if (cfg.trials == 1) throw UsageError("--trials: at least 2 trials are needed");
  return cfg;
}

namespace {

std::string read_input(const CliConfig& cfg, std::istream& in) {
  return cfg.in_path ? read_file(*cfg.in_path) : read_all(in);
}

void write_output(const CliConfig& cfg, std::string_view text, std::ostream& out) {
  if (cfg.out_path) {
    write_file(*cfg.out_path, text);
  } else {
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing to output stream");
  }
}

std::string assignment_json(const AssignmentResult& r, double elapsed_ms) {
  nlohmann::ordered_json j;
  j["value"] = r.value;
  j["permutation"] = r.perm.to_one_based();
  j["method"] = to_string(r.method);
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

template <typename F>
std::string timed_assignment(F&& solve) {
  const auto start = std::chrono::steady_clock::now();
  const AssignmentResult r = solve();
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
  return assignment_json(r, dt.count());
}

Table summary_table(const ExperimentConfig& e, const std::vector<ExperimentRecord>& records) {
  Table t{{"n", "mean_value", "std_error", "variance"}, {}};
  const auto per_n = static_cast<std::size_t>(e.trials);
  for (std::size_t slot = 0; slot < e.n_values.size(); ++slot) {
    std::vector<double> v;
    for (std::size_t k = slot * per_n; k < (slot + 1) * per_n; ++k) v.push_back(records[k].value);
    const auto s = summarize(v);
    t.rows.push_back({e.n_values[slot], s.mean, s.std_error, s.variance});
  }
  return t;
}

}  // namespace

void execute(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const ExperimentConfig e = cfg.experiment();
  auto emit = [&](const Table& t) { emit_report(t, cfg.format, cfg.out_path, out); };

  switch (cfg.subcommand) {
    case Subcommand::Greedy: {
      const auto m = matrix_from_csv(read_input(cfg, in));
      write_output(cfg, timed_assignment([&] { return greedy_assign(m); }), out);
      return;
    }
    case Subcommand::Solve: {
      const auto m = matrix_from_csv(read_input(cfg, in));
      write_output(cfg, timed_assignment([&] {
                     return cfg.objective == Objective::ExactMin ? hungarian_min(m)
                                                                 : hungarian_max(m);
                   }),
                   out);
      return;
    }
    case Subcommand::Asymptotics:
      emit(asymptotics_table(cfg.n_values));
      return;
    case Subcommand::Oracle: {
      std::vector<MaxMoments> rows;
      for (auto m : cfg.m_values) rows.push_back(exact_max_moments(m));
      emit(to_table(rows));
      return;
    }
    case Subcommand::Simulate: {
      e.validate();
      const bool ratio = e.dist == DistributionKind::Gaussian && e.objective != Objective::ExactMin;
      if (ratio) {
        for (auto n : e.n_values) {
          if (n < 2) throw DomainError("simulate: the ratio report needs n >= 2");
        }
      }
      const auto records = run_trials(e);
      if (cfg.records) return emit(to_table(records));
      if (ratio) return emit(to_table(ratio_report(e, records)));
      return emit(summary_table(e, records));
    }
    case Subcommand::Clt: {
      if (e.trials < 1000) throw DomainError("clt: needs --trials >= 1000");
      const auto records = run_trials(e);
      if (cfg.records) return emit(to_table(records));
      return emit(to_table(clt_report(e, records)));
    }
    case Subcommand::Parisi: {
      const auto records = run_trials(e);
      if (cfg.records) return emit(to_table(records));
      return emit(to_table(parisi_report(e, records)));
    }
    case Subcommand::Uniform: {
      for (auto n : e.n_values) {
        if (n < 2) throw DomainError("uniform: needs n >= 2");
      }
      const auto records = run_trials(e);
      if (cfg.records) return emit(to_table(records));
      return emit(to_table(uniform_report(e, records)));
    }
    case Subcommand::Gap: {
      const auto records = run_paired_trials(e);
      if (cfg.records) return emit(to_table(records));
      return emit(to_table(gap_report(e, records)));
    }
    case Subcommand::Plot:
      plot_convergence(*cfg.in_path, *cfg.out_path, cfg.y_column);
      return;
  }
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for the flag table.\n";
    return kExitUsage;
  }
  if (cfg.help) {
    out << cfg.help_text;
    return kExitOk;
  }
  try {
    execute(cfg, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace ral::cli
