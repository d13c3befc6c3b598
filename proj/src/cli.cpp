#include "qmeur/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmeur/bounds.hpp"
#include "qmeur/error.hpp"
#include "qmeur/io.hpp"
#include "qmeur/scenario.hpp"

namespace qmeur {

namespace {

struct CommonFlags {
  std::string out;
  std::string wu_variant = "corrected";
  std::string b_order = "given";

  ReportOptions options() const {
    return {wu_variant == "original" ? WuVariant::Original : WuVariant::Corrected,
            b_order == "minimized" ? BOrder::Minimized : BOrder::Given};
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out, "Write CSV to PATH (atomically)");
  cmd->add_option("--wu-variant", flags.wu_variant, "Overlap product in the Wu multi-memory bound")
      ->check(CLI::IsMember({"corrected", "original"}));
  cmd->add_option("--b-order", flags.b_order, "Measurement order used for the channel constant b")
      ->check(CLI::IsMember({"given", "minimized"}));
}

struct ComputeFlags {
  std::string state;
  std::string bases;
  std::string partition;
};

std::string report_csv(const BoundReport& r) {
  std::ostringstream head;
  std::ostringstream row;
  row.precision(12);
  head << "lhs";
  row << r.lhs;
  for (const auto& [name, value] : r.bounds) {
    head << ',' << name;
    row << ',' << value;
  }
  head << ",shannon_sum";
  row << ',' << r.shannon_sum;
  for (const auto& [name, value] : r.shannon_bounds) {
    head << ",shannon_" << name;
    row << ',' << value;
  }
  for (const auto& [name, value] : r.deltas) {
    head << ",delta_raw_" << name;
    row << ',' << value;
  }
  return head.str() + "\n" + row.str() + "\n";
}

int compute(const ComputeFlags& flags, const CommonFlags& common, std::ostream& out) {
  const DensityMatrix rho = load_state(flags.state);
  const MeasurementSet ms = parse_bases_list(flags.bases);
  const Partition partition = Partition::parse(flags.partition);
  const BoundReport report = build_report(rho, ms, partition, common.options());

  std::ostringstream text;
  text << std::fixed << std::setprecision(6);
  text << "partition " << partition.to_string() << '\n';
  text << "lhs " << report.lhs << '\n';
  for (const auto& [name, value] : report.bounds) text << name << ' ' << value << '\n';
  text << "shannon_sum " << report.shannon_sum << '\n';
  for (const auto& [name, value] : report.shannon_bounds) text << "shannon_" << name << ' ' << value << '\n';
  for (const auto& [name, value] : report.deltas) text << "delta_raw_" << name << ' ' << value << '\n';
  const auto bad = report.violations();
  text << "violations";
  if (bad.empty()) text << " none";
  for (const auto& name : bad) text << ' ' << name;
  text << '\n';

  if (!common.out.empty()) write_atomic(common.out, report_csv(report));
  out << text.str();
  return 0;
}

struct ScenarioFlags {
  std::string name;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::size_t> p_steps;
  std::optional<std::size_t> alpha_steps;
  std::optional<std::size_t> beta_steps;
  std::optional<double> from;
  std::optional<double> to;
  std::size_t samples = kDefaultEnsembleSamples;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  bool sort_by_wu = false;
};

SweepAxis make_axis(const std::string& name, std::optional<std::size_t> steps, double from, double to,
                    const ScenarioFlags& flags) {
  return {name, flags.from.value_or(from), flags.to.value_or(to), steps.value_or(kDefaultGridSteps)};
}

SweepSpec make_spec(const ScenarioFlags& flags, const CommonFlags& common) {
  constexpr double pi = std::numbers::pi;
  SweepSpec spec;
  spec.scenario = flags.name;
  spec.samples = flags.samples;
  spec.seed = flags.seed;
  spec.threads = flags.threads;
  spec.options = common.options();

  if (flags.name == "one-memory") {
    if (flags.p_steps) {
      if (flags.p || flags.alpha_steps) throw Error(ErrorKind::OutOfRange, "--p-steps sweeps p; drop --p/--alpha-steps");
      spec.axis = make_axis("p", flags.p_steps, 0.0, 1.0, flags);
      spec.fixed["alpha"] = flags.alpha.value_or(pi / 2);
    } else {
      if (flags.alpha) throw Error(ErrorKind::OutOfRange, "--alpha is fixed only when sweeping p (--p-steps)");
      spec.axis = make_axis("alpha", flags.alpha_steps, 0.0, pi, flags);
      spec.fixed["p"] = flags.p.value_or(0.5);
    }
  } else if (flags.name == "w-state") {
    if (flags.beta_steps) {
      if (flags.beta || flags.alpha_steps) {
        throw Error(ErrorKind::OutOfRange, "--beta-steps sweeps beta; drop --beta/--alpha-steps");
      }
      spec.axis = make_axis("beta", flags.beta_steps, 0.0, 2.0 * pi, flags);
      spec.fixed["alpha"] = flags.alpha.value_or(2.0 * pi / 3);
    } else {
      if (flags.alpha) throw Error(ErrorKind::OutOfRange, "--alpha is fixed only when sweeping beta (--beta-steps)");
      spec.axis = make_axis("alpha", flags.alpha_steps, 0.0, pi, flags);
      spec.fixed["beta"] = flags.beta.value_or(pi / 5);
    }
  }
  return spec;
}

int scenario(const ScenarioFlags& flags, const CommonFlags& common, std::ostream& out, std::ostream& err) {
  SweepResult result = run_sweep(make_spec(flags, common));
  if (flags.sort_by_wu) sort_by_wu(result);
  const std::string csv = to_csv(result);
  const SweepSummary s = summarize(result);

  std::ostringstream summary;
  summary << std::setprecision(12) << "summary scenario=" << result.scenario << " rows=" << s.rows
          << " min(lhs-best)=" << s.min_gap << " max(lhs-best)=" << s.max_gap << " violations=" << s.violations
          << '\n';
  if (common.out.empty()) {
    out << csv;
    err << summary.str();
  } else {
    write_atomic(common.out, csv);
    out << summary.str();
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic uncertainty bounds with quantum memories", "qmeur"};
  app.require_subcommand(1);

  CommonFlags compute_common;
  ComputeFlags compute_flags;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate every bound for a state file");
  compute_cmd->add_option("--state", compute_flags.state, "State JSON file")->required();
  compute_cmd->add_option("--bases", compute_flags.bases, "Comma-separated built-in names or basis files")->required();
  compute_cmd->add_option("--partition", compute_flags.partition, "Partition, e.g. '1:1;2,3:2'")->required();
  add_common(compute_cmd, compute_common);

  CommonFlags scenario_common;
  ScenarioFlags scenario_flags;
  auto* scenario_cmd = app.add_subcommand("scenario", "Run a case-study sweep and emit CSV");
  scenario_cmd->add_option("name", scenario_flags.name, "one-memory | w-state | random-ensemble")->required();
  scenario_cmd->add_option("--p", scenario_flags.p, "Mixing weight (one-memory)");
  scenario_cmd->add_option("--alpha", scenario_flags.alpha, "Fixed alpha when sweeping another axis");
  scenario_cmd->add_option("--beta", scenario_flags.beta, "Fixed beta (w-state)");
  scenario_cmd->add_option("--p-steps", scenario_flags.p_steps, "Sweep p with this many points");
  scenario_cmd->add_option("--alpha-steps", scenario_flags.alpha_steps, "Sweep alpha with this many points");
  scenario_cmd->add_option("--beta-steps", scenario_flags.beta_steps, "Sweep beta with this many points");
  scenario_cmd->add_option("--from", scenario_flags.from, "Start of the swept range");
  scenario_cmd->add_option("--to", scenario_flags.to, "End of the swept range (inclusive)");
  scenario_cmd->add_option("--samples", scenario_flags.samples, "Ensemble size");
  scenario_cmd->add_option("--seed", scenario_flags.seed, "Master seed");
  scenario_cmd->add_option("--threads", scenario_flags.threads, "Worker threads (0 = all cores)");
  scenario_cmd->add_flag("--sort-by-wu", scenario_flags.sort_by_wu, "Order ensemble rows by the Wu bound");
  add_common(scenario_cmd, scenario_common);

  auto* version_cmd = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (compute_cmd->parsed()) return compute(compute_flags, compute_common, out);
    if (scenario_cmd->parsed()) return scenario(scenario_flags, scenario_common, out, err);
    if (version_cmd->parsed()) {
      out << "qmeur " << kVersion << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace qmeur
