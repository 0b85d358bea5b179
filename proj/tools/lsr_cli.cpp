// Command-line front end: synth, detect, worstcase, verify, sweep,
// experiment1, figure1. Exit codes: 0 ok, 1 verification failure, 2 usage.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsr/approx_bounds.hpp"
#include "lsr/detection.hpp"
#include "lsr/error.hpp"
#include "lsr/experiments.hpp"
#include "lsr/io.hpp"
#include "lsr/measure.hpp"
#include "lsr/worst_case.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

void require_writable(const std::string& path) {
  if (path.empty()) return;
  const fs::path parent = fs::absolute(fs::path(path)).parent_path();
  if (!fs::is_directory(parent))
    throw lsr::Error(lsr::ErrorCode::IoError, "output directory does not exist: " + parent.string());
}

// Writes to `path` atomically, or to stdout when no path was given.
void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    lsr::io::write_file_atomic(path, text);
}

json spectrum_json(const lsr::DetectionAtS& d) {
  return {{"s", d.s}, {"singular_values", d.spectrum.values}, {"threshold", d.spectrum.threshold}, {"n", d.n},
          {"saturated", d.saturated}};
}

json report_json(const lsr::BoundCheckReport& r) {
  return {{"check", r.check}, {"params", r.params}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds},
          {"config", r.config}, {"oracle_evaluations", r.oracle_evaluations}};
}

json worst_case_json(const lsr::AdversarialPair& p) {
  const auto& r = p.report;
  return {{"kind", lsr::to_string(p.kind)},
          {"n", p.mu.size()},
          {"omega", p.omega},
          {"sigma", p.sigma},
          {"m_min", p.m_min},
          {"tau", p.tau},
          {"mu", lsr::io::to_json(p.mu)},
          {"mu_hat", lsr::io::to_json(p.mu_hat)},
          {"nodes", p.nodes},
          {"amplitudes", p.amplitudes},
          {"report",
           {{"sup_dense", r.sup_dense},
            {"dense_points", r.dense_points},
            {"sup_samples", r.sup_samples},
            {"sample_points", r.sample_points},
            {"taylor_bound", r.taylor_bound},
            {"amplitude_sum", r.amplitude_sum},
            {"amplitude_sum_bound", r.amplitude_sum_bound},
            {"admissible", r.admissible},
            {"holds", r.holds}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line spectral estimation toolkit: detection, worst-case instances, bound checks, experiments"};
  app.require_subcommand(1, 1);

  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Base seed for every random draw");

  // synth
  auto* synth = app.add_subcommand("synth", "Sample a measure's Fourier data with bounded noise");
  std::string synth_measure, synth_out;
  std::vector<double> synth_supports, synth_amps;
  double synth_omega = 1.0, synth_sigma = 0.0;
  int synth_m = 20;
  auto* measure_opt = synth->add_option("--measure", synth_measure, "Measure JSON (supports, amplitudes_re, amplitudes_im)")
                          ->check(CLI::ExistingFile);
  auto* supports_opt = synth->add_option("--supports", synth_supports, "Support positions")->excludes(measure_opt);
  synth->add_option("--amplitudes", synth_amps, "Real amplitudes, one per support")->needs(supports_opt);
  synth->add_option("--omega", synth_omega, "Cutoff frequency")->capture_default_str();
  synth->add_option("--m", synth_m, "Number of samples")->capture_default_str();
  synth->add_option("--sigma", synth_sigma, "Noise level (strict bound on |W|)")->capture_default_str();
  synth->add_option("--out", synth_out, "Output measurement JSON (stdout if omitted)");

  // detect
  auto* detect = app.add_subcommand("detect", "Estimate the number of spectra in a measurement");
  std::string detect_input, detect_out;
  std::optional<double> detect_sigma;
  std::optional<int> detect_s;
  bool detect_sweep = false;
  detect->add_option("--input", detect_input, "Measurement JSON")->required()->check(CLI::ExistingFile);
  detect->add_option("--sigma", detect_sigma, "Override the declared noise level");
  auto* s_opt = detect->add_option("--s", detect_s, "Single Hankel size s");
  detect->add_flag("--sweep", detect_sweep, "Sweep s = 1..floor((M-1)/2) (default)")->excludes(s_opt);
  detect->add_option("--out", detect_out, "Output JSON (stdout if omitted)");

  // worstcase
  auto* worst = app.add_subcommand("worstcase", "Build and verify an indistinguishable pair at the limit spacing");
  std::string worst_kind, worst_out;
  int worst_n = 2, worst_samples = 200;
  double worst_omega = 1.0, worst_sigma = 1e-3, worst_mmin = 1.0;
  worst->add_option("--kind", worst_kind, "number or support")->required()->check(CLI::IsMember({"number", "support"}));
  worst->add_option("--n", worst_n, "Number of spectra in mu")->required();
  worst->add_option("--omega", worst_omega, "Cutoff frequency")->capture_default_str();
  worst->add_option("--sigma", worst_sigma, "Noise level")->capture_default_str();
  worst->add_option("--mmin", worst_mmin, "Minimum amplitude modulus")->capture_default_str();
  worst->add_option("--samples", worst_samples, "Grid samples used for the check")->capture_default_str();
  worst->add_option("--out", worst_out, "Output pair JSON (stdout if omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Numerically check the approximation bounds and inequalities");
  bool v_appendix = false, v_stirling = false;
  int v_n_max = 30, v_residual = 0, v_min_eta = 0, v_nonlinear = 0, v_thm = 0, v_stability = 0;
  std::string verify_out;
  verify->add_flag("--appendix", v_appendix, "Appendix inequalities for n = 2..n-max");
  verify->add_option("--n-max", v_n_max, "Largest n for --appendix / --stirling")->capture_default_str();
  verify->add_flag("--stirling", v_stirling, "Stirling sandwich for n = 1..n-max");
  verify->add_option("--residual", v_residual, "Random configs for the residual lower bound");
  verify->add_option("--min-eta", v_min_eta, "Random configs for the eta minimum bound");
  verify->add_option("--nonlinear", v_nonlinear, "Random configs for the nonlinear approximation bound");
  verify->add_option("--stability", v_stability, "Random configs for the matched-node stability bound");
  verify->add_option("--node-error", v_thm, "Random configs for the node-error bound from a data residual");
  verify->add_option("--out", verify_out, "Output JSON lines (stdout if omitted)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Phase-transition Monte Carlo in the (log SRF, log SNR) plane");
  std::string sweep_config, sweep_out, sweep_plot;
  sweep->add_option("--config", sweep_config, "Sweep config JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "Output trials CSV")->required();
  sweep->add_option("--plot-script", sweep_plot, "Also write a gnuplot script");

  // experiment1
  auto* exp1 = app.add_subcommand("experiment1", "Four spikes at -0.5, 0, 0.5, 1 with sigma = 1e-7");
  double exp1_sigma = 1e-7;
  exp1->add_option("--sigma", exp1_sigma, "Noise level")->capture_default_str();

  // figure1
  auto* fig1 = app.add_subcommand("figure1", "Detected count versus spacing tau for (-tau, 0, tau, 2 tau)");
  double fig1_sigma = 1e-7, fig1_step = 0.01;
  std::string fig1_out;
  fig1->add_option("--sigma", fig1_sigma, "Noise level")->capture_default_str();
  fig1->add_option("--tau-step", fig1_step, "Grid step for tau in (0, 1]")->capture_default_str();
  fig1->add_option("--out", fig1_out, "Output CSV tau,n_detected (JSON summary still goes to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*synth) {
      require_writable(synth_out);
      lsr::DiscreteMeasure mu = [&] {
        if (!synth_measure.empty()) return lsr::io::measure_from_json(lsr::io::read_json_file(synth_measure));
        if (synth_supports.empty()) throw lsr::Error(lsr::ErrorCode::ConfigError, "give --measure or --supports");
        if (synth_amps.empty()) synth_amps.assign(synth_supports.size(), 1.0);
        return lsr::DiscreteMeasure::real(synth_supports, synth_amps);
      }();
      const lsr::Measurement y =
          lsr::synthesize_measurement(mu, lsr::SamplingGrid(synth_omega, synth_m), synth_sigma, seed.value_or(0));
      emit(synth_out, lsr::io::to_json(y).dump(2) + "\n");
      return kOk;
    }

    if (*detect) {
      require_writable(detect_out);
      lsr::Measurement y = lsr::io::measurement_from_json(lsr::io::read_json_file(detect_input));
      if (detect_sigma) y.sigma = *detect_sigma;
      if (y.sigma < 0.0) throw lsr::Error(lsr::ErrorCode::ConfigError, "sigma must be nonnegative");
      json out;
      if (detect_s) {
        const lsr::DetectionAtS d = lsr::detect_at_s(y, *detect_s);
        out = {{"n_detected", d.n}, {"saturated", d.saturated}, {"per_s", json::array({spectrum_json(d)})}};
      } else {
        const lsr::DetectionResult r = lsr::detect_count_sweep(y);
        json per_s = json::array();
        for (const auto& d : r.per_s) per_s.push_back(spectrum_json(d));
        out = {{"n_detected", r.n_detected}, {"saturated", r.saturated}, {"per_s", per_s}};
      }
      emit(detect_out, out.dump() + "\n");
      return kOk;
    }

    if (*worst) {
      require_writable(worst_out);
      const lsr::AdversarialPair pair =
          worst_kind == "number"
              ? lsr::construct_number_instance(worst_n, worst_omega, worst_sigma, worst_mmin, worst_samples)
              : lsr::construct_support_instance(worst_n, worst_omega, worst_sigma, worst_mmin, worst_samples);
      emit(worst_out, worst_case_json(pair).dump(2) + "\n");
      return kOk;
    }

    if (*verify) {
      require_writable(verify_out);
      const std::uint64_t base = seed.value_or(0);
      std::vector<lsr::BoundCheckReport> reports;
      auto append = [&](std::vector<lsr::BoundCheckReport> more) {
        reports.insert(reports.end(), more.begin(), more.end());
      };
      if (v_appendix) append(lsr::check_appendix_inequalities(2, v_n_max));
      if (v_stirling) append(lsr::check_stirling_sandwich(1, v_n_max));
      if (v_residual > 0) append(lsr::sweep_residual_lower_bound(v_residual, base));
      if (v_min_eta > 0) append(lsr::sweep_min_eta(v_min_eta, base));
      if (v_nonlinear > 0) append(lsr::sweep_nonlinear_approx(v_nonlinear, base));
      if (v_thm > 0) append(lsr::sweep_theorem_3_12(v_thm, base));
      if (v_stability > 0) append(lsr::sweep_eta_stability(v_stability, base));
      if (reports.empty()) throw lsr::Error(lsr::ErrorCode::ConfigError, "no check selected");

      std::string text;
      bool all_hold = true;
      for (const auto& r : reports) {
        text += report_json(r).dump() + "\n";
        all_hold = all_hold && r.holds;
      }
      emit(verify_out, text);
      if (!all_hold) std::cerr << "verify: at least one bound does not hold\n";
      return all_hold ? kOk : kVerificationFailed;
    }

    if (*sweep) {
      require_writable(sweep_out);
      require_writable(sweep_plot);
      lsr::SweepConfig config = lsr::sweep_config_from_json(lsr::io::read_json_file(sweep_config));
      if (seed) config.seed = *seed;
      const auto records = lsr::run_phase_transition(config);
      lsr::io::write_file_atomic(sweep_out, lsr::trials_csv(records));

      int successes = 0;
      for (const auto& r : records) successes += r.success ? 1 : 0;
      json summary{{"trials", records.size()}, {"successes", successes}, {"config", lsr::to_json(config)}};
      const double slope = 2.0 * config.n - 2.0;
      try {
        const lsr::SeparatingLines lines = lsr::fit_separating_lines(records, slope);
        summary["lines"] = {{"slope", lines.slope},
                            {"intercept_success", lines.intercept_success},
                            {"intercept_fail", lines.intercept_fail},
                            {"misclassified", lines.misclassified},
                            {"single_line_errors", lines.single_line_errors}};
        if (!sweep_plot.empty()) lsr::io::write_file_atomic(sweep_plot, lsr::plot_script(sweep_out, lines));
      } catch (const lsr::Error& e) {
        if (e.code() != lsr::ErrorCode::DegenerateData) throw;
        summary["lines"] = nullptr;
        if (!sweep_plot.empty()) std::cerr << "sweep: one class is empty, no plot script written\n";
      }
      std::cout << summary.dump() << "\n";
      return kOk;
    }

    if (*exp1) {
      const lsr::DetectionResult r = lsr::run_experiment_1(seed.value_or(lsr::kExperiment1Seed), exp1_sigma);
      std::cout << json{{"n_detected", r.n_detected}}.dump() << "\n";
      return kOk;
    }

    if (*fig1) {
      require_writable(fig1_out);
      const auto taus = lsr::tau_grid(fig1_step);
      const auto points = lsr::run_separation_sweep(taus, fig1_sigma, seed.value_or(0));
      if (!fig1_out.empty()) {
        std::string csv = "tau,n_detected\n";
        for (const auto& p : points) csv += lsr::io::format_double(p.tau) + "," + std::to_string(p.n_detected) + "\n";
        lsr::io::write_file_atomic(fig1_out, csv);
      }
      json pts = json::array();
      for (const auto& p : points) pts.push_back({{"tau", p.tau}, {"n_detected", p.n_detected}});
      const double onset = lsr::persistent_onset(points, 4);
      std::cout << json{{"onset", std::isnan(onset) ? json(nullptr) : json(onset)}, {"points", pts}}.dump() << "\n";
      return kOk;
    }
  } catch (const lsr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == lsr::ErrorCode::VerificationFailed ? kVerificationFailed : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
