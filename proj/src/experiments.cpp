#include "lsr/experiments.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "lsr/error.hpp"
#include "lsr/io.hpp"
#include "lsr/random.hpp"
#include "parallel.hpp"

namespace lsr {

namespace {

constexpr double kPi = std::numbers::pi;

DiscreteMeasure four_spikes(double tau) {
  const double a[] = {1.0, -1.0, -1.0, 1.0};
  return DiscreteMeasure::real({-tau, 0.0, tau, 2.0 * tau}, a);
}

}  // namespace

DiscreteMeasure experiment_1_measure() {
  const double a[] = {1.0, -1.0, -1.0, 1.0};
  return DiscreteMeasure::real({-0.5, 0.0, 0.5, 1.0}, a);
}

DetectionResult run_experiment_1(std::uint64_t seed, double sigma) {
  const SamplingGrid grid(1.0, 20);
  return detect_count_sweep(synthesize_measurement(experiment_1_measure(), grid, sigma, seed));
}

std::vector<SeparationPoint> run_separation_sweep(std::span<const double> tau_values, double sigma,
                                                  std::uint64_t seed) {
  for (double t : tau_values)
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau values must be positive");
  const SamplingGrid grid(1.0, 20);
  return detail::parallel_map(static_cast<int>(tau_values.size()), [&](int i) {
    const double tau = tau_values[static_cast<std::size_t>(i)];
    const Measurement y = synthesize_measurement(four_spikes(tau), grid, sigma,
                                                 derive_seed(seed, static_cast<std::uint64_t>(i)));
    return SeparationPoint{tau, detect_count_sweep(y).n_detected};
  });
}

std::vector<double> tau_grid(double step) {
  if (!(step > 0.0) || step > 1.0) throw Error(ErrorCode::InvalidArgument, "tau step must lie in (0, 1]");
  std::vector<double> out;
  const int count = static_cast<int>(std::floor(1.0 / step + 1e-9));
  for (int i = 1; i <= count; ++i) out.push_back(i * step);
  return out;
}

double persistent_onset(const std::vector<SeparationPoint>& points, int target) {
  double onset = std::numeric_limits<double>::quiet_NaN();
  for (auto it = points.rbegin(); it != points.rend() && it->n_detected == target; ++it) onset = it->tau;
  return onset;
}

double effective_cutoff(const SamplingGrid& grid, int s) {
  return s * decimation_stride(grid.m(), s) * grid.spacing();
}

bool separation_guarantees_detection(const DiscreteMeasure& mu, const SamplingGrid& grid, double sigma, int s) {
  const int n = static_cast<int>(mu.size());
  if (n < 2 || s < n) return false;
  const double omega = effective_cutoff(grid, s);
  const IntervalSpec interval{n, omega};
  for (double y : mu.supports())
    if (!interval.contains(y)) return false;
  return mu.d_min() > guaranteed_separation(n, s, omega, sigma, mu.m_min());
}

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::ConfigError, what); };
  if (n < 2) fail("n must be at least 2");
  if (trial_count < 1) fail("trial_count must be at least 1");
  if (!(omega > 0.0)) fail("omega must be positive");
  if (!(d_min_range.lo > 0.0) || d_min_range.hi < d_min_range.lo) fail("d_min_range is empty");
  if (!(sigma_range.lo > 0.0) || sigma_range.hi < sigma_range.lo) fail("sigma_range is empty");
  if (d_min_range.hi > kPi / omega) fail("d_min above pi/omega does not fit in I(n, omega)");
  if (amplitude_rule != "unit_modulus_random_phase") fail("unknown amplitude_rule '" + amplitude_rule + "'");
  if (m_samples < 0 || (m_samples > 0 && m_samples < 2 * n + 3)) fail("m_samples must be 0 or at least 2n + 3");
}

namespace {

LogRange range_from_json(const nlohmann::json& j, const char* key) {
  const auto& r = j.at(key);
  if (!r.is_array() || r.size() != 2) throw Error(ErrorCode::ConfigError, std::string(key) + " must be [lo, hi]");
  return {r[0].get<double>(), r[1].get<double>()};
}

}  // namespace

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "sweep config must be a JSON object");
  SweepConfig c;
  try {
    c.n = j.value("n", c.n);
    c.trial_count = j.value("trial_count", c.trial_count);
    if (!j.contains("d_min_range") || !j.contains("sigma_range"))
      throw Error(ErrorCode::ConfigError, "d_min_range and sigma_range are required");
    c.d_min_range = range_from_json(j, "d_min_range");
    c.sigma_range = range_from_json(j, "sigma_range");
    c.omega = j.value("omega", c.omega);
    c.amplitude_rule = j.value("amplitude_rule", c.amplitude_rule);
    c.seed = j.value("seed", c.seed);
    c.m_samples = j.value("m_samples", c.m_samples);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  c.validate();
  return c;
}

nlohmann::json to_json(const SweepConfig& c) {
  return {{"n", c.n},
          {"trial_count", c.trial_count},
          {"d_min_range", {c.d_min_range.lo, c.d_min_range.hi}},
          {"sigma_range", {c.sigma_range.lo, c.sigma_range.hi}},
          {"omega", c.omega},
          {"amplitude_rule", c.amplitude_rule},
          {"seed", c.seed},
          {"m_samples", c.samples()}};
}

std::vector<TrialRecord> run_phase_transition(const SweepConfig& config) {
  config.validate();
  const SamplingGrid grid(config.omega, config.samples());
  const int n = config.n;
  const double half = IntervalSpec{n, config.omega}.half_width();

  return detail::parallel_map(config.trial_count, [&](int i) {
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    Rng rng(seed);
    TrialRecord r;
    r.trial_id = i;
    r.n_true = n;
    r.omega = config.omega;
    r.seed = seed;
    r.d_min = log_uniform(rng, config.d_min_range.lo, config.d_min_range.hi);
    r.sigma = log_uniform(rng, config.sigma_range.lo, config.sigma_range.hi);

    const double span = (n - 1) * r.d_min;
    const double start = uniform(rng, -half, std::max(-half, half - span));
    std::vector<double> supports(static_cast<std::size_t>(n));
    CVector amps(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      supports[static_cast<std::size_t>(j)] = start + j * r.d_min;
      amps[static_cast<std::size_t>(j)] = std::polar(1.0, uniform(rng, -kPi, kPi));
    }
    const DiscreteMeasure mu(std::move(supports), std::move(amps));
    r.m_min = 1.0;
    const Measurement y = synthesize_measurement(mu, grid, r.sigma, rng());
    r.n_detected = detect_count_sweep(y).n_detected;
    r.log_srf = std::log(kPi / (config.omega * r.d_min));
    r.log_snr = std::log(r.m_min / r.sigma);
    r.success = r.n_detected == r.n_true;
    return r;
  });
}

SeparatingLines fit_separating_lines(std::span<const TrialRecord> records, double slope) {
  std::vector<double> succ, fail;
  for (const TrialRecord& r : records) (r.success ? succ : fail).push_back(r.log_snr - slope * r.log_srf);
  if (succ.empty() || fail.empty())
    throw Error(ErrorCode::DegenerateData, "fitting needs both successes and failures");
  std::sort(succ.begin(), succ.end());
  std::sort(fail.begin(), fail.end());

  SeparatingLines out;
  out.slope = slope;
  out.trimmed_success = static_cast<int>(succ.size() / 100);
  out.trimmed_fail = static_cast<int>(fail.size() / 100);
  out.intercept_fail = succ[static_cast<std::size_t>(out.trimmed_success)];
  out.intercept_success = fail[fail.size() - 1 - static_cast<std::size_t>(out.trimmed_fail)];

  // A line at intercept c predicts success above c. Scan every candidate c
  // (below everything, then at each value) with two pointers; each class may
  // discard its trimmed share of wrong-side records.
  std::vector<double> cuts(succ);
  cuts.insert(cuts.end(), fail.begin(), fail.end());
  std::sort(cuts.begin(), cuts.end());
  const auto ts = static_cast<std::size_t>(out.trimmed_success);
  const auto tf = static_cast<std::size_t>(out.trimmed_fail);
  const auto excess = [](std::size_t wrong, std::size_t allowed) { return wrong > allowed ? wrong - allowed : 0; };
  std::size_t best_raw = fail.size();
  std::size_t best_trimmed = excess(fail.size(), tf);
  std::size_t si = 0, fi = 0;
  for (double c : cuts) {
    while (si < succ.size() && succ[si] <= c) ++si;
    while (fi < fail.size() && fail[fi] <= c) ++fi;
    const std::size_t wrong_fail = fail.size() - fi;
    best_raw = std::min(best_raw, si + wrong_fail);
    best_trimmed = std::min(best_trimmed, excess(si, ts) + excess(wrong_fail, tf));
  }
  out.misclassified = static_cast<int>(best_trimmed);
  out.single_line_errors = static_cast<int>(best_raw);
  return out;
}

std::string trials_csv(std::span<const TrialRecord> records) {
  std::ostringstream os;
  os << "trial_id,n_true,n_detected,d_min,sigma,m_min,omega,log_srf,log_snr,seed,success\n";
  for (const TrialRecord& r : records) {
    os << r.trial_id << ',' << r.n_true << ',' << r.n_detected << ',' << io::format_double(r.d_min) << ','
       << io::format_double(r.sigma) << ',' << io::format_double(r.m_min) << ',' << io::format_double(r.omega) << ','
       << io::format_double(r.log_srf) << ',' << io::format_double(r.log_snr) << ',' << r.seed << ','
       << (r.success ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string plot_script(const std::string& csv_path, const SeparatingLines& lines) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key top left\n"
     << "set xlabel 'log SRF'\n"
     << "set ylabel 'log SNR'\n"
     << "slope = " << io::format_double(lines.slope) << "\n"
     << "a_success = " << io::format_double(lines.intercept_success) << "\n"
     << "a_fail = " << io::format_double(lines.intercept_fail) << "\n"
     << "plot '" << csv_path << "' skip 1 using 8:(strcol(11) eq 'true' ? $9 : 1/0) with points pt 7 ps 0.4 lc rgb 'blue' title 'success', \\\n"
     << "     '" << csv_path << "' skip 1 using 8:(strcol(11) eq 'false' ? $9 : 1/0) with points pt 7 ps 0.4 lc rgb 'red' title 'failure', \\\n"
     << "     slope*x + a_success with lines lc rgb 'black' title 'success line', \\\n"
     << "     slope*x + a_fail with lines dt 2 lc rgb 'black' title 'failure line'\n";
  return os.str();
}

}  // namespace lsr
