#ifndef LSR_EXPERIMENTS_HPP
#define LSR_EXPERIMENTS_HPP

/** @file
 * Numerical studies built on the detector: the four-spike demonstration,
 * the separation sweep, and the Monte Carlo phase transition in the
 * (log SRF, log SNR) plane with its slope-fixed separating lines.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsr/detection.hpp"
#include "lsr/measure.hpp"

namespace lsr {

inline constexpr std::uint64_t kExperiment1Seed = 20240101;

/// delta_{-0.5} - delta_0 - delta_{0.5} + delta_1.
DiscreteMeasure experiment_1_measure();

/// Omega = 1, M = 20, disk noise below sigma, detect_count_sweep.
DetectionResult run_experiment_1(std::uint64_t seed = kExperiment1Seed, double sigma = 1e-7);

struct SeparationPoint {
  double tau = 0.0;
  int n_detected = 0;
};

/// Supports (-tau, 0, tau, 2 tau), amplitudes (1, -1, -1, 1), Omega = 1,
/// M = 20. Entry i uses noise seed derive_seed(seed, i).
std::vector<SeparationPoint> run_separation_sweep(std::span<const double> tau_values, double sigma,
                                                  std::uint64_t seed);

/// step, 2 step, ... up to 1 (inclusive within rounding).
std::vector<double> tau_grid(double step);

/// Smallest tau from which n_detected == target on the whole remaining
/// suffix; NaN if the last point misses the target.
double persistent_onset(const std::vector<SeparationPoint>& points, int target);

/// Cutoff of the decimated samples feeding H(s): s * r * (2 Omega / (M - 1)).
double effective_cutoff(const SamplingGrid& grid, int s);

/// True when the separation condition for detection at this s holds for mu,
/// using the effective cutoff of the decimated grid.
bool separation_guarantees_detection(const DiscreteMeasure& mu, const SamplingGrid& grid, double sigma, int s);

struct LogRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct SweepConfig {
  int n = 2;
  int trial_count = 2000;
  LogRange d_min_range;
  LogRange sigma_range;
  double omega = 1.0;
  std::string amplitude_rule = "unit_modulus_random_phase";
  std::uint64_t seed = 0;
  int m_samples = 0;  ///< 0 selects 4n + 4

  int samples() const { return m_samples > 0 ? m_samples : 4 * n + 4; }
  /// Throws ConfigError on empty or nonpositive ranges, n < 2, trial_count < 1,
  /// d_min above pi/Omega (supports would not fit in I(n, Omega)) or an
  /// unknown amplitude rule.
  void validate() const;
};

/// Missing optional fields keep their defaults; throws ConfigError.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& config);

struct TrialRecord {
  int trial_id = 0;
  int n_true = 0;
  int n_detected = 0;
  double d_min = 0.0;
  double sigma = 0.0;
  double m_min = 0.0;
  double omega = 0.0;
  double log_srf = 0.0;
  double log_snr = 0.0;
  std::uint64_t seed = 0;
  bool success = false;
};

/// One record per trial, in trial order; trial i draws from derive_seed(config.seed, i).
std::vector<TrialRecord> run_phase_transition(const SweepConfig& config);

struct SeparatingLines {
  double slope = 0.0;
  double intercept_success = 0.0;  ///< max over kept failures of log_snr - slope log_srf
  double intercept_fail = 0.0;     ///< min over kept successes
  int misclassified = 0;           ///< wrong-side records of the best line beyond the trimmed share
  int single_line_errors = 0;      ///< same without trimming
  int trimmed_success = 0;
  int trimmed_fail = 0;

  double band_width() const { return intercept_success - intercept_fail; }
};

/// The worst 1% (floor) of each class is dropped before taking the
/// intercepts. `misclassified` is the fewest records left on the wrong side
/// of a single line of this slope once each class discards that same share
/// of its wrong-side records; zero means the trimmed classes are strictly
/// separable. Throws DegenerateData when either class is empty.
SeparatingLines fit_separating_lines(std::span<const TrialRecord> records, double slope);

/// Header plus one row per record, columns
/// trial_id,n_true,n_detected,d_min,sigma,m_min,omega,log_srf,log_snr,seed,success.
std::string trials_csv(std::span<const TrialRecord> records);

/// gnuplot script plotting the CSV scatter colored by success, with both lines.
std::string plot_script(const std::string& csv_path, const SeparatingLines& lines);

}  // namespace lsr

#endif  // LSR_EXPERIMENTS_HPP
