#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "lsr/detection.hpp"
#include "lsr/error.hpp"
#include "lsr/experiments.hpp"
#include "lsr/random.hpp"

using namespace lsr;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename F>
void check_error(F&& f, ErrorCode code) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

TrialRecord point(double log_srf, double log_snr, bool success) {
  TrialRecord r;
  r.log_srf = log_srf;
  r.log_snr = log_snr;
  r.success = success;
  return r;
}

SweepConfig small_config(int n, std::uint64_t seed) {
  SweepConfig c;
  c.n = n;
  c.trial_count = 150;
  c.d_min_range = {0.1, 1.5};
  c.sigma_range = {1e-12, 0.1};
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("four-spike example") {
  const DiscreteMeasure mu = experiment_1_measure();
  CHECK(mu.supports() == std::vector<double>{-0.5, 0.0, 0.5, 1.0});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(run_experiment_1(seed).n_detected == 4);
  CHECK(run_experiment_1(kExperiment1Seed, 0.5).n_detected == 0);
}

TEST_CASE("separation sweep helpers") {
  const auto grid = tau_grid(0.01);
  CHECK(grid.size() == 100);
  CHECK(grid.front() == doctest::Approx(0.01));
  CHECK(grid.back() == doctest::Approx(1.0));
  check_error([] { (void)tau_grid(0.0); }, ErrorCode::InvalidArgument);

  const std::vector<SeparationPoint> pts = {{0.1, 2}, {0.2, 4}, {0.3, 3}, {0.4, 4}, {0.5, 4}};
  CHECK(persistent_onset(pts, 4) == 0.4);
  CHECK(std::isnan(persistent_onset({{0.1, 4}, {0.2, 3}}, 4)));

  const double taus[] = {0.02, 0.7};
  const auto sweep = run_separation_sweep(taus, 1e-7, 0);
  REQUIRE(sweep.size() == 2);
  CHECK(sweep[0].n_detected < 4);
  CHECK(sweep[1].n_detected == 4);

  const SamplingGrid g(1.0, 21);
  CHECK(effective_cutoff(g, 5) == doctest::Approx(1.0));
  CHECK(effective_cutoff(SamplingGrid(1.0, 20), 4) == doctest::Approx(16.0 / 19.0));
}

TEST_CASE("separating lines on synthetic data") {
  std::vector<TrialRecord> rs;
  for (int i = 0; i < 150; ++i) rs.push_back(point(0.01 * i, 2.0 * 0.01 * i + 1.0 + 0.01 * i, true));
  for (int i = 0; i < 150; ++i) rs.push_back(point(0.01 * i, 2.0 * 0.01 * i - 0.01 * i, false));
  SeparatingLines l = fit_separating_lines(rs, 2.0);
  CHECK(l.slope == 2.0);
  CHECK(l.trimmed_success == 1);
  CHECK(l.trimmed_fail == 1);
  CHECK(l.intercept_fail == doctest::Approx(1.01));      // second-smallest success
  CHECK(l.intercept_success == doctest::Approx(-0.01));  // second-largest failure
  CHECK(l.misclassified == 0);
  CHECK(l.single_line_errors == 0);
  CHECK(l.band_width() < 0.0);

  // One success outlier is absorbed by trimming; three are not.
  rs[0].log_snr = -5.0;
  l = fit_separating_lines(rs, 2.0);
  CHECK(l.single_line_errors == 1);
  CHECK(l.misclassified == 0);
  rs[1].log_snr = -5.0;
  rs[2].log_snr = -5.0;
  l = fit_separating_lines(rs, 2.0);
  CHECK(l.single_line_errors == 3);
  CHECK(l.misclassified == 2);
  CHECK(l.intercept_fail == doctest::Approx(-5.02));  // v = log_snr - 2 log_srf

  std::vector<TrialRecord> only(3, point(0, 0, true));
  check_error([&] { (void)fit_separating_lines(only, 2.0); }, ErrorCode::DegenerateData);
  check_error([] { (void)fit_separating_lines({}, 2.0); }, ErrorCode::DegenerateData);
}

TEST_CASE("phase transition records") {
  const SweepConfig c = small_config(2, 9);
  const auto a = run_phase_transition(c);
  const auto b = run_phase_transition(c);
  REQUIRE(a.size() == 150);
  CHECK(trials_csv(a) == trials_csv(b));
  CHECK(trials_csv(a) != trials_csv(run_phase_transition(small_config(2, 10))));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const TrialRecord& r = a[i];
    CHECK(r.trial_id == static_cast<int>(i));
    CHECK(r.seed == derive_seed(9, i));
    CHECK(r.n_true == 2);
    CHECK(r.success == (r.n_detected == r.n_true));
    CHECK(r.n_detected <= r.n_true);
    CHECK(r.d_min >= 0.1);
    CHECK(r.d_min <= 1.5);
    CHECK(r.sigma >= 1e-12);
    CHECK(r.sigma <= 0.1);
    CHECK(std::abs(r.log_srf - std::log(kPi / (r.omega * r.d_min))) <= 1e-12);
    CHECK(std::abs(r.log_snr - std::log(r.m_min / r.sigma)) <= 1e-12);
  }

  std::istringstream csv(trials_csv(a));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "trial_id,n_true,n_detected,d_min,sigma,m_min,omega,log_srf,log_snr,seed,success");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const bool ok = line.ends_with(",true") || line.ends_with(",false");
    CHECK(ok);
  }
  CHECK(rows == 150);

  const SeparatingLines l = fit_separating_lines(a, 2.0);
  const std::string script = plot_script("trials.csv", l);
  CHECK(script.find("trials.csv") != std::string::npos);
  CHECK(script.find("slope") != std::string::npos);
}

TEST_CASE("sweep configuration") {
  const auto j = nlohmann::json::parse(R"({"n": 3, "trial_count": 10, "d_min_range": [0.1, 0.5],
                                           "sigma_range": [1e-8, 1e-2], "seed": 4})");
  const SweepConfig c = sweep_config_from_json(j);
  CHECK(c.n == 3);
  CHECK(c.samples() == 16);
  CHECK(c.omega == 1.0);
  CHECK(c.amplitude_rule == "unit_modulus_random_phase");
  const SweepConfig back = sweep_config_from_json(to_json(c));
  CHECK(back.n == c.n);
  CHECK(back.seed == 4);
  CHECK(back.d_min_range.hi == 0.5);

  for (const char* bad : {R"([1, 2])",
                          R"({"n": 3})",
                          R"({"n": 1, "d_min_range": [0.1, 0.5], "sigma_range": [1e-8, 1e-2]})",
                          R"({"n": 2, "trial_count": 0, "d_min_range": [0.1, 0.5], "sigma_range": [1e-8, 1e-2]})",
                          R"({"n": 2, "d_min_range": [0.5, 0.1], "sigma_range": [1e-8, 1e-2]})",
                          R"({"n": 2, "d_min_range": [0.1, 0.5], "sigma_range": [0, 1e-2]})",
                          R"({"n": 2, "d_min_range": [0.1, 4.0], "sigma_range": [1e-8, 1e-2]})",
                          R"({"n": 2, "d_min_range": [0.1, 0.5], "sigma_range": [1e-8, 1e-2], "amplitude_rule": "x"})",
                          R"({"n": 2, "d_min_range": [0.1, 0.5], "sigma_range": [1e-8, 1e-2], "m_samples": 5})",
                          R"({"n": "two", "d_min_range": [0.1, 0.5], "sigma_range": [1e-8, 1e-2]})"}) {
    CAPTURE(bad);
    check_error([&] { (void)sweep_config_from_json(nlohmann::json::parse(bad)); }, ErrorCode::ConfigError);
  }
}
