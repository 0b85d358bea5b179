#ifndef LSR_MEASURE_HPP
#define LSR_MEASURE_HPP

/** @file
 * Discrete measures, the sampled Fourier measurement model with bounded
 * deterministic noise, and the admissibility/neighborhood predicates.
 *
 * A measure mu = sum_j a_j delta_{y_j} is observed through
 *   Y(w_q) = sum_j a_j exp(i y_j w_q) + W(w_q),   |W(w_q)| < sigma,
 * at M equispaced frequencies w_q spanning [-Omega, Omega].
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lsr {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Atomic measure with distinct supports and nonzero amplitudes, sorted by support.
class DiscreteMeasure {
 public:
  /// Validates and sorts; throws Error(InvalidArgument) on empty input,
  /// length mismatch, duplicate or non-finite supports, or a zero amplitude.
  DiscreteMeasure(std::vector<double> supports, CVector amplitudes);

  /// Convenience for real amplitudes.
  static DiscreteMeasure real(std::vector<double> supports, std::span<const double> amplitudes);

  std::size_t size() const noexcept { return supports_.size(); }
  const std::vector<double>& supports() const noexcept { return supports_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }

  /// min_j |a_j|.
  double m_min() const;
  /// min_{p != j} |y_p - y_j|; throws DegenerateInstance when size() < 2.
  double d_min() const;

  /// Same supports, amplitudes multiplied by `factor`.
  DiscreteMeasure scaled(cplx factor) const;
  /// Supports shifted by `offset`.
  DiscreteMeasure translated(double offset) const;

 private:
  std::vector<double> supports_;
  CVector amplitudes_;
};

/// M equispaced frequencies on [-Omega, Omega] with exact, symmetric endpoints.
class SamplingGrid {
 public:
  /// Throws InvalidArgument unless omega > 0 and m >= 2.
  SamplingGrid(double omega, int m);

  double omega() const noexcept { return omega_; }
  int m() const noexcept { return m_; }
  double spacing() const noexcept { return 2.0 * omega_ / (m_ - 1); }
  /// Frequency at 0-based index q; frequency(0) == -Omega, frequency(m-1) == Omega.
  double frequency(int q) const;
  std::vector<double> frequencies() const;

 private:
  double omega_;
  int m_;
};

/// Noisy samples of a measure together with the declared noise level.
struct Measurement {
  CVector values;
  SamplingGrid grid;
  double sigma = 0.0;
  std::optional<std::uint64_t> noise_seed;

  /// Throws InvalidArgument if values.size() != grid.m() or sigma < 0.
  Measurement(CVector values, SamplingGrid grid, double sigma,
              std::optional<std::uint64_t> noise_seed = std::nullopt);
};

/// The centered interval I(n, Omega) = [-(n-1)pi/(2 Omega), (n-1)pi/(2 Omega)].
struct IntervalSpec {
  int n;
  double omega;

  double half_width() const;
  bool contains(double y) const;
};

/// sum_j a_j exp(i y_j x) evaluated at a single frequency x, summed left to right.
cplx fourier_transform(const DiscreteMeasure& mu, double x);

/// fourier_transform at every grid frequency.
CVector fourier_samples(const DiscreteMeasure& mu, const SamplingGrid& grid);

/// Pure bounded noise: each entry uniform on the open disk of radius sigma.
CVector disk_noise(int count, double sigma, std::uint64_t seed);

/// Noiseless samples plus seeded disk noise with sup-norm strictly below sigma.
Measurement synthesize_measurement(const DiscreteMeasure& mu, const SamplingGrid& grid,
                                   double sigma, std::uint64_t seed);

/// ||[candidate] - Y||_inf < Y.sigma (strict).
bool is_sigma_admissible(const DiscreteMeasure& candidate, const Measurement& y);

/// True iff candidate supports match the truth supports one-to-one inside
/// the intervals (y_k - delta, y_k + delta). Throws OverlappingIntervals when
/// 2*delta >= d_min(truth) and InvalidArgument when the sizes differ.
bool is_within_delta_neighborhood(const DiscreteMeasure& candidate,
                                  const DiscreteMeasure& truth, double delta);

/// (SRF, SNR) = (pi / (Omega d_min), m_min / sigma).
std::pair<double, double> srf_snr(const DiscreteMeasure& mu, const SamplingGrid& grid,
                                  double sigma);

}  // namespace lsr

#endif  // LSR_MEASURE_HPP
