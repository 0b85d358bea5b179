#ifndef LSR_DETECTION_HPP
#define LSR_DETECTION_HPP

/** @file
 * Spectral-number detection by singular-value thresholding of a Hankel
 * matrix built from decimated samples, and its sweep over the matrix size.
 *
 * For a given s the samples z_t = w_{(t-1) r + 1}, t = 1..2s+1, fill the
 * (s+1) x (s+1) matrix H(s)[i][j] = Y(z_{i+j+1}). Under |W| < sigma every
 * singular value beyond the true count stays at or below (s+1) sigma, so
 * the detected count is the number of singular values strictly above it.
 */

#include <vector>

#include "lsr/measure.hpp"
#include "lsr/vandermonde.hpp"

namespace lsr {

/// r = floor((M - 1) / (2s)); throws TooFewSamples when M < 2s + 1.
int decimation_stride(int m, int s);

struct HankelMatrix {
  int s = 0;
  int stride = 0;
  CMatrix entries;                  ///< (s+1) x (s+1), constant anti-diagonals
  std::vector<int> source_indices;  ///< 0-based grid indices of z_1..z_{2s+1}
};

/// Throws TooFewSamples when the grid has fewer than 2s+1 samples.
HankelMatrix build_hankel(const Measurement& y, int s);

struct SingularSpectrum {
  std::vector<double> values;  ///< descending
  double threshold = 0.0;
};

/// Singular values of H via the one-sided Jacobi SVD; `threshold` is stored as given.
SingularSpectrum singular_spectrum(const HankelMatrix& h, double threshold = 0.0);

/// Largest n with values[n-1] > threshold (strict); 0 when none exceed it.
int count_above_threshold(const SingularSpectrum& spectrum);

struct DetectionAtS {
  int s = 0;
  SingularSpectrum spectrum;
  int n = 0;
  bool saturated = false;  ///< every singular value exceeded the threshold
};

/// (s+1) * sigma, or 1e-10 * sigma_1 when the declared sigma is zero.
double detection_threshold(const std::vector<double>& singular_values, int s, double sigma);

DetectionAtS detect_at_s(const Measurement& y, int s);
int detect_count_at_s(const Measurement& y, int s);

struct DetectionResult {
  int n_detected = 0;
  std::vector<DetectionAtS> per_s;  ///< ordered by s
  int s_first = 0;
  int s_last = 0;
  bool saturated = false;  ///< the maximizing s was saturated
};

/// Runs detect_at_s for s = 1..floor((M-1)/2) and keeps the maximum count.
DetectionResult detect_count_sweep(const Measurement& y);

/// Lower bound m_min zeta(n)^2 theta^(2n-2) / (n pi^(2n-2)) on the n-th
/// singular value of the noiseless H(s), theta = (Omega/s) d_min. Requires
/// n >= 2, s >= n and all supports inside I(n, Omega).
double min_singular_lower_bound(const DiscreteMeasure& mu, double omega, int s);

/// Separation above which detection at this s is guaranteed:
/// (pi s / Omega) (2n(s+1) sigma / (zeta(n)^2 m_min))^(1/(2n-2)).
double guaranteed_separation(int n, int s, double omega, double sigma, double m_min);

}  // namespace lsr

#endif  // LSR_DETECTION_HPP
