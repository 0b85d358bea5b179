#include "lsr/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lsr/error.hpp"
#include "lsr/svd.hpp"

namespace lsr {

int decimation_stride(int m, int s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "s must be at least 1");
  if (m < 2 * s + 1)
    throw Error(ErrorCode::TooFewSamples,
                "need at least " + std::to_string(2 * s + 1) + " samples, have " + std::to_string(m));
  return (m - 1) / (2 * s);
}

HankelMatrix build_hankel(const Measurement& y, int s) {
  HankelMatrix h;
  h.s = s;
  h.stride = decimation_stride(y.grid.m(), s);
  h.source_indices.resize(static_cast<std::size_t>(2 * s + 1));
  for (int t = 0; t <= 2 * s; ++t) h.source_indices[static_cast<std::size_t>(t)] = t * h.stride;

  h.entries.resize(s + 1, s + 1);
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s; ++j)
      h.entries(i, j) = y.values[static_cast<std::size_t>(h.source_indices[static_cast<std::size_t>(i + j)])];
  return h;
}

SingularSpectrum singular_spectrum(const HankelMatrix& h, double threshold) {
  const SvdResult svd = jacobi_svd(h.entries);
  SingularSpectrum out;
  out.values.assign(svd.singular_values.data(), svd.singular_values.data() + svd.singular_values.size());
  out.threshold = threshold;
  return out;
}

int count_above_threshold(const SingularSpectrum& spectrum) {
  int n = 0;
  for (std::size_t j = 0; j < spectrum.values.size(); ++j)
    if (spectrum.values[j] > spectrum.threshold) n = static_cast<int>(j) + 1;
  return n;
}

double detection_threshold(const std::vector<double>& singular_values, int s, double sigma) {
  if (sigma > 0.0) return (s + 1) * sigma;
  return singular_values.empty() ? 0.0 : 1e-10 * singular_values.front();
}

DetectionAtS detect_at_s(const Measurement& y, int s) {
  DetectionAtS out;
  out.s = s;
  out.spectrum = singular_spectrum(build_hankel(y, s));
  out.spectrum.threshold = detection_threshold(out.spectrum.values, s, y.sigma);
  out.n = count_above_threshold(out.spectrum);
  out.saturated = out.n == s + 1;
  return out;
}

int detect_count_at_s(const Measurement& y, int s) { return detect_at_s(y, s).n; }

DetectionResult detect_count_sweep(const Measurement& y) {
  if (y.grid.m() < 3) throw Error(ErrorCode::TooFewSamples, "sweep needs at least 3 samples");
  DetectionResult out;
  out.s_first = 1;
  out.s_last = (y.grid.m() - 1) / 2;
  out.per_s.reserve(static_cast<std::size_t>(out.s_last));
  for (int s = out.s_first; s <= out.s_last; ++s) {
    out.per_s.push_back(detect_at_s(y, s));
    const DetectionAtS& d = out.per_s.back();
    if (d.n > out.n_detected) {
      out.n_detected = d.n;
      out.saturated = d.saturated;
    }
  }
  return out;
}

double min_singular_lower_bound(const DiscreteMeasure& mu, double omega, int s) {
  const int n = static_cast<int>(mu.size());
  if (n < 2) throw Error(ErrorCode::DegenerateInstance, "bound needs at least two supports");
  if (s < n) throw Error(ErrorCode::InvalidArgument, "bound needs s >= n");
  const IntervalSpec interval{n, omega};
  for (double y : mu.supports())
    if (!interval.contains(y))
      throw Error(ErrorCode::SupportsOutsideInterval, "support " + std::to_string(y) + " outside I(n, Omega)");
  const double theta = omega / s * mu.d_min();
  const double z = zeta(n);
  return mu.m_min() * z * z * std::pow(theta / std::numbers::pi, 2.0 * n - 2.0) / n;
}

double guaranteed_separation(int n, int s, double omega, double sigma, double m_min) {
  if (n < 2) throw Error(ErrorCode::DegenerateInstance, "separation needs n >= 2");
  const double z = zeta(n);
  return std::numbers::pi * s / omega *
         std::pow(2.0 * n * (s + 1) * sigma / (z * z * m_min), 1.0 / (2.0 * n - 2.0));
}

}  // namespace lsr
