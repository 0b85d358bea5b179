#include "lsr/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "lsr/error.hpp"
#include "lsr/random.hpp"

namespace lsr {

DiscreteMeasure::DiscreteMeasure(std::vector<double> supports, CVector amplitudes) {
  if (supports.empty()) throw Error(ErrorCode::InvalidArgument, "measure needs at least one support");
  if (supports.size() != amplitudes.size())
    throw Error(ErrorCode::InvalidArgument, "supports and amplitudes differ in length");

  std::vector<std::size_t> order(supports.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return supports[a] < supports[b]; });

  supports_.reserve(order.size());
  amplitudes_.reserve(order.size());
  for (std::size_t idx : order) {
    const double y = supports[idx];
    const cplx a = amplitudes[idx];
    if (!std::isfinite(y) || !std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorCode::InvalidArgument, "non-finite support or amplitude");
    if (a == cplx(0.0)) throw Error(ErrorCode::InvalidArgument, "zero amplitude");
    if (!supports_.empty() && supports_.back() == y)
      throw Error(ErrorCode::InvalidArgument, "duplicate support " + std::to_string(y));
    supports_.push_back(y);
    amplitudes_.push_back(a);
  }
}

DiscreteMeasure DiscreteMeasure::real(std::vector<double> supports,
                                      std::span<const double> amplitudes) {
  return DiscreteMeasure(std::move(supports), CVector(amplitudes.begin(), amplitudes.end()));
}

double DiscreteMeasure::m_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (const cplx& a : amplitudes_) m = std::min(m, std::abs(a));
  return m;
}

double DiscreteMeasure::d_min() const {
  if (size() < 2) throw Error(ErrorCode::DegenerateInstance, "d_min needs at least two supports");
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < supports_.size(); ++j) d = std::min(d, supports_[j] - supports_[j - 1]);
  return d;
}

DiscreteMeasure DiscreteMeasure::scaled(cplx factor) const {
  CVector a = amplitudes_;
  for (cplx& v : a) v *= factor;
  return DiscreteMeasure(supports_, std::move(a));
}

DiscreteMeasure DiscreteMeasure::translated(double offset) const {
  std::vector<double> y = supports_;
  for (double& v : y) v += offset;
  return DiscreteMeasure(std::move(y), amplitudes_);
}

SamplingGrid::SamplingGrid(double omega, int m) : omega_(omega), m_(m) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(ErrorCode::InvalidArgument, "cutoff frequency must be positive");
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 2");
}

double SamplingGrid::frequency(int q) const {
  // Numerator is an exact integer, so the grid is exactly symmetric about 0.
  return omega_ * static_cast<double>(2 * q - (m_ - 1)) / static_cast<double>(m_ - 1);
}

std::vector<double> SamplingGrid::frequencies() const {
  std::vector<double> w(static_cast<std::size_t>(m_));
  for (int q = 0; q < m_; ++q) w[static_cast<std::size_t>(q)] = frequency(q);
  return w;
}

Measurement::Measurement(CVector values_in, SamplingGrid grid_in, double sigma_in,
                         std::optional<std::uint64_t> seed_in)
    : values(std::move(values_in)), grid(grid_in), sigma(sigma_in), noise_seed(seed_in) {
  if (values.size() != static_cast<std::size_t>(grid.m()))
    throw Error(ErrorCode::InvalidArgument, "measurement length does not match grid");
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "noise level must be nonnegative");
}

double IntervalSpec::half_width() const {
  return (n - 1) * std::numbers::pi / (2.0 * omega);
}

bool IntervalSpec::contains(double y) const {
  const double w = half_width();
  return y >= -w && y <= w;
}

cplx fourier_transform(const DiscreteMeasure& mu, double x) {
  cplx sum(0.0, 0.0);
  const auto& y = mu.supports();
  const auto& a = mu.amplitudes();
  for (std::size_t j = 0; j < y.size(); ++j) sum += a[j] * std::polar(1.0, y[j] * x);
  return sum;
}

CVector fourier_samples(const DiscreteMeasure& mu, const SamplingGrid& grid) {
  CVector out(static_cast<std::size_t>(grid.m()));
  for (int q = 0; q < grid.m(); ++q) out[static_cast<std::size_t>(q)] = fourier_transform(mu, grid.frequency(q));
  return out;
}

namespace {

// Rejection sampling from the open unit disk, scaled by sigma. `accept`
// re-checks the strict bound after any arithmetic the caller applies.
template <typename Accept>
cplx draw_disk(Rng& rng, double sigma, Accept&& accept) {
  for (;;) {
    const double x = uniform(rng, -1.0, 1.0);
    const double y = uniform(rng, -1.0, 1.0);
    if (x * x + y * y >= 1.0) continue;
    const cplx w(sigma * x, sigma * y);
    if (accept(w)) return w;
  }
}

}  // namespace

CVector disk_noise(int count, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "noise level must be nonnegative");
  CVector w(static_cast<std::size_t>(count), cplx(0.0));
  if (sigma == 0.0) return w;
  Rng rng(seed);
  for (cplx& v : w) v = draw_disk(rng, sigma, [&](cplx c) { return std::abs(c) < sigma; });
  return w;
}

Measurement synthesize_measurement(const DiscreteMeasure& mu, const SamplingGrid& grid,
                                   double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "noise level must be nonnegative");
  CVector values = fourier_samples(mu, grid);
  if (sigma > 0.0) {
    Rng rng(seed);
    for (cplx& v : values) {
      const cplx clean = v;
      // The bound must survive the addition, as seen by the admissibility check.
      const cplx w = draw_disk(rng, sigma, [&](cplx c) { return std::abs((clean + c) - clean) < sigma; });
      v = clean + w;
    }
  }
  return Measurement(std::move(values), grid, sigma, seed);
}

bool is_sigma_admissible(const DiscreteMeasure& candidate, const Measurement& y) {
  const CVector samples = fourier_samples(candidate, y.grid);
  double worst = 0.0;
  for (std::size_t q = 0; q < samples.size(); ++q) worst = std::max(worst, std::abs(samples[q] - y.values[q]));
  return worst < y.sigma;
}

bool is_within_delta_neighborhood(const DiscreteMeasure& candidate, const DiscreteMeasure& truth,
                                  double delta) {
  if (candidate.size() != truth.size())
    throw Error(ErrorCode::InvalidArgument, "candidate and truth differ in support count");
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (truth.size() >= 2 && 2.0 * delta >= truth.d_min())
    throw Error(ErrorCode::OverlappingIntervals, "2*delta must be below the truth's minimum separation");

  // Intervals are disjoint, so each candidate support can lie in at most one
  // of them; a perfect matching exists iff every interval is hit exactly once.
  const auto& y = truth.supports();
  std::vector<int> hits(y.size(), 0);
  for (double c : candidate.supports()) {
    bool placed = false;
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (std::abs(c - y[k]) < delta) {
        ++hits[k];
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::pair<double, double> srf_snr(const DiscreteMeasure& mu, const SamplingGrid& grid, double sigma) {
  if (mu.size() < 2) throw Error(ErrorCode::DegenerateInstance, "SRF needs at least two supports");
  if (!(sigma > 0.0)) throw Error(ErrorCode::DegenerateInstance, "SNR needs a positive noise level");
  return {std::numbers::pi / (grid.omega() * mu.d_min()), mu.m_min() / sigma};
}

}  // namespace lsr
