#include "lsr/worst_case.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "lsr/error.hpp"

namespace lsr {

const char* to_string(PairKind kind) { return kind == PairKind::number ? "number" : "support"; }

std::vector<double> vandermonde_null_vector(std::span<const double> t_nodes, int degree) {
  const int p = static_cast<int>(t_nodes.size());
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "null vector needs at least two nodes");
  if (degree != p - 2) throw Error(ErrorCode::InvalidArgument, "degree must equal node count - 2");

  const auto [lo, hi] = std::minmax_element(t_nodes.begin(), t_nodes.end());
  const double center = 0.5 * (*lo + *hi);
  const double scale = 0.5 * (*hi - *lo);
  if (scale == 0.0) throw Error(ErrorCode::DegenerateNodes, "all nodes coincide");
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (std::abs(t_nodes[static_cast<std::size_t>(i)] - t_nodes[static_cast<std::size_t>(j)]) <= 1e-14 * scale)
        throw Error(ErrorCode::DegenerateNodes, "coincident nodes");
  // Moments of degree <= p-2 about any center span the same space, so mapping
  // the nodes affinely onto [-1, 1] leaves the null space unchanged.
  Eigen::MatrixXd a(degree + 1, p);
  for (int j = 0; j < p; ++j) {
    const double x = (t_nodes[static_cast<std::size_t>(j)] - center) / scale;
    double power = 1.0;
    for (int k = 0; k <= degree; ++k) {
      a(k, j) = power;
      power *= x;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  Eigen::VectorXd null = svd.matrixV().col(p - 1);
  null /= null.norm();
  if (null(0) < 0.0) null = -null;

  const double smallest = null.cwiseAbs().minCoeff();
  if (smallest < 1e-12) throw Error(ErrorCode::DegenerateNodes, "null vector has a vanishing entry");
  std::vector<double> out(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) out[static_cast<std::size_t>(j)] = null(j) / smallest;
  return out;
}

std::vector<double> moments(std::span<const double> t_nodes, std::span<const double> a, int max_order) {
  std::vector<double> q(static_cast<std::size_t>(max_order + 1), 0.0);
  for (std::size_t j = 0; j < t_nodes.size(); ++j) {
    double power = 1.0;
    for (int k = 0; k <= max_order; ++k) {
      q[static_cast<std::size_t>(k)] += a[j] * power;
      power *= t_nodes[j];
    }
  }
  return q;
}

double number_instance_spacing(int n, double omega, double sigma, double m_min) {
  return 0.81 * std::exp(-1.5) / omega * std::pow(sigma / m_min, 1.0 / (2.0 * n - 2.0));
}

double support_instance_spacing(int n, double omega, double sigma, double m_min) {
  return 0.49 * std::exp(-1.5) / omega * std::pow(sigma / m_min, 1.0 / (2.0 * n - 1.0));
}

namespace {

void validate(int n, double omega, double sigma, double m_min) {
  if (n < 2 || n > 8) throw Error(ErrorCode::InvalidArgument, "construction supports 2 <= n <= 8");
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidArgument, "cutoff frequency must be positive");
  if (!(sigma > 0.0) || !(sigma < m_min))
    throw Error(ErrorCode::InvalidArgument, "construction needs 0 < sigma < m_min");
}

// Null vector scaled so that min |a_j| == m_min exactly.
std::vector<double> scaled_null_vector(std::span<const double> nodes, double m_min) {
  std::vector<double> a = vandermonde_null_vector(nodes, static_cast<int>(nodes.size()) - 2);
  for (double& v : a) {
    v *= m_min;
    if (std::abs(v) < m_min) v = std::copysign(m_min, v);
  }
  return a;
}

DiscreteMeasure signed_part(std::span<const double> nodes, std::span<const double> a, std::size_t first,
                            std::size_t last, double sign) {
  std::vector<double> y;
  std::vector<double> amp;
  for (std::size_t j = first; j < last; ++j) {
    y.push_back(nodes[j]);
    amp.push_back(sign * a[j]);
  }
  return DiscreteMeasure::real(std::move(y), amp);
}

WorstCaseReport verify_pair(const DiscreteMeasure& mu, const DiscreteMeasure& mu_hat,
                            std::span<const double> nodes, std::span<const double> a, double omega,
                            double sigma, double tau, int sample_count) {
  WorstCaseReport r;
  const int n = static_cast<int>(mu.size());
  r.dense_points = 10 * static_cast<int>(std::ceil(omega * (n - 1) * tau)) + 1000;
  for (int i = 0; i < r.dense_points; ++i) {
    const double x = -omega + 2.0 * omega * i / (r.dense_points - 1);
    cplx f(0.0, 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j) f += a[j] * std::polar(1.0, nodes[j] * x);
    r.sup_dense = std::max(r.sup_dense, std::abs(f));
  }

  const SamplingGrid grid(omega, sample_count);
  const Measurement clean(fourier_samples(mu, grid), grid, sigma);
  const CVector other = fourier_samples(mu_hat, grid);
  for (std::size_t q = 0; q < other.size(); ++q)
    r.sup_samples = std::max(r.sup_samples, std::abs(other[q] - clean.values[q]));
  r.sample_points = sample_count;
  r.admissible = is_sigma_admissible(mu_hat, clean);

  for (double v : a) r.amplitude_sum += std::abs(v);
  return r;
}

}  // namespace

AdversarialPair construct_number_instance(int n, double omega, double sigma, double m_min, int sample_count) {
  validate(n, omega, sigma, m_min);
  const double tau = number_instance_spacing(n, omega, sigma, m_min);

  std::vector<double> nodes(static_cast<std::size_t>(2 * n - 1));
  for (int j = 0; j < 2 * n - 1; ++j) nodes[static_cast<std::size_t>(j)] = (j - (n - 1)) * tau;
  const std::vector<double> a = scaled_null_vector(nodes, m_min);

  // mu keeps n consecutive nodes and must carry an amplitude of modulus m_min.
  const auto un = static_cast<std::size_t>(n);
  const double head_min = std::abs(*std::min_element(a.begin(), a.begin() + n, [](double x, double y) {
    return std::abs(x) < std::abs(y);
  }));
  const bool head = head_min == m_min;
  const std::size_t total = nodes.size();
  DiscreteMeasure mu = head ? signed_part(nodes, a, 0, un, 1.0) : signed_part(nodes, a, un - 1, total, 1.0);
  DiscreteMeasure mu_hat = head ? signed_part(nodes, a, un, total, -1.0) : signed_part(nodes, a, 0, un - 1, -1.0);

  WorstCaseReport report = verify_pair(mu, mu_hat, nodes, a, omega, sigma, tau, sample_count);
  const double e = std::numbers::e;
  report.taylor_bound = (2.0 * n - 1.0) * std::sqrt(n - 1.0) * m_min / (2.0 * std::sqrt(std::numbers::pi)) *
                        std::pow(e * tau * omega, 2.0 * n - 2.0) * std::exp(n - 1.0);
  report.amplitude_sum_bound = (2.0 * n - 1.0) * (n - 1.0) * std::pow(2.0, 2.0 * n - 2.0) * m_min;
  report.holds = report.sup_dense < sigma && report.sup_samples < sigma && report.admissible &&
                 report.sup_dense <= report.taylor_bound && report.amplitude_sum <= report.amplitude_sum_bound;
  if (!report.holds) throw Error(ErrorCode::VerificationFailed, "number instance is distinguishable at sigma");

  return AdversarialPair{PairKind::number, std::move(mu), std::move(mu_hat), tau, omega, sigma, m_min,
                         nodes, a, report};
}

AdversarialPair construct_support_instance(int n, double omega, double sigma, double m_min, int sample_count) {
  validate(n, omega, sigma, m_min);
  const double tau = support_instance_spacing(n, omega, sigma, m_min);

  std::vector<double> nodes(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < 2 * n; ++j) nodes[static_cast<std::size_t>(j)] = (j - n) * tau;
  const std::vector<double> a = scaled_null_vector(nodes, m_min);

  const auto un = static_cast<std::size_t>(n);
  DiscreteMeasure mu = signed_part(nodes, a, 0, un, 1.0);
  DiscreteMeasure mu_hat = signed_part(nodes, a, un, nodes.size(), -1.0);

  WorstCaseReport report = verify_pair(mu, mu_hat, nodes, a, omega, sigma, tau, sample_count);
  const double e = std::numbers::e;
  report.taylor_bound = m_min * std::exp(1.5) * n * n / std::sqrt(std::numbers::pi * (n - 0.5)) *
                        std::pow(e, 3.0 * n - 1.5) * std::pow(tau * omega, 2.0 * n - 1.0);
  report.amplitude_sum_bound = static_cast<double>(n) * n * std::pow(2.0, 2.0 * n) * m_min;
  report.holds = report.sup_dense < sigma && report.sup_samples < sigma && report.admissible &&
                 report.sup_dense <= report.taylor_bound && report.amplitude_sum <= report.amplitude_sum_bound;
  if (!report.holds) throw Error(ErrorCode::VerificationFailed, "support instance is distinguishable at sigma");

  return AdversarialPair{PairKind::support, std::move(mu), std::move(mu_hat), tau, omega, sigma, m_min,
                         nodes, a, report};
}

}  // namespace lsr
