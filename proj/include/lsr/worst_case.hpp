#ifndef LSR_WORST_CASE_HPP
#define LSR_WORST_CASE_HPP

/** @file
 * Explicit pairs of measures that cannot be told apart at noise level sigma.
 *
 * Both constructions place equispaced nodes t_j with spacing tau, take a
 * null vector a of the real Vandermonde matrix of degree (#nodes - 2), and
 * split gamma = sum_j a_j delta_{t_j} into mu and -mu_hat. All moments of
 * gamma up to that degree vanish, so its Fourier transform on [-Omega, Omega]
 * is a Taylor tail that stays below sigma.
 *
 *  - number:  2n-1 nodes, mu has n supports and mu_hat n-1,
 *             tau = 0.81 e^{-3/2} / Omega * (sigma/m_min)^{1/(2n-2)}
 *  - support: 2n nodes, both have n supports,
 *             tau = 0.49 e^{-3/2} / Omega * (sigma/m_min)^{1/(2n-1)}
 */

#include <span>
#include <vector>

#include "lsr/measure.hpp"

namespace lsr {

enum class PairKind { number, support };

const char* to_string(PairKind kind);

/// Null vector of the (degree+1) x p real Vandermonde matrix, degree = p - 2.
/// Computed as the smallest right singular vector after mapping the nodes onto [-1, 1],
/// first entry positive, scaled so min_j |a_j| = 1. Throws DegenerateNodes if
/// an entry of the unit-norm null vector is below 1e-12.
std::vector<double> vandermonde_null_vector(std::span<const double> t_nodes, int degree);

/// Q_k = sum_j a_j t_j^k for k = 0..max_order.
std::vector<double> moments(std::span<const double> t_nodes, std::span<const double> a, int max_order);

struct WorstCaseReport {
  double sup_dense = 0.0;          ///< sup of |F(gamma)| over the dense grid
  int dense_points = 0;
  double sup_samples = 0.0;        ///< max_q |[mu_hat] - [mu]| over the sample grid
  int sample_points = 0;
  double taylor_bound = 0.0;       ///< closed-form Taylor-tail bound on sup |F(gamma)|
  double amplitude_sum = 0.0;      ///< sum_j |a_j|
  double amplitude_sum_bound = 0.0;
  bool admissible = false;         ///< mu_hat is sigma-admissible for noiseless samples of mu
  bool holds = false;
};

struct AdversarialPair {
  PairKind kind = PairKind::number;
  DiscreteMeasure mu;
  DiscreteMeasure mu_hat;
  double tau = 0.0;
  double omega = 0.0;
  double sigma = 0.0;
  double m_min = 0.0;
  std::vector<double> nodes;       ///< all t_j of gamma
  std::vector<double> amplitudes;  ///< null-vector amplitudes a_j of gamma
  WorstCaseReport report;
};

double number_instance_spacing(int n, double omega, double sigma, double m_min);
double support_instance_spacing(int n, double omega, double sigma, double m_min);

/// Requires 2 <= n <= 8 and 0 < sigma < m_min. `sample_count` sets the
/// sample grid used for the admissibility check. Throws VerificationFailed if
/// the constructed pair is distinguishable at level sigma.
AdversarialPair construct_number_instance(int n, double omega, double sigma, double m_min,
                                          int sample_count = 200);
AdversarialPair construct_support_instance(int n, double omega, double sigma, double m_min,
                                           int sample_count = 200);

}  // namespace lsr

#endif  // LSR_WORST_CASE_HPP
