#ifndef LSR_APPROX_BOUNDS_HPP
#define LSR_APPROX_BOUNDS_HPP

/** @file
 * Numerical certification of the Vandermonde approximation lower bounds.
 *
 * Each check pairs a closed-form bound (rhs) with a numerically computed
 * quantity (lhs). Minimizations are carried out by grid search and local
 * refinement, so every reported minimum is attained at a feasible point and
 * is an upper bound on the true minimum: a lower bound that holds against it
 * holds on that instance.
 */

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lsr/measure.hpp"

namespace lsr {

/// Strictly increasing angles inside [-pi/2, pi/2].
class NodeConfig {
 public:
  /// Throws InvalidArgument if the angles are unsorted, repeated or out of range.
  explicit NodeConfig(std::vector<double> thetas);

  const std::vector<double>& thetas() const noexcept { return thetas_; }
  std::size_t size() const noexcept { return thetas_.size(); }
  /// Smallest adjacent gap; +inf for a single node.
  double theta_min() const noexcept { return theta_min_; }
  std::string describe() const;

 private:
  std::vector<double> thetas_;
  double theta_min_;
};

enum class BoundDirection { lhs_ge_rhs, lhs_le_rhs, lhs_lt_rhs };

struct BoundCheckReport {
  std::string check;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  BoundDirection direction = BoundDirection::lhs_ge_rhs;
  bool holds = false;
  std::string config;
  long oracle_evaluations = 0;
};

// ---------------------------------------------------------------------------
// Minimum of ||eta_{k+1,k}||_inf over real candidate nodes.

struct MinEtaResult {
  double value = 0.0;              ///< ||eta||_inf at `minimizer`
  std::vector<double> minimizer;   ///< sorted candidate nodes
  long evaluations = 0;
};

/// Exhaustive search over nondecreasing k-tuples on the grid
/// theta_1 + i * theta_min/50 covering [theta_1, theta_{k+1}], then pattern
/// refinement to step 1e-10 (at most 2000 sweeps). Requires k + 1 nodes and
/// 1 <= k <= 4; throws BudgetExceeded for larger k.
MinEtaResult min_eta_brute(const NodeConfig& thetas, int k);

/// min_eta_brute against xi(k) theta_min^k.
BoundCheckReport check_min_eta(const NodeConfig& thetas, int k);

// ---------------------------------------------------------------------------

/// lhs = min_a ||A_hat a - phi_k(e^{i theta})||_2 with A_hat the degree-k
/// Vandermonde matrix at e^{i theta_hat_j}; rhs = 2^-k prod_j |e^{i theta} - e^{i theta_hat_j}|.
/// Propagates RankDeficient for coincident candidate nodes.
BoundCheckReport check_residual_lower_bound(double theta, std::span<const double> theta_hats);

/// lhs = smallest ||A_hat(k) a_hat - A a||_2 found over `trial_count` refined
/// candidate node sets (degree-2k columns, amplitudes by least squares);
/// rhs = zeta(k+1) xi(k) m_min theta_min^{2k} / pi^{2k}.
BoundCheckReport check_nonlinear_approx_bound(const NodeConfig& thetas, std::span<const cplx> amplitudes,
                                              int trial_count, std::uint64_t seed);

struct EtaStabilityReport {
  bool matching_found = false;
  std::vector<int> matching;        ///< matching[j] = index into theta_hats paired with theta_j
  std::vector<double> deviations;   ///< |theta_hat_matching[j] - theta_j|
  double deviation_bound = 0.0;     ///< 2^{k-1} eps / ((k-2)! theta_min^{k-1})
  bool holds = false;
  BoundCheckReport report;
};

/// Requires k >= 2, theta_hats in [-pi/2, pi/2], ||eta_{k,k}(theta, theta_hat)||_inf < epsilon
/// and theta_min >= (4 epsilon / lambda(k))^{1/k}; throws PreconditionUnmet otherwise.
EtaStabilityReport check_eta_stability(const NodeConfig& thetas, std::span<const double> theta_hats,
                                       double epsilon);

/// lhs = ||eta_{k,k}(e^{i theta}, e^{i theta_hat})||_inf,
/// rhs = 2^k pi^{k-1} sigma / (zeta(k) theta_min^{k-1} m_min) with
/// sigma = ||A_hat a_hat - A a||_2 on degree-(2k-1) columns. Requires k >= 2.
BoundCheckReport check_theorem_3_12(const NodeConfig& thetas, std::span<const cplx> amplitudes,
                                    std::span<const double> theta_hats, std::span<const cplx> a_hats);

/// The five factorial and constant inequalities behind the resolution
/// constants, for every n in [n_lo, n_hi] (within [2, 170]), evaluated in log
/// domain; five reports per n (lemma_7_1 .. lemma_7_5). lhs/rhs hold natural logs.
std::vector<BoundCheckReport> check_appendix_inequalities(int n_lo, int n_hi);

/// sqrt(2 pi) n^{n+1/2} e^{-n} <= n! <= e n^{n+1/2} e^{-n}; two reports per n.
std::vector<BoundCheckReport> check_stirling_sandwich(int n_lo, int n_hi);

// ---------------------------------------------------------------------------
// Seeded randomized sweeps. Trial i uses derive_seed(seed, i); results are
// ordered by trial index.

std::vector<BoundCheckReport> sweep_residual_lower_bound(int configs, std::uint64_t seed);
std::vector<BoundCheckReport> sweep_min_eta(int configs, std::uint64_t seed);
std::vector<BoundCheckReport> sweep_nonlinear_approx(int configs, std::uint64_t seed);
std::vector<BoundCheckReport> sweep_theorem_3_12(int configs, std::uint64_t seed);
std::vector<BoundCheckReport> sweep_eta_stability(int configs, std::uint64_t seed);

}  // namespace lsr

#endif  // LSR_APPROX_BOUNDS_HPP
