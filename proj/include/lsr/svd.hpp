#ifndef LSR_SVD_HPP
#define LSR_SVD_HPP

#include <Eigen/Dense>

namespace lsr {

/// A = U diag(singular_values) V^*, singular values sorted descending.
struct SvdResult {
  Eigen::VectorXd singular_values;
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd v;
  int sweeps = 0;
};

struct JacobiOptions {
  /// A column pair is treated as orthogonal once |w_p^* w_q| <= tolerance * ||w_p|| ||w_q||.
  double tolerance = 0.0;  // 0 selects rows * machine epsilon
  int max_sweeps = 100;
};

/// One-sided (Hestenes) Jacobi SVD of a complex matrix with rows >= cols.
/// Each rotation first rotates the phase of column q so the pair's inner
/// product is real, then applies a real plane rotation. Throws
/// Error(ConvergenceFailure) if a sweep still rotates after max_sweeps.
SvdResult jacobi_svd(const Eigen::MatrixXcd& a, const JacobiOptions& options = {});

}  // namespace lsr

#endif  // LSR_SVD_HPP
