#ifndef LSR_VANDERMONDE_HPP
#define LSR_VANDERMONDE_HPP

/** @file
 * Complex Vandermonde vectors and matrices, the factorial constants zeta, xi
 * and lambda, and the linear-algebra identities the approximation bounds use.
 */

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lsr/error.hpp"
#include "lsr/measure.hpp"

namespace lsr {

using CMatrix = Eigen::MatrixXcd;
using CColumn = Eigen::VectorXcd;

/// phi_s(z) = (1, z, ..., z^s)^T, built by repeated multiplication.
CColumn vandermonde_vector(cplx z, int degree);

/// Columns phi_degree(node_j); (degree + 1) rows, one column per node.
class VandermondeMatrix {
 public:
  VandermondeMatrix(std::span<const cplx> nodes, int degree);

  int degree() const noexcept { return degree_; }
  const CVector& nodes() const noexcept { return nodes_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  Eigen::Index rows() const noexcept { return matrix_.rows(); }
  Eigen::Index cols() const noexcept { return matrix_.cols(); }

 private:
  int degree_;
  CVector nodes_;
  CMatrix matrix_;
};

/// e^{i theta_j} for each angle.
CVector unit_nodes(std::span<const double> thetas);

/// n! as a double: exact integer product for n <= 20, exp(lgamma) beyond.
double factorial(int n);
/// log(n!) computed via lgamma; exact-product based for n <= 20.
double log_factorial(int n);

/// zeta(k): ((k-1)/2)!^2 for odd k, (k/2)! ((k-2)/2)! for even k. Requires k >= 1.
double zeta(int k);
/// xi(k): 1/2 for k = 1, ((k-1)/2)! ((k-3)/2)!/4 for odd k >= 3,
/// ((k-2)/2)!^2/4 for even k. Requires k >= 1.
double xi(int k);
/// lambda(k): 1 for k = 2, xi(k - 2) for k >= 3. Requires k >= 2.
double lambda_const(int k);

double log_zeta(int k);
double log_xi(int k);

/// Entry j is prod_l |z_j - zhat_l|. Both sequences must be nonempty.
std::vector<double> eta(std::span<const cplx> z, std::span<const cplx> zhat);
std::vector<double> eta(std::span<const double> z, std::span<const double> zhat);

double sup_norm(std::span<const double> v);

/// Least-squares residual of fitting v in the column span of A, by two routes.
struct ProjectionResidual {
  double by_determinant;  ///< sqrt(det(D*D) / det(A*A)), D = (A, v)
  double by_projection;   ///< ||v - Q Q^* v||_2 from a Householder QR of A
};

/// Requires A with more rows than columns and full column rank; throws
/// RankDeficient when det(A*A) <= 1e-12 * (max diag of A*A)^k.
ProjectionResidual projection_residual(const CMatrix& a, const CColumn& v);

/// det(M^*M) of a Gram matrix by pivoted LDL^T factorization.
double gram_determinant(const CMatrix& m);

/// Exact infinity-norm of V_k(k-1)^{-1} and the product bound
/// max_j prod_{p != j} (1 + |z_p|) / |z_j - z_p|; on the unit circle the
/// numerator is 2.
struct InverseNormEstimate {
  double exact;
  double bound;
};

/// Requires k >= 2 distinct nodes; throws SingularMatrix when two nodes are
/// within 1e-14 * max|node| of each other.
InverseNormEstimate vandermonde_inverse_inf_norm(std::span<const cplx> nodes);

/// Lagrange basis values at t: entry j = prod_{q != j} (t - t_q)/(t_j - t_q).
/// Throws DuplicateNodes on coincident nodes.
std::vector<double> lagrange_inverse_action(std::span<const double> t_nodes, double t);

/// sqrt(det(V_k(k)^* V_k(k)) / det(V_k(k-1)^* V_k(k-1))) for k nodes.
double vandermonde_volume_ratio(std::span<const cplx> nodes);

/// Throws Error(code) if any two nodes are closer than 1e-14 * max|node|.
void require_distinct(std::span<const cplx> nodes, ErrorCode code);

}  // namespace lsr

#endif  // LSR_VANDERMONDE_HPP
