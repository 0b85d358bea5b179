#include "lsr/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lsr {

CColumn vandermonde_vector(cplx z, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative Vandermonde degree");
  CColumn v(degree + 1);
  v(0) = cplx(1.0, 0.0);
  for (int k = 1; k <= degree; ++k) v(k) = z * v(k - 1);
  return v;
}

VandermondeMatrix::VandermondeMatrix(std::span<const cplx> nodes, int degree)
    : degree_(degree), nodes_(nodes.begin(), nodes.end()) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative Vandermonde degree");
  matrix_.resize(degree + 1, static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t j = 0; j < nodes.size(); ++j)
    matrix_.col(static_cast<Eigen::Index>(j)) = vandermonde_vector(nodes[j], degree);
}

CVector unit_nodes(std::span<const double> thetas) {
  CVector z(thetas.size());
  for (std::size_t j = 0; j < thetas.size(); ++j) z[j] = std::polar(1.0, thetas[j]);
  return z;
}

double factorial(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "factorial of a negative integer");
  if (n <= 20) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
    return static_cast<double>(f);
  }
  return std::exp(std::lgamma(n + 1.0));
}

double log_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "factorial of a negative integer");
  if (n <= 20) return std::log(factorial(n));
  return std::lgamma(n + 1.0);
}

double log_zeta(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "zeta(k) needs k >= 1");
  if (k % 2 == 1) return 2.0 * log_factorial((k - 1) / 2);
  return log_factorial(k / 2) + log_factorial((k - 2) / 2);
}

double log_xi(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "xi(k) needs k >= 1");
  if (k == 1) return std::log(0.5);
  if (k % 2 == 1) return log_factorial((k - 1) / 2) + log_factorial((k - 3) / 2) - std::log(4.0);
  return 2.0 * log_factorial((k - 2) / 2) - std::log(4.0);
}

double zeta(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "zeta(k) needs k >= 1");
  if (k % 2 == 1) {
    const double f = factorial((k - 1) / 2);
    return f * f;
  }
  return factorial(k / 2) * factorial((k - 2) / 2);
}

double xi(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "xi(k) needs k >= 1");
  if (k == 1) return 0.5;
  if (k % 2 == 1) return factorial((k - 1) / 2) * factorial((k - 3) / 2) / 4.0;
  const double f = factorial((k - 2) / 2);
  return f * f / 4.0;
}

double lambda_const(int k) {
  if (k < 2) throw Error(ErrorCode::DomainError, "lambda(k) needs k >= 2");
  return k == 2 ? 1.0 : xi(k - 2);
}

namespace {

template <typename T>
std::vector<double> eta_impl(std::span<const T> z, std::span<const T> zhat) {
  if (z.empty() || zhat.empty()) throw Error(ErrorCode::InvalidArgument, "eta needs nonempty node sets");
  std::vector<double> out(z.size(), 1.0);
  for (std::size_t j = 0; j < z.size(); ++j)
    for (const T& w : zhat) out[j] *= std::abs(z[j] - w);
  return out;
}

}  // namespace

std::vector<double> eta(std::span<const cplx> z, std::span<const cplx> zhat) { return eta_impl(z, zhat); }
std::vector<double> eta(std::span<const double> z, std::span<const double> zhat) { return eta_impl(z, zhat); }

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double gram_determinant(const CMatrix& m) {
  const CMatrix gram = m.adjoint() * m;
  Eigen::LDLT<CMatrix> ldlt(gram);
  double det = 1.0;
  for (Eigen::Index i = 0; i < ldlt.vectorD().size(); ++i) det *= ldlt.vectorD()(i).real();
  return det;
}

ProjectionResidual projection_residual(const CMatrix& a, const CColumn& v) {
  if (a.rows() != v.size()) throw Error(ErrorCode::InvalidArgument, "vector length does not match rows");
  if (a.rows() <= a.cols()) throw Error(ErrorCode::InvalidArgument, "projection needs more rows than columns");
  const Eigen::Index k = a.cols();

  const CMatrix gram = a.adjoint() * a;
  const double max_diag = gram.diagonal().real().maxCoeff();
  const double det_a = gram_determinant(a);
  if (!(det_a > 1e-12 * std::pow(max_diag, static_cast<double>(k))))
    throw Error(ErrorCode::RankDeficient, "column Gram determinant below tolerance");

  CMatrix d(a.rows(), k + 1);
  d << a, v;
  const double det_d = std::max(0.0, gram_determinant(d));

  Eigen::HouseholderQR<CMatrix> qr(a);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(a.rows(), k);
  const CColumn residual = v - q * (q.adjoint() * v);

  return {std::sqrt(det_d / det_a), residual.norm()};
}

void require_distinct(std::span<const cplx> nodes, ErrorCode code) {
  double scale = 0.0;
  for (const cplx& z : nodes) scale = std::max(scale, std::abs(z));
  const double tol = 1e-14 * scale;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) <= tol)
        throw Error(code, "nodes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

InverseNormEstimate vandermonde_inverse_inf_norm(std::span<const cplx> nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "inverse norm needs at least two nodes");
  require_distinct(nodes, ErrorCode::SingularMatrix);

  const VandermondeMatrix v(nodes, k - 1);
  Eigen::PartialPivLU<CMatrix> lu(v.matrix());
  const CMatrix inverse = lu.solve(CMatrix::Identity(k, k));
  const double exact = inverse.cwiseAbs().rowwise().sum().maxCoeff();

  double bound = 0.0;
  for (int j = 0; j < k; ++j) {
    double prod = 1.0;
    for (int p = 0; p < k; ++p)
      if (p != j) prod *= (1.0 + std::abs(nodes[p])) / std::abs(nodes[j] - nodes[p]);
    bound = std::max(bound, prod);
  }
  return {exact, bound};
}

std::vector<double> lagrange_inverse_action(std::span<const double> t_nodes, double t) {
  const std::size_t k = t_nodes.size();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "no interpolation nodes");
  const CVector as_complex(t_nodes.begin(), t_nodes.end());
  require_distinct(as_complex, ErrorCode::DuplicateNodes);

  std::vector<double> out(k, 1.0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t q = 0; q < k; ++q)
      if (q != j) out[j] *= (t - t_nodes[q]) / (t_nodes[j] - t_nodes[q]);
  return out;
}

double vandermonde_volume_ratio(std::span<const cplx> nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "volume ratio needs nodes");
  // det(V^*V) = prod |R_ii|^2 for V = QR, so the ratio is a ratio of |R_ii| products.
  const auto log_volume = [&](int degree) {
    Eigen::HouseholderQR<CMatrix> qr(VandermondeMatrix(nodes, degree).matrix());
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += std::log(std::abs(qr.matrixQR()(i, i)));
    return s;
  };
  return std::exp(log_volume(k) - log_volume(k - 1));
}

}  // namespace lsr
