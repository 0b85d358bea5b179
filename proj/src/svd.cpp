#include "lsr/svd.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "lsr/error.hpp"

namespace lsr {

namespace {

// Completes the columns of `u` flagged in `missing` to an orthonormal basis.
void complete_basis(Eigen::MatrixXcd& u, const std::vector<bool>& missing) {
  const Eigen::Index m = u.rows();
  Eigen::Index next_unit = 0;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    if (!missing[static_cast<std::size_t>(j)]) continue;
    for (; next_unit < m; ++next_unit) {
      Eigen::VectorXcd c = Eigen::VectorXcd::Unit(m, next_unit);
      // Two Gram-Schmidt passes against every column already in the basis.
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index k = 0; k < u.cols(); ++k)
          if (k != j && (!missing[static_cast<std::size_t>(k)] || k < j)) c -= u.col(k) * u.col(k).dot(c);
      const double norm = c.norm();
      if (norm > 0.5) {
        u.col(j) = c / norm;
        ++next_unit;
        break;
      }
    }
  }
}

}  // namespace

SvdResult jacobi_svd(const Eigen::MatrixXcd& a, const JacobiOptions& options) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m < n) throw Error(ErrorCode::InvalidArgument, "jacobi_svd needs rows >= cols");

  const double tol = options.tolerance > 0.0
                         ? options.tolerance
                         : static_cast<double>(m) * std::numeric_limits<double>::epsilon();

  Eigen::MatrixXcd w = a;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);

  int sweep = 0;
  bool rotated = true;
  while (rotated) {
    if (sweep == options.max_sweeps)
      throw Error(ErrorCode::ConvergenceFailure, "Jacobi SVD did not converge");
    ++sweep;
    rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = w.col(p).squaredNorm();
        const double beta = w.col(q).squaredNorm();
        const std::complex<double> gamma = w.col(p).dot(w.col(q));  // w_p^* w_q
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;

        const std::complex<double> phase = std::conj(gamma) / g;  // e^{-i arg(gamma)}
        w.col(q) *= phase;
        v.col(q) *= phase;

        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;

        const Eigen::VectorXcd wp = w.col(p);
        w.col(p) = c * wp - s * w.col(q);
        w.col(q) = s * wp + c * w.col(q);
        const Eigen::VectorXcd vp = v.col(p);
        v.col(p) = c * vp - s * v.col(q);
        v.col(q) = s * vp + c * v.col(q);
      }
    }
  }

  std::vector<double> norms(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) norms[static_cast<std::size_t>(j)] = w.col(j).norm();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return norms[static_cast<std::size_t>(x)] > norms[static_cast<std::size_t>(y)];
  });

  SvdResult out;
  out.sweeps = sweep;
  out.singular_values.resize(n);
  out.u.resize(m, n);
  out.v.resize(n, n);
  std::vector<bool> missing(static_cast<std::size_t>(n), false);
  const double floor = std::numeric_limits<double>::min();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index j = order[static_cast<std::size_t>(k)];
    const double sv = norms[static_cast<std::size_t>(j)];
    out.singular_values(k) = sv;
    out.v.col(k) = v.col(j);
    if (sv > floor) {
      out.u.col(k) = w.col(j) / sv;
    } else {
      out.u.col(k).setZero();
      missing[static_cast<std::size_t>(k)] = true;
    }
  }
  complete_basis(out.u, missing);
  return out;
}

}  // namespace lsr
