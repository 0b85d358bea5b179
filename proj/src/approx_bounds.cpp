#include "lsr/approx_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lsr/error.hpp"
#include "lsr/random.hpp"
#include "lsr/vandermonde.hpp"
#include "parallel.hpp"

namespace lsr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

bool compare(double lhs, double rhs, BoundDirection dir) {
  switch (dir) {
    case BoundDirection::lhs_ge_rhs: return lhs >= rhs;
    case BoundDirection::lhs_le_rhs: return lhs <= rhs;
    case BoundDirection::lhs_lt_rhs: return lhs < rhs;
  }
  return false;
}

// Pattern search: try x + step * d for each direction d, halve the step after
// a sweep without improvement. Returns the best value; x holds the best point.
template <typename F>
double pattern_refine(F&& f, std::vector<double>& x, double step, double tol, int max_sweeps, long& evals) {
  // Directions: every nonzero vector in {-1, 0, 1}^n for small n (the max-type
  // objectives have ridges that coordinate moves cannot follow), else the axes.
  const std::size_t n = x.size();
  std::vector<std::vector<double>> dirs;
  if (n <= 5) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<double> d(n);
      std::size_t c = code;
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i, c /= 3) {
        d[i] = static_cast<double>(c % 3) - 1.0;
        nonzero = nonzero || d[i] != 0.0;
      }
      if (nonzero) dirs.push_back(std::move(d));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (double s : {1.0, -1.0}) {
        std::vector<double> d(n, 0.0);
        d[i] = s;
        dirs.push_back(std::move(d));
      }
  }
  double best = f(x);
  ++evals;
  std::vector<double> trial(n);
  for (int sweep = 0; sweep < max_sweeps && step >= tol; ++sweep) {
    bool improved = false;
    for (const auto& d : dirs) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + step * d[i];
      const double v = f(trial);
      ++evals;
      if (v < best) {
        best = v;
        x = trial;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

double eta_sup(std::span<const double> thetas, std::span<const double> cand) {
  double worst = 0.0;
  for (double t : thetas) {
    double prod = 1.0;
    for (double c : cand) prod *= std::abs(t - c);
    worst = std::max(worst, prod);
  }
  return worst;
}

// ||A_hat a_hat - v||_2 minimized over a_hat by least squares.
double least_squares_residual(const CMatrix& a_hat, const CColumn& v) {
  Eigen::ColPivHouseholderQR<CMatrix> qr(a_hat);
  const CColumn coeffs = qr.solve(v);
  return (a_hat * coeffs - v).norm();
}

NodeConfig random_config(Rng& rng, int count, double min_gap, double max_gap) {
  for (;;) {
    std::vector<double> t(static_cast<std::size_t>(count));
    t[0] = 0.0;
    for (int j = 1; j < count; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + uniform(rng, min_gap, max_gap);
    const double span = t.back();
    if (span > kPi) continue;
    const double offset = uniform(rng, -kHalfPi, kHalfPi - span);
    for (double& v : t) v = std::clamp(v + offset, -kHalfPi, kHalfPi);
    try {
      return NodeConfig(std::move(t));
    } catch (const Error&) {
      continue;
    }
  }
}

cplx random_amplitude(Rng& rng, double lo, double hi) {
  return std::polar(uniform(rng, lo, hi), uniform(rng, -kPi, kPi));
}

}  // namespace

NodeConfig::NodeConfig(std::vector<double> thetas) : thetas_(std::move(thetas)) {
  if (thetas_.empty()) throw Error(ErrorCode::InvalidArgument, "node configuration is empty");
  theta_min_ = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < thetas_.size(); ++j) {
    if (!(thetas_[j] >= -kHalfPi && thetas_[j] <= kHalfPi))
      throw Error(ErrorCode::InvalidArgument, "node outside [-pi/2, pi/2]");
    if (j > 0) {
      const double gap = thetas_[j] - thetas_[j - 1];
      if (!(gap > 0.0)) throw Error(ErrorCode::InvalidArgument, "nodes must be strictly increasing");
      theta_min_ = std::min(theta_min_, gap);
    }
  }
}

std::string NodeConfig::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "thetas=[";
  for (std::size_t j = 0; j < thetas_.size(); ++j) os << (j ? "," : "") << thetas_[j];
  os << "]";
  return os.str();
}

MinEtaResult min_eta_brute(const NodeConfig& thetas, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > 4) throw Error(ErrorCode::BudgetExceeded, "grid search is capped at k = 4");
  if (thetas.size() != static_cast<std::size_t>(k + 1))
    throw Error(ErrorCode::InvalidArgument, "min_eta_brute needs k + 1 nodes");

  const auto& t = thetas.thetas();
  const double h = thetas.theta_min() / 50.0;
  const int points = static_cast<int>(std::floor((t.back() - t.front()) / h + 1e-9)) + 1;
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = t.front() + i * h;
  grid.back() = std::min(grid.back(), t.back());

  // eta is symmetric in the candidates, so nondecreasing index tuples cover
  // the full grid. partial[d][j] holds the product over the first d candidates.
  const std::size_t nodes = t.size();
  std::vector<std::vector<double>> partial(static_cast<std::size_t>(k + 1), std::vector<double>(nodes, 1.0));
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::vector<int> best_idx(static_cast<std::size_t>(k), 0);
  double best = std::numeric_limits<double>::infinity();
  long evals = 0;

  auto recurse = [&](auto&& self, int depth, int start) -> void {
    const auto& prev = partial[static_cast<std::size_t>(depth)];
    if (depth == k - 1) {
      for (int i = start; i < points; ++i) {
        const double x = grid[static_cast<std::size_t>(i)];
        double worst = 0.0;
        for (std::size_t j = 0; j < nodes; ++j) worst = std::max(worst, prev[j] * std::abs(t[j] - x));
        ++evals;
        if (worst < best) {
          best = worst;
          idx[static_cast<std::size_t>(depth)] = i;
          best_idx = idx;
        }
      }
      return;
    }
    auto& next = partial[static_cast<std::size_t>(depth + 1)];
    for (int i = start; i < points; ++i) {
      const double x = grid[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < nodes; ++j) next[j] = prev[j] * std::abs(t[j] - x);
      idx[static_cast<std::size_t>(depth)] = i;
      self(self, depth + 1, i);
    }
  };
  recurse(recurse, 0, 0);

  MinEtaResult out;
  out.minimizer.resize(static_cast<std::size_t>(k));
  for (int d = 0; d < k; ++d) out.minimizer[static_cast<std::size_t>(d)] = grid[static_cast<std::size_t>(best_idx[static_cast<std::size_t>(d)])];
  auto objective = [&](const std::vector<double>& c) { return eta_sup(t, c); };
  out.value = std::min(best, pattern_refine(objective, out.minimizer, h, 1e-10, 2000, evals));
  std::sort(out.minimizer.begin(), out.minimizer.end());
  out.value = eta_sup(t, out.minimizer);
  out.evaluations = evals;
  return out;
}

BoundCheckReport check_min_eta(const NodeConfig& thetas, int k) {
  const MinEtaResult r = min_eta_brute(thetas, k);
  BoundCheckReport rep;
  rep.check = "min_eta";
  rep.params = {{"k", k}, {"theta_min", thetas.theta_min()}};
  rep.lhs = r.value;
  rep.rhs = xi(k) * std::pow(thetas.theta_min(), k);
  rep.direction = BoundDirection::lhs_ge_rhs;
  rep.holds = rep.lhs >= rep.rhs - 1e-12;
  rep.config = thetas.describe();
  rep.oracle_evaluations = r.evaluations;
  return rep;
}

BoundCheckReport check_residual_lower_bound(double theta, std::span<const double> theta_hats) {
  const int k = static_cast<int>(theta_hats.size());
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need at least one candidate node");
  const CVector hats = unit_nodes(theta_hats);
  const VandermondeMatrix a_hat(hats, k);
  const cplx z = std::polar(1.0, theta);
  const ProjectionResidual res = projection_residual(a_hat.matrix(), vandermonde_vector(z, k));

  double prod = 1.0;
  for (const cplx& w : hats) prod *= std::abs(z - w);

  BoundCheckReport rep;
  rep.check = "residual_lower_bound";
  rep.params = {{"k", k}, {"theta", theta}};
  rep.lhs = res.by_projection;
  rep.rhs = std::ldexp(prod, -k);
  rep.direction = BoundDirection::lhs_ge_rhs;
  rep.holds = rep.lhs >= rep.rhs - 1e-12;
  std::ostringstream os;
  os.precision(17);
  os << "theta=" << theta << " theta_hats=[";
  for (int j = 0; j < k; ++j) os << (j ? "," : "") << theta_hats[static_cast<std::size_t>(j)];
  os << "]";
  rep.config = os.str();
  rep.oracle_evaluations = 1;
  return rep;
}

BoundCheckReport check_nonlinear_approx_bound(const NodeConfig& thetas, std::span<const cplx> amplitudes,
                                              int trial_count, std::uint64_t seed) {
  const int k = static_cast<int>(thetas.size()) - 1;
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need at least two true nodes");
  if (amplitudes.size() != thetas.size()) throw Error(ErrorCode::InvalidArgument, "one amplitude per node");
  if (trial_count < 1) throw Error(ErrorCode::InvalidArgument, "trial_count must be positive");

  const auto& t = thetas.thetas();
  double m_min = std::numeric_limits<double>::infinity();
  for (const cplx& a : amplitudes) m_min = std::min(m_min, std::abs(a));

  const int degree = 2 * k;
  const VandermondeMatrix a_true(unit_nodes(t), degree);
  const CColumn target = a_true.matrix() * Eigen::Map<const CColumn>(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
  long evals = 0;
  auto objective = [&](const std::vector<double>& cand) {
    return least_squares_residual(VandermondeMatrix(unit_nodes(cand), degree).matrix(), target);
  };

  // Starts: every k-subset of the true nodes, every adjacent pair merged at
  // its midpoint, then random draws around the true nodes.
  std::vector<std::vector<double>> starts;
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<double> c;
    for (int j = 0; j <= k; ++j)
      if (j != drop) c.push_back(t[static_cast<std::size_t>(j)]);
    starts.push_back(std::move(c));
  }
  for (int merge = 0; merge < k; ++merge) {
    std::vector<double> c;
    for (int j = 0; j <= k; ++j) {
      if (j == merge) {
        c.push_back(0.5 * (t[static_cast<std::size_t>(j)] + t[static_cast<std::size_t>(j + 1)]));
        ++j;
      } else {
        c.push_back(t[static_cast<std::size_t>(j)]);
      }
    }
    starts.push_back(std::move(c));
  }
  Rng rng(seed);
  const double lo = t.front() - thetas.theta_min();
  const double hi = t.back() + thetas.theta_min();
  while (static_cast<int>(starts.size()) < trial_count) {
    std::vector<double> c(static_cast<std::size_t>(k));
    for (double& v : c) v = uniform(rng, lo, hi);
    starts.push_back(std::move(c));
  }
  starts.resize(static_cast<std::size_t>(std::max(trial_count, 1)));

  double best = std::numeric_limits<double>::infinity();
  for (auto& start : starts) {
    best = std::min(best, pattern_refine(objective, start, thetas.theta_min() / 4.0, 1e-10, 200, evals));
  }

  BoundCheckReport rep;
  rep.check = "nonlinear_approx_bound";
  rep.params = {{"k", k}, {"m_min", m_min}, {"theta_min", thetas.theta_min()}, {"trials", trial_count}};
  rep.lhs = best;
  rep.rhs = zeta(k + 1) * xi(k) * m_min * std::pow(thetas.theta_min() / kPi, 2.0 * k);
  rep.direction = BoundDirection::lhs_ge_rhs;
  rep.holds = rep.lhs >= rep.rhs - 1e-12;
  rep.config = thetas.describe();
  rep.oracle_evaluations = evals;
  return rep;
}

EtaStabilityReport check_eta_stability(const NodeConfig& thetas, std::span<const double> theta_hats,
                                       double epsilon) {
  const int k = static_cast<int>(thetas.size());
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "eta stability needs k >= 2");
  if (theta_hats.size() != thetas.size()) throw Error(ErrorCode::InvalidArgument, "need k candidate nodes");
  for (double v : theta_hats)
    if (!(v >= -kHalfPi && v <= kHalfPi)) throw Error(ErrorCode::PreconditionUnmet, "candidate outside [-pi/2, pi/2]");

  const auto& t = thetas.thetas();
  const double theta_min = thetas.theta_min();
  const double eta_inf = eta_sup(t, theta_hats);
  if (!(eta_inf < epsilon)) throw Error(ErrorCode::PreconditionUnmet, "||eta||_inf must be below epsilon");
  if (!(theta_min >= std::pow(4.0 * epsilon / lambda_const(k), 1.0 / k)))
    throw Error(ErrorCode::PreconditionUnmet, "theta_min below (4 epsilon / lambda(k))^(1/k)");

  EtaStabilityReport out;
  out.deviation_bound = std::ldexp(epsilon, k - 1) / (factorial(k - 2) * std::pow(theta_min, k - 1));
  out.matching.assign(static_cast<std::size_t>(k), -1);
  out.deviations.assign(static_cast<std::size_t>(k), std::numeric_limits<double>::infinity());

  // The windows (theta_j - theta_min/2, theta_j + theta_min/2) are disjoint,
  // so a valid matching puts exactly one candidate in each.
  bool ok = true;
  for (int j = 0; j < k && ok; ++j) {
    for (int c = 0; c < k; ++c) {
      if (std::abs(theta_hats[static_cast<std::size_t>(c)] - t[static_cast<std::size_t>(j)]) < theta_min / 2.0) {
        if (out.matching[static_cast<std::size_t>(j)] != -1) {
          ok = false;
          break;
        }
        out.matching[static_cast<std::size_t>(j)] = c;
      }
    }
    if (out.matching[static_cast<std::size_t>(j)] == -1) ok = false;
  }
  out.matching_found = ok;
  double worst = std::numeric_limits<double>::infinity();
  if (ok) {
    worst = 0.0;
    for (int j = 0; j < k; ++j) {
      const double d = std::abs(theta_hats[static_cast<std::size_t>(out.matching[static_cast<std::size_t>(j)])] -
                                t[static_cast<std::size_t>(j)]);
      out.deviations[static_cast<std::size_t>(j)] = d;
      worst = std::max(worst, d);
    }
  }
  out.holds = ok && worst <= out.deviation_bound;

  BoundCheckReport& rep = out.report;
  rep.check = "eta_stability";
  rep.params = {{"k", k}, {"epsilon", epsilon}, {"theta_min", theta_min}, {"eta_inf", eta_inf}};
  rep.lhs = worst;
  rep.rhs = out.deviation_bound;
  rep.direction = BoundDirection::lhs_le_rhs;
  rep.holds = out.holds;
  rep.config = thetas.describe();
  rep.oracle_evaluations = 1;
  return out;
}

BoundCheckReport check_theorem_3_12(const NodeConfig& thetas, std::span<const cplx> amplitudes,
                                    std::span<const double> theta_hats, std::span<const cplx> a_hats) {
  const int k = static_cast<int>(thetas.size());
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "theorem check needs k >= 2");
  if (amplitudes.size() != thetas.size() || theta_hats.size() != thetas.size() || a_hats.size() != thetas.size())
    throw Error(ErrorCode::InvalidArgument, "all inputs need k entries");

  double m_min = std::numeric_limits<double>::infinity();
  for (const cplx& a : amplitudes) m_min = std::min(m_min, std::abs(a));

  const int degree = 2 * k - 1;
  const CVector z = unit_nodes(thetas.thetas());
  const CVector zhat = unit_nodes(theta_hats);
  const auto kk = static_cast<Eigen::Index>(k);
  const CColumn fit = VandermondeMatrix(zhat, degree).matrix() * Eigen::Map<const CColumn>(a_hats.data(), kk);
  const CColumn truth = VandermondeMatrix(z, degree).matrix() * Eigen::Map<const CColumn>(amplitudes.data(), kk);
  const double sigma = (fit - truth).norm();

  const double theta_min = thetas.theta_min();
  BoundCheckReport rep;
  rep.check = "theorem_3_12";
  rep.params = {{"k", k}, {"sigma", sigma}, {"m_min", m_min}, {"theta_min", theta_min}};
  rep.lhs = sup_norm(eta(z, zhat));
  rep.rhs = std::ldexp(std::pow(kPi, k - 1), k) * sigma / (zeta(k) * std::pow(theta_min, k - 1) * m_min);
  rep.direction = BoundDirection::lhs_lt_rhs;
  rep.holds = rep.lhs < rep.rhs + 1e-12;
  rep.config = thetas.describe();
  rep.oracle_evaluations = 1;
  return rep;
}

namespace {

BoundCheckReport log_report(std::string name, int n, double log_lhs, double log_rhs, BoundDirection dir) {
  BoundCheckReport rep;
  rep.check = std::move(name);
  rep.params = {{"n", n}};
  rep.lhs = log_lhs;
  rep.rhs = log_rhs;
  rep.direction = dir;
  rep.holds = compare(log_lhs, log_rhs, dir);
  rep.config = "log-domain";
  rep.oracle_evaluations = 1;
  return rep;
}

double log_lambda(int n) { return n == 2 ? 0.0 : log_xi(n - 2); }

void check_range(int n_lo, int n_hi, int floor) {
  if (n_lo < floor || n_hi > 170 || n_lo > n_hi)
    throw Error(ErrorCode::InvalidArgument, "n range must lie within [" + std::to_string(floor) + ", 170]");
}

}  // namespace

std::vector<BoundCheckReport> check_appendix_inequalities(int n_lo, int n_hi) {
  check_range(n_lo, n_hi, 2);
  const double e_log = 1.0;
  const double log_pi = std::log(kPi);
  const double log2 = std::log(2.0);
  const double log_half_e = e_log - log2;

  std::vector<BoundCheckReport> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double dn = n;

    // (n-1)^{2n-1}/(2n-2)! and n^{2n+1}/(2n-1)! against their Stirling-type bounds;
    // the report carries the one with the smaller margin.
    const double l1 = (2 * dn - 1) * std::log(dn - 1) - log_factorial(2 * n - 2);
    const double r1 = 0.5 * std::log(dn - 1) - std::log(2.0 * std::sqrt(kPi)) + (2 * dn - 2) * log_half_e;
    const double l2 = (2 * dn + 1) * std::log(dn) - log_factorial(2 * n - 1);
    const double r2 = e_log + 2 * std::log(dn) - std::log(2.0 * std::sqrt(kPi * (dn - 0.5))) + (2 * dn - 1) * log_half_e;
    BoundCheckReport lemma71 = (l1 - r1 >= l2 - r2) ? log_report("lemma_7_1", n, l1, r1, BoundDirection::lhs_le_rhs)
                                                    : log_report("lemma_7_1", n, l2, r2, BoundDirection::lhs_le_rhs);
    lemma71.holds = l1 <= r1 && l2 <= r2;
    lemma71.params["first_log_margin"] = r1 - l1;
    lemma71.params["second_log_margin"] = r2 - l2;
    out.push_back(std::move(lemma71));

    // (2 sqrt(2n-1) / (zeta(n) xi(n-1)))^{1/(2n-2)} <= 4.4 e / (2n-1)
    const double l72 = (log2 + 0.5 * std::log(2 * dn - 1) - log_zeta(n) - log_xi(n - 1)) / (2 * dn - 2);
    const double r72 = std::log(4.4) + e_log - std::log(2 * dn - 1);
    out.push_back(log_report("lemma_7_2", n, l72, r72, BoundDirection::lhs_le_rhs));

    // (8 sqrt(2n) / (zeta(n) lambda(n)))^{1/(2n-1)} <= 5.88 e / (2n)
    const double l73 = (std::log(8.0) + 0.5 * std::log(2 * dn) - log_zeta(n) - log_lambda(n)) / (2 * dn - 1);
    const double r73 = std::log(5.88) + e_log - std::log(2 * dn);
    out.push_back(log_report("lemma_7_3", n, l73, r73, BoundDirection::lhs_le_rhs));

    // (2n)^{2n-3/2} / (zeta(n) (n-2)!) <= 2^{3n-3} e^{2n} pi^{-3/2}
    const double l74 = (2 * dn - 1.5) * std::log(2 * dn) - log_zeta(n) - log_factorial(n - 2);
    const double r74 = (3 * dn - 3) * log2 + 2 * dn * e_log - 1.5 * log_pi;
    out.push_back(log_report("lemma_7_4", n, l74, r74, BoundDirection::lhs_le_rhs));

    // n (2n(n+1) / zeta(n)^2)^{1/(2n-2)} < 3e
    const double l75 = std::log(dn) + (std::log(2 * dn * (dn + 1)) - 2 * log_zeta(n)) / (2 * dn - 2);
    const double r75 = std::log(3.0) + e_log;
    out.push_back(log_report("lemma_7_5", n, l75, r75, BoundDirection::lhs_lt_rhs));
  }
  return out;
}

std::vector<BoundCheckReport> check_stirling_sandwich(int n_lo, int n_hi) {
  check_range(n_lo, n_hi, 1);
  std::vector<BoundCheckReport> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double dn = n;
    const double core = (dn + 0.5) * std::log(dn) - dn;
    const double lf = log_factorial(n);
    out.push_back(log_report("stirling_lower", n, 0.5 * std::log(2 * kPi) + core, lf, BoundDirection::lhs_le_rhs));
    out.push_back(log_report("stirling_upper", n, lf, 1.0 + core, BoundDirection::lhs_le_rhs));
  }
  return out;
}

std::vector<BoundCheckReport> sweep_residual_lower_bound(int configs, std::uint64_t seed) {
  return detail::parallel_map(configs, [seed](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = 1 + i % 3;
    const NodeConfig hats = random_config(rng, k, 0.05, 1.0);
    const double theta = uniform(rng, -kHalfPi, kHalfPi);
    BoundCheckReport rep = check_residual_lower_bound(theta, hats.thetas());
    rep.params["trial"] = i;
    return rep;
  });
}

std::vector<BoundCheckReport> sweep_min_eta(int configs, std::uint64_t seed) {
  return detail::parallel_map(configs, [seed](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = 1 + i % 4;
    const double theta_min = uniform(rng, 0.05, 0.3);
    // Gaps up to 1.25 theta_min keep the k = 4 grid near 250 points per axis.
    const NodeConfig cfg = random_config(rng, k + 1, theta_min, 1.25 * theta_min);
    BoundCheckReport rep = check_min_eta(cfg, k);
    rep.params["trial"] = i;
    return rep;
  });
}

std::vector<BoundCheckReport> sweep_nonlinear_approx(int configs, std::uint64_t seed) {
  return detail::parallel_map(configs, [seed](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = 1 + i % 2;
    const NodeConfig cfg = random_config(rng, k + 1, 0.05, 0.8);
    CVector amps(cfg.size());
    for (cplx& a : amps) a = random_amplitude(rng, 1.0, 2.0);
    BoundCheckReport rep = check_nonlinear_approx_bound(cfg, amps, 40, derive_seed(seed ^ 0xa5a5ULL, static_cast<std::uint64_t>(i)));
    rep.params["trial"] = i;
    return rep;
  });
}

std::vector<BoundCheckReport> sweep_theorem_3_12(int configs, std::uint64_t seed) {
  return detail::parallel_map(configs, [seed](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = 2 + i % 2;
    const NodeConfig cfg = random_config(rng, k, 0.1, 1.0);
    CVector amps(cfg.size());
    for (cplx& a : amps) a = random_amplitude(rng, 1.0, 2.0);

    const double scale = log_uniform(rng, 1e-6, 1e-1);
    std::vector<double> hats(cfg.size());
    for (std::size_t j = 0; j < hats.size(); ++j)
      hats[j] = std::clamp(cfg.thetas()[j] + uniform(rng, -scale, scale), -kHalfPi, kHalfPi);

    // Least-squares amplitudes make the residual, and hence the bound, as small as possible.
    const int degree = 2 * k - 1;
    const CColumn truth = VandermondeMatrix(unit_nodes(cfg.thetas()), degree).matrix() *
                          Eigen::Map<const CColumn>(amps.data(), static_cast<Eigen::Index>(amps.size()));
    const CMatrix a_hat = VandermondeMatrix(unit_nodes(hats), degree).matrix();
    const CColumn coeffs = a_hat.colPivHouseholderQr().solve(truth);
    const CVector a_hats(coeffs.data(), coeffs.data() + coeffs.size());

    BoundCheckReport rep = check_theorem_3_12(cfg, amps, hats, a_hats);
    rep.params["trial"] = i;
    rep.params["perturbation"] = scale;
    return rep;
  });
}

std::vector<BoundCheckReport> sweep_eta_stability(int configs, std::uint64_t seed) {
  return detail::parallel_map(configs, [seed](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = 2 + i % 3;
    const double theta_min = uniform(rng, 0.2, 0.5);
    const NodeConfig cfg = random_config(rng, k, theta_min, 1.25 * theta_min);
    double rho = log_uniform(rng, 1e-5, 1e-2);
    for (;;) {
      std::vector<double> hats(cfg.size());
      for (std::size_t j = 0; j < hats.size(); ++j)
        hats[j] = std::clamp(cfg.thetas()[j] + uniform(rng, -rho, rho) * cfg.theta_min(), -kHalfPi, kHalfPi);
      std::shuffle(hats.begin(), hats.end(), rng);
      const double epsilon = eta_sup(cfg.thetas(), hats) * (1.0 + 1e-9) + std::numeric_limits<double>::min();
      if (cfg.theta_min() >= std::pow(4.0 * epsilon / lambda_const(k), 1.0 / k)) {
        BoundCheckReport rep = check_eta_stability(cfg, hats, epsilon).report;
        rep.params["trial"] = i;
        rep.params["relative_perturbation"] = rho;
        return rep;
      }
      rho *= 0.5;
    }
  });
}

}  // namespace lsr
