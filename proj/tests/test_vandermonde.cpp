#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "lsr/error.hpp"
#include "lsr/random.hpp"
#include "lsr/vandermonde.hpp"

using namespace lsr;

namespace {

constexpr double kPi = std::numbers::pi;

// Little-endian base 1e9 integer, enough for exact factorial products.
struct BigInt {
  std::vector<std::uint64_t> limbs{1};

  void mul(std::uint64_t f) {
    std::uint64_t carry = 0;
    for (auto& l : limbs) {
      const std::uint64_t v = l * f + carry;
      l = v % 1000000000ULL;
      carry = v / 1000000000ULL;
    }
    while (carry) {
      limbs.push_back(carry % 1000000000ULL);
      carry /= 1000000000ULL;
    }
  }
  void mul(const BigInt& o) {
    std::vector<std::uint64_t> out(limbs.size() + o.limbs.size(), 0);
    for (std::size_t i = 0; i < limbs.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < o.limbs.size() || carry; ++j) {
        const std::uint64_t cur = out[i + j] + carry + (j < o.limbs.size() ? limbs[i] * o.limbs[j] : 0);
        out[i + j] = cur % 1000000000ULL;
        carry = cur / 1000000000ULL;
      }
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    limbs = out;
  }
  long double value() const {
    long double v = 0;
    for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) v = v * 1e9L + static_cast<long double>(*it);
    return v;
  }
};

BigInt big_factorial(int n) {
  BigInt b;
  for (int k = 2; k <= n; ++k) b.mul(static_cast<std::uint64_t>(k));
  return b;
}

double big_zeta(int k) {
  BigInt b = k % 2 ? big_factorial((k - 1) / 2) : big_factorial(k / 2);
  b.mul(k % 2 ? big_factorial((k - 1) / 2) : big_factorial((k - 2) / 2));
  return static_cast<double>(b.value());
}

double big_xi(int k) {
  if (k == 1) return 0.5;
  BigInt b = k % 2 ? big_factorial((k - 1) / 2) : big_factorial((k - 2) / 2);
  b.mul(k % 2 ? big_factorial((k - 3) / 2) : big_factorial((k - 2) / 2));
  return static_cast<double>(b.value() / 4.0L);
}

// Residual of v after two passes of modified Gram-Schmidt against the columns of a.
double gram_schmidt_residual(const CMatrix& a, CColumn v) {
  std::vector<CColumn> basis;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    CColumn q = a.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) q -= b.dot(q) * b;
    basis.push_back(q / q.norm());
  }
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) v -= b.dot(v) * b;
  return v.norm();
}

// sum_l |e_l(z)|^2 with e_l the elementary symmetric polynomials.
double elementary_symmetric_ratio(const CVector& z) {
  std::vector<cplx> e(z.size() + 1, cplx(0.0));
  e[0] = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t l = j + 1; l >= 1; --l) e[l] += z[j] * e[l - 1];
  double s = 0.0;
  for (const cplx& v : e) s += std::norm(v);
  return std::sqrt(s);
}

CVector random_unit_nodes(Rng& rng, int k, double min_gap) {
  for (;;) {
    std::vector<double> t(static_cast<std::size_t>(k));
    for (double& x : t) x = uniform(rng, -kPi, kPi);
    std::sort(t.begin(), t.end());
    bool ok = true;
    for (int j = 1; j < k; ++j) ok = ok && t[static_cast<std::size_t>(j)] - t[static_cast<std::size_t>(j - 1)] > min_gap;
    if (ok) return unit_nodes(t);
  }
}

template <typename F>
void check_error(F&& f, ErrorCode code) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("vandermonde vectors and matrices") {
  const cplx z(0.3, -0.7);
  const CColumn v = vandermonde_vector(z, 5);
  CHECK(v(0) == cplx(1.0, 0.0));
  for (int k = 1; k <= 5; ++k) CHECK(v(k) == z * v(k - 1));
  const CVector nodes{cplx(1, 0), cplx(0, 1), cplx(-1, 0)};
  const VandermondeMatrix m(nodes, 3);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 3);
  CHECK(m.matrix()(3, 1) == cplx(0, -1));
  check_error([] { (void)vandermonde_vector(1.0, -1); }, ErrorCode::InvalidArgument);
}

TEST_CASE("combinatorial constants") {
  CHECK(zeta(2) == 1.0);
  CHECK(zeta(3) == 1.0);
  CHECK(zeta(4) == 2.0);
  CHECK(xi(1) == 0.5);
  CHECK(xi(2) == 0.25);
  CHECK(xi(3) == 0.25);
  CHECK(lambda_const(2) == 1.0);
  CHECK(lambda_const(3) == 0.5);
  CHECK(lambda_const(4) == 0.25);
  for (int k = 1; k <= 30; ++k) {
    CHECK(zeta(k) == doctest::Approx(big_zeta(k)).epsilon(1e-13));
    CHECK(xi(k) == doctest::Approx(big_xi(k)).epsilon(1e-13));
    CHECK(std::exp(log_zeta(k)) == doctest::Approx(big_zeta(k)).epsilon(1e-12));
    CHECK(std::exp(log_xi(k)) == doctest::Approx(big_xi(k)).epsilon(1e-12));
    if (k >= 2) CHECK(lambda_const(k) == (k == 2 ? 1.0 : xi(k - 2)));
    CHECK(factorial(k) == doctest::Approx(static_cast<double>(big_factorial(k).value())).epsilon(1e-13));
  }
  CHECK(factorial(20) == 2432902008176640000.0);
  check_error([] { (void)zeta(0); }, ErrorCode::DomainError);
  check_error([] { (void)xi(0); }, ErrorCode::DomainError);
  check_error([] { (void)lambda_const(1); }, ErrorCode::DomainError);
  check_error([] { (void)factorial(-1); }, ErrorCode::DomainError);
}

TEST_CASE("eta vectors") {
  const std::vector<double> z{0.0, 1.0}, zh{0.0};
  CHECK(eta(std::span<const double>(z), std::span<const double>(zh)) == std::vector<double>{0.0, 1.0});
  const auto chord = eta(unit_nodes(std::vector<double>{0.0, kPi / 2}), unit_nodes(std::vector<double>{0.0}));
  CHECK(chord[0] == doctest::Approx(0.0));
  CHECK(chord[1] == doctest::Approx(std::sqrt(2.0)));

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    CVector zz(4), hh(3);
    for (auto& v : zz) v = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    for (auto& v : hh) v = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    const auto e = eta(zz, hh);
    for (std::size_t j = 0; j < zz.size(); ++j)
      CHECK(e[j] == doctest::Approx(std::abs(zz[j] - hh[0]) * std::abs(zz[j] - hh[1]) * std::abs(zz[j] - hh[2])));
    CVector hp(hh);
    std::shuffle(hp.begin(), hp.end(), rng);
    const auto ep = eta(zz, hp);
    for (std::size_t j = 0; j < zz.size(); ++j) CHECK(ep[j] == doctest::Approx(e[j]).epsilon(1e-14));
    CVector zp{zz[2], zz[0], zz[3], zz[1]};
    const auto ez = eta(zp, hh);
    CHECK(ez[0] == e[2]);
    CHECK(ez[1] == e[0]);
    CHECK(ez[2] == e[3]);
    CHECK(ez[3] == e[1]);
  }
  CHECK(sup_norm(std::vector<double>{1.0, -3.0, 2.0}) == 3.0);
  check_error([] { (void)eta(CVector{}, CVector{cplx(1)}); }, ErrorCode::InvalidArgument);
}

TEST_CASE("projection residual") {
  SUBCASE("two-row example") {
    CMatrix a(2, 1);
    a << 1.0, 1.0;
    CColumn v(2);
    v << 1.0, -1.0;
    const auto r = projection_residual(a, v);
    CHECK(r.by_projection == doctest::Approx(std::sqrt(2.0)));
    CHECK(r.by_determinant == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("vector inside the span") {
    const VandermondeMatrix a(CVector{cplx(1, 0), std::polar(1.0, 0.4), std::polar(1.0, -0.9)}, 4);
    CColumn coeff(3);
    coeff << cplx(1, 2), cplx(-0.5, 0), cplx(0, 3);
    const CColumn v = a.matrix() * coeff;
    const auto r = projection_residual(a.matrix(), v);
    CHECK(r.by_projection / v.norm() < 1e-10);
    CHECK(r.by_determinant / v.norm() < 1e-6);
  }
  SUBCASE("random 5x3 agrees with Gram-Schmidt and both routes agree") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      const VandermondeMatrix a(random_unit_nodes(rng, 3, 0.3), 4);
      CColumn v(5);
      for (int i = 0; i < 5; ++i) v(i) = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
      const auto r = projection_residual(a.matrix(), v);
      const double gs = gram_schmidt_residual(a.matrix(), v);
      CHECK(r.by_projection == doctest::Approx(gs).epsilon(1e-10));
      CHECK(r.by_determinant == doctest::Approx(r.by_projection).epsilon(1e-9));
    }
  }
  SUBCASE("rank deficiency") {
    const VandermondeMatrix a(CVector{cplx(1, 0), cplx(1, 0)}, 3);
    check_error([&] { (void)projection_residual(a.matrix(), CColumn::Ones(4)); }, ErrorCode::RankDeficient);
    check_error([&] { (void)projection_residual(a.matrix(), CColumn::Ones(3)); }, ErrorCode::InvalidArgument);
  }
}

TEST_CASE("inverse infinity norm") {
  const auto two = vandermonde_inverse_inf_norm(unit_nodes(std::vector<double>{-kPi / 2, kPi / 2}));
  CHECK(two.exact == doctest::Approx(1.0));
  CHECK(two.bound == doctest::Approx(1.0));

  for (int k = 2; k <= 8; ++k) {
    std::vector<double> t;
    for (int j = 0; j < k; ++j) t.push_back(2.0 * kPi * j / k - kPi);
    const auto r = vandermonde_inverse_inf_norm(unit_nodes(t));
    // V^* V = k I, so V^-1 = V^* / k and every row sum of |entries| is exactly 1.
    CHECK(r.exact == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.exact <= r.bound + 1e-12);
  }

  const std::vector<double> th{-kPi / 4, 0.0, kPi / 4};
  const auto r = vandermonde_inverse_inf_norm(unit_nodes(th));
  const double lemma = std::pow(kPi, 2) / (zeta(3) * std::pow(kPi / 4, 2));
  CHECK(r.exact <= r.bound);
  CHECK(r.bound <= lemma);

  check_error([] { (void)vandermonde_inverse_inf_norm(CVector{cplx(1), cplx(1)}); }, ErrorCode::SingularMatrix);
}

TEST_CASE("Lagrange inverse action") {
  const std::vector<double> nodes{-0.7, 0.1, 0.45, 1.3};
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto l = lagrange_inverse_action(nodes, nodes[j]);
    for (std::size_t q = 0; q < nodes.size(); ++q) CHECK(l[q] == doctest::Approx(q == j ? 1.0 : 0.0));
  }
  const auto half = lagrange_inverse_action(std::vector<double>{0.0, 1.0}, 0.5);
  CHECK(half[0] == doctest::Approx(0.5));
  CHECK(half[1] == doctest::Approx(0.5));

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> t(4);
    for (double& x : t) x = uniform(rng, -2, 2);
    const double at = uniform(rng, -2, 2);
    Eigen::Matrix4d d;
    Eigen::Vector4d phi;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) d(r, c) = std::pow(t[static_cast<std::size_t>(c)], r);
      phi(r) = std::pow(at, r);
    }
    const Eigen::Vector4d solved = d.fullPivLu().solve(phi);
    const auto l = lagrange_inverse_action(t, at);
    for (int j = 0; j < 4; ++j)
      CHECK(l[static_cast<std::size_t>(j)] == doctest::Approx(solved(j)).epsilon(1e-9).scale(1.0));
  }
  check_error([] { (void)lagrange_inverse_action(std::vector<double>{0.5, 0.5}, 1.0); }, ErrorCode::DuplicateNodes);
}

TEST_CASE("volume ratio bound and elementary symmetric oracle") {
  Rng rng(2024);
  for (int k = 2; k <= 20; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      const CVector z = random_unit_nodes(rng, k, 1e-3);
      const double ratio = vandermonde_volume_ratio(z);
      CHECK(ratio == doctest::Approx(elementary_symmetric_ratio(z)).epsilon(1e-6));
      CHECK(ratio <= std::ldexp(1.0, k) * (1.0 + 1e-9));
    }
  }
}
