#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lsr/approx_bounds.hpp"
#include "lsr/error.hpp"
#include "lsr/random.hpp"
#include "lsr/vandermonde.hpp"

using namespace lsr;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename F>
void check_error(F&& f, ErrorCode code) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

double eta_inf(const std::vector<double>& t, const std::vector<double>& c) {
  return sup_norm(eta(std::span<const double>(t), std::span<const double>(c)));
}

}  // namespace

TEST_CASE("node configurations") {
  const NodeConfig cfg({-0.5, 0.1, 0.3});
  CHECK(cfg.size() == 3);
  CHECK(cfg.theta_min() == doctest::Approx(0.2));
  CHECK(std::isinf(NodeConfig({0.0}).theta_min()));
  CHECK(cfg.describe().find("thetas=[") == 0);
  check_error([] { NodeConfig({0.3, 0.1}); }, ErrorCode::InvalidArgument);
  check_error([] { NodeConfig({0.1, 0.1}); }, ErrorCode::InvalidArgument);
  check_error([] { NodeConfig({0.0, 2.0}); }, ErrorCode::InvalidArgument);
}

TEST_CASE("single candidate: the midpoint is optimal and the bound is tight") {
  for (auto [a, b] : {std::pair{-0.3, 0.5}, std::pair{-1.5, 1.5}, std::pair{0.1, 0.11}}) {
    const NodeConfig cfg({a, b});
    const MinEtaResult r = min_eta_brute(cfg, 1);
    CHECK(r.value == doctest::Approx((b - a) / 2).epsilon(1e-9));
    CHECK(r.minimizer[0] == doctest::Approx((a + b) / 2).epsilon(1e-8));
    const BoundCheckReport rep = check_min_eta(cfg, 1);
    CHECK(rep.rhs == doctest::Approx(rep.lhs).epsilon(1e-9));
    CHECK(rep.holds);
  }
}

TEST_CASE("minimum of eta against a fine-grid oracle") {
  const std::vector<double> t = {-0.3, -0.05, 0.2};
  const NodeConfig cfg(t);
  const MinEtaResult r = min_eta_brute(cfg, 2);
  double oracle = INFINITY;
  for (double x = -0.3; x <= 0.2; x += 5e-4)
    for (double y = x; y <= 0.2; y += 5e-4) oracle = std::min(oracle, eta_inf(t, {x, y}));
  CHECK(r.value <= oracle * (1 + 1e-9));
  CHECK(r.value >= oracle * (1 - 1e-2));
  CHECK(r.value == doctest::Approx(eta_inf(t, r.minimizer)));
  CHECK(r.value >= xi(2) * std::pow(cfg.theta_min(), 2));
  check_error([] { (void)min_eta_brute(NodeConfig({-0.5, -0.3, -0.1, 0.1, 0.3, 0.5}), 5); },
              ErrorCode::BudgetExceeded);
}

TEST_CASE("unit-circle eta is bounded below for any candidate set") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 4;
    std::vector<double> t;
    double x = uniform(rng, -1.5, -1.0);
    for (int j = 0; j <= k; ++j) t.push_back(x += uniform(rng, 0.05, 0.5));
    const NodeConfig cfg(t);
    std::vector<double> hats;
    for (int j = 0; j < k; ++j) hats.push_back(uniform(rng, -kPi / 2, kPi / 2));
    const CVector z = unit_nodes(t), zh = unit_nodes(hats);
    CHECK(sup_norm(eta(std::span<const cplx>(z), std::span<const cplx>(zh))) >=
          xi(k) * std::pow(2 * cfg.theta_min() / kPi, k) * (1 - 1e-12));
  }
}

TEST_CASE("minimum of eta scales homogeneously") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<double> t;
    for (int j = 0; j <= k; ++j) t.push_back(-0.3 + 0.15 * j + 0.02 * j * j);
    std::vector<double> t2;
    for (double v : t) t2.push_back(2 * v);
    const double a = min_eta_brute(NodeConfig(t), k).value;
    const double b = min_eta_brute(NodeConfig(t2), k).value;
    CHECK(b / a == doctest::Approx(std::pow(2.0, k)).epsilon(1e-6));
  }
}

TEST_CASE("projection residual lower bound") {
  // k = 1 has the closed form |z - w| / sqrt(2).
  for (double th : {-1.2, 0.0, 0.7}) {
    const double hat[] = {0.25};
    const BoundCheckReport r = check_residual_lower_bound(th, hat);
    const double chord = std::abs(std::polar(1.0, th) - std::polar(1.0, 0.25));
    CHECK(r.lhs == doctest::Approx(chord / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(chord / 2));
    CHECK(r.holds);
  }
  // Chord inequality |e^{ia} - e^{ib}| >= (2/pi)|a - b| on [-pi/2, pi/2].
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double a = uniform(rng, -kPi / 2, kPi / 2), b = uniform(rng, -kPi / 2, kPi / 2);
    CHECK(std::abs(std::polar(1.0, a) - std::polar(1.0, b)) >= 2 / kPi * std::abs(a - b) - 1e-15);
  }
  // Residual against the angular distance form.
  for (int i = 0; i < 50; ++i) {
    const int k = 1 + i % 4;
    std::vector<double> hats;
    for (int j = 0; j < k; ++j) hats.push_back(uniform(rng, -1.5, 1.5));
    const double th = uniform(rng, -1.5, 1.5);
    const BoundCheckReport r = check_residual_lower_bound(th, hats);
    double angular = 1.0;
    for (double h : hats) angular *= std::abs(th - h) / kPi;
    CHECK(r.holds);
    CHECK(r.lhs >= angular - 1e-12);
  }
  const double same[] = {0.2, 0.2};
  check_error([&] { (void)check_residual_lower_bound(0.0, same); }, ErrorCode::RankDeficient);
}

TEST_CASE("nonlinear approximation bound") {
  const NodeConfig cfg({-0.4, 0.0, 0.4});
  const cplx a[] = {1.0, cplx(0, -1), 2.0};
  const BoundCheckReport r = check_nonlinear_approx_bound(cfg, a, 20, 9);
  CHECK(r.holds);
  CHECK(r.params.at("m_min") == 1.0);
  CHECK(r.rhs == doctest::Approx(zeta(3) * xi(2) * std::pow(0.4 / kPi, 4)));
  CHECK(r.lhs > 0.0);
  check_error([&] { (void)check_nonlinear_approx_bound(NodeConfig({0.0}), std::span<const cplx>(a, 1), 5, 1); },
              ErrorCode::InvalidArgument);
}

TEST_CASE("eta stability matching is unique and within bound") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 5;
    const double gap = 2.8 / k;
    std::vector<double> t;
    for (int j = 0; j < k; ++j) t.push_back(-1.4 + j * gap + uniform(rng, 0, 0.1 * gap));
    const NodeConfig cfg(t);
    std::vector<double> hats;
    for (double v : t) hats.push_back(v + uniform(rng, -1e-4, 1e-4));
    std::shuffle(hats.begin(), hats.end(), rng);
    const double eps = eta_inf(t, hats) * (1 + 1e-9);
    const EtaStabilityReport r = check_eta_stability(cfg, hats, eps);
    REQUIRE(r.matching_found);
    CHECK(r.holds);

    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    int valid = 0;
    do {
      bool ok = true;
      for (int j = 0; j < k; ++j)
        ok = ok && std::abs(hats[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] -
                            t[static_cast<std::size_t>(j)]) < cfg.theta_min() / 2;
      if (ok) {
        ++valid;
        CHECK(perm == r.matching);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid == 1);
  }
}

TEST_CASE("eta stability preconditions") {
  const NodeConfig cfg({-0.5, 0.5});
  const double near[] = {-0.5001, 0.5001};
  const double e = eta_inf(cfg.thetas(), {near[0], near[1]});
  CHECK_NOTHROW((void)check_eta_stability(cfg, near, 2 * e));
  check_error([&] { (void)check_eta_stability(cfg, near, e); }, ErrorCode::PreconditionUnmet);
  check_error([&] { (void)check_eta_stability(cfg, near, 1.0); }, ErrorCode::PreconditionUnmet);
  const double outside[] = {-0.5, 1.6};
  check_error([&] { (void)check_eta_stability(cfg, outside, 10.0); }, ErrorCode::PreconditionUnmet);
  check_error([&] { (void)check_eta_stability(NodeConfig({0.0}), std::span<const double>(near, 1), 1.0); },
              ErrorCode::InvalidArgument);
}

TEST_CASE("node error from data misfit") {
  const NodeConfig cfg({-0.6, 0.1, 0.7});
  const cplx a[] = {1.0, -1.0, cplx(0, 2)};
  const double exact[] = {-0.6, 0.1, 0.7};
  const BoundCheckReport zero = check_theorem_3_12(cfg, a, exact, a);
  CHECK(zero.lhs == doctest::Approx(0.0));
  CHECK(zero.params.at("sigma") == doctest::Approx(0.0));
  CHECK(zero.holds);

  const double moved[] = {-0.59, 0.1, 0.71};
  const BoundCheckReport r = check_theorem_3_12(cfg, a, moved, a);
  CHECK(r.holds);
  CHECK(r.lhs > 0.0);
  CHECK(r.rhs == doctest::Approx(8 * kPi * kPi * r.params.at("sigma") / (zeta(3) * std::pow(0.6, 2) * 1.0)));
}

TEST_CASE("appendix inequalities") {
  const auto reports = check_appendix_inequalities(2, 30);
  CHECK(reports.size() == 145);
  for (const auto& r : reports) CHECK_MESSAGE(r.holds, r.check, " n=", r.params.at("n"));

  const auto n2 = check_appendix_inequalities(2, 2);
  // zeta(2) = 1 and xi(1) = 1/2.
  CHECK(n2[1].check == "lemma_7_2");
  CHECK(std::exp(n2[1].lhs) == doctest::Approx(2 * std::pow(3.0, 0.25)));
  CHECK(std::exp(n2[1].rhs) == doctest::Approx(4.4 * std::numbers::e / 3));
  CHECK(n2[4].check == "lemma_7_5");
  CHECK(std::exp(n2[4].lhs) == doctest::Approx(4 * std::sqrt(3.0)));
  CHECK(std::exp(n2[4].rhs) == doctest::Approx(3 * std::numbers::e));

  for (const auto& r : check_stirling_sandwich(1, 170)) CHECK(r.holds);
  check_error([] { (void)check_appendix_inequalities(1, 5); }, ErrorCode::InvalidArgument);
}

TEST_CASE("randomized sweeps hold and are deterministic") {
  const auto runs = {sweep_residual_lower_bound(60, 1), sweep_min_eta(12, 2), sweep_nonlinear_approx(6, 3),
                     sweep_theorem_3_12(40, 4), sweep_eta_stability(40, 5)};
  for (const auto& batch : runs)
    for (const auto& r : batch) CHECK_MESSAGE(r.holds, r.check, " ", r.config);
  const auto a = sweep_theorem_3_12(10, 11);
  const auto b = sweep_theorem_3_12(10, 11);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].config == b[i].config);
  }
}
