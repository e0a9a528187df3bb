#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "gtn/analysis.hpp"

using namespace gtn;
using gtn::testing::Rng;
using R = ReducedStateId;
using P = ScenarioParams<double>;

TEST_CASE("critical_temperature: examples")
{
  const auto half = critical_temperature(0.5, 1.0);
  REQUIRE(half.has_value());
  CHECK(half->closed_form == doctest::Approx(1.134592657106511).epsilon(1e-13));
  CHECK(std::abs(half->bisection - half->closed_form) <= 1e-6);

  const auto sixth = critical_temperature(1.0 / 6.0, 1.0);
  REQUIRE(sixth.has_value());
  CHECK(sixth->closed_form == doctest::Approx(0.3428110595029473).epsilon(1e-13));
  CHECK(std::abs(sixth->bisection - sixth->closed_form) <= 1e-6);

  CHECK_FALSE(critical_temperature(0.1, 1.0).has_value());
  CHECK_FALSE(critical_temperature_closed_form(0.9, 1.0).has_value());

  CHECK_THROWS_AS(critical_temperature(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(critical_temperature(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(critical_temperature_closed_form(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("critical_temperature: scales with omega, symmetric in alpha^2 (property)")
{
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const double a2 = gtn::testing::uniform(rng, 0.16, 0.84);
    const double omega = gtn::testing::log_uniform(rng, 0.1, 10.0);
    const auto base = critical_temperature_closed_form(a2, 1.0);
    const auto scaled = critical_temperature_closed_form(a2, omega);
    const auto mirrored = critical_temperature_closed_form(1.0 - a2, 1.0);
    REQUIRE(base.has_value());
    REQUIRE(scaled.has_value());
    REQUIRE(mirrored.has_value());
    CHECK(*scaled == doctest::Approx(omega * *base).epsilon(1e-12));
    CHECK(*mirrored == doctest::Approx(*base).epsilon(1e-12));
  }
}

TEST_CASE("critical_temperature: S equals 4 there and crosses once (property)")
{
  Rng rng(32);
  const auto grid = log_grid(1e-3, 1e3, 400);
  for (int trial = 0; trial < 50; ++trial) {
    const double a2 = gtn::testing::uniform(rng, 0.16, 0.84);
    const auto tc = critical_temperature(a2, 1.0);
    REQUIRE(tc.has_value());
    CHECK(svetlichny_closed_form(P::from_alpha_sq(a2, 1.0, tc->closed_form), R::A_BI_CI) ==
          doctest::Approx(4.0).epsilon(1e-12));
    std::vector<double> s;
    for (double t : grid) s.push_back(svetlichny_closed_form(P::from_alpha_sq(a2, 1.0, t), R::A_BI_CI));
    CHECK(count_crossings(s, 4.0) == 1);
  }
}

TEST_CASE("sudden death threshold")
{
  const double th = sudden_death_alpha_sq_threshold();
  CHECK(th == doctest::Approx(0.1464466094067262).epsilon(1e-15));
  CHECK_FALSE(critical_temperature_closed_form(th - 1e-6, 1.0).has_value());
  CHECK(critical_temperature_closed_form(th + 1e-6, 1.0).has_value());
  CHECK_FALSE(critical_temperature_closed_form(1.0 - th + 1e-6, 1.0).has_value());

  const auto grid = linear_grid(0.01, 0.99, 99);
  const auto scan = sudden_death_scan(1.0, grid);
  REQUIRE(scan.size() == grid.size());
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const auto& mirror = scan[scan.size() - 1 - i];
    CHECK(scan[i].critical_temperature.has_value() == mirror.critical_temperature.has_value());
    if (scan[i].critical_temperature && mirror.critical_temperature)
      CHECK(*scan[i].critical_temperature == doctest::Approx(*mirror.critical_temperature).epsilon(1e-9));
    const bool inside = scan[i].alpha_sq > th && scan[i].alpha_sq < 1.0 - th;
    CHECK(scan[i].critical_temperature.has_value() == inside);
  }
}

TEST_CASE("check_monogamy: values at alpha^2 = 1/2, T = 1")
{
  const auto m = check_monogamy(P::from_alpha_sq(0.5, 1.0, 1.0));
  CHECK(m.gte_sum.lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m.gte_sum.passed);
  CHECK(m.gte_square_sum.lhs == doctest::Approx(0.5344466453885230 + 2 * 0.1966119332414819 + 0.07232948812851327)
                                    .epsilon(1e-13));
  CHECK(m.gte_square_sum.passed);
  CHECK(m.weighted_alpha4_rhs.lhs == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(m.weighted_alpha4_rhs.passed);
  CHECK(m.weighted_alpha2_rhs.rhs == doctest::Approx(1.0));
  CHECK(m.weighted_alpha2_mismatch());
  for (const auto& r : m.ckw) CHECK(r.passed);
  CHECK(m.ckw_labels[0] == std::array<std::string, 3>{"A", "B_I", "C_I"});
}

TEST_CASE("check_monogamy: identities hold everywhere (property)")
{
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = check_monogamy(gtn::testing::random_params(rng));
    CHECK(std::abs(m.gte_sum.residual) <= 1e-12);
    CHECK(std::abs(m.gte_square_sum.residual) <= 1e-12);
    CHECK(std::abs(m.weighted_alpha4_rhs.residual) <= 1e-12);
    for (const auto& r : m.ckw) CHECK(r.residual >= -1e-12);
  }
}

TEST_CASE("sweep_temperature: one record per point, in order")
{
  const auto grid = linear_grid(0.1, 3.0, 30);
  const auto rows = sweep_temperature(0.5, 1.0, grid);
  REQUIRE(rows.size() == 30);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].temperature == grid[i]);
    CHECK(rows[i].alpha_sq == 0.5);
    CHECK_FALSE(rows[i].svetlichny_bruteforce.has_value());
  }

  const std::vector<double> one{1.0};
  const auto bf = sweep_temperature(0.5, 1.0, one, BruteForceOptions{true, 8, 3});
  REQUIRE(bf[0].svetlichny_bruteforce.has_value());
  CHECK((*bf[0].svetlichny_bruteforce)[0] == doctest::Approx(4.135491827151).epsilon(1e-5));
}

TEST_CASE("sweep_temperature: grid validation")
{
  const std::vector<double> empty;
  const std::vector<double> zero{0.0, 1.0};
  const std::vector<double> backwards{2.0, 1.0};
  const std::vector<double> repeated{1.0, 1.0};
  CHECK_THROWS_AS(sweep_temperature(0.5, 1.0, empty), std::invalid_argument);
  CHECK_THROWS_AS(sweep_temperature(0.5, 1.0, zero), std::invalid_argument);
  CHECK_THROWS_AS(sweep_temperature(0.5, 1.0, backwards), std::invalid_argument);
  CHECK_THROWS_AS(sweep_temperature(0.5, 1.0, repeated), std::invalid_argument);
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(sweep_temperature(1.2, 1.0, one), std::invalid_argument);
}

TEST_CASE("sweep_alpha: endpoints and mirror symmetry")
{
  const auto grid = linear_grid(0.0, 1.0, 101);
  const auto rows = sweep_alpha(1.0, 1.0, grid);
  REQUIRE(rows.size() == 101);
  CHECK(rows[50].catalog.tri(R::A_BI_CI).svetlichny_closed == doctest::Approx(4.135491827151).epsilon(1e-12));
  for (auto id : {R::A_BI_CI, R::A_BI_CII, R::A_BII_CI, R::A_BII_CII}) {
    CHECK(rows.front().catalog.tri(id).gte_closed == 0.0);
    CHECK(rows.back().catalog.tri(id).gte_closed == 0.0);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(std::abs(rows[i].catalog.tri(R::A_BI_CI).gte_closed -
                   rows[rows.size() - 1 - i].catalog.tri(R::A_BI_CI).gte_closed) <= 1e-12);

  const std::vector<double> bad{-0.1, 0.5};
  CHECK_THROWS_AS(sweep_alpha(1.0, 1.0, bad), std::invalid_argument);
}

TEST_CASE("evaluate_point matches measures_catalog")
{
  const auto p = P::from_alpha_sq(0.3, 1.5, 0.8);
  const auto rec = evaluate_point(p);
  const auto cat = measures_catalog(p);
  CHECK(rec.temperature == 0.8);
  CHECK(rec.omega == 1.5);
  for (auto id : kTripartiteIds) CHECK(rec.catalog.tri(id).svetlichny_closed == cat.tri(id).svetlichny_closed);
}

TEST_CASE("grids")
{
  const auto lin = linear_grid(0.0, 1.0, 5);
  CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto lg = log_grid(1e-2, 1e2, 5);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 1e-2);
  CHECK(lg.back() == 1e2);
  CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(linear_grid(2.0, 2.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), std::invalid_argument);
}

TEST_CASE("check_monotone and count_crossings")
{
  const std::vector<double> up{0.0, 0.0, 0.1, 0.2};
  CHECK(check_monotone(up, Direction::Increasing, 0.0).ok);
  CHECK(check_monotone(up, Direction::Increasing, 0.0).plateau == 2);
  CHECK_FALSE(check_monotone(up, Direction::Increasing).ok);
  CHECK_FALSE(check_monotone(up, Direction::Decreasing, 0.0).ok);

  const std::vector<double> stall{1.0, 0.9, 0.9, 0.8};
  const auto r = check_monotone(stall, Direction::Decreasing, 1.0);
  CHECK_FALSE(r.ok);
  CHECK(r.violations == 1);

  const std::vector<double> wave{3.0, 5.0, 4.0, 3.0, 4.0, 4.0};
  CHECK(count_crossings(wave, 4.0) == 2);
  CHECK(count_crossings(wave, 10.0) == 0);
}
