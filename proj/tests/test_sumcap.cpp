#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pimac/bounds.hpp"
#include "pimac/errors.hpp"
#include "pimac/sumcap.hpp"

using namespace pimac;

namespace {

// A feasible genie drawn uniformly over the (rho, eta) box.
Genie random_genie(fixtures::Draws& draws) {
  Genie g;
  g.rho1 = draws.uniform(-0.95, 0.95);
  g.rho2 = draws.uniform(-0.95, 0.95);
  g.eta1 = draws.uniform(0.05, 1.0) * std::sqrt(1 - g.rho2 * g.rho2);
  g.eta2 = draws.uniform(0.05, 1.0) * std::sqrt(1 - g.rho1 * g.rho1);
  return g;
}

GenieSearchConfig coarse() {
  GenieSearchConfig c;
  c.grid_points = 9;
  c.max_refine_evaluations = 2000;
  return c;
}

}  // namespace

TEST_CASE("genie_objective against the scalar closed form") {
  fixtures::Draws draws(41);
  for (int i = 0; i < 2000; ++i) {
    const ChannelParams p = draws.unconstrained();
    const Genie g = random_genie(draws);
    const auto [t1, t2] = oracle::genie_terms(p, g.rho1, g.rho2, g.eta1, g.eta2);
    CHECK(genie_objective(p, g) == doctest::Approx(t1 + t2).epsilon(1e-10));
  }
}

TEST_CASE("genie_objective special cases") {
  SUBCASE("silent MAC users contribute nothing at receiver 1") {
    const ChannelParams p{0, 0, 10, 0.3, 0.4, 0.5};
    const Genie g{0.2, -0.1, 0.8, 0.9};
    const auto [t1, t2] = oracle::genie_terms(p, g.rho1, g.rho2, g.eta1, g.eta2);
    CHECK(std::abs(t1) <= 1e-12);
    CHECK(genie_objective(p, g) == doctest::Approx(t2).epsilon(1e-12));
  }
  SUBCASE("no cross links: the genie signals are pure noise") {
    const ChannelParams p{4, 6, 9, 0, 0, 0};
    CHECK(genie_objective(p, Genie{0, 0, 1, 1}) == doctest::Approx(oracle::cap(10) + oracle::cap(9)).epsilon(1e-14));
  }
  SUBCASE("eta = 0 with nothing to reveal drops the genie") {
    const ChannelParams p{4, 6, 9, 0, 0, 0};
    CHECK(genie_objective(p, Genie{0.5, 0.5, 0, 0}) == doctest::Approx(oracle::cap(10) + oracle::cap(9)).epsilon(1e-14));
  }
  SUBCASE("noiseless genie of a live signal diverges") {
    CHECK(std::isinf(genie_objective(fixtures::weak(), Genie{0, 0, 0, 1})));
  }
  SUBCASE("invalid genies") {
    CHECK_THROWS_AS(genie_objective(fixtures::weak(), Genie{0.8, 0.8, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(genie_objective(fixtures::weak(), Genie{1.2, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(genie_objective(fixtures::weak(), Genie{1, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(genie_objective(fixtures::weak(), Genie{0, 0, -0.5, 0.5}), std::domain_error);
    CHECK_THROWS_AS(genie_objective(ChannelParams{-1, 1, 1, 0, 0, 0}, Genie{}), std::domain_error);
  }
}

TEST_CASE("genie_objective agrees with a Monte Carlo estimate") {
  fixtures::Draws draws(42);
  const ChannelParams p = fixtures::weak();
  for (int i = 0; i < 3; ++i) {
    const Genie g = random_genie(draws);
    const auto [m1, m2] = oracle::monte_carlo_genie_terms(p, g.rho1, g.rho2, g.eta1, g.eta2, 200000, 100 + i);
    CHECK(std::abs(genie_objective(p, g) - (m1 + m2)) <= 0.02);
  }
}

TEST_CASE("genie_upper_bound") {
  SUBCASE("matches a dense grid search") {
    const ChannelParams p = fixtures::weak();
    const GeniePoint best = genie_upper_bound(p);
    CHECK(best.genie.feasible());
    CHECK(best.value == doctest::Approx(genie_objective(p, best.genie)).epsilon(1e-14));
    const double dense = oracle::dense_grid_genie_min(p, 0.01);
    CHECK(best.value <= dense + 1e-9);
    CHECK(best.value >= dense - 0.05);
  }
  SUBCASE("zero powers give a zero bound") {
    CHECK(genie_upper_bound(ChannelParams{0, 0, 0, 0.3, 0.2, 0.1}).value == doctest::Approx(0.0).scale(1));
  }
  SUBCASE("a finer grid never loses") {
    fixtures::Draws draws(43);
    GenieSearchConfig grid_only = coarse();
    grid_only.max_refine_evaluations = 0;
    GenieSearchConfig fine = grid_only;
    fine.grid_points = 17;  // contains every node of the 9-point grid
    for (int i = 0; i < 20; ++i) {
      const ChannelParams p = draws.weak_interference();
      const double base = genie_upper_bound(p, grid_only).value;
      CHECK(genie_upper_bound(p, fine).value <= base + 1e-12);
      CHECK(genie_upper_bound(p, coarse()).value <= base + 1e-12);
    }
  }
  SUBCASE("config validation") {
    GenieSearchConfig bad;
    bad.grid_points = 1;
    CHECK_THROWS_AS(genie_upper_bound(fixtures::weak(), bad), std::domain_error);
  }
}

TEST_CASE("tin_lower_bound") {
  CHECK(tin_lower_bound(fixtures::weak()) == doctest::Approx(oracle::cap(20 / 1.4) + oracle::cap(10 / 1.5)));
  CHECK(tin_lower_bound(fixtures::weak()) == doctest::Approx(3.4363558).epsilon(1e-7));
  CHECK(tin_lower_bound(ChannelParams{4, 6, 9, 0, 0, 0}) == doctest::Approx(oracle::cap(10) + oracle::cap(9)));
  CHECK(tin_lower_bound(ChannelParams{4, 6, 0, 0.5, 0.5, 0.5}) == doctest::Approx(oracle::cap(10)));
}

TEST_CASE("tin_lower_bound decreases as interference grows") {
  fixtures::Draws draws(44);
  for (int i = 0; i < 1000; ++i) {
    ChannelParams p = draws.weak_interference();
    const double before = tin_lower_bound(p);
    p.h31 *= 1.5;
    p.h12 *= 1.5;
    CHECK(tin_lower_bound(p) <= before + 1e-12);
  }
}

TEST_CASE("sumcap_bracket") {
  SUBCASE("strong fixture: both region sums meet at the sum capacity") {
    const SumCapBracket b = sumcap_bracket(fixtures::strong(), coarse());
    CHECK(b.lower == doctest::Approx(oracle::cap(36.9)).epsilon(1e-12));
    CHECK(b.upper == doctest::Approx(oracle::cap(36.9)).epsilon(1e-12));
    CHECK(b.lower_source == LowerSource::inner_bound);
    CHECK(b.upper_source == UpperSource::outer_region);
    CHECK(std::abs(b.gap()) <= 1e-9);
  }
  SUBCASE("weak fixture leaves a positive gap") {
    const SumCapBracket b = sumcap_bracket(fixtures::weak());
    CHECK(b.gap() > 0);
    CHECK(b.lower_source == LowerSource::tin);
    CHECK(b.upper_source == UpperSource::genie);
    CHECK(b.lower == b.tin);
    CHECK(b.upper == b.genie.value);
  }
  SUBCASE("all powers zero") {
    const SumCapBracket b = sumcap_bracket(ChannelParams{0, 0, 0, 0.5, 0.5, 0.5}, coarse());
    CHECK(b.lower == 0.0);
    CHECK(b.upper == doctest::Approx(0.0).scale(1));
  }
  CHECK(to_string(LowerSource::tin) == "TIN");
  CHECK(to_string(LowerSource::inner_bound) == "INNER_BOUND");
  CHECK(to_string(UpperSource::genie) == "GENIE");
  CHECK(to_string(UpperSource::outer_region) == "OUTER_REGION");
}

TEST_CASE("bracket is ordered on random channels") {
  fixtures::Draws draws(45);
  for (int i = 0; i < 60; ++i) {
    const ChannelParams p = i % 2 ? draws.unconstrained() : draws.weak_interference();
    SumCapBracket b;
    REQUIRE_NOTHROW(b = sumcap_bracket(p, coarse()));
    CHECK(b.lower <= b.upper + kBracketTol);
    CHECK(b.lower >= b.tin);
    CHECK(b.lower >= b.inner_sum);
    CHECK(b.upper <= b.genie.value);
    CHECK(b.upper <= b.outer_sum);
  }
}

TEST_CASE("noisy-interference channel: genie meets TIN") {
  const ChannelParams p{10, 10, 10, 0.05, 0.05, 0.05};
  const SumCapBracket b = sumcap_bracket(p);
  CHECK(b.gap() <= 1e-3);
  CHECK(b.genie.value - b.tin <= 1e-3);
}

TEST_CASE("bracket varies continuously across a regime boundary") {
  // h12^2 = 1 switches the MAC13 family of the outer bound on.
  ChannelParams lo = fixtures::strong(), hi = fixtures::strong();
  lo.h12 = 1 - 1e-9;
  hi.h12 = 1 + 1e-9;
  const SumCapBracket a = sumcap_bracket(lo, coarse()), b = sumcap_bracket(hi, coarse());
  CHECK(std::abs(a.lower - b.lower) <= 1e-6);
  CHECK(std::abs(a.upper - b.upper) <= 1e-6);
}

TEST_CASE("snr_grid") {
  const auto g = snr_grid(0, 40, 5);
  REQUIRE(g.size() == 9);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 40.0);
  CHECK(snr_grid(0, 1, 0.1).size() == 11);
  CHECK(snr_grid(3, 3, 1).size() == 1);
  CHECK_THROWS_AS(snr_grid(0, 10, 0), std::domain_error);
  CHECK_THROWS_AS(snr_grid(0, 10, -1), std::domain_error);
  CHECK_THROWS_AS(snr_grid(10, 0, 1), std::domain_error);
  CHECK_THROWS_AS(snr_grid(0, NAN, 1), std::domain_error);
}

TEST_CASE("snr_sweep") {
  const std::vector<double> grid{0, 10, 20};
  const auto rows = snr_sweep(fixtures::weak(), grid, coarse());
  REQUIRE(rows.size() == 3);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].snr_db == grid[k]);
    const double P = std::pow(10.0, grid[k] / 10);
    const SumCapBracket direct = sumcap_bracket(fixtures::weak(P), coarse());
    CHECK(rows[k].bracket.lower == doctest::Approx(direct.lower).epsilon(1e-14));
    CHECK(rows[k].bracket.upper == doctest::Approx(direct.upper).epsilon(1e-14));
  }
  CHECK(rows[1].bracket.tin == doctest::Approx(3.4363558).epsilon(1e-7));
  CHECK_THROWS_AS(snr_sweep(fixtures::weak(), std::vector<double>{}), std::domain_error);
}
