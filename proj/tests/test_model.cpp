#include "hchain/config.hpp"
#include "hchain/model.hpp"
#include "hchain/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace hchain;
using std::numbers::pi;

TEST_CASE("simpson and integrate_abs against closed forms") {
  CHECK(simpson([](double x) { return x * x; }, 0.0, 1.0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(integrate_abs([](double x) { return std::sin(pi * x); }, 0.0, 1.0) == doctest::Approx(2.0 / pi).epsilon(1e-12));
  CHECK(integrate_abs([](double x) { return std::sin(2 * pi * x); }, 0.0, 1.0) ==
        doctest::Approx(2.0 / pi).epsilon(1e-12));
  CHECK(integrate_abs([](double x) { return x - 0.3; }, 0.0, 1.0) == doctest::Approx(0.29).epsilon(1e-12));
}

TEST_CASE("equilibrium profile has zero alpha and beta") {
  const Profile p = build_profile_sine({}, 0.0);
  CHECK(p.X(0.37) == 1.0);
  CHECK(p.V(0.37) == 0.0);
  CHECK(p.alpha() == 0.0);
  CHECK(p.beta() == 0.0);
}

TEST_CASE("single sine mode: alpha = 0.02 pi") {
  const Profile p = build_profile_sine({{1, 1.0}}, 0.01);
  CHECK(p.X(0.5) == doctest::Approx(1.01).epsilon(1e-15));
  CHECK(p.alpha() == doctest::Approx(0.02 * pi).epsilon(1e-10));
  CHECK(p.beta() == 0.0);
  const auto [alpha, beta] = compute_alpha_beta(p);
  CHECK(alpha == doctest::Approx(p.alpha()).epsilon(1e-14));
  CHECK(beta == 0.0);
}

TEST_CASE("closed-form velocity profile: beta = 0.08 pi") {
  const double w = 2 * pi;
  const Profile p = Profile::closed_form({
      [](double) { return 1.0; },
      [](double) { return 0.0; },
      [](double) { return 0.0; },
      [w](double x) { return 0.01 * std::sin(w * x); },
      [w](double x) { return 0.01 * w * std::cos(w * x); },
      [w](double x) { return -0.01 * w * w * std::sin(w * x); },
      {},
  });
  CHECK(p.alpha() == 0.0);
  CHECK(p.beta() == doctest::Approx(0.01 * 4 * pi * pi * (2 / pi)).epsilon(1e-10));
}

TEST_CASE("closed-form profile must satisfy the boundary data") {
  auto bad = [] {
    return Profile::closed_form({[](double x) { return 1.0 + 0.1 * x; }, [](double) { return 0.1; },
                                 [](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; },
                                 [](double) { return 0.0; }, {}});
  };
  CHECK_THROWS_AS(bad(), ModelError);
}

TEST_CASE("ChainParams derived quantities") {
  const Profile p = build_profile_sine({{1, 1.0}}, 0.01);
  const auto params = ChainParams::create(50, 2.0, 0.0, kDefaultR, p);
  CHECK(params.omega() == 100.0);
  CHECK(params.a() == 1.0 / 50);
  CHECK(params.a1() == doctest::Approx(1.0 / 150));
  CHECK(params.gamma() == doctest::Approx(2 * 0.02 * pi).epsilon(1e-10));

  const auto unscaled = ChainParams::create(50, 2.0, 0.0, kDefaultR, p, Admissibility::general_potential,
                                            OmegaScaling::unscaled);
  CHECK(unscaled.omega() == 2.0);
  CHECK(unscaled.gamma() == doctest::Approx(params.gamma()).epsilon(1e-15));
}

TEST_CASE("ChainParams admissibility boundary (property sweep)") {
  for (double r : {0.1, 1.0 / 3.0, 0.5, 0.8}) {
    const double limit = ChainParams::gamma_limit(r, Admissibility::general_potential);
    CHECK(limit == doctest::Approx(std::min(r, (1 - r) / 2)));
    for (double frac : {0.0, 0.5, 0.99, 1.0, 1.5}) {
      const double alpha = 0.5 * frac * limit;
      if (frac < 1.0) {
        CHECK_NOTHROW(ChainParams::create(10, 1.0, 0.0, r, alpha, 0.0));
      } else {
        CHECK_THROWS_AS(ChainParams::create(10, 1.0, 0.0, r, alpha, 0.0), ModelError);
      }
    }
  }
  CHECK_NOTHROW(ChainParams::create(10, 1.0, 0.0, kDefaultR, 0.25, 0.0, Admissibility::quadratic_chain));
  CHECK_THROWS_AS(ChainParams::create(10, 1.0, 0.0, kDefaultR, 0.5, 0.0, Admissibility::quadratic_chain), ModelError);
  CHECK_THROWS_AS(ChainParams::create(1, 1.0, 0.0, kDefaultR, 0.0, 0.0), ModelError);
  CHECK_THROWS_AS(ChainParams::create(10, -1.0, 0.0, kDefaultR, 0.0, 0.0), ModelError);
  CHECK_THROWS_AS(ChainParams::create(10, 1.0, 0.0, 0.0, 0.0, 0.0), ModelError);
}

TEST_CASE("initial state examples") {
  const Profile eq = build_profile_sine({}, 0.0);
  {
    const auto params = ChainParams::create(4, 1.0, 0.0, kDefaultR, eq);
    const ChainState s = build_initial_state(params, eq);
    CHECK(s.t == 0.0);
    for (int k = 0; k < 4; ++k) {
      CHECK(s.x[k] == doctest::Approx(0.25 * k).epsilon(1e-15));
      CHECK(s.vel[k] == 0.0);
    }
  }
  {
    const auto params = ChainParams::create(2, 1.0, 2.0, kDefaultR, eq);
    const ChainState s = build_initial_state(params, eq);
    CHECK(s.x[0] == 0.0);
    CHECK(s.x[1] == doctest::Approx(0.5));
    CHECK(s.vel[0] == 2.0);
    CHECK(s.vel[1] == 2.0);
  }
  {
    const Profile p = build_profile_sine({{1, 1.0}}, 0.01);
    const auto params = ChainParams::create(3, 1.0, 0.0, kDefaultR, p);
    const ChainState s = build_initial_state(params, p);
    CHECK(s.x[1] - s.x[0] == doctest::Approx((1 + 0.01 * std::sqrt(3.0) / 2) / 3).epsilon(1e-14));
    CHECK(s.x[1] - s.x[0] == doctest::Approx(0.3362202).epsilon(1e-7));
  }
}

TEST_CASE("random Fourier profile: gamma equals theta and draws are reproducible") {
  const Profile p = random_fourier_profile(42, 0.5);
  CHECK(p.alpha() == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(p.beta() == 0.0);
  REQUIRE(p.origin().has_value());
  CHECK(p.origin()->seed == 42);
  CHECK(p.origin()->generator == kGeneratorId);
  CHECK(p.x_modes().size() == 97);
  CHECK(p.x_modes().begin()->first == 4);
  CHECK(p.x_modes().rbegin()->first == 100);

  const auto d1 = uniform_draws(7, 100), d2 = uniform_draws(7, 100), d3 = uniform_draws(8, 100);
  CHECK(d1 == d2);
  CHECK(d1 != d3);
  for (double u : d1) {
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sup |X - 1| <= alpha for seeded profiles (property)") {
  CHECK_FALSE(profile_bounds_check(build_profile_sine({}, 0.0)).violated);
  const auto single = profile_bounds_check(build_profile_sine({{1, 1.0}}, 0.01));
  CHECK(single.sup_deviation == doctest::Approx(0.01).epsilon(1e-8));
  CHECK_FALSE(single.violated);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto rep = profile_bounds_check(random_fourier_profile(seed, 0.9));
    CHECK_FALSE(rep.violated);
    CHECK(rep.sup_deviation <= rep.alpha);
  }
}

TEST_CASE("pair potential: plateau, well and core") {
  const PairPotential pot(0.1, 0.03);
  CHECK(pot.cutoff() == doctest::Approx(0.13));
  CHECK(pot.derivative(0.1) == 0.0);
  CHECK(pot.derivative(0.13) == 0.0);
  CHECK(pot.derivative(0.5) == 0.0);
  CHECK(pot.derivative(0.11) == doctest::Approx(0.02));
  CHECK(pot.derivative(0.05) < 0.0);  // repulsive core
  const PairPotential bare = PairPotential::without_core(0.1, 0.03);
  CHECK_FALSE(bare.has_core());
  CHECK_THROWS_AS(bare.derivative(0.05), ModelError);
}

TEST_CASE("profile file round trip") {
  const Profile p = random_fourier_profile(3, 0.4, 4, 12);
  std::stringstream buf;
  write_profile(buf, p);
  const Profile q = read_profile(buf);
  CHECK(q.x_modes() == p.x_modes());
  CHECK(q.epsilon() == p.epsilon());
  CHECK(q.alpha() == p.alpha());
  REQUIRE(q.origin().has_value());
  CHECK(q.origin()->seed == 3);
  CHECK(q.origin()->theta == 0.4);
}

TEST_CASE("config parsing") {
  const Config cfg = Config::parse_string("# comment\nN = 64\nomega_prime=1.5\nmode 4 = 0.25\nN_list = 1, 2,3\n");
  CHECK(cfg.get_int("N") == 64);
  CHECK(cfg.get_double("omega_prime") == 1.5);
  CHECK(cfg.get_double("T", 7.0) == 7.0);
  CHECK(cfg.indexed("mode").at(4) == 0.25);
  CHECK(cfg.get_int_list("N_list", {}) == std::vector<int>{1, 2, 3});
  try {
    cfg.require("seed");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("seed") != std::string::npos);
  }
  CHECK_THROWS_AS(Config::parse_string("N = abc\n").get_int("N"), ConfigError);
}
