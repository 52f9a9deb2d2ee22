#include <cmath>
#include <random>

#include "doctest.h"
#include "gardner/problems.hpp"
#include "oracles.hpp"

using namespace gardner;

TEST_SUITE("problems") {

TEST_CASE("pulse values and peak") {
    CHECK(exact_pulse(5.0, 0.0) ==
          doctest::Approx(2.0 / (12.0 + 3.0 * std::sqrt(14.0))).epsilon(1e-14));
    CHECK(exact_pulse(5.0, 0.0) == doctest::Approx(0.0861).epsilon(1e-3));
    CHECK(std::abs(exact_pulse(300.0, 1.0)) < 1e-40);
    CHECK(std::abs(exact_pulse(-300.0, 1.0)) < 1e-40);
    // peak rides at x = 5 + t/9
    for (double t : {0.0, 2.5, 5.0}) {
        const double xp = 5.0 + t / 9.0;
        CHECK(std::abs(exact_pulse_dx(xp, t)) <= 1e-14);
        CHECK(exact_pulse(xp, t) > exact_pulse(xp + 0.3, t));
        CHECK(exact_pulse(xp, t) > exact_pulse(xp - 0.3, t));
    }
}

TEST_CASE("kink values and limits") {
    CHECK(exact_kink(0.0, 0.0) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(exact_kink(12.0 / 30.0, 12.0) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(exact_kink(-1e6, 3.0) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(exact_kink(1e6, 3.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("kink translation identity") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> xs(-50.0, 50.0), ts(0.0, 12.0), sh(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double x = xs(rng), t = ts(rng), s = sh(rng);
        CHECK(exact_kink(x + s, t + 30.0 * s) == doctest::Approx(exact_kink(x, t)).epsilon(1e-9));
    }
}

TEST_CASE("generation pulse height and symmetry") {
    CHECK(generation_initial(5.0) ==
          doctest::Approx((10.0 / 3.0) / (4.0 + std::sqrt(14.0))).epsilon(1e-14));
    CHECK(generation_initial(5.0) == doctest::Approx(0.4305).epsilon(2e-4));
    CHECK(std::abs(generation_initial_dx(5.0)) <= 1e-14);
    CHECK(generation_initial(5.0 + 1.3) == doctest::Approx(generation_initial(5.0 - 1.3)).epsilon(1e-13));
    CHECK(std::abs(generation_initial(-300.0)) < 1e-40);
    CHECK(std::abs(generation_initial(300.0)) < 1e-40);
}

TEST_CASE("closed forms satisfy the equation") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> xs(-5.0, 15.0), ts(0.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double r = oracle::gardner_residual(exact_pulse, 4.0, -3.0, 1.0, xs(rng), ts(rng));
        CHECK(std::abs(r) <= 1e-6);
    }
    std::uniform_real_distribution<double> xk(-20.0, 20.0), tk(0.0, 12.0);
    for (int i = 0; i < 100; ++i) {
        const double r = oracle::gardner_residual(exact_kink, 1.0, -5.0, 1.0, xk(rng), tk(rng));
        CHECK(std::abs(r) <= 1e-6);
    }
}

TEST_CASE("analytic profile derivatives match finite differences") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> xs(-10.0, 20.0);
    for (int i = 0; i < 50; ++i) {
        const double x = xs(rng);
        CHECK(exact_pulse_dx(x, 1.0) ==
              doctest::Approx(oracle::fd_first([&](double xx) { return exact_pulse(xx, 1.0); }, x,
                                               1e-4))
                  .epsilon(1e-8));
        CHECK(exact_kink_dx(x, 2.0) ==
              doctest::Approx(oracle::fd_first([&](double xx) { return exact_kink(xx, 2.0); }, x,
                                               1e-4))
                  .epsilon(1e-8));
        CHECK(generation_initial_dx(x) ==
              doctest::Approx(oracle::fd_first(generation_initial, x, 1e-4)).epsilon(1e-8));
    }
}

TEST_CASE("presets carry the experiment definitions") {
    const ExperimentPreset pulse = preset("pulse");
    CHECK(pulse.params.mu1 == 4.0);
    CHECK(pulse.params.mu2 == -3.0);
    CHECK(pulse.params.mu3 == 1.0);
    CHECK(pulse.grid.a == -20.0);
    CHECK(pulse.grid.b == 30.0);
    CHECK(pulse.dt == 0.1);
    CHECK(pulse.t_end == 5.0);
    CHECK(bool(pulse.exact));
    CHECK(pulse.initial.f(1.5) == doctest::Approx(exact_pulse(1.5, 0.0)).epsilon(1e-15));

    const ExperimentPreset kink = preset("kink");
    CHECK(kink.params.mu1 == 1.0);
    CHECK(kink.params.mu2 == -5.0);
    CHECK(kink.grid.a == -80.0);
    CHECK(kink.grid.b == 80.0);
    CHECK(kink.t_end == 12.0);

    const ExperimentPreset gen = preset("generation");
    CHECK(gen.params.mu1 == 10.0);
    CHECK(gen.params.mu2 == -3.0);
    CHECK(gen.grid.n_intervals == 400);
    CHECK(gen.dt == 0.01);
    CHECK(gen.t_end == 15.0);
    CHECK(gen.params.epsilon == 0.0);
    CHECK_FALSE(bool(gen.exact));

    CHECK_THROWS_AS(preset("unknown"), std::invalid_argument);
}

}  // TEST_SUITE
