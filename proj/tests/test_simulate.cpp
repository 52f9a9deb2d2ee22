#include <cmath>

#include "doctest.h"
#include "gardner/diagnostics.hpp"
#include "gardner/simulate.hpp"

using namespace gardner;

TEST_SUITE("simulate") {

TEST_CASE("step counting validates divisibility") {
    CHECK(required_steps(5.0, 0.1) == 50);
    CHECK(required_steps(1.0, 0.01) == 100);
    CHECK_THROWS_AS(required_steps(1.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(required_steps(-1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(required_steps(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("observer sees the initial state and every level") {
    ExperimentPreset p = preset("pulse");
    p.grid.n_intervals = 32;
    p.t_end = 0.5;
    SimulationSetup s = setup_from(p);
    int calls = 0;
    double last_time = -1.0;
    run_simulation(s, [&](const CoefficientState& st) {
        ++calls;
        CHECK(st.time > last_time);
        last_time = st.time;
    });
    CHECK(calls == 6);
    CHECK(last_time == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("linf_at_end equals a manual run") {
    ExperimentPreset p = preset("pulse");
    p.grid.n_intervals = 40;
    p.t_end = 1.0;
    const SimulationSetup s = setup_from(p);
    const auto final_state = run_simulation(s);
    CHECK(linf_at_end(s) ==
          doctest::Approx(linf_error(final_state, s.exact, s.grid, s.params.lambda))
              .epsilon(1e-14));
}

}  // TEST_SUITE
