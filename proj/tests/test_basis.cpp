#include <cmath>
#include <random>

#include "doctest.h"
#include "gardner/basis.hpp"

using namespace gardner;

TEST_SUITE("basis") {

TEST_CASE("classical weights at lambda = 0") {
    const NodalWeights w = nodal_weights(0.0, 1.0);
    CHECK(w.alpha1 == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(w.alpha2 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(w.beta1 == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(w.gamma1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.gamma2 == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("weights at lambda = 1, h = 0.5") {
    const NodalWeights w = nodal_weights(1.0, 0.5);
    CHECK(w.alpha1 == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    CHECK(w.alpha2 == doctest::Approx(3.0 / 4.0).epsilon(1e-15));
    CHECK(w.beta1 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(w.gamma1 == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(w.gamma2 == doctest::Approx(-12.0).epsilon(1e-15));
}

TEST_CASE("weight-sum identities over random lambda") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> lam(-1.0, 1.0);
    std::uniform_real_distribution<double> mesh(0.05, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const NodalWeights w = nodal_weights(lam(rng), mesh(rng));
        CHECK(2.0 * w.alpha1 + w.alpha2 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(2.0 * w.gamma1 + w.gamma2) <= 1e-12 * std::abs(w.gamma1));
    }
}

TEST_CASE("nonpositive mesh size rejected") {
    CHECK_THROWS_AS(nodal_weights(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(nodal_weights(0.0, -1.0), std::domain_error);
}

TEST_CASE("nodal values against the weight table") {
    const GridSpec grid{-2.0, 6.0, 8};
    for (double lambda : {-0.5, 0.0, 0.25, 0.9}) {
        const NodalWeights w = nodal_weights(lambda, grid.h());
        for (int j = 1; j <= 5; ++j) {
            CHECK(eval_basis(j, grid.node(j), grid, lambda, 0) ==
                  doctest::Approx(w.alpha2).epsilon(1e-13));
            CHECK(eval_basis(j, grid.node(j - 1), grid, lambda, 0) ==
                  doctest::Approx(w.alpha1).epsilon(1e-13));
            CHECK(eval_basis(j, grid.node(j + 1), grid, lambda, 0) ==
                  doctest::Approx(w.alpha1).epsilon(1e-13));
            CHECK(eval_basis(j, grid.node(j - 2), grid, lambda, 0) == 0.0);
            CHECK(eval_basis(j, grid.node(j + 2), grid, lambda, 0) ==
                  doctest::Approx(0.0).epsilon(1e-13));
            CHECK(eval_basis(j, grid.node(j - 1), grid, lambda, 1) ==
                  doctest::Approx(-w.beta1).epsilon(1e-13));
            CHECK(eval_basis(j, grid.node(j + 1), grid, lambda, 1) ==
                  doctest::Approx(w.beta1).epsilon(1e-13));
            CHECK(eval_basis(j, grid.node(j), grid, lambda, 2) ==
                  doctest::Approx(w.gamma2).epsilon(1e-12));
            CHECK(eval_basis(j, grid.node(j - 1), grid, lambda, 2) ==
                  doctest::Approx(w.gamma1).epsilon(1e-12));
        }
    }
}

TEST_CASE("second derivative at the center node, lambda 0 and unit mesh") {
    const GridSpec grid{0.0, 8.0, 8};
    CHECK(eval_basis(4, grid.node(4), grid, 0.0, 2) == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("zero outside the support") {
    const GridSpec grid{0.0, 10.0, 10};
    CHECK(eval_basis(5, grid.node(2), grid, 0.3, 0) == 0.0);
    CHECK(eval_basis(5, grid.node(8), grid, 0.3, 1) == 0.0);
    CHECK(eval_basis(-1, 9.0, grid, 0.3, 0) == 0.0);
}

TEST_CASE("derivative order above two is rejected") {
    const GridSpec grid{0.0, 10.0, 10};
    CHECK_THROWS_AS(eval_basis(3, 3.0, grid, 0.0, 3), std::invalid_argument);
}

TEST_CASE("C2 continuity at every interior knot") {
    const GridSpec grid{-1.0, 3.0, 8};
    for (double lambda : {-0.5, 0.0, 0.01, 0.5}) {
        for (int j = 0; j <= 8; ++j) {
            for (int knot = j - 2; knot <= j + 2; ++knot) {
                const double xk = grid.node(knot);
                if (xk <= grid.a || xk >= grid.b) continue;
                for (int order = 0; order <= 2; ++order) {
                    const double left =
                        eval_basis(j, std::nextafter(xk, -1e30), grid, lambda, order);
                    const double right = eval_basis(j, xk, grid, lambda, order);
                    CHECK(std::abs(left - right) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("finite differences match the analytic derivatives") {
    const GridSpec grid{0.0, 12.0, 12};
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> pos(0.05, 0.95);
    const double lambda = 0.37;
    const int j = 6;
    for (int trial = 0; trial < 50; ++trial) {
        // stay inside one branch so the third derivative jump cannot pollute
        const int branch = trial % 4;
        const double x = grid.node(j - 2 + branch) + pos(rng) * grid.h();
        const double step = 1e-5;
        if (std::abs(x - grid.node(j - 2 + branch)) < 2 * step ||
            std::abs(x - grid.node(j - 1 + branch)) < 2 * step)
            continue;
        const auto f = [&](double xx) { return eval_basis(j, xx, grid, lambda, 0); };
        const auto f1 = [&](double xx) { return eval_basis(j, xx, grid, lambda, 1); };
        const double d1 = (-f(x + 2 * step) + 8 * f(x + step) - 8 * f(x - step) + f(x - 2 * step)) /
                          (12 * step);
        const double d2 =
            (-f1(x + 2 * step) + 8 * f1(x + step) - 8 * f1(x - step) + f1(x - 2 * step)) /
            (12 * step);
        CHECK(d1 == doctest::Approx(eval_basis(j, x, grid, lambda, 1)).epsilon(1e-7));
        CHECK(d2 == doctest::Approx(eval_basis(j, x, grid, lambda, 2)).epsilon(1e-7));
    }
}

TEST_CASE("reconstruct of constant coefficients") {
    const GridSpec grid{-4.0, 4.0, 16};
    const double c = 2.75;
    std::vector<double> coeffs(19, c);
    for (int m = 0; m <= 16; ++m) {
        CHECK(reconstruct(coeffs, grid.node(m), grid, 0.2, 0) ==
              doctest::Approx(c).epsilon(1e-14));
        CHECK(std::abs(reconstruct(coeffs, grid.node(m), grid, 0.2, 1)) <= 1e-13);
    }
}

TEST_CASE("reconstruct rejects points off the interval") {
    const GridSpec grid{0.0, 1.0, 8};
    std::vector<double> coeffs(11, 1.0);
    CHECK_THROWS_AS(reconstruct(coeffs, -0.01, grid, 0.0, 0), std::domain_error);
    CHECK_THROWS_AS(reconstruct(coeffs, 1.01, grid, 0.0, 0), std::domain_error);
}

TEST_CASE("reconstruct agrees with the nodal formulas") {
    const GridSpec grid{-3.0, 2.0, 10};
    const double lambda = -0.3;
    const NodalWeights w = nodal_weights(lambda, grid.h());
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::vector<double> coeffs(13);
    for (auto& c : coeffs) c = coef(rng);
    const auto u = nodal_values(coeffs, w);
    const auto u1 = nodal_first_derivatives(coeffs, w);
    const auto u2 = nodal_second_derivatives(coeffs, w);
    for (int m = 0; m <= 10; ++m) {
        const double x = grid.node(m);
        CHECK(reconstruct(coeffs, x, grid, lambda, 0) ==
              doctest::Approx(u[static_cast<size_t>(m)]).epsilon(1e-12));
        CHECK(reconstruct(coeffs, x, grid, lambda, 1) ==
              doctest::Approx(u1[static_cast<size_t>(m)]).epsilon(1e-12));
        CHECK(reconstruct(coeffs, x, grid, lambda, 2) ==
              doctest::Approx(u2[static_cast<size_t>(m)]).epsilon(1e-11));
    }
}

}  // TEST_SUITE
