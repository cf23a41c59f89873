#include "support.hpp"

#include "mteg/diffusion.hpp"
#include "mteg/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace mteg;

TEST_CASE("uniform profile with no flux is bit-exactly stationary") {
    DiffusionSolver1D s(300e-6, std::vector<double>(64, 80.0), 1e-9);
    const double dt = s.max_stable_step();
    for (int i = 0; i < 5000; ++i) s.step(dt, Boundary::closed(), Boundary::fixed(80.0));
    for (double c : s.values()) CHECK(c == 80.0);
}

TEST_CASE("closed system conserves content") {
    test::Rng rng(17);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<double> init(101);
        for (auto& c : init) c = rng.uniform(0.0, 100.0);
        DiffusionSolver1D s(300e-6, init, 1e-9);
        const double before = s.total_content();
        const double dt = 0.9 * s.max_stable_step();
        const auto steps = static_cast<int>(std::ceil(3600.0 / dt));
        for (int i = 0; i < steps; ++i) s.step(dt, Boundary::closed(), Boundary::closed());
        const double hours = steps * dt / 3600.0;
        CHECK(std::abs(s.total_content() - before) / before <= 1e-8 * hours);
        // Relaxes to the mean.
        const double mean = before / 300e-6;
        for (double c : s.values()) CHECK(c == doctest::Approx(mean).epsilon(1e-3));
    }
}

TEST_CASE("boundary flux changes content by exactly the injected amount") {
    DiffusionSolver1D s(1e-4, std::vector<double>(41, 10.0), 1e-9);
    const double before = s.total_content();
    const double dt = s.max_stable_step();
    const double q = -2e-4; // mol/(m²·s) drawn out at the left end
    for (int i = 0; i < 200; ++i) s.step(dt, Boundary::inflow(q), Boundary::closed());
    CHECK(s.total_content() - before == doctest::Approx(q * 200 * dt).epsilon(1e-9));
}

TEST_CASE("linear steady state between two fixed ends") {
    DiffusionSolver1D s(1e-4, std::vector<double>(21, 0.0), 1e-9);
    const double dt = s.max_stable_step();
    for (int i = 0; i < 20000; ++i) s.step(dt, Boundary::fixed(0.0), Boundary::fixed(10.0));
    const auto v = s.values();
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == doctest::Approx(10.0 * i / 20.0).epsilon(1e-9));
}

TEST_CASE("solver argument checks") {
    DiffusionSolver1D s(1e-4, std::vector<double>(21, 1.0), 1e-9);
    CHECK_THROWS_AS(s.step(1.01 * s.max_stable_step(), Boundary::closed(), Boundary::closed()), StabilityError);
    CHECK_THROWS_AS(s.step(0.0, Boundary::closed(), Boundary::closed()), ParameterError);
    CHECK_THROWS_AS(DiffusionSolver1D(0.0, std::vector<double>(21, 1.0), 1e-9), ParameterError);
    CHECK_THROWS_AS(DiffusionSolver1D(1e-4, std::vector<double>(2, 1.0), 1e-9), ParameterError);
    CHECK_THROWS_AS(DiffusionSolver1D(1e-4, std::vector<double>(21, 1.0), 0.0), ParameterError);
}
