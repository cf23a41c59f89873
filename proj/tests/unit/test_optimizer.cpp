#include "support.hpp"

#include "mteg/calibration.hpp"
#include "mteg/error.hpp"
#include "mteg/optimizer.hpp"
#include "mteg/units.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace mteg;

namespace {

constexpr double um = units::micrometre;

// Independent oracle: argmax of matched power on a uniform grid.
double grid_argmax(const GeneratorDesign& d, double lo, double hi, int n, double dt = 40.0) {
    double best_x = lo, best_p = -1.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        GeneratorDesign g = d;
        g.leg_length = x;
        const double p = evaluate(g, dt).p_matched;
        if (p > best_p) {
            best_p = p;
            best_x = x;
        }
    }
    return best_x;
}

} // namespace

TEST_CASE("sweep parameter names") {
    for (auto p : {SweepParameter::leg_length, SweepParameter::fill_factor, SweepParameter::contact_resistivity,
                   SweepParameter::interface_resistance, SweepParameter::dt_meas})
        CHECK(sweep_parameter_from_string(to_string(p)) == p);
    CHECK_THROWS_AS(sweep_parameter_from_string("leg_width"), ParameterError);
}

TEST_CASE("spaced_values") {
    const auto lin = spaced_values(1.0, 3.0, 5, Spacing::linear);
    CHECK(lin == std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0});
    const auto lg = spaced_values(1e-5, 1e-3, 3, Spacing::log);
    CHECK(lg.front() == 1e-5);
    CHECK(lg[1] == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(lg.back() == 1e-3);
    CHECK_THROWS_AS(spaced_values(1.0, 2.0, 1, Spacing::linear), ParameterError);
    CHECK_THROWS_AS(spaced_values(2.0, 1.0, 5, Spacing::linear), ParameterError);
    CHECK_THROWS_AS(spaced_values(0.0, 1.0, 5, Spacing::log), ParameterError);
}

TEST_CASE("sweep") {
    const GeneratorDesign d = reference_design("bi2te3_annealed");

    SUBCASE("two points are exactly the endpoints") {
        const SweepCurve c = sweep(d, SweepParameter::leg_length, 50 * um, 400 * um, 2, Spacing::linear);
        REQUIRE(c.points.size() == 2);
        CHECK(c.points[0].value == 50 * um);
        CHECK(c.points[1].value == 400 * um);
    }

    SUBCASE("leg length curve has a single interior maximum") {
        const SweepCurve c = sweep(d, SweepParameter::leg_length, 10 * um, 1000 * um, 50, Spacing::log);
        std::size_t k = 0;
        for (std::size_t i = 1; i < c.points.size(); ++i)
            if (c.points[i].point.power_density > c.points[k].point.power_density) k = i;
        CHECK(k > 0);
        CHECK(k + 1 < c.points.size());
        for (std::size_t i = 1; i <= k; ++i) CHECK(c.points[i].point.power_density > c.points[i - 1].point.power_density);
        for (std::size_t i = k + 1; i < c.points.size(); ++i)
            CHECK(c.points[i].point.power_density < c.points[i - 1].point.power_density);
        for (std::size_t i = 1; i < c.points.size(); ++i) CHECK(c.points[i].value > c.points[i - 1].value);
    }

    SUBCASE("power density scales with dt_meas squared") {
        const SweepCurve c = sweep(d, SweepParameter::dt_meas, 1.0, 60.0, 40, Spacing::linear);
        const double base = c.points[0].point.power_density / (c.points[0].value * c.points[0].value);
        for (const auto& p : c.points)
            CHECK(test::rel_close(p.point.power_density, base * p.value * p.value, 1e-10));
    }

    SUBCASE("other parameters reach the design") {
        const SweepCurve k = sweep(d, SweepParameter::interface_resistance, 0.0, 10.0, 5, Spacing::linear);
        CHECK(k.points.front().point.dt_gen == 40.0);
        CHECK(k.points.back().point.dt_gen < k.points.front().point.dt_gen);
        const SweepCurve rc = sweep(d, SweepParameter::contact_resistivity, 1e-13, 1e-9, 5, Spacing::log);
        CHECK(rc.points.back().point.r_internal > rc.points.front().point.r_internal);
        const SweepCurve f = sweep(d, SweepParameter::fill_factor, 0.1, 1.0, 5, Spacing::linear);
        CHECK(f.points.back().point.dt_gen < f.points.front().point.dt_gen);
    }

    SUBCASE("deterministic and independent of worker count") {
        const SweepCurve a = sweep(d, SweepParameter::leg_length, 10 * um, 1000 * um, 101, Spacing::log, 40.0, 1);
        const SweepCurve b = sweep(d, SweepParameter::leg_length, 10 * um, 1000 * um, 101, Spacing::log, 40.0, 4);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i) {
            CHECK(a.points[i].value == b.points[i].value);
            CHECK(a.points[i].point.p_matched == b.points[i].point.p_matched);
            CHECK(a.points[i].point.v_oc == b.points[i].point.v_oc);
        }
    }

    SUBCASE("a failing point reports its value") {
        try {
            sweep(d, SweepParameter::fill_factor, 0.5, 1.5, 3, Spacing::linear);
            FAIL("expected EvaluationError");
        } catch (const EvaluationError& e) {
            CHECK(e.subject() == "fill_factor = 1.5");
        }
    }
}

TEST_CASE("maximize_unimodal") {
    SUBCASE("interior peak") {
        const auto m = maximize_unimodal([](double x) { return -(std::log(x) - 1.0) * (std::log(x) - 1.0); },
                                         0.1, 100.0, 1e-9);
        CHECK(m.x == doctest::Approx(std::exp(1.0)).epsilon(1e-8));
        CHECK_FALSE(m.non_unimodal);
        CHECK(m.iterations > 0);
    }

    SUBCASE("two peaks fall back to the pre-scan argmax") {
        auto f = [](double x) { return std::exp(-100 * std::pow(std::log10(x) - 0.0, 2)) + 1.2 * std::exp(-100 * std::pow(std::log10(x) - 1.5, 2)); };
        const auto m = maximize_unimodal(f, 0.1, 100.0, 1e-6);
        CHECK(m.non_unimodal);
        CHECK(m.x == doctest::Approx(std::pow(10.0, 1.5)).epsilon(0.1));
    }

    SUBCASE("monotone decreasing peaks at the lower edge") {
        const auto m = maximize_unimodal([](double x) { return 1.0 / x; }, 2.0, 50.0, 1e-6);
        CHECK(m.x == 2.0);
    }

    SUBCASE("bad brackets") {
        auto f = [](double x) { return x; };
        CHECK_THROWS_AS(maximize_unimodal(f, 0.0, 1.0, 1e-3), ParameterError);
        CHECK_THROWS_AS(maximize_unimodal(f, 2.0, 1.0, 1e-3), ParameterError);
        CHECK_THROWS_AS(maximize_unimodal(f, 1.0, 2.0, 0.0), ParameterError);
    }
}

TEST_CASE("optimize_leg_length") {
    const GeneratorDesign d = reference_design("bi2te3_annealed");

    SUBCASE("calibrated Bi2Te3 optimum lies in 100-300 um") {
        const OptimizationResult r = optimize_leg_length(d, 10 * um, 1000 * um);
        CHECK(r.best_value >= 100 * um);
        CHECK(r.best_value <= 300 * um);
        CHECK_FALSE(r.non_unimodal);
        CHECK(r.best_point.p_matched >= evaluate(with_parameter(d, SweepParameter::leg_length, r.lo), 40.0).p_matched);
        CHECK(r.best_point.p_matched >= evaluate(with_parameter(d, SweepParameter::leg_length, r.hi), 40.0).p_matched);
    }

    SUBCASE("matches a 10^4 point grid within 0.1 um") {
        const OptimizationResult r = optimize_leg_length(d, 10 * um, 1000 * um);
        CHECK(std::abs(r.best_value - grid_argmax(d, 10 * um, 1000 * um, 10000)) <= 0.1 * um);
    }

    SUBCASE("perfect interface and contacts: shortest leg wins") {
        GeneratorDesign g = d;
        g.interface_resistance = 0.0;
        g.contact_resistivity = 0.0;
        CHECK(optimize_leg_length(g, 10 * um, 1000 * um).best_value == 10 * um);
    }

    SUBCASE("closed form: R_G(L*) equals the interface resistance") {
        GeneratorDesign g = d;
        g.contact_resistivity = 0.0;
        g.matrix_material.thermal_conductivity = 0.0;
        const OptimizationResult r = optimize_leg_length(g, 10 * um, 1000 * um);
        const double r_gen = generator_thermal_resistance(with_parameter(g, SweepParameter::leg_length, r.best_value));
        CHECK(std::abs(r_gen / g.interface_resistance - 1.0) < 1e-3);
    }

    SUBCASE("randomised designs agree with the grid oracle") {
        test::Rng rng(404);
        for (int i = 0; i < 40; ++i) {
            GeneratorDesign g = test::random_design(rng);
            g.interface_resistance = rng.uniform(0.5, 10.0);
            const double lo = 10 * um, hi = 2000 * um;
            const OptimizationResult r = optimize_leg_length(g, lo, hi, 0.1 * um);
            REQUIRE_FALSE(r.non_unimodal);
            const double step = (hi - lo) / 9999.0;
            CHECK(std::abs(r.best_value - grid_argmax(g, lo, hi, 10000)) <= 0.1 * um + 0.5 * step);
        }
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(optimize_leg_length(d, 0.0, 1e-3), ParameterError);
        CHECK_THROWS_AS(optimize_leg_length(d, 1e-3, 1e-4), ParameterError);
        CHECK_THROWS_AS(optimize_leg_length(d, 1e-5, 1e-3, 0.0), ParameterError);
    }
}

TEST_CASE("compare_designs") {
    const std::vector<GeneratorDesign> designs{reference_design("cu_ni"), reference_design("bi2te3_asdep"),
                                               reference_design("bi2te3_annealed")};
    const ComparisonTable t = compare_designs(designs, 40.0);
    REQUIRE(t.names.size() == 3);
    CHECK(t.ratio[2][0] > 60.0);
    CHECK(t.ratio[2][1] == doctest::Approx(3.89).epsilon(0.02 / 3.89));
    for (std::size_t i = 0; i < 3; ++i) CHECK(t.ratio[i][i] == 1.0);
    CHECK(t.ratio[0][2] == doctest::Approx(1.0 / t.ratio[2][0]));

    SUBCASE("ratios survive scaling device area with the interface conductance") {
        std::vector<GeneratorDesign> scaled = designs;
        for (auto& d : scaled) {
            d.device_area *= 7.3;
            d.interface_resistance /= 7.3;
        }
        const ComparisonTable s = compare_designs(scaled, 40.0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(test::rel_close(s.ratio[i][j], t.ratio[i][j], 1e-12));
    }

    SUBCASE("errors carry the design name") {
        std::vector<GeneratorDesign> bad = designs;
        bad[1].leg_area = 1.0;
        try {
            compare_designs(bad, 40.0);
            FAIL("expected EvaluationError");
        } catch (const EvaluationError& e) {
            CHECK(e.subject() == "bi2te3_asdep");
        }
        CHECK_THROWS_AS(compare_designs(std::span(designs).first(1), 40.0), ParameterError);
        CHECK_THROWS_AS(compare_designs(designs, 0.0), ParameterError);
    }
}
