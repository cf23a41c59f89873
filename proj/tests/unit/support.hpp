#pragma once

#include "mteg/materials.hpp"
#include "mteg/teg_model.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace mteg::test {

// Fixed-seed generator so property failures reproduce.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

private:
    std::mt19937_64 engine_;
};

inline bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

inline MaterialProps leg(Carrier c, double seebeck, double resistivity, double lambda) {
    return MaterialProps{c == Carrier::p ? "p_leg" : "n_leg", seebeck, resistivity, lambda, c};
}

inline MaterialProps matrix(double lambda) { return MaterialProps{"matrix", 0.0, 1e14, lambda, Carrier::insulator}; }

// N = 100 couples: A_dev = 1 cm², F = 0.2, A_leg = 1e-7 m².
inline GeneratorDesign hundred_couples() {
    GeneratorDesign d;
    d.name = "hundred";
    d.leg_length = 200e-6;
    d.leg_area = 1e-7;
    d.fill_factor = 0.2;
    d.device_area = 1e-4;
    d.p_material = leg(Carrier::p, 100e-6, 2e-5, 1.5);
    d.n_material = leg(Carrier::n, -100e-6, 2e-5, 1.5);
    d.matrix_material = matrix(0.2);
    d.contact_resistivity = 0.0;
    d.interface_resistance = 3.9;
    return d;
}

inline GeneratorDesign random_design(Rng& rng) {
    GeneratorDesign d;
    d.name = "random";
    d.leg_length = rng.log_uniform(10e-6, 2e-3);
    d.leg_area = rng.log_uniform(1e-10, 1e-7);
    d.device_area = rng.log_uniform(1e-5, 1e-3);
    d.fill_factor = rng.uniform(0.05, 1.0);
    // Keep at least one couple.
    const double n = d.fill_factor * d.device_area / (2.0 * d.leg_area);
    if (n < 1.0) d.leg_area = d.fill_factor * d.device_area / 4.0;
    d.p_material = leg(Carrier::p, rng.uniform(10e-6, 250e-6), rng.log_uniform(5e-6, 5e-5), rng.uniform(0.5, 3.0));
    d.n_material = leg(Carrier::n, -rng.uniform(10e-6, 250e-6), rng.log_uniform(5e-6, 5e-5), rng.uniform(0.5, 3.0));
    d.matrix_material = matrix(rng.uniform(0.05, 0.5));
    d.contact_resistivity = rng.uniform(0.0, 1.0) < 0.2 ? 0.0 : rng.log_uniform(1e-13, 1e-9);
    d.interface_resistance = rng.uniform(0.0, 10.0);
    return d;
}

} // namespace mteg::test
