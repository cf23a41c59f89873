#pragma once

#include "mteg/teg_model.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mteg {

enum class SweepParameter { leg_length, fill_factor, contact_resistivity, interface_resistance, dt_meas };

std::string_view to_string(SweepParameter parameter);
SweepParameter sweep_parameter_from_string(std::string_view name);

enum class Spacing { linear, log };

struct SweepPoint {
    double value = 0.0; // SI
    OperatingPoint point;
};

struct SweepCurve {
    SweepParameter parameter = SweepParameter::leg_length;
    std::vector<SweepPoint> points;
};

/// Copy of `design` with one parameter replaced. dt_meas is not a design
/// field, so it is returned unchanged for SweepParameter::dt_meas.
GeneratorDesign with_parameter(GeneratorDesign design, SweepParameter parameter, double value);

std::vector<double> spaced_values(double lo, double hi, std::size_t n_points, Spacing spacing);

/// Evaluates `design` at `n_points` values of one parameter. `dt_meas` is the
/// operating temperature difference for every parameter except dt_meas itself.
/// Points are evaluated on up to `threads` workers and returned in order.
SweepCurve sweep(const GeneratorDesign& design, SweepParameter parameter, double lo, double hi,
                 std::size_t n_points, Spacing spacing, double dt_meas = 40.0,
                 unsigned threads = 1);

struct OptimizationResult {
    double best_value = 0.0;
    OperatingPoint best_point;
    int iterations = 0;
    double lo = 0.0;
    double hi = 0.0;
    /// Set when the pre-scan found more than one local maximum; best_value is
    /// then the pre-scan grid argmax.
    bool non_unimodal = false;
};

inline constexpr std::size_t prescan_points = 64;
inline constexpr double default_length_tolerance = 0.1e-6;

struct ScalarMaximum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
    bool non_unimodal = false;
};

/// Maximises `f` on [lo, hi] (lo > 0): a log-spaced pre-scan of
/// prescan_points locates the peak, then golden-section search narrows the
/// neighbouring bracket to width `tol`. If the pre-scan is not unimodal the
/// grid argmax is returned with `non_unimodal` set.
ScalarMaximum maximize_unimodal(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Golden-section search for the leg length maximising matched-load power.
OptimizationResult optimize_leg_length(const GeneratorDesign& design, double lo, double hi,
                                       double tol = default_length_tolerance,
                                       double dt_meas = 40.0);

struct ComparisonTable {
    std::vector<std::string> names;
    std::vector<OperatingPoint> points;
    /// ratio[i][j] = power_density(i) / power_density(j).
    std::vector<std::vector<double>> ratio;
};

ComparisonTable compare_designs(std::span<const GeneratorDesign> designs, double dt_meas);

} // namespace mteg
