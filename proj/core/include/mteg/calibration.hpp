#pragma once

#include "mteg/teg_model.hpp"

#include <span>
#include <string_view>

namespace mteg {

// Reference devices and the measurement anchors their free parameters are
// fitted to. Power densities are in W/m² and temperatures in K.
namespace anchors {
inline constexpr double dt_meas = 40.0;
inline constexpr double dt_gen = 21.4;
inline constexpr double interface_resistance = 3.9; // K/W
inline constexpr double annealed_density = 278.5e-2;     // 278.5 μW/cm²
inline constexpr double as_deposited_density = 71.6e-2;  // 71.6 μW/cm² at 40.3 K
inline constexpr double annealing_gain = 3.9;
inline constexpr double peak_density = 344.1e-2;         // 344.1 μW/cm²
inline constexpr double peak_dt_meas = 44.4;
inline constexpr double cu_ni_min_ratio = 60.0;
/// Cu/Ni device density, set just below annealed_density / cu_ni_min_ratio.
inline constexpr double cu_ni_density = 4.5e-2;          // 4.5 μW/cm²
inline constexpr double state_of_the_art_eff_factor = 2.4e-2; // 2.4 μW cm⁻² K⁻²
} // namespace anchors

// Geometry shared by every reference device.
namespace reference_geometry {
inline constexpr double leg_length = 200e-6;          // m
inline constexpr double leg_area = 100e-6 * 100e-6;   // m²
inline constexpr double device_area = 1e-4;           // m²
inline constexpr double contact_resistivity = 1e-12;  // Ω·m²
} // namespace reference_geometry

/// Result of fitting the reference devices from literature material data.
struct ReferenceCalibration {
    double generator_resistance = 0.0; // K/W
    double fill_factor = 0.0;
    double bi2te3_couple_seebeck = 0.0; // V/K
    double bi2te3_p_seebeck = 0.0;
    double bi2te3_n_seebeck = 0.0;
    double cu_ni_couple_seebeck = 0.0;
    double cu_seebeck = 0.0;
    double ni_seebeck = 0.0;
};

/// Runs the calibration chain from literature defaults:
///   1. generator resistance from the 40 K / 21.4 K / 3.9 K/W divider,
///   2. fill factor so the reference geometry has that resistance,
///   3. annealed legs = literature legs with resistivity / 3.9,
///   4. couple Seebeck so the annealed device gives 278.5 μW/cm² at 40 K,
///   5. Cu/Ni couple Seebeck so that device gives the Cu/Ni anchor.
/// The per-leg split keeps the literature p/n Seebeck proportion.
ReferenceCalibration derive_reference_calibration();

/// Reference devices built from the frozen presets:
/// "bi2te3_annealed", "bi2te3_asdep", "cu_ni".
GeneratorDesign reference_design(std::string_view name);

std::span<const std::string_view> reference_design_names();

} // namespace mteg
