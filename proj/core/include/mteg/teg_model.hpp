#pragma once

#include "mteg/materials.hpp"

#include <string>

namespace mteg {

/// Vertical thermopile embedded in an insulating matrix, clamped between a
/// heat source and a heat sink through a lumped thermal interface resistance.
struct GeneratorDesign {
    std::string name;
    double leg_length = 0.0;          // m
    double leg_area = 0.0;            // m², one leg
    double fill_factor = 1.0;         // thermoactive fraction of the device area
    double device_area = 1e-4;        // m²
    MaterialProps p_material;
    MaterialProps n_material;
    MaterialProps matrix_material;
    double contact_resistivity = 0.0;  // Ω·m², per metal/semiconductor contact
    double interface_resistance = 0.0; // K/W, both faces lumped

    /// Number of thermocouples, F·A_dev / (2·A_leg). Not rounded.
    double couple_count() const;

    /// Area of insulator per unit of thermoactive area, A_V = 1/F - 1.
    double insulating_area_ratio() const;

    /// Geometric and material invariants. Throws ParameterError or
    /// DegenerateDesignError.
    void validate() const;
};

/// Performance at one externally measured temperature difference.
struct OperatingPoint {
    double dt_meas = 0.0;       // K, between the external sensors
    double dt_gen = 0.0;        // K, across the generator itself
    double v_oc = 0.0;          // V
    double r_internal = 0.0;    // Ω
    double p_matched = 0.0;     // W
    double power_density = 0.0; // W/m²
    double q_hot = 0.0;         // W
    double q_cold = 0.0;        // W
    double eff_factor = 0.0;    // W/(m²·K²)
};

double generator_thermal_resistance(const GeneratorDesign& design);

/// Share of `dt_meas` that drops across the generator when it is in series
/// with the interface resistance.
double thermal_divider(double dt_meas, double r_gen, double k_if);

/// Inverse of thermal_divider: the generator resistance that yields `dt_gen`.
double calibrate_r_gen(double dt_meas, double dt_gen, double k_if);

double heat_flow(double dt_gen, double r_gen);

double open_circuit_voltage(const GeneratorDesign& design, double dt_gen);

double internal_resistance(const GeneratorDesign& design);

double load_power(double v_oc, double r_internal, double r_load);

double matched_load_power(double v_oc, double r_internal);

OperatingPoint evaluate(const GeneratorDesign& design, double dt_meas);

/// Power density per squared measured temperature difference, W/(m²·K²).
/// Reported as μW cm⁻² K⁻²; it is not the dimensionless figure of merit ZT.
double efficiency_factor(double power_density, double dt_meas);

/// Couple Seebeck coefficient α_p − α_n (V/K) that makes evaluate() return
/// `target_density` (W/m²) at `dt_meas`.
double calibrate_seebeck(const GeneratorDesign& design, double dt_meas, double target_density);

} // namespace mteg
