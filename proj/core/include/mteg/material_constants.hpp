#pragma once

// Room-temperature literature values used as the starting point of the
// calibration chain, and the calibrated Seebeck coefficients it produces.

namespace mteg::constants {

// Typical room-temperature values for Bi2Te3-based alloys. Electrodeposited
// films sit at the high end of the resistivity range, so the as-deposited
// values are taken there. The Seebeck pair is only used for the p/n split of
// the calibrated couple coefficient.
inline constexpr double bi2te3_p_seebeck_lit = 195e-6;      // V/K
inline constexpr double bi2te3_n_seebeck_lit = -210e-6;     // V/K
inline constexpr double bi2te3_p_resistivity_asdep = 2.5e-5; // Ω·m
inline constexpr double bi2te3_n_resistivity_asdep = 2.0e-5; // Ω·m
// Power gain of the 18 h / 200 °C anneal, applied as a resistivity reduction.
inline constexpr double annealing_power_gain = 3.9;

inline constexpr double bi2te3_p_conductivity = 1.4;        // W/(m·K)
inline constexpr double bi2te3_n_conductivity = 1.6;        // W/(m·K)

// Metals: CRC Handbook of Chemistry and Physics, 97th ed., "Electrical
// resistivity of pure metals" and "Thermal conductivity of metals" at 300 K;
// absolute thermopower from Cusack & Kendall, Proc. Phys. Soc. 72 (1958) 898.
inline constexpr double copper_seebeck = 1.83e-6;   // V/K
inline constexpr double copper_resistivity = 1.725e-8;
inline constexpr double copper_conductivity = 401.0;
inline constexpr double nickel_seebeck = -19.5e-6;
inline constexpr double nickel_resistivity = 7.20e-8;
inline constexpr double nickel_conductivity = 90.7;
inline constexpr double gold_seebeck = 1.94e-6;
inline constexpr double gold_resistivity = 2.271e-8;
inline constexpr double gold_conductivity = 317.0;

// SU-8 (MicroChem SU-8 3000 data sheet): λ ≈ 0.2 W/(m·K), volume
// resistivity 2.8e16 Ω·cm.
inline constexpr double su8_conductivity = 0.2;
inline constexpr double su8_resistivity = 2.8e14;

// Output of derive_reference_calibration(), frozen. A unit test re-derives
// these and fails if they drift.
inline constexpr double bi2te3_p_seebeck_calibrated = 1.1744583878692528e-05;  // V/K
inline constexpr double bi2te3_n_seebeck_calibrated = -1.2648013407822724e-05; // V/K
inline constexpr double reference_fill_factor = 0.18901730907482167;
inline constexpr double cu_ni_copper_seebeck_calibrated = 1.2720259268682476e-06;  // V/K
inline constexpr double cu_ni_nickel_seebeck_calibrated = -1.3554374630563294e-05; // V/K

} // namespace mteg::constants
