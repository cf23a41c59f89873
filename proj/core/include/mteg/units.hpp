#pragma once

// Display units used by configuration files and CSV output. Everything inside
// the library is SI; multiply a display value by its factor to get SI.

namespace mteg::units {

inline constexpr double micrometre = 1e-6;           // m
inline constexpr double square_micrometre = 1e-12;   // m²
inline constexpr double square_centimetre = 1e-4;    // m²
inline constexpr double ohm_square_centimetre = 1e-4; // Ω·m²
inline constexpr double microvolt_per_kelvin = 1e-6; // V/K
inline constexpr double microwatt_per_square_centimetre = 1e-2;         // W/m²
inline constexpr double microwatt_per_square_centimetre_kelvin2 = 1e-2; // W/(m²·K²)
inline constexpr double milliamp_per_square_centimetre = 10.0;          // A/m²
inline constexpr double millisecond = 1e-3;          // s
inline constexpr double hour = 3600.0;               // s
inline constexpr double micrometre_per_hour = micrometre / hour; // m/s
inline constexpr double gram_per_mole = 1e-3;        // kg/mol
inline constexpr double gram_per_cubic_centimetre = 1e3; // kg/m³

constexpr double to_si(double display, double factor) { return display * factor; }
constexpr double from_si(double si, double factor) { return si / factor; }

} // namespace mteg::units
