#pragma once

#include <span>
#include <string>
#include <string_view>

namespace mteg {

enum class Carrier { p, n, metal, insulator };

std::string_view to_string(Carrier carrier);
Carrier carrier_from_string(std::string_view text);

/// Thermoelectric transport record at room temperature (SI units).
struct MaterialProps {
    std::string name;
    double seebeck = 0.0;              // V/K, signed
    double resistivity = 0.0;          // Ω·m
    double thermal_conductivity = 0.0; // W/(m·K)
    Carrier carrier = Carrier::insulator;

    /// Throws ParameterError when a sign or positivity invariant is broken.
    void validate() const;

    bool operator==(const MaterialProps&) const = default;
};

/// Te:Bi atomic ratio of a Bi(2+x)Te(3-x) deposit, ratio = (3 - x) / (2 + x).
struct StoichiometryRatio {
    static constexpr double stoichiometric = 1.5;

    double te_to_bi = stoichiometric;

    void validate() const;
};

enum class CarrierClass { p, n, near_stoichiometric };

std::string_view to_string(CarrierClass cls);

inline constexpr double default_stoichiometry_band = 0.05;

/// Registered presets: bi2te3_{p,n}_{asdep,annealed}, copper, nickel, su8, gold.
/// Throws LookupError for any other name.
const MaterialProps& lookup_material(std::string_view name);

std::span<const std::string_view> material_names();

/// Bi-rich deposits are p-type, Te-rich ones n-type. Ratios within `band`
/// of 1.5 are near-stoichiometric and not usable as a thermoleg.
CarrierClass classify_carrier(StoichiometryRatio ratio, double band = default_stoichiometry_band);

/// Annealing lowers resistivity by `power_gain`; the Seebeck coefficient is
/// kept. With zero contact resistance the matched-load power of a device whose
/// legs are both annealed therefore grows by exactly `power_gain`.
MaterialProps apply_annealing(const MaterialProps& props, double power_gain);

/// Bi(2+x)Te(3-x) excess x for a given Te:Bi ratio, and back.
double bismuth_excess(StoichiometryRatio ratio);
StoichiometryRatio ratio_from_excess(double x);

} // namespace mteg
