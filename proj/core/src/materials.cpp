#include "mteg/materials.hpp"

#include "mteg/error.hpp"
#include "mteg/material_constants.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mteg {

namespace {

namespace c = constants;

const std::array<MaterialProps, 8>& presets() {
    static const std::array<MaterialProps, 8> table = [] {
        const MaterialProps p_asdep{"bi2te3_p_asdep", c::bi2te3_p_seebeck_calibrated,
                                    c::bi2te3_p_resistivity_asdep, c::bi2te3_p_conductivity,
                                    Carrier::p};
        const MaterialProps n_asdep{"bi2te3_n_asdep", c::bi2te3_n_seebeck_calibrated,
                                    c::bi2te3_n_resistivity_asdep, c::bi2te3_n_conductivity,
                                    Carrier::n};
        MaterialProps p_annealed = apply_annealing(p_asdep, c::annealing_power_gain);
        p_annealed.name = "bi2te3_p_annealed";
        MaterialProps n_annealed = apply_annealing(n_asdep, c::annealing_power_gain);
        n_annealed.name = "bi2te3_n_annealed";
        return std::array<MaterialProps, 8>{
            p_asdep,
            n_asdep,
            p_annealed,
            n_annealed,
            MaterialProps{"copper", c::copper_seebeck, c::copper_resistivity,
                          c::copper_conductivity, Carrier::metal},
            MaterialProps{"nickel", c::nickel_seebeck, c::nickel_resistivity,
                          c::nickel_conductivity, Carrier::metal},
            MaterialProps{"su8", 0.0, c::su8_resistivity, c::su8_conductivity, Carrier::insulator},
            MaterialProps{"gold", c::gold_seebeck, c::gold_resistivity, c::gold_conductivity,
                          Carrier::metal},
        };
    }();
    return table;
}

constexpr std::array<std::string_view, 8> kNames{
    "bi2te3_p_asdep", "bi2te3_n_asdep", "bi2te3_p_annealed", "bi2te3_n_annealed",
    "copper",         "nickel",         "su8",               "gold",
};

} // namespace

std::string_view to_string(Carrier carrier) {
    switch (carrier) {
    case Carrier::p: return "p";
    case Carrier::n: return "n";
    case Carrier::metal: return "metal";
    case Carrier::insulator: return "insulator";
    }
    return "?";
}

Carrier carrier_from_string(std::string_view text) {
    if (text == "p") return Carrier::p;
    if (text == "n") return Carrier::n;
    if (text == "metal") return Carrier::metal;
    if (text == "insulator") return Carrier::insulator;
    throw LookupError("unknown carrier '" + std::string(text) + "' (expected p, n, metal, insulator)");
}

std::string_view to_string(CarrierClass cls) {
    switch (cls) {
    case CarrierClass::p: return "p";
    case CarrierClass::n: return "n";
    case CarrierClass::near_stoichiometric: return "near_stoichiometric";
    }
    return "?";
}

void MaterialProps::validate() const {
    auto fail = [this](const char* what) {
        throw ParameterError((name.empty() ? std::string("material") : "material '" + name + "'") + ": " + what);
    };
    if (!(resistivity > 0.0) || !std::isfinite(resistivity)) fail("resistivity must be positive");
    // Zero is allowed: an ideal insulator, or a leg in a degenerate test design.
    if (!(thermal_conductivity >= 0.0) || !std::isfinite(thermal_conductivity))
        fail("thermal conductivity must be non-negative");
    if (!std::isfinite(seebeck)) fail("Seebeck coefficient must be finite");
    switch (carrier) {
    case Carrier::p:
        if (!(seebeck > 0.0)) fail("p-type requires a positive Seebeck coefficient");
        break;
    case Carrier::n:
        if (!(seebeck < 0.0)) fail("n-type requires a negative Seebeck coefficient");
        break;
    case Carrier::insulator:
        if (seebeck != 0.0) fail("an insulator has no Seebeck coefficient");
        break;
    case Carrier::metal:
        break;
    }
}

void StoichiometryRatio::validate() const {
    if (!(te_to_bi > 0.0) || !std::isfinite(te_to_bi))
        throw ParameterError("Te:Bi ratio must be positive");
}

const MaterialProps& lookup_material(std::string_view name) {
    for (const auto& m : presets())
        if (m.name == name) return m;
    std::string valid;
    for (auto n : kNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw LookupError("unknown material '" + std::string(name) + "'; valid presets: " + valid);
}

std::span<const std::string_view> material_names() { return kNames; }

CarrierClass classify_carrier(StoichiometryRatio ratio, double band) {
    ratio.validate();
    if (!(band >= 0.0)) throw ParameterError("stoichiometry band must be non-negative");
    if (ratio.te_to_bi > StoichiometryRatio::stoichiometric + band) return CarrierClass::n;
    if (ratio.te_to_bi < StoichiometryRatio::stoichiometric - band) return CarrierClass::p;
    return CarrierClass::near_stoichiometric;
}

MaterialProps apply_annealing(const MaterialProps& props, double power_gain) {
    if (!(power_gain > 0.0) || !std::isfinite(power_gain))
        throw ParameterError("annealing power gain must be positive");
    if (props.carrier != Carrier::p && props.carrier != Carrier::n)
        throw ParameterError("annealing applies to p- or n-type thermoleg materials only");
    MaterialProps out = props;
    out.resistivity = props.resistivity / power_gain;
    return out;
}

double bismuth_excess(StoichiometryRatio ratio) {
    ratio.validate();
    // r = (3 - x) / (2 + x)  =>  x = (3 - 2r) / (1 + r)
    return (3.0 - 2.0 * ratio.te_to_bi) / (1.0 + ratio.te_to_bi);
}

StoichiometryRatio ratio_from_excess(double x) {
    if (!(x > -2.0 && x < 3.0)) throw ParameterError("Bi excess x must lie in (-2, 3)");
    return StoichiometryRatio{(3.0 - x) / (2.0 + x)};
}

} // namespace mteg
