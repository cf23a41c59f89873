#include "mteg/calibration.hpp"

#include "mteg/error.hpp"
#include "mteg/material_constants.hpp"

#include <array>
#include <tuple>
#include <string>

namespace mteg {

namespace {

namespace c = constants;

GeneratorDesign reference_shell(std::string name, double fill_factor) {
    GeneratorDesign d;
    d.name = std::move(name);
    d.leg_length = reference_geometry::leg_length;
    d.leg_area = reference_geometry::leg_area;
    d.fill_factor = fill_factor;
    d.device_area = reference_geometry::device_area;
    d.matrix_material = lookup_material("su8");
    d.contact_resistivity = reference_geometry::contact_resistivity;
    d.interface_resistance = anchors::interface_resistance;
    return d;
}

// Scales a literature Seebeck pair to a calibrated couple coefficient while
// keeping the ratio between the two legs.
std::pair<double, double> split_couple(double couple, double p_lit, double n_lit) {
    const double span = p_lit - n_lit;
    return {couple * p_lit / span, couple * n_lit / span};
}

constexpr std::array<std::string_view, 3> kDesignNames{"bi2te3_annealed", "bi2te3_asdep", "cu_ni"};

} // namespace

ReferenceCalibration derive_reference_calibration() {
    ReferenceCalibration out;
    out.generator_resistance =
        calibrate_r_gen(anchors::dt_meas, anchors::dt_gen, anchors::interface_resistance);

    // Solve R_G = L / (A_dev·(F·λ_legs + (1 − F)·λ_matrix)) for F.
    const double lambda_legs = 0.5 * (c::bi2te3_p_conductivity + c::bi2te3_n_conductivity);
    const double lambda_matrix = c::su8_conductivity;
    const double lambda_eff = reference_geometry::leg_length /
                              (reference_geometry::device_area * out.generator_resistance);
    out.fill_factor = (lambda_eff - lambda_matrix) / (lambda_legs - lambda_matrix);
    if (!(out.fill_factor > 0.0 && out.fill_factor <= 1.0))
        throw CalibrationError("reference geometry cannot reach the calibrated generator resistance");

    const MaterialProps p_lit{"bi2te3_p_lit", c::bi2te3_p_seebeck_lit, c::bi2te3_p_resistivity_asdep,
                              c::bi2te3_p_conductivity, Carrier::p};
    const MaterialProps n_lit{"bi2te3_n_lit", c::bi2te3_n_seebeck_lit, c::bi2te3_n_resistivity_asdep,
                              c::bi2te3_n_conductivity, Carrier::n};

    GeneratorDesign annealed = reference_shell("bi2te3_annealed", out.fill_factor);
    annealed.p_material = apply_annealing(p_lit, c::annealing_power_gain);
    annealed.n_material = apply_annealing(n_lit, c::annealing_power_gain);
    out.bi2te3_couple_seebeck = calibrate_seebeck(annealed, anchors::dt_meas, anchors::annealed_density);
    std::tie(out.bi2te3_p_seebeck, out.bi2te3_n_seebeck) =
        split_couple(out.bi2te3_couple_seebeck, c::bi2te3_p_seebeck_lit, c::bi2te3_n_seebeck_lit);

    GeneratorDesign cu_ni = reference_shell("cu_ni", out.fill_factor);
    cu_ni.p_material = lookup_material("copper");
    cu_ni.n_material = lookup_material("nickel");
    out.cu_ni_couple_seebeck = calibrate_seebeck(cu_ni, anchors::dt_meas, anchors::cu_ni_density);
    std::tie(out.cu_seebeck, out.ni_seebeck) =
        split_couple(out.cu_ni_couple_seebeck, c::copper_seebeck, c::nickel_seebeck);
    return out;
}

GeneratorDesign reference_design(std::string_view name) {
    if (name == "bi2te3_annealed" || name == "bi2te3_asdep") {
        const bool annealed = name == "bi2te3_annealed";
        GeneratorDesign d = reference_shell(std::string(name), c::reference_fill_factor);
        d.p_material = lookup_material(annealed ? "bi2te3_p_annealed" : "bi2te3_p_asdep");
        d.n_material = lookup_material(annealed ? "bi2te3_n_annealed" : "bi2te3_n_asdep");
        return d;
    }
    if (name == "cu_ni") {
        GeneratorDesign d = reference_shell("cu_ni", c::reference_fill_factor);
        d.p_material = lookup_material("copper");
        d.p_material.name = "copper_calibrated";
        d.p_material.seebeck = c::cu_ni_copper_seebeck_calibrated;
        d.n_material = lookup_material("nickel");
        d.n_material.name = "nickel_calibrated";
        d.n_material.seebeck = c::cu_ni_nickel_seebeck_calibrated;
        return d;
    }
    std::string valid;
    for (auto n : kDesignNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw LookupError("unknown reference design '" + std::string(name) + "'; valid: " + valid);
}

std::span<const std::string_view> reference_design_names() { return kDesignNames; }

} // namespace mteg
