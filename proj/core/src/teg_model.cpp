#include "mteg/teg_model.hpp"

#include "mteg/error.hpp"

#include <cmath>
#include <string>

namespace mteg {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

std::string label(const GeneratorDesign& d) {
    return d.name.empty() ? std::string("design") : "design '" + d.name + "'";
}

} // namespace

double GeneratorDesign::couple_count() const {
    return fill_factor * device_area / (2.0 * leg_area);
}

double GeneratorDesign::insulating_area_ratio() const { return 1.0 / fill_factor - 1.0; }

void GeneratorDesign::validate() const {
    auto fail = [this](const std::string& what) { throw ParameterError(label(*this) + ": " + what); };
    if (!positive_finite(leg_length)) fail("leg_length must be positive");
    if (!positive_finite(leg_area)) fail("leg_area must be positive");
    if (!positive_finite(device_area)) fail("device_area must be positive");
    if (!(fill_factor > 0.0 && fill_factor <= 1.0)) fail("fill_factor must lie in (0, 1]");
    if (!(contact_resistivity >= 0.0) || !std::isfinite(contact_resistivity))
        fail("contact_resistivity must be non-negative");
    if (!(interface_resistance >= 0.0) || !std::isfinite(interface_resistance))
        fail("interface_resistance must be non-negative");

    p_material.validate();
    n_material.validate();
    matrix_material.validate();
    if (p_material.carrier == Carrier::insulator || n_material.carrier == Carrier::insulator)
        fail("thermoleg materials must conduct");
    if (matrix_material.carrier != Carrier::insulator) fail("matrix material must be an insulator");

    if (couple_count() < 1.0)
        throw DegenerateDesignError(label(*this) + ": fewer than one thermocouple fits (N = " +
                                    std::to_string(couple_count()) + ")");
}

double generator_thermal_resistance(const GeneratorDesign& design) {
    design.validate();
    const double lambda_legs =
        0.5 * (design.p_material.thermal_conductivity + design.n_material.thermal_conductivity);
    const double lambda_eff = design.fill_factor * lambda_legs +
                              (1.0 - design.fill_factor) * design.matrix_material.thermal_conductivity;
    if (!(lambda_eff > 0.0))
        throw DegenerateDesignError(label(design) + ": no conductive heat path");
    return design.leg_length / (design.device_area * lambda_eff);
}

double thermal_divider(double dt_meas, double r_gen, double k_if) {
    if (!positive_finite(r_gen)) throw DegenerateDesignError("generator thermal resistance must be positive");
    if (!(dt_meas >= 0.0)) throw ParameterError("dt_meas must be non-negative");
    if (!(k_if >= 0.0)) throw ParameterError("interface resistance must be non-negative");
    return dt_meas * r_gen / (r_gen + k_if);
}

double calibrate_r_gen(double dt_meas, double dt_gen, double k_if) {
    if (!(k_if > 0.0)) throw CalibrationError("interface resistance must be positive to calibrate");
    if (!(dt_gen > 0.0) || !(dt_gen < dt_meas))
        throw CalibrationError("need 0 < dt_gen < dt_meas (got dt_gen = " + std::to_string(dt_gen) +
                               ", dt_meas = " + std::to_string(dt_meas) + ")");
    return k_if * dt_gen / (dt_meas - dt_gen);
}

double heat_flow(double dt_gen, double r_gen) {
    if (!positive_finite(r_gen)) throw DegenerateDesignError("generator thermal resistance must be positive");
    return dt_gen / r_gen;
}

double open_circuit_voltage(const GeneratorDesign& design, double dt_gen) {
    design.validate();
    if (!(dt_gen >= 0.0)) throw ParameterError("dt_gen must be non-negative");
    return design.couple_count() * (design.p_material.seebeck - design.n_material.seebeck) * dt_gen;
}

double internal_resistance(const GeneratorDesign& design) {
    design.validate();
    // Per couple: two legs in series, each with a contact at both ends.
    const double legs = (design.p_material.resistivity + design.n_material.resistivity) *
                        design.leg_length / design.leg_area;
    const double contacts = 4.0 * design.contact_resistivity / design.leg_area;
    return design.couple_count() * (legs + contacts);
}

double load_power(double v_oc, double r_internal, double r_load) {
    if (!positive_finite(r_internal)) throw ParameterError("internal resistance must be positive");
    if (!(r_load >= 0.0)) throw ParameterError("load resistance must be non-negative");
    const double total = r_internal + r_load;
    return v_oc * v_oc * r_load / (total * total);
}

double matched_load_power(double v_oc, double r_internal) {
    if (!positive_finite(r_internal)) throw ParameterError("internal resistance must be positive");
    return v_oc * v_oc / (4.0 * r_internal);
}

double efficiency_factor(double power_density, double dt_meas) {
    if (!(dt_meas > 0.0)) throw ParameterError("efficiency factor needs dt_meas > 0");
    return power_density / (dt_meas * dt_meas);
}

OperatingPoint evaluate(const GeneratorDesign& design, double dt_meas) {
    if (!(dt_meas >= 0.0) || !std::isfinite(dt_meas)) throw ParameterError("dt_meas must be non-negative");
    OperatingPoint op;
    op.dt_meas = dt_meas;
    const double r_gen = generator_thermal_resistance(design);
    op.dt_gen = thermal_divider(dt_meas, r_gen, design.interface_resistance);
    op.q_hot = heat_flow(op.dt_gen, r_gen);
    op.q_cold = op.q_hot;
    op.v_oc = open_circuit_voltage(design, op.dt_gen);
    op.r_internal = internal_resistance(design);
    op.p_matched = matched_load_power(op.v_oc, op.r_internal);
    op.power_density = op.p_matched / design.device_area;
    op.eff_factor = dt_meas > 0.0 ? efficiency_factor(op.power_density, dt_meas) : 0.0;
    return op;
}

double calibrate_seebeck(const GeneratorDesign& design, double dt_meas, double target_density) {
    if (!(target_density > 0.0) || !std::isfinite(target_density))
        throw CalibrationError("target power density must be positive");
    if (!(dt_meas > 0.0)) throw CalibrationError("dt_meas must be positive to calibrate");
    try {
        design.validate();
    } catch (const DegenerateDesignError& e) {
        throw CalibrationError(std::string("infeasible geometry: ") + e.what());
    }
    const double r_gen = generator_thermal_resistance(design);
    const double dt_gen = thermal_divider(dt_meas, r_gen, design.interface_resistance);
    const double r_i = internal_resistance(design);
    const double n = design.couple_count();
    return std::sqrt(4.0 * r_i * design.device_area * target_density) / (n * dt_gen);
}

} // namespace mteg
