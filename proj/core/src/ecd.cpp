#include "mteg/ecd.hpp"

#include "mteg/diffusion.hpp"
#include "mteg/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace mteg {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

} // namespace

void PulsePlan::validate() const {
    if (!positive_finite(t_pulse)) throw ParameterError("t_pulse must be positive");
    if (!(t_pause >= 0.0) || !std::isfinite(t_pause)) throw ParameterError("t_pause must be non-negative");
    if (!(j_pulse >= 0.0) || !std::isfinite(j_pulse))
        throw ParameterError("j_pulse must be non-negative");
    if (!(total_time >= 0.0) || !std::isfinite(total_time))
        throw ParameterError("total_time must be non-negative");
}

void BathSpec::validate() const {
    if (!positive_finite(c_teo2)) throw ParameterError("bath c_teo2 must be positive");
    if (!positive_finite(c_bi2o3)) throw ParameterError("bath c_bi2o3 must be positive");
    if (!positive_finite(diffusivity)) throw ParameterError("bath diffusivity must be positive");
    if (!positive_finite(electrons_per_formula))
        throw ParameterError("bath electrons_per_formula must be positive");
    if (!positive_finite(molar_mass)) throw ParameterError("bath molar_mass must be positive");
    if (!positive_finite(density)) throw ParameterError("bath density must be positive");
    if (!positive_finite(electrons_per_tracked_ion))
        throw ParameterError("bath electrons_per_tracked_ion must be positive");
}

double duty_cycle(const PulsePlan& plan) {
    plan.validate();
    return plan.t_pulse / (plan.t_pulse + plan.t_pause);
}

double faraday_growth_rate(double j_avg, const BathSpec& bath) {
    bath.validate();
    if (!(j_avg >= 0.0)) throw ParameterError("average current density must be non-negative");
    return j_avg * bath.molar_mass / (bath.electrons_per_formula * faraday_constant * bath.density);
}

double time_to_thickness(double target, const PulsePlan& plan, const BathSpec& bath) {
    if (!(target >= 0.0)) throw ParameterError("target thickness must be non-negative");
    const double rate = faraday_growth_rate(plan.j_pulse * duty_cycle(plan), bath);
    if (!(rate > 0.0)) throw ParameterError("growth rate is zero; target thickness is never reached");
    return target / rate;
}

double sand_time(double c_bulk, double diffusivity, double n_e, double j) {
    if (!positive_finite(c_bulk) || !positive_finite(diffusivity) || !positive_finite(n_e) ||
        !positive_finite(j))
        throw ParameterError("Sand's time needs positive concentration, diffusivity, charge number and current");
    const double q = n_e * faraday_constant * c_bulk;
    return std::numbers::pi * diffusivity * q * q / (4.0 * j * j);
}

StoichiometryRatio stoichiometry_from_bath(double c_bi2o3) {
    // Te-rich recipes use 20-40 mol/m³ Bi2O3, Bi-rich ones 40-60 mol/m³.
    constexpr double c_mid = 40.0;
    constexpr double te_rich = 2.1;
    constexpr double bi_rich = 0.8;
    if (!(c_bi2o3 >= bath_window_lo && c_bi2o3 <= bath_window_hi)) {
        std::ostringstream msg;
        msg << "Bi2O3 concentration " << c_bi2o3 << " mol/m^3 is outside the characterised window ["
            << bath_window_lo << ", " << bath_window_hi << "]";
        throw ExtrapolationError(msg.str());
    }
    const double mid = StoichiometryRatio::stoichiometric;
    if (c_bi2o3 <= c_mid)
        return {te_rich + (mid - te_rich) * (c_bi2o3 - bath_window_lo) / (c_mid - bath_window_lo)};
    return {mid + (bi_rich - mid) * (c_bi2o3 - c_mid) / (bath_window_hi - c_mid)};
}

DepositState simulate_diffusion(double mold_depth, const BathSpec& bath, const PulsePlan& plan,
                                std::size_t grid, double dt, const SimulationOptions& options) {
    bath.validate();
    plan.validate();
    if (!positive_finite(mold_depth)) throw ParameterError("mold depth must be positive");
    if (grid < 16) throw ParameterError("diffusion grid needs at least 16 nodes");
    if (!positive_finite(dt)) throw ParameterError("time step must be positive");

    const double c_bulk = bath.c_teo2;
    DiffusionSolver1D solver(mold_depth, std::vector<double>(grid, c_bulk), bath.diffusivity);
    if (dt > solver.max_stable_step()) {
        std::ostringstream msg;
        msg << "time step " << dt << " s exceeds the explicit stability bound " << solver.max_stable_step()
            << " s (0.5*dx^2/D with dx = " << solver.spacing() << " m)";
        throw StabilityError(msg.str());
    }

    DepositState state;
    state.composition = stoichiometry_from_bath(bath.c_bi2o3);
    state.min_surface_conc = c_bulk;

    const double pulse_flux = plan.j_pulse / (bath.electrons_per_tracked_ion * faraday_constant);
    const double pulse_rate = faraday_growth_rate(plan.j_pulse, bath);
    const Boundary mouth = Boundary::fixed(c_bulk);

    double t = 0.0;
    state.trace.push_back({0.0, 0.0, c_bulk});

    auto run_phase = [&](double end, bool on) {
        const double length = end - t;
        if (!(length > 0.0)) return;
        const auto steps = static_cast<std::size_t>(std::ceil(length / dt));
        const double h = length / static_cast<double>(steps);
        const Boundary surface = Boundary::inflow(on ? -pulse_flux : 0.0);
        for (std::size_t s = 0; s < steps; ++s) {
            const double before = solver.values()[0];
            solver.step(h, surface, mouth);
            const double after = solver.values()[0];
            if (after < 0.0) {
                // Linear estimate of the zero crossing inside the step.
                const double t_zero = t + h * before / (before - after);
                std::ostringstream msg;
                msg << "surface concentration depleted at t = " << t_zero << " s";
                throw DepletionError(t_zero, msg.str());
            }
            t += h;
            if (on) state.thickness += pulse_rate * h;
            state.min_surface_conc = std::min(state.min_surface_conc, after);
            if (options.trace == SimulationOptions::Trace::every_step)
                state.trace.push_back({t, state.thickness, after});
        }
        t = end;
        if (options.trace == SimulationOptions::Trace::phase_ends)
            state.trace.push_back({t, state.thickness, solver.values()[0]});
    };

    // Phase boundaries are computed from the cycle index so long runs do not
    // accumulate drift in the schedule.
    const double period = plan.t_pulse + plan.t_pause;
    for (std::size_t cycle = 0;; ++cycle) {
        const double start = static_cast<double>(cycle) * period;
        if (start >= plan.total_time) break;
        const double pulse_end = std::min(start + plan.t_pulse, plan.total_time);
        run_phase(pulse_end, true);
        const double pause_end = std::min(start + period, plan.total_time);
        run_phase(pause_end, false);
    }

    state.elapsed = t;
    state.growth_rate = t > 0.0 ? state.thickness / t : 0.0;
    const auto values = solver.values();
    state.profile.assign(values.begin(), values.end());
    state.depth.resize(grid);
    for (std::size_t i = 0; i < grid; ++i) state.depth[i] = solver.spacing() * static_cast<double>(i);
    return state;
}

} // namespace mteg
