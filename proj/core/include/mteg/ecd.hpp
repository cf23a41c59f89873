#pragma once

#include "mteg/materials.hpp"

#include <cstddef>
#include <vector>

namespace mteg {

inline constexpr double faraday_constant = 96485.0; // C/mol

/// Galvanostatic pulse train: on for t_pulse at j_pulse, off for t_pause.
struct PulsePlan {
    double t_pulse = 0.0;    // s
    double t_pause = 0.0;    // s
    double j_pulse = 0.0;    // A/m², magnitude of the deposition current
    double total_time = 0.0; // s

    void validate() const;
};

/// Plating bath and deposit constants. Concentrations in mol/m³ (= mmol/L).
struct BathSpec {
    double c_teo2 = 80.0;
    double c_bi2o3 = 40.0;
    double diffusivity = 1e-9;          // m²/s, tracked HTeO2+ ion
    double electrons_per_formula = 18.0; // 2 Bi(III) + 3 Te(IV)
    double molar_mass = 0.80076;        // kg/mol, Bi2Te3
    double density = 7700.0;            // kg/m³
    /// Charge passed per tracked ion consumed at the deposit surface.
    /// 6 = 18 e⁻ per formula / 3 Te per formula at 100 % current efficiency.
    double electrons_per_tracked_ion = 6.0;

    void validate() const;
};

double duty_cycle(const PulsePlan& plan);

/// Faraday growth velocity of the deposit at average current `j_avg`, m/s.
double faraday_growth_rate(double j_avg, const BathSpec& bath);

double time_to_thickness(double target, const PulsePlan& plan, const BathSpec& bath);

/// Time for the surface concentration to reach zero under constant current
/// in the semi-infinite diffusion model (Sand's equation).
double sand_time(double c_bulk, double diffusivity, double n_e, double j);

/// Piecewise-linear Te:Bi ratio over the Bi2O3 window [20, 60] mol/m³:
/// 20 → 2.1, 40 → 1.5, 60 → 0.8. Throws ExtrapolationError outside it.
StoichiometryRatio stoichiometry_from_bath(double c_bi2o3);

inline constexpr double bath_window_lo = 20.0;
inline constexpr double bath_window_hi = 60.0;

struct TracePoint {
    double t = 0.0;            // s
    double thickness = 0.0;    // m
    double surface_conc = 0.0; // mol/m³
};

struct DepositState {
    double elapsed = 0.0;           // s
    double thickness = 0.0;         // m
    double growth_rate = 0.0;       // m/s, averaged over the run
    StoichiometryRatio composition;
    double min_surface_conc = 0.0;  // mol/m³
    std::vector<double> depth;      // m from the deposit surface
    std::vector<double> profile;    // mol/m³ at `depth`
    std::vector<TracePoint> trace;
};

struct SimulationOptions {
    enum class Trace { phase_ends, every_step };

    Trace trace = Trace::phase_ends;
};

/// Pulse-train diffusion of the tracked ion in a mold of depth `mold_depth`.
/// The mouth is held at the bulk concentration; the deposit surface draws
/// j/(n·F) during pulses and nothing during pauses. `grid` nodes, time step at
/// most `dt` (phases are split into equal sub-steps no larger than it).
/// Throws StabilityError if dt is above the explicit bound and
/// DepletionError if the surface concentration would turn negative.
DepositState simulate_diffusion(double mold_depth, const BathSpec& bath, const PulsePlan& plan,
                                std::size_t grid, double dt, const SimulationOptions& options = {});

} // namespace mteg
