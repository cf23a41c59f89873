#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mteg {

/// Boundary condition at one end of a 1-D domain. For `flux`, `value` is the
/// molar flux into the domain (mol/(m²·s)); negative values remove material.
struct Boundary {
    enum class Kind { fixed_value, flux };

    Kind kind = Kind::flux;
    double value = 0.0;

    static Boundary fixed(double concentration) { return {Kind::fixed_value, concentration}; }
    static Boundary inflow(double flux) { return {Kind::flux, flux}; }
    static Boundary closed() { return {Kind::flux, 0.0}; }
};

/// Explicit (FTCS) solver for c_t = D c_xx on a uniform node grid. Flux
/// boundaries use a half-cell balance, so with both ends closed the
/// trapezoidal content is conserved up to rounding.
class DiffusionSolver1D {
public:
    DiffusionSolver1D(double length, std::vector<double> initial, double diffusivity);

    /// Largest step for which the scheme is stable and monotone, 0.5·Δx²/D.
    double max_stable_step() const { return 0.5 * dx_ * dx_ / diffusivity_; }
    double spacing() const { return dx_; }

    /// Throws StabilityError if dt exceeds max_stable_step().
    void step(double dt, Boundary left, Boundary right);

    std::span<const double> values() const { return values_; }

    /// ∫ c dx by the trapezoidal rule, mol/m².
    double total_content() const;

private:
    double dx_;
    double diffusivity_;
    std::vector<double> values_;
    std::vector<double> scratch_;
};

} // namespace mteg
