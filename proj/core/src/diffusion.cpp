#include "mteg/diffusion.hpp"

#include "mteg/error.hpp"

#include <cmath>
#include <string>

namespace mteg {

DiffusionSolver1D::DiffusionSolver1D(double length, std::vector<double> initial, double diffusivity)
    : dx_(0.0), diffusivity_(diffusivity), values_(std::move(initial)) {
    if (!(length > 0.0)) throw ParameterError("diffusion domain length must be positive");
    if (!(diffusivity > 0.0)) throw ParameterError("diffusivity must be positive");
    if (values_.size() < 3) throw ParameterError("diffusion grid needs at least 3 nodes");
    dx_ = length / static_cast<double>(values_.size() - 1);
    scratch_.resize(values_.size());
}

void DiffusionSolver1D::step(double dt, Boundary left, Boundary right) {
    if (!(dt > 0.0)) throw ParameterError("time step must be positive");
    if (dt > max_stable_step())
        throw StabilityError("time step " + std::to_string(dt) + " s exceeds the explicit stability bound " +
                             std::to_string(max_stable_step()) + " s (0.5*dx^2/D)");

    const double r = diffusivity_ * dt / (dx_ * dx_);
    const std::size_t last = values_.size() - 1;
    const auto& c = values_;
    auto& next = scratch_;

    for (std::size_t i = 1; i < last; ++i)
        next[i] = c[i] + r * ((c[i + 1] - c[i]) - (c[i] - c[i - 1]));

    // Half cell of width dx/2: (dx/2)·dc/dt = D·(c1 − c0)/dx + q.
    if (left.kind == Boundary::Kind::fixed_value)
        next[0] = left.value;
    else
        next[0] = c[0] + 2.0 * r * (c[1] - c[0]) + 2.0 * dt * left.value / dx_;

    if (right.kind == Boundary::Kind::fixed_value)
        next[last] = right.value;
    else
        next[last] = c[last] + 2.0 * r * (c[last - 1] - c[last]) + 2.0 * dt * right.value / dx_;

    values_.swap(scratch_);
}

double DiffusionSolver1D::total_content() const {
    double sum = 0.5 * (values_.front() + values_.back());
    for (std::size_t i = 1; i + 1 < values_.size(); ++i) sum += values_[i];
    return sum * dx_;
}

} // namespace mteg
