#include "mteg/optimizer.hpp"

#include "mteg/csv.hpp"
#include "mteg/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

namespace mteg {

namespace {

constexpr double kInvPhi = 0.6180339887498948482; // (sqrt(5) - 1) / 2

double matched_power_at(const GeneratorDesign& design, double length, double dt_meas) {
    return evaluate(with_parameter(design, SweepParameter::leg_length, length), dt_meas).p_matched;
}

} // namespace

std::string_view to_string(SweepParameter parameter) {
    switch (parameter) {
    case SweepParameter::leg_length: return "leg_length";
    case SweepParameter::fill_factor: return "fill_factor";
    case SweepParameter::contact_resistivity: return "contact_resistivity";
    case SweepParameter::interface_resistance: return "interface_resistance";
    case SweepParameter::dt_meas: return "dt_meas";
    }
    return "?";
}

SweepParameter sweep_parameter_from_string(std::string_view name) {
    for (auto p : {SweepParameter::leg_length, SweepParameter::fill_factor,
                   SweepParameter::contact_resistivity, SweepParameter::interface_resistance,
                   SweepParameter::dt_meas})
        if (to_string(p) == name) return p;
    throw ParameterError("unknown sweep parameter '" + std::string(name) +
                         "' (expected leg_length, fill_factor, contact_resistivity, "
                         "interface_resistance, dt_meas)");
}

GeneratorDesign with_parameter(GeneratorDesign design, SweepParameter parameter, double value) {
    switch (parameter) {
    case SweepParameter::leg_length: design.leg_length = value; break;
    case SweepParameter::fill_factor: design.fill_factor = value; break;
    case SweepParameter::contact_resistivity: design.contact_resistivity = value; break;
    case SweepParameter::interface_resistance: design.interface_resistance = value; break;
    case SweepParameter::dt_meas: break;
    }
    return design;
}

std::vector<double> spaced_values(double lo, double hi, std::size_t n_points, Spacing spacing) {
    if (n_points < 2) throw ParameterError("a sweep needs at least 2 points");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw ParameterError("sweep range needs lo < hi");
    if (spacing == Spacing::log && !(lo > 0.0))
        throw ParameterError("log spacing needs lo > 0");

    std::vector<double> xs(n_points);
    const double last = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = static_cast<double>(i) / last;
        xs[i] = spacing == Spacing::log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    // Pin the endpoints exactly; pow/lerp can land one ulp off.
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

SweepCurve sweep(const GeneratorDesign& design, SweepParameter parameter, double lo, double hi,
                 std::size_t n_points, Spacing spacing, double dt_meas, unsigned threads) {
    const std::vector<double> xs = spaced_values(lo, hi, n_points, spacing);

    SweepCurve curve;
    curve.parameter = parameter;
    curve.points.resize(xs.size());
    std::vector<std::exception_ptr> failures(xs.size());

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const double dt = parameter == SweepParameter::dt_meas ? xs[i] : dt_meas;
                curve.points[i] = {xs[i], evaluate(with_parameter(design, parameter, xs[i]), dt)};
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, xs.size());
    if (workers == 1) {
        run(0, xs.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (xs.size() + workers - 1) / workers;
        for (std::size_t begin = 0; begin < xs.size(); begin += chunk)
            pool.emplace_back(run, begin, std::min(begin + chunk, xs.size()));
    }

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!failures[i]) continue;
        const std::string at = std::string(to_string(parameter)) + " = " + format_number(xs[i]);
        try {
            std::rethrow_exception(failures[i]);
        } catch (const std::exception& e) {
            throw EvaluationError(at, "sweep failed at " + at + ": " + e.what());
        }
    }
    return curve;
}

ScalarMaximum maximize_unimodal(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo > 0.0) || !(lo < hi)) throw ParameterError("search bracket needs 0 < lo < hi");
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");

    const std::vector<double> xs = spaced_values(lo, hi, prescan_points, Spacing::log);
    std::vector<double> fs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = f(xs[i]);

    const auto k = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());
    bool unimodal = true;
    for (std::size_t i = 1; i <= k && unimodal; ++i) unimodal = fs[i] >= fs[i - 1];
    for (std::size_t i = k + 1; i < fs.size() && unimodal; ++i) unimodal = fs[i] <= fs[i - 1];

    ScalarMaximum out;
    if (!unimodal) {
        out.x = xs[k];
        out.value = fs[k];
        out.non_unimodal = true;
        return out;
    }

    double a = xs[k == 0 ? 0 : k - 1];
    double b = xs[std::min(k + 1, xs.size() - 1)];
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        ++out.iterations;
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }

    // A maximum at the edge of the range converges to within tol of it;
    // report the edge itself in that case.
    out.x = 0.5 * (a + b);
    out.value = f(out.x);
    for (double edge : {lo, hi}) {
        const double v = edge == xs.front() ? fs.front() : fs.back();
        if (v > out.value) {
            out.x = edge;
            out.value = v;
        }
    }
    return out;
}

OptimizationResult optimize_leg_length(const GeneratorDesign& design, double lo, double hi,
                                       double tol, double dt_meas) {
    if (!(lo > 0.0) || !(lo < hi)) throw ParameterError("leg length bracket needs 0 < lo < hi");
    if (!(dt_meas > 0.0)) throw ParameterError("optimisation needs dt_meas > 0");

    const ScalarMaximum m = maximize_unimodal(
        [&](double length) { return matched_power_at(design, length, dt_meas); }, lo, hi, tol);

    OptimizationResult result;
    result.lo = lo;
    result.hi = hi;
    result.best_value = m.x;
    result.iterations = m.iterations;
    result.non_unimodal = m.non_unimodal;
    result.best_point = evaluate(with_parameter(design, SweepParameter::leg_length, m.x), dt_meas);
    return result;
}

ComparisonTable compare_designs(std::span<const GeneratorDesign> designs, double dt_meas) {
    if (designs.size() < 2) throw ParameterError("comparison needs at least two designs");
    if (!(dt_meas > 0.0)) throw ParameterError("comparison needs dt_meas > 0");

    ComparisonTable table;
    for (std::size_t i = 0; i < designs.size(); ++i) {
        const auto& d = designs[i];
        const std::string name = d.name.empty() ? "design " + std::to_string(i) : d.name;
        try {
            table.points.push_back(evaluate(d, dt_meas));
        } catch (const std::exception& e) {
            throw EvaluationError(name, "design '" + name + "': " + e.what());
        }
        table.names.push_back(name);
    }
    const std::size_t n = designs.size();
    table.ratio.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.ratio[i][j] = table.points[i].power_density / table.points[j].power_density;
    return table;
}

} // namespace mteg
