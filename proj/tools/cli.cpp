#include "cli.hpp"

#include "mteg/calibration.hpp"
#include "mteg/config.hpp"
#include "mteg/csv.hpp"
#include "mteg/ecd.hpp"
#include "mteg/error.hpp"
#include "mteg/optimizer.hpp"
#include "mteg/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace mteg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string config;
    double dt = anchors::dt_meas;
    std::string param;
    double from = 0.0;
    double to = 0.0;
    std::size_t points = 50;
    bool log = false;
    std::string out;
    std::string report;
    double tol_um = 0.1;
    std::optional<double> target;
    std::optional<double> dt_gen;
};

// Display unit of each sweep parameter on the command line.
double sweep_unit(SweepParameter p) {
    switch (p) {
    case SweepParameter::leg_length: return units::micrometre;
    case SweepParameter::contact_resistivity: return units::ohm_square_centimetre;
    case SweepParameter::fill_factor:
    case SweepParameter::interface_resistance:
    case SweepParameter::dt_meas: return 1.0;
    }
    return 1.0;
}

json material_json(const MaterialProps& m) {
    return {{"name", m.name},
            {"seebeck_V_K", m.seebeck},
            {"resistivity_ohm_m", m.resistivity},
            {"thermal_conductivity_W_mK", m.thermal_conductivity},
            {"carrier", std::string(to_string(m.carrier))}};
}

json design_json(const GeneratorDesign& d) {
    return {{"name", d.name},
            {"leg_length_m", d.leg_length},
            {"leg_area_m2", d.leg_area},
            {"fill_factor", d.fill_factor},
            {"device_area_m2", d.device_area},
            {"couple_count", d.couple_count()},
            {"p_material", material_json(d.p_material)},
            {"n_material", material_json(d.n_material)},
            {"matrix_material", material_json(d.matrix_material)},
            {"contact_resistivity_ohm_m2", d.contact_resistivity},
            {"interface_resistance_K_W", d.interface_resistance}};
}

json point_json(const OperatingPoint& op) {
    return {{"dt_meas_K", op.dt_meas},
            {"dt_gen_K", op.dt_gen},
            {"v_oc_V", op.v_oc},
            {"r_internal_ohm", op.r_internal},
            {"p_matched_W", op.p_matched},
            {"power_density_W_m2", op.power_density},
            {"power_density_uW_cm2", units::from_si(op.power_density, units::microwatt_per_square_centimetre)},
            {"q_hot_W", op.q_hot},
            {"q_cold_W", op.q_cold},
            {"eff_factor_W_m2_K2", op.eff_factor},
            {"eff_factor_uW_cm2_K2",
             units::from_si(op.eff_factor, units::microwatt_per_square_centimetre_kelvin2)}};
}

json ecd_json(const EcdConfig& e) {
    return {{"pulse",
             {{"t_pulse_s", e.plan.t_pulse},
              {"t_pause_s", e.plan.t_pause},
              {"j_pulse_A_m2", e.plan.j_pulse},
              {"total_time_s", e.plan.total_time}}},
            {"bath",
             {{"c_teo2_mol_m3", e.bath.c_teo2},
              {"c_bi2o3_mol_m3", e.bath.c_bi2o3},
              {"diffusivity_m2_s", e.bath.diffusivity},
              {"electrons_per_formula", e.bath.electrons_per_formula},
              {"molar_mass_kg_mol", e.bath.molar_mass},
              {"density_kg_m3", e.bath.density},
              {"electrons_per_tracked_ion", e.bath.electrons_per_tracked_ion}}},
            {"mold_depth_m", e.mold_depth},
            {"grid", e.grid},
            {"dt_s", e.dt}};
}

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    void eval() {
        const DesignConfig cfg = load_designs();
        json results = json::array();
        for (const auto& d : cfg.designs)
            results.push_back({{"design", d.name}, {"operating_point", point_json(evaluate(d, opt_.dt))}});
        finish("eval", designs_inputs(cfg), {{"results", results}});
    }

    void sweep_cmd() {
        const GeneratorDesign design = single_design();
        const SweepParameter param = sweep_parameter_from_string(opt_.param);
        const double unit = sweep_unit(param);
        const double lo = units::to_si(opt_.from, unit);
        const double hi = units::to_si(opt_.to, unit);
        const SweepCurve curve =
            sweep(design, param, lo, hi, opt_.points, opt_.log ? Spacing::log : Spacing::linear, opt_.dt);

        std::size_t best = 0;
        for (std::size_t i = 1; i < curve.points.size(); ++i)
            if (curve.points[i].point.p_matched > curve.points[best].point.p_matched) best = i;

        if (!opt_.out.empty()) emit_curve(curve, opt_.out);
        json inputs = {{"design", design_json(design)},
                       {"dt_meas_K", opt_.dt},
                       {"parameter", std::string(to_string(param))},
                       {"from_si", lo},
                       {"to_si", hi},
                       {"points", opt_.points},
                       {"spacing", opt_.log ? "log" : "linear"}};
        json outputs = {{"points", curve.points.size()},
                        {"max_p_matched_value_si", curve.points[best].value},
                        {"max_p_matched_point", point_json(curve.points[best].point)}};
        if (!opt_.out.empty()) outputs["csv"] = opt_.out;
        finish("sweep", inputs, outputs);
    }

    void optimize() {
        const GeneratorDesign design = single_design();
        const double lo = units::to_si(opt_.from, units::micrometre);
        const double hi = units::to_si(opt_.to, units::micrometre);
        const double tol = units::to_si(opt_.tol_um, units::micrometre);
        const OptimizationResult r = optimize_leg_length(design, lo, hi, tol, opt_.dt);
        if (r.non_unimodal)
            warnings_.push_back("power vs leg length is not unimodal on the bracket; result is the pre-scan grid argmax");
        finish("optimize",
               {{"design", design_json(design)},
                {"dt_meas_K", opt_.dt},
                {"lo_m", lo},
                {"hi_m", hi},
                {"tol_m", tol}},
               {{"best_leg_length_m", r.best_value},
                {"best_leg_length_um", units::from_si(r.best_value, units::micrometre)},
                {"iterations", r.iterations},
                {"non_unimodal", r.non_unimodal},
                {"best_point", point_json(r.best_point)}});
    }

    void compare() {
        const DesignConfig cfg = load_designs();
        const ComparisonTable table = compare_designs(cfg.designs, opt_.dt);
        if (!opt_.out.empty()) {
            std::ostringstream text;
            write_comparison_csv(text, table);
            write_file(opt_.out, text.str());
        }
        json rows = json::array();
        for (std::size_t i = 0; i < table.names.size(); ++i) {
            json ratios = json::object();
            for (std::size_t j = 0; j < table.names.size(); ++j) ratios[table.names[j]] = table.ratio[i][j];
            rows.push_back({{"design", table.names[i]},
                            {"operating_point", point_json(table.points[i])},
                            {"power_density_ratio_vs", ratios}});
        }
        json outputs = {{"rows", rows}};
        if (!opt_.out.empty()) outputs["csv"] = opt_.out;
        finish("compare", designs_inputs(cfg), outputs);
    }

    void calibrate() {
        if (opt_.config.empty()) {
            const ReferenceCalibration c = derive_reference_calibration();
            finish("calibrate",
                   {{"reference", "built-in anchors"},
                    {"dt_meas_K", anchors::dt_meas},
                    {"dt_gen_K", anchors::dt_gen},
                    {"interface_resistance_K_W", anchors::interface_resistance},
                    {"annealed_density_W_m2", anchors::annealed_density},
                    {"cu_ni_density_W_m2", anchors::cu_ni_density}},
                   {{"generator_resistance_K_W", c.generator_resistance},
                    {"fill_factor", c.fill_factor},
                    {"bi2te3_couple_seebeck_V_K", c.bi2te3_couple_seebeck},
                    {"bi2te3_p_seebeck_V_K", c.bi2te3_p_seebeck},
                    {"bi2te3_n_seebeck_V_K", c.bi2te3_n_seebeck},
                    {"cu_ni_couple_seebeck_V_K", c.cu_ni_couple_seebeck},
                    {"cu_seebeck_V_K", c.cu_seebeck},
                    {"ni_seebeck_V_K", c.ni_seebeck}});
            return;
        }
        const GeneratorDesign design = single_design();
        if (!opt_.target) throw ParameterError("calibrate with --config needs --target (uW/cm2)");
        const double target = units::to_si(*opt_.target, units::microwatt_per_square_centimetre);
        json inputs = {{"design", design_json(design)}, {"dt_meas_K", opt_.dt}, {"target_density_W_m2", target}};
        json outputs = {{"couple_seebeck_V_K", calibrate_seebeck(design, opt_.dt, target)}};
        if (opt_.dt_gen) {
            inputs["dt_gen_K"] = *opt_.dt_gen;
            outputs["generator_resistance_K_W"] = calibrate_r_gen(opt_.dt, *opt_.dt_gen, design.interface_resistance);
        }
        finish("calibrate", inputs, outputs);
    }

    void ecd_simulate() {
        const EcdConfig e = load_ecd();
        const DepositState s = simulate_diffusion(e.mold_depth, e.bath, e.plan, e.grid, e.dt);
        if (!opt_.out.empty()) {
            std::ostringstream text;
            write_time_series_csv(text, s);
            write_file(opt_.out, text.str());
        }
        if (e.plan.j_pulse > 0.0 &&
            e.plan.t_pulse >= sand_time(e.bath.c_teo2, e.bath.diffusivity, e.bath.electrons_per_tracked_ion,
                                        e.plan.j_pulse))
            warnings_.push_back("pulse is not shorter than Sand's time; the semi-infinite model predicts depletion");
        json outputs = {{"elapsed_s", s.elapsed},
                        {"thickness_m", s.thickness},
                        {"thickness_um", units::from_si(s.thickness, units::micrometre)},
                        {"growth_rate_m_s", s.growth_rate},
                        {"growth_rate_um_h", units::from_si(s.growth_rate, units::micrometre_per_hour)},
                        {"duty_cycle", duty_cycle(e.plan)},
                        {"te_to_bi", s.composition.te_to_bi},
                        {"carrier_class", std::string(to_string(classify_carrier(s.composition)))},
                        {"min_surface_conc_mol_m3", s.min_surface_conc},
                        {"trace_points", s.trace.size()}};
        if (!opt_.out.empty()) outputs["csv"] = opt_.out;
        finish("ecd simulate", {{"ecd", ecd_json(e)}}, outputs);
    }

    void ecd_sand_time() {
        const EcdConfig e = load_ecd();
        const double tau =
            sand_time(e.bath.c_teo2, e.bath.diffusivity, e.bath.electrons_per_tracked_ion, e.plan.j_pulse);
        finish("ecd sand-time", {{"ecd", ecd_json(e)}},
               {{"sand_time_s", tau},
                {"t_pulse_s", e.plan.t_pulse},
                {"pulse_below_sand_time", e.plan.t_pulse < tau},
                {"duty_cycle", duty_cycle(e.plan)},
                {"average_growth_rate_um_h",
                 units::from_si(faraday_growth_rate(e.plan.j_pulse * duty_cycle(e.plan), e.bath),
                                units::micrometre_per_hour)}});
    }

private:
    DesignConfig load() const {
        if (opt_.config.empty()) throw ConfigFileError("", "--config is required");
        return parse_design_config(opt_.config);
    }

    DesignConfig load_designs() const {
        DesignConfig cfg = load();
        if (cfg.designs.empty()) throw ConfigValidationError("design", "configuration has no design");
        return cfg;
    }

    GeneratorDesign single_design() const {
        DesignConfig cfg = load_designs();
        if (cfg.designs.size() != 1)
            throw ConfigValidationError("designs", "this command takes exactly one design");
        return cfg.designs.front();
    }

    EcdConfig load_ecd() const {
        DesignConfig cfg = load();
        if (!cfg.ecd) throw ConfigValidationError("ecd", "configuration has no ecd section");
        return *cfg.ecd;
    }

    json designs_inputs(const DesignConfig& cfg) const {
        json designs = json::array();
        for (const auto& d : cfg.designs) designs.push_back(design_json(d));
        return {{"designs", designs}, {"dt_meas_K", opt_.dt}};
    }

    static void write_file(const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open '" + path + "' for writing");
        f << text;
        f.flush();
        if (!f) throw IoError("failed writing '" + path + "'");
    }

    void finish(const std::string& command, json inputs, json outputs) {
        json report = {{"command", command},
                       {"inputs", std::move(inputs)},
                       {"outputs", std::move(outputs)},
                       {"warnings", warnings_}};
        const std::string text = report.dump(2) + "\n";
        if (opt_.report.empty())
            out_ << text;
        else
            write_file(opt_.report, text);
    }

    const Options& opt_;
    std::ostream& out_;
    std::vector<std::string> warnings_;
};

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Design, optimisation and plating simulation for micro thermoelectric generators", "mteg"};
    app.require_subcommand(1);

    auto add_config = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--config", opt.config, "JSON configuration file");
        if (required) o->required();
    };
    auto add_dt = [&](CLI::App* s) { s->add_option("--dt", opt.dt, "Measured temperature difference, K"); };
    auto add_report = [&](CLI::App* s) { s->add_option("--report", opt.report, "Write the JSON report here"); };

    std::function<void()> action;
    Runner runner(opt, out);

    auto* eval = app.add_subcommand("eval", "Evaluate the operating point of each design");
    add_config(eval, true);
    add_dt(eval);
    add_report(eval);
    eval->callback([&] { action = [&] { runner.eval(); }; });

    auto* sw = app.add_subcommand("sweep", "Sweep one design parameter and write a CSV curve");
    add_config(sw, true);
    add_dt(sw);
    add_report(sw);
    sw->add_option("--param", opt.param,
                   "leg_length [um], fill_factor, contact_resistivity [ohm cm2], interface_resistance [K/W], "
                   "dt_meas [K]")
        ->required();
    sw->add_option("--from", opt.from, "Range start, in the parameter's display unit")->required();
    sw->add_option("--to", opt.to, "Range end, in the parameter's display unit")->required();
    sw->add_option("--points", opt.points, "Number of points (>= 2)");
    sw->add_flag("--log", opt.log, "Logarithmic spacing");
    sw->add_option("--out", opt.out, "CSV output path");
    sw->callback([&] { action = [&] { runner.sweep_cmd(); }; });

    auto* optim = app.add_subcommand("optimize", "Find the leg length with maximum matched-load power");
    add_config(optim, true);
    add_dt(optim);
    add_report(optim);
    optim->add_option("--from", opt.from, "Bracket start, um")->required();
    optim->add_option("--to", opt.to, "Bracket end, um")->required();
    optim->add_option("--tol", opt.tol_um, "Length tolerance, um");
    optim->callback([&] { action = [&] { runner.optimize(); }; });

    auto* cmp = app.add_subcommand("compare", "Compare several designs at one operating point");
    add_config(cmp, true);
    add_dt(cmp);
    add_report(cmp);
    cmp->add_option("--out", opt.out, "CSV output path");
    cmp->callback([&] { action = [&] { runner.compare(); }; });

    auto* cal = app.add_subcommand("calibrate",
                                   "Re-derive the reference calibration, or fit a design's couple Seebeck coefficient");
    add_config(cal, false);
    add_dt(cal);
    add_report(cal);
    cal->add_option("--target", opt.target, "Target power density, uW/cm2");
    cal->add_option("--dt-gen", opt.dt_gen, "Temperature difference across the generator, K");
    cal->callback([&] { action = [&] { runner.calibrate(); }; });

    auto* ecd = app.add_subcommand("ecd", "Pulsed electrodeposition");
    ecd->require_subcommand(1);
    auto* sim = ecd->add_subcommand("simulate", "Simulate ion diffusion and growth over a pulse train");
    add_config(sim, true);
    add_report(sim);
    sim->add_option("--out", opt.out, "Time-series CSV output path");
    sim->callback([&] { action = [&] { runner.ecd_simulate(); }; });
    auto* sand = ecd->add_subcommand("sand-time", "Sand's depletion time for the configured pulse current");
    add_config(sand, true);
    add_report(sand);
    sand->callback([&] { action = [&] { runner.ecd_sand_time(); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    }

    try {
        if (!action) throw ParameterError("no subcommand given");
        action();
        return exit_ok;
    } catch (const DepletionError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const StabilityError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    }
}

} // namespace mteg::cli
