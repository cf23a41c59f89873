#include "mteg/config.hpp"

#include "mteg/calibration.hpp"
#include "mteg/error.hpp"
#include "mteg/units.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

namespace mteg {

namespace {

using json = nlohmann::json;

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

// Walks one JSON object, tracking which keys were consumed so that leftovers
// can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path, std::initializer_list<std::string_view> allowed)
        : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigValidationError(path_, "expected an object");
        for (const auto& [key, _] : node_.items()) {
            bool known = false;
            for (auto a : allowed) known = known || key == a;
            if (!known) throw ConfigValidationError(join(path_, key), "unknown key '" + key + "'");
        }
    }

    bool has(const std::string& key) const { return node_.contains(key); }
    const json& raw(const std::string& key) const { return node_.at(key); }
    std::string path(const std::string& key) const { return join(path_, key); }

    double number(const std::string& key) const {
        if (!has(key)) throw ConfigValidationError(path(key), "missing required field");
        const json& v = node_.at(key);
        if (!v.is_number()) throw ConfigValidationError(path(key), "expected a number");
        return v.get<double>();
    }

    double number_or(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    double positive(const std::string& key) const {
        const double v = number(key);
        if (!(v > 0.0)) throw ConfigValidationError(path(key), "must be positive (got " + show(v) + ")");
        return v;
    }

    double positive_or(const std::string& key, double fallback) const {
        return has(key) ? positive(key) : fallback;
    }

    double non_negative(const std::string& key) const {
        const double v = number(key);
        if (!(v >= 0.0)) throw ConfigValidationError(path(key), "must be non-negative (got " + show(v) + ")");
        return v;
    }

    std::string text(const std::string& key) const {
        if (!has(key)) throw ConfigValidationError(path(key), "missing required field");
        const json& v = node_.at(key);
        if (!v.is_string()) throw ConfigValidationError(path(key), "expected a string");
        return v.get<std::string>();
    }

private:
    static std::string show(double v) {
        std::ostringstream s;
        s << v;
        return s.str();
    }

    const json& node_;
    std::string path_;
};

template <typename Fn>
auto as_validation(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigValidationError(path, e.what());
    }
}

MaterialProps parse_material(const json& node, const std::string& path) {
    if (node.is_string())
        return as_validation(path, [&] { return lookup_material(node.get<std::string>()); });

    ObjectReader r(node, path,
                   {"name", "seebeck_uV_K", "resistivity_ohm_m", "thermal_conductivity_W_mK", "carrier"});
    MaterialProps m;
    m.name = r.has("name") ? r.text("name") : std::string();
    m.seebeck = units::to_si(r.number("seebeck_uV_K"), units::microvolt_per_kelvin);
    m.resistivity = r.positive("resistivity_ohm_m");
    const double lambda = r.number("thermal_conductivity_W_mK");
    if (!(lambda >= 0.0))
        throw ConfigValidationError(r.path("thermal_conductivity_W_mK"), "must be non-negative");
    m.thermal_conductivity = lambda;
    m.carrier = as_validation(r.path("carrier"), [&] { return carrier_from_string(r.text("carrier")); });
    as_validation(path, [&] { m.validate(); });
    return m;
}

GeneratorDesign parse_generator(const json& node, const std::string& path) {
    ObjectReader r(node, path,
                   {"preset", "name", "leg_length_um", "leg_area_um2", "fill_factor", "device_area_cm2",
                    "p_material", "n_material", "matrix_material", "contact_resistivity_ohm_cm2",
                    "interface_resistance_K_W"});

    const bool from_preset = r.has("preset");
    GeneratorDesign d;
    if (from_preset)
        d = as_validation(r.path("preset"), [&] { return reference_design(r.text("preset")); });

    auto need = [&](const char* key) {
        if (!from_preset && !r.has(key)) throw ConfigValidationError(r.path(key), "missing required field");
        return r.has(key);
    };

    if (r.has("name")) d.name = r.text("name");
    if (need("leg_length_um")) d.leg_length = units::to_si(r.positive("leg_length_um"), units::micrometre);
    if (need("leg_area_um2")) d.leg_area = units::to_si(r.positive("leg_area_um2"), units::square_micrometre);
    if (need("fill_factor")) {
        d.fill_factor = r.number("fill_factor");
        if (!(d.fill_factor > 0.0 && d.fill_factor <= 1.0))
            throw ConfigValidationError(r.path("fill_factor"), "must lie in (0, 1]");
    }
    if (!from_preset) d.device_area = reference_geometry::device_area;
    if (r.has("device_area_cm2"))
        d.device_area = units::to_si(r.positive("device_area_cm2"), units::square_centimetre);
    if (need("p_material")) d.p_material = parse_material(r.raw("p_material"), r.path("p_material"));
    if (need("n_material")) d.n_material = parse_material(r.raw("n_material"), r.path("n_material"));
    if (need("matrix_material"))
        d.matrix_material = parse_material(r.raw("matrix_material"), r.path("matrix_material"));
    if (need("contact_resistivity_ohm_cm2"))
        d.contact_resistivity =
            units::to_si(r.non_negative("contact_resistivity_ohm_cm2"), units::ohm_square_centimetre);
    if (need("interface_resistance_K_W")) d.interface_resistance = r.non_negative("interface_resistance_K_W");

    as_validation(path, [&] { d.validate(); });
    return d;
}

EcdConfig parse_ecd(const json& node, const std::string& path) {
    ObjectReader r(node, path, {"pulse", "bath", "mold_depth_um", "grid", "dt_s"});
    EcdConfig e;

    if (!r.has("pulse")) throw ConfigValidationError(r.path("pulse"), "missing required field");
    ObjectReader p(r.raw("pulse"), r.path("pulse"), {"t_pulse_ms", "t_pause_s", "j_pulse_mA_cm2", "total_time_s"});
    e.plan.t_pulse = units::to_si(p.positive("t_pulse_ms"), units::millisecond);
    e.plan.t_pause = p.non_negative("t_pause_s");
    e.plan.j_pulse = units::to_si(p.non_negative("j_pulse_mA_cm2"), units::milliamp_per_square_centimetre);
    e.plan.total_time = p.non_negative("total_time_s");

    if (!r.has("bath")) throw ConfigValidationError(r.path("bath"), "missing required field");
    ObjectReader b(r.raw("bath"), r.path("bath"),
                   {"c_teo2_mol_m3", "c_bi2o3_mol_m3", "diffusivity_m2_s", "electrons_per_formula",
                    "molar_mass_g_mol", "density_g_cm3", "electrons_per_tracked_ion"});
    const BathSpec defaults;
    e.bath.c_teo2 = b.positive("c_teo2_mol_m3");
    e.bath.c_bi2o3 = b.positive("c_bi2o3_mol_m3");
    e.bath.diffusivity = b.positive_or("diffusivity_m2_s", defaults.diffusivity);
    e.bath.electrons_per_formula = b.positive_or("electrons_per_formula", defaults.electrons_per_formula);
    e.bath.molar_mass = b.has("molar_mass_g_mol")
                            ? units::to_si(b.positive("molar_mass_g_mol"), units::gram_per_mole)
                            : defaults.molar_mass;
    e.bath.density = b.has("density_g_cm3")
                         ? units::to_si(b.positive("density_g_cm3"), units::gram_per_cubic_centimetre)
                         : defaults.density;
    e.bath.electrons_per_tracked_ion =
        b.positive_or("electrons_per_tracked_ion", defaults.electrons_per_tracked_ion);

    e.mold_depth = units::to_si(r.positive("mold_depth_um"), units::micrometre);
    const double grid = r.number("grid");
    if (!(grid >= 16.0) || grid != static_cast<double>(static_cast<long long>(grid)))
        throw ConfigValidationError(r.path("grid"), "must be an integer >= 16");
    e.grid = static_cast<std::size_t>(grid);
    e.dt = r.positive("dt_s");
    return e;
}

} // namespace

DesignConfig parse_design_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigSyntaxError("", std::string("malformed JSON: ") + e.what());
    }

    ObjectReader top(doc, "", {"design", "designs", "ecd"});
    DesignConfig cfg;
    if (top.has("design") && top.has("designs"))
        throw ConfigValidationError("designs", "give either 'design' or 'designs', not both");
    if (top.has("design")) cfg.designs.push_back(parse_generator(top.raw("design"), "design"));
    if (top.has("designs")) {
        const json& list = top.raw("designs");
        if (!list.is_array() || list.empty())
            throw ConfigValidationError("designs", "expected a non-empty array");
        for (std::size_t i = 0; i < list.size(); ++i)
            cfg.designs.push_back(parse_generator(list[i], "designs[" + std::to_string(i) + "]"));
    }
    if (top.has("ecd")) cfg.ecd = parse_ecd(top.raw("ecd"), "ecd");
    if (cfg.designs.empty() && !cfg.ecd)
        throw ConfigValidationError("", "configuration defines neither a design nor an ecd section");
    return cfg;
}

DesignConfig parse_design_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigFileError("", "cannot open configuration file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw ConfigFileError("", "cannot read configuration file '" + path.string() + "'");
    return parse_design_config_text(buffer.str());
}

GeneratorDesign parse_design(const std::filesystem::path& path) {
    DesignConfig cfg = parse_design_config(path);
    if (cfg.designs.size() != 1)
        throw ConfigValidationError("design", "expected exactly one design, found " +
                                                  std::to_string(cfg.designs.size()));
    return cfg.designs.front();
}

} // namespace mteg
