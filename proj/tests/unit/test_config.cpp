#include "support.hpp"

#include "mteg/calibration.hpp"
#include "mteg/config.hpp"
#include "mteg/csv.hpp"
#include "mteg/error.hpp"
#include "mteg/units.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

using namespace mteg;

namespace {

const std::filesystem::path configs = MTEG_CONFIG_DIR;

std::string design_doc(const std::string& fields) {
    return R"({"design": {"preset": "bi2te3_annealed")" + (fields.empty() ? "" : ", " + fields) + "}}";
}

template <class E>
std::string field_of(const std::string& text) {
    try {
        parse_design_config_text(text);
    } catch (const E& e) {
        return e.field_path();
    }
    FAIL("no error for: " << text);
    return {};
}

} // namespace

TEST_CASE("shipped configurations parse") {
    const GeneratorDesign preset = parse_design(configs / "bi2te3_annealed.json");
    const GeneratorDesign ref = reference_design("bi2te3_annealed");
    CHECK(preset.leg_length == ref.leg_length);
    CHECK(preset.fill_factor == ref.fill_factor);
    CHECK(preset.p_material == ref.p_material);
    CHECK(preset.n_material == ref.n_material);
    CHECK(preset.contact_resistivity == ref.contact_resistivity);

    const GeneratorDesign explicit_design = parse_design(configs / "bi2te3_explicit.json");
    CHECK(explicit_design.leg_length == doctest::Approx(200e-6).epsilon(1e-15));
    CHECK(explicit_design.fill_factor == preset.fill_factor);
    CHECK(evaluate(explicit_design, 40.0).power_density ==
          doctest::Approx(evaluate(preset, 40.0).power_density).epsilon(1e-12));

    const GeneratorDesign inline_design = parse_design(configs / "inline_materials.json");
    CHECK(inline_design.p_material.seebeck == doctest::Approx(195e-6).epsilon(1e-15));
    CHECK(inline_design.n_material.carrier == Carrier::n);

    const DesignConfig cmp = parse_design_config(configs / "comparison.json");
    CHECK(cmp.designs.size() == 3);

    const DesignConfig ecd = parse_design_config(configs / "ecd_pulsed.json");
    REQUIRE(ecd.ecd);
    CHECK(ecd.ecd->plan.t_pulse == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(ecd.ecd->plan.j_pulse == doctest::Approx(1200.0).epsilon(1e-15));
    CHECK(ecd.ecd->mold_depth == doctest::Approx(300e-6).epsilon(1e-15));
    CHECK(ecd.ecd->grid == 201);
    CHECK(ecd.ecd->bath.diffusivity == 1e-9);
}

TEST_CASE("preset overrides") {
    const DesignConfig cfg = parse_design_config_text(design_doc(R"("leg_length_um": 150, "name": "short")"));
    REQUIRE(cfg.designs.size() == 1);
    CHECK(cfg.designs[0].name == "short");
    CHECK(cfg.designs[0].leg_length == doctest::Approx(150e-6).epsilon(1e-15));
    CHECK(cfg.designs[0].fill_factor == reference_design("bi2te3_annealed").fill_factor);
}

TEST_CASE("validation errors name the offending field") {
    CHECK(field_of<ConfigValidationError>(design_doc(R"("leg_length_um": -5)")).find("leg_length") !=
          std::string::npos);
    CHECK(field_of<ConfigValidationError>(design_doc(R"("fill_factor": 1.5)")).find("fill_factor") !=
          std::string::npos);
    CHECK(field_of<ConfigValidationError>(design_doc(R"("leg_length_um": "long")")).find("leg_length") !=
          std::string::npos);
    CHECK(field_of<ConfigValidationError>(design_doc(R"("p_material": "unobtainium")")).find("p_material") !=
          std::string::npos);
    CHECK(field_of<ConfigValidationError>(R"({"designs": [{"preset": "cu_ni"}, {"preset": "nope"}]})")
              .find("designs[1]") != std::string::npos);
    CHECK(field_of<ConfigValidationError>(R"({"design": {"name": "x", "leg_length_um": 200}})") != "");

    try {
        parse_design_config_text(design_doc(R"("leg_lenght_um": 150)"));
        FAIL("unknown key accepted");
    } catch (const ConfigValidationError& e) {
        CHECK(std::string(e.what()).find("leg_lenght_um") != std::string::npos);
    }
}

TEST_CASE("file and syntax errors") {
    CHECK_THROWS_AS(parse_design_config(configs / "does_not_exist.json"), ConfigFileError);
    CHECK_THROWS_AS(parse_design_config_text("{\"design\": "), ConfigSyntaxError);
    CHECK_THROWS_AS(parse_design_config_text("[]"), ConfigValidationError);
    CHECK_THROWS_AS(parse_design_config_text("{}"), ConfigValidationError);
    CHECK_THROWS_AS(parse_design_config_text(R"({"ecd": {"mold_depth_um": 300}})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_design_config_text(
                        R"({"ecd": {"pulse": {"t_pulse_ms": 50, "t_pause_s": 4.5, "j_pulse_mA_cm2": 120,
                        "total_time_s": 10}, "bath": {"c_teo2_mol_m3": 80, "c_bi2o3_mol_m3": 30},
                        "mold_depth_um": 300, "grid": 8, "dt_s": 0.001}})"),
                    ConfigValidationError);
}

TEST_CASE("display units round-trip through the parser") {
    test::Rng rng(31);
    for (int i = 0; i < 250; ++i) {
        const double L_um = rng.log_uniform(10.0, 2000.0);
        const double A_um2 = rng.log_uniform(100.0, 1e5);
        const double rc = rng.log_uniform(1e-10, 1e-5);
        const double dev = rng.log_uniform(0.01, 10.0);
        const std::string doc = design_doc("\"leg_length_um\": " + format_number(L_um) +
                                           ", \"leg_area_um2\": " + format_number(A_um2) +
                                           ", \"contact_resistivity_ohm_cm2\": " + format_number(rc) +
                                           ", \"device_area_cm2\": " + format_number(dev) +
                                           ", \"fill_factor\": 0.5");
        const GeneratorDesign d = parse_design_config_text(doc).designs.at(0);
        CHECK(test::rel_close(units::from_si(d.leg_length, units::micrometre), L_um, 1e-12));
        CHECK(test::rel_close(units::from_si(d.leg_area, units::square_micrometre), A_um2, 1e-12));
        CHECK(test::rel_close(units::from_si(d.contact_resistivity, units::ohm_square_centimetre), rc, 1e-12));
        CHECK(test::rel_close(units::from_si(d.device_area, units::square_centimetre), dev, 1e-12));
    }
}
