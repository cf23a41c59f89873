#pragma once

#include "mteg/ecd.hpp"
#include "mteg/teg_model.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace mteg {

struct EcdConfig {
    PulsePlan plan;
    BathSpec bath;
    double mold_depth = 300e-6; // m
    std::size_t grid = 200;
    double dt = 1e-3;           // s
};

/// Parsed configuration document. Every number is SI.
struct DesignConfig {
    std::vector<GeneratorDesign> designs;
    std::optional<EcdConfig> ecd;
};

/// JSON configuration with unit-suffixed keys. A design either names a
/// reference preset ("preset": "bi2te3_annealed") and overrides fields, or
/// lists every field. device_area_cm2 defaults to 1; bath diffusivity to 1e-9.
/// Unknown keys are rejected.
///
/// Throws ConfigFileError (missing/unreadable), ConfigSyntaxError (not JSON)
/// or ConfigValidationError (bad field or invariant), each with a field path.
DesignConfig parse_design_config(const std::filesystem::path& path);
DesignConfig parse_design_config_text(std::string_view text);

/// Convenience for single-design documents.
GeneratorDesign parse_design(const std::filesystem::path& path);

} // namespace mteg
