#pragma once

#include "mteg/ecd.hpp"
#include "mteg/optimizer.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mteg {

inline constexpr std::string_view sweep_csv_header =
    "param_name,param_value_si,dt_gen_K,v_oc_V,r_internal_ohm,p_matched_W,"
    "p_density_uW_cm2,eff_factor_uW_cm2_K2";

inline constexpr std::string_view time_series_csv_header = "t_s,thickness_um,surface_conc_mol_m3";

/// 17 significant digits; parses back to the identical double.
std::string format_number(double value);

void write_sweep_csv(std::ostream& out, const SweepCurve& curve);

/// Writes `curve` to `path`. Throws ParameterError for an empty curve and
/// IoError if the file cannot be written.
void emit_curve(const SweepCurve& curve, const std::filesystem::path& path);

struct SweepCsvRow {
    std::string param_name;
    double param_value_si = 0.0;
    double dt_gen_K = 0.0;
    double v_oc_V = 0.0;
    double r_internal_ohm = 0.0;
    double p_matched_W = 0.0;
    double p_density_uW_cm2 = 0.0;
    double eff_factor_uW_cm2_K2 = 0.0;
};

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in);

void write_time_series_csv(std::ostream& out, const DepositState& state);

void write_comparison_csv(std::ostream& out, const ComparisonTable& table);

} // namespace mteg
