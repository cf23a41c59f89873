#include "mteg/csv.hpp"

#include "mteg/error.hpp"
#include "mteg/units.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mteg {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream s(line);
    while (std::getline(s, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw IoError("malformed number '" + text + "' in CSV");
    return v;
}

} // namespace

std::string format_number(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc()) throw IoError("number formatting failed");
    return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& out, const SweepCurve& curve) {
    if (curve.points.empty()) throw ParameterError("cannot emit an empty curve");
    const std::string name(to_string(curve.parameter));
    out << sweep_csv_header << '\n';
    for (const auto& p : curve.points) {
        const auto& op = p.point;
        out << name << ',' << format_number(p.value) << ',' << format_number(op.dt_gen) << ','
            << format_number(op.v_oc) << ',' << format_number(op.r_internal) << ','
            << format_number(op.p_matched) << ','
            << format_number(units::from_si(op.power_density, units::microwatt_per_square_centimetre)) << ','
            << format_number(units::from_si(op.eff_factor, units::microwatt_per_square_centimetre_kelvin2))
            << '\n';
    }
}

void emit_curve(const SweepCurve& curve, const std::filesystem::path& path) {
    if (curve.points.empty()) throw ParameterError("cannot emit an empty curve");
    std::ostringstream text;
    write_sweep_csv(text, curve);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text.str();
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != sweep_csv_header) throw IoError("missing or unexpected sweep CSV header");
    std::vector<SweepCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 8) throw IoError("sweep CSV row has " + std::to_string(f.size()) + " fields, expected 8");
        rows.push_back({f[0], parse_number(f[1]), parse_number(f[2]), parse_number(f[3]), parse_number(f[4]),
                        parse_number(f[5]), parse_number(f[6]), parse_number(f[7])});
    }
    return rows;
}

void write_time_series_csv(std::ostream& out, const DepositState& state) {
    out << time_series_csv_header << '\n';
    for (const auto& p : state.trace)
        out << format_number(p.t) << ',' << format_number(units::from_si(p.thickness, units::micrometre)) << ','
            << format_number(p.surface_conc) << '\n';
}

void write_comparison_csv(std::ostream& out, const ComparisonTable& table) {
    out << "design,dt_gen_K,v_oc_V,r_internal_ohm,p_matched_W,p_density_uW_cm2,eff_factor_uW_cm2_K2";
    for (const auto& name : table.names) out << ",ratio_vs_" << name;
    out << '\n';
    for (std::size_t i = 0; i < table.names.size(); ++i) {
        const auto& op = table.points[i];
        out << table.names[i] << ',' << format_number(op.dt_gen) << ',' << format_number(op.v_oc) << ','
            << format_number(op.r_internal) << ',' << format_number(op.p_matched) << ','
            << format_number(units::from_si(op.power_density, units::microwatt_per_square_centimetre)) << ','
            << format_number(units::from_si(op.eff_factor, units::microwatt_per_square_centimetre_kelvin2));
        for (double r : table.ratio[i]) out << ',' << format_number(r);
        out << '\n';
    }
}

} // namespace mteg
