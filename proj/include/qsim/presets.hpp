// presets.hpp — Canned scenario runs over Kt in [0, 10] on a 10,001-point
// grid, written as CSV for external plotting, plus the CSV writer itself.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qsim/params.hpp"
#include "qsim/series.hpp"
#include "qsim/trajectories.hpp"

namespace qsim {

enum class Preset { fig2, fig3, fig4 };

// Equal-node parameter sets behind the presets (K = 1 units, phi = 0):
//   occupation preset / exchange preset: g = 5, kappa = 0.9, Delta = 0.1,
//   Gamma = 0.2; the concurrence preset adds the lossless variants.
SystemParams preset_base_params();  // g/K=5, kappa/K=0.9, Delta/K=0.1, Gamma/K=0.2

struct ConcurrenceVariant {
    std::string file_tag;  // suffix of the emitted CSV
    double kappa;          // kappa/K; mirror absorption fills K up to 1
    double gamma;          // Gamma/K
};
std::span<const ConcurrenceVariant> concurrence_variants();

SystemParams variant_params(const ConcurrenceVariant& variant);

Preset parse_preset(std::string_view name);  // throws ConfigError on bad name
const char* to_string(Preset preset);

// Runs the preset on the closed-form route and writes its CSV file(s) into
// out_dir. Returns the paths written.
std::vector<std::filesystem::path> run_preset(
    Preset preset, const std::filesystem::path& out_dir);

// CSV format: header `t,p_a,p_b,p_c,p_d,p_e,c_at,c_cav`, one row per grid
// point, values at 12 significant digits, LF line endings, locale
// independent. Byte-stable across runs.
void emit_csv(const TimeSeries& series, const std::filesystem::path& path);

// Jump-channel statistics of a trajectory run: `channel,count` rows.
void emit_channel_counts(const EnsembleEstimate& ensemble,
                         const std::filesystem::path& path);

// 12-significant-digit, locale-independent rendering used by the CSV writer.
std::string format_value(double value);

}  // namespace qsim
