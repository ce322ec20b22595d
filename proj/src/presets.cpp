#include "qsim/presets.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "qsim/config.hpp"

namespace qsim {

namespace {

constexpr double kPresetTMax = 10.0;
constexpr double kPresetDt = 1e-3;

const std::array<ConcurrenceVariant, 3>& variant_table() {
    static const std::array<ConcurrenceVariant, 3> table{{
        {"kappa09_gamma02", 0.9, 0.2},
        {"kappa09_gamma00", 0.9, 0.0},
        {"kappa10_gamma00", 1.0, 0.0},
    }};
    return table;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path.string());
    }
    return out;
}

void write_or_throw(std::ofstream& out, const std::string& data,
                    const std::filesystem::path& path) {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

}  // namespace

SystemParams preset_base_params() {
    return SystemParams::equal_nodes(/*g=*/5.0, /*kappa=*/0.9,
                                     /*kappa_prime=*/0.1, /*gamma=*/0.2,
                                     /*delta=*/0.1);
}

std::span<const ConcurrenceVariant> concurrence_variants() {
    return variant_table();
}

SystemParams variant_params(const ConcurrenceVariant& v) {
    // kappa_prime tops the total loss up to K = 1.
    return SystemParams::equal_nodes(5.0, v.kappa, 1.0 - v.kappa, v.gamma, 0.1);
}

Preset parse_preset(std::string_view name) {
    if (name == "fig2") return Preset::fig2;
    if (name == "fig3") return Preset::fig3;
    if (name == "fig4") return Preset::fig4;
    throw ConfigError("unknown preset '" + std::string(name) +
                      "': expected fig2|fig3|fig4");
}

const char* to_string(Preset preset) {
    switch (preset) {
        case Preset::fig2: return "fig2";
        case Preset::fig3: return "fig3";
        case Preset::fig4: return "fig4";
    }
    return "unknown";
}

std::string format_value(double value) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(),
                                      value, std::chars_format::general, 12);
    return std::string(buf.data(), result.ptr);
}

void emit_csv(const TimeSeries& series, const std::filesystem::path& path) {
    auto out = open_output(path);
    std::string content;
    content.reserve(series.size() * 96 + 64);
    content += "t,p_a,p_b,p_c,p_d,p_e,c_at,c_cav\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        content += format_value(series.t[k]);
        content += ',';
        content += format_value(series.p_a[k]);
        content += ',';
        content += format_value(series.p_b[k]);
        content += ',';
        content += format_value(series.p_c[k]);
        content += ',';
        content += format_value(series.p_d[k]);
        content += ',';
        content += format_value(series.p_e[k]);
        content += ',';
        content += format_value(series.c_at[k]);
        content += ',';
        content += format_value(series.c_cav[k]);
        content += '\n';
    }
    write_or_throw(out, content, path);
}

void emit_channel_counts(const EnsembleEstimate& ensemble,
                         const std::filesystem::path& path) {
    static constexpr const char* kChannelNames[kNumJumpChannels] = {
        "collective_emission", "absorption_a", "absorption_b",
        "spontaneous_a",       "spontaneous_b",
    };
    auto out = open_output(path);
    std::string content = "channel,count\n";
    for (int i = 0; i < kNumJumpChannels; ++i) {
        content += kChannelNames[i];
        content += ',';
        content += std::to_string(ensemble.channel_counts[static_cast<std::size_t>(i)]);
        content += '\n';
    }
    content += "none,";
    content += std::to_string(ensemble.no_jump_count);
    content += '\n';
    write_or_throw(out, content, path);
}

std::vector<std::filesystem::path> run_preset(
    Preset preset, const std::filesystem::path& out_dir) {
    const auto grid = uniform_grid(kPresetTMax, kPresetDt);
    std::vector<std::filesystem::path> written;

    const auto emit = [&](const SystemParams& params,
                          const std::string& file_name) {
        const auto series = series_from_amplitudes(params, grid);
        const auto path = out_dir / file_name;
        emit_csv(series, path);
        written.push_back(path);
    };

    switch (preset) {
        case Preset::fig2:
            emit(preset_base_params(), "fig2.csv");
            break;
        case Preset::fig3:
            for (const auto& v : concurrence_variants()) {
                emit(variant_params(v), "fig3_" + v.file_tag + ".csv");
            }
            break;
        case Preset::fig4:
            emit(preset_base_params(), "fig4.csv");
            break;
    }
    return written;
}

}  // namespace qsim
