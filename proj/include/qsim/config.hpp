// config.hpp — Run configuration: line-based `key = value` files with `#`
// comments. Keys are the snake_case SystemParams fields plus the run fields
// (mode, t_max, dt, n_traj, seed, output).

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qsim/params.hpp"

namespace qsim {

enum class RunMode { analytic, schrodinger, master, trajectories };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    RunMode mode{RunMode::analytic};
    SystemParams params;
    double t_max{0.0};
    double dt{1e-3};
    std::int64_t n_traj{0};  // meaningful only in trajectories mode
    std::uint64_t seed{0};
    std::string output_dir{"."};
};

const char* to_string(RunMode mode);

// Parses and fully validates. Unknown keys, duplicates, malformed numbers and
// constraint violations raise ConfigError with the line number and key named.
// Missing optional keys fall back to the documented defaults (phi = 0,
// dt = 1e-3, seed = 0, output = ".").
RunConfig parse_config(std::string_view text);

// parse_config on the file contents; IoError if the file cannot be read.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace qsim
