#include "qsim/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace qsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ConfigError("line " + std::to_string(line) + ": " + message);
}

double parse_double(std::string_view value, std::size_t line,
                    const std::string& key) {
    double out{};
    const auto* begin = value.data();
    const auto* end = value.data() + value.size();
    const auto result = std::from_chars(begin, end, out);
    if (result.ec != std::errc{} || result.ptr != end) {
        fail(line, key + ": expected a number, got '" + std::string(value) + "'");
    }
    return out;
}

std::uint64_t parse_u64(std::string_view value, std::size_t line,
                        const std::string& key) {
    std::uint64_t out{};
    const auto* begin = value.data();
    const auto* end = value.data() + value.size();
    const auto result = std::from_chars(begin, end, out);
    if (result.ec != std::errc{} || result.ptr != end) {
        fail(line, key + ": expected a nonnegative integer, got '" +
                       std::string(value) + "'");
    }
    return out;
}

RunMode parse_mode(std::string_view value, std::size_t line) {
    if (value == "analytic") return RunMode::analytic;
    if (value == "schrodinger") return RunMode::schrodinger;
    if (value == "master") return RunMode::master;
    if (value == "trajectories") return RunMode::trajectories;
    fail(line, "mode: expected one of analytic|schrodinger|master|trajectories, "
               "got '" + std::string(value) + "'");
}

constexpr const char* kRequiredKeys[] = {
    "mode",    "t_max",   "g_a",     "g_b",           "kappa_a",
    "kappa_b", "kappa_prime_a", "kappa_prime_b", "gamma_a", "gamma_b",
    "delta_a", "delta_b",
};

}  // namespace

const char* to_string(RunMode mode) {
    switch (mode) {
        case RunMode::analytic: return "analytic";
        case RunMode::schrodinger: return "schrodinger";
        case RunMode::master: return "master";
        case RunMode::trajectories: return "trajectories";
    }
    return "unknown";
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::map<std::string, std::pair<std::string, std::size_t>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(line_no, "expected 'key = value', got '" + std::string(line) + "'");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty()) {
            fail(line_no, "missing key before '='");
        }
        if (value.empty()) {
            fail(line_no, key + ": missing value after '='");
        }
        if (const auto it = seen.find(key); it != seen.end()) {
            fail(line_no, key + ": duplicate key (first set on line " +
                              std::to_string(it->second.second) + ")");
        }
        seen.emplace(key, std::make_pair(value, line_no));
    }

    const auto take = [&seen](const char* key) {
        const auto it = seen.find(key);
        if (it == seen.end()) {
            return std::optional<std::pair<std::string, std::size_t>>{};
        }
        auto out = std::make_optional(it->second);
        seen.erase(it);
        return out;
    };

    std::vector<std::string> missing;
    for (const char* key : kRequiredKeys) {
        if (!seen.contains(key)) {
            missing.emplace_back(key);
        }
    }
    // n_traj is required exactly when running trajectories.
    const bool trajectories_mode =
        seen.contains("mode") && trim(seen.at("mode").first) == "trajectories";
    if (trajectories_mode && !seen.contains("n_traj")) {
        missing.emplace_back("n_traj");
    }
    if (!missing.empty()) {
        std::ostringstream oss;
        oss << "missing required key" << (missing.size() > 1 ? "s" : "") << ": ";
        for (std::size_t i = 0; i < missing.size(); ++i) {
            oss << (i ? ", " : "") << missing[i];
        }
        throw ConfigError(oss.str());
    }

    const auto mode_entry = *take("mode");
    cfg.mode = parse_mode(mode_entry.first, mode_entry.second);

    const auto take_double = [&take](const char* key, double& dst) {
        if (const auto entry = take(key)) {
            dst = parse_double(entry->first, entry->second, key);
            return entry->second;
        }
        return std::size_t{0};
    };

    take_double("g_a", cfg.params.g_a);
    take_double("g_b", cfg.params.g_b);
    take_double("kappa_a", cfg.params.kappa_a);
    take_double("kappa_b", cfg.params.kappa_b);
    take_double("kappa_prime_a", cfg.params.kappa_prime_a);
    take_double("kappa_prime_b", cfg.params.kappa_prime_b);
    take_double("gamma_a", cfg.params.gamma_a);
    take_double("gamma_b", cfg.params.gamma_b);
    take_double("delta_a", cfg.params.delta_a);
    take_double("delta_b", cfg.params.delta_b);
    take_double("phi", cfg.params.phi);
    take_double("t_max", cfg.t_max);
    take_double("dt", cfg.dt);

    if (const auto entry = take("seed")) {
        cfg.seed = parse_u64(entry->first, entry->second, "seed");
    }
    if (const auto entry = take("n_traj")) {
        if (cfg.mode != RunMode::trajectories) {
            fail(entry->second, "n_traj: only valid in trajectories mode");
        }
        const auto n = parse_u64(entry->first, entry->second, "n_traj");
        if (n < 1) {
            fail(entry->second, "n_traj: must be >= 1");
        }
        cfg.n_traj = static_cast<std::int64_t>(n);
    }
    if (const auto entry = take("output")) {
        cfg.output_dir = entry->first;
    }

    if (!seen.empty()) {
        const auto& [key, entry] = *seen.begin();
        fail(entry.second, "unknown key '" + key + "'");
    }

    try {
        cfg.params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (!(cfg.t_max > 0.0)) {
        throw ConfigError("t_max: must be positive");
    }
    if (!(cfg.dt > 0.0) || cfg.dt > cfg.t_max) {
        throw ConfigError("dt: must be positive and no larger than t_max");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading config file: " + path.string());
    }
    return parse_config(buffer.str());
}

}  // namespace qsim
