// qsim — command line front end: config-driven runs, figure presets, and
// Monte Carlo trajectory ensembles, all emitted as CSV.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qsim/config.hpp"
#include "qsim/presets.hpp"
#include "qsim/series.hpp"
#include "qsim/trajectories.hpp"

namespace fs = std::filesystem;

namespace {

// Trajectory ensembles accumulate one matrix per trajectory per grid point,
// so their output grid is capped; the deterministic routes emit every step.
constexpr std::size_t kMaxEnsembleGridPoints = 1001;

std::vector<double> ensemble_grid(const qsim::RunConfig& cfg) {
    double step = cfg.dt;
    const auto n_points = static_cast<std::size_t>(cfg.t_max / step) + 1;
    if (n_points > kMaxEnsembleGridPoints) {
        step = cfg.t_max / static_cast<double>(kMaxEnsembleGridPoints - 1);
    }
    return qsim::uniform_grid(cfg.t_max, step);
}

fs::path prepare_output_dir(const std::string& dir) {
    fs::path out{dir};
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) {
        throw qsim::IoError("cannot create output directory " + out.string() +
                            ": " + ec.message());
    }
    return out;
}

int run_config(const qsim::RunConfig& cfg) {
    const fs::path out_dir = prepare_output_dir(cfg.output_dir);
    qsim::TimeSeries series;
    switch (cfg.mode) {
        case qsim::RunMode::analytic: {
            const auto grid = qsim::uniform_grid(cfg.t_max, cfg.dt);
            series = qsim::series_from_amplitudes(cfg.params, grid);
            break;
        }
        case qsim::RunMode::schrodinger: {
            series = qsim::series_from_schrodinger(
                cfg.params, {cfg.dt, cfg.t_max, /*sample_stride=*/1});
            break;
        }
        case qsim::RunMode::master: {
            series = qsim::series_from_master(
                cfg.params, {cfg.dt, cfg.t_max, /*sample_stride=*/1});
            break;
        }
        case qsim::RunMode::trajectories: {
            const auto grid = ensemble_grid(cfg);
            const auto ensemble = qsim::ensemble_average(
                cfg.params, grid, cfg.n_traj, cfg.seed);
            series = qsim::series_from_ensemble(ensemble);
            qsim::emit_channel_counts(ensemble, out_dir / "channels.csv");
            break;
        }
    }
    const fs::path series_path = out_dir / "series.csv";
    qsim::emit_csv(series, series_path);
    std::cout << "wrote " << series_path.string() << " ("
              << qsim::to_string(cfg.mode) << ", " << series.size()
              << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cascaded atom-cavity pair simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    std::string preset_name;
    std::int64_t ntraj_override = 0;
    std::uint64_t seed_override = 0;
    bool seed_given = false;

    auto* run_cmd = app.add_subcommand("run", "Run a config-driven simulation");
    run_cmd->add_option("--config", config_path, "Path to the config file")
        ->required();
    run_cmd->add_option("--output", output_dir,
                        "Output directory (overrides the config)");

    auto* preset_cmd =
        app.add_subcommand("preset", "Emit CSVs for a canned scenario");
    preset_cmd->add_option("name", preset_name, "fig2, fig3 or fig4")
        ->required();
    preset_cmd->add_option("--output", output_dir, "Output directory");

    auto* traj_cmd = app.add_subcommand(
        "trajectories", "Monte Carlo trajectory ensemble from a config");
    traj_cmd->add_option("--config", config_path, "Path to the config file")
        ->required();
    traj_cmd->add_option("--ntraj", ntraj_override, "Number of trajectories");
    traj_cmd
        ->add_option("--seed", seed_override, "Base RNG seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    traj_cmd->add_option("--output", output_dir,
                         "Output directory (overrides the config)");

    try {
        app.parse(argc, argv);

        if (preset_cmd->parsed()) {
            const auto preset = qsim::parse_preset(preset_name);
            const auto out_dir =
                prepare_output_dir(output_dir.empty() ? "." : output_dir);
            for (const auto& path : qsim::run_preset(preset, out_dir)) {
                std::cout << "wrote " << path.string() << "\n";
            }
            return 0;
        }

        qsim::RunConfig cfg = qsim::load_config(config_path);
        if (traj_cmd->parsed()) {
            cfg.mode = qsim::RunMode::trajectories;
            if (ntraj_override > 0) {
                cfg.n_traj = ntraj_override;
            }
            if (seed_given) {
                cfg.seed = seed_override;
            }
            if (cfg.n_traj < 1) {
                throw qsim::ConfigError(
                    "trajectories: n_traj must be set in the config or via "
                    "--ntraj");
            }
        }
        if (!output_dir.empty()) {
            cfg.output_dir = output_dir;
        }
        return run_config(cfg);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit cleanly
    } catch (const qsim::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
