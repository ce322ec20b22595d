#include "qsim/series.hpp"

#include <cmath>

#include "qsim/entanglement.hpp"

namespace qsim {

namespace {

void resize_all(TimeSeries& s, std::size_t n) {
    s.t.resize(n);
    s.p_a.resize(n);
    s.p_b.resize(n);
    s.p_c.resize(n);
    s.p_d.resize(n);
    s.p_e.resize(n);
    s.c_at.resize(n);
    s.c_cav.resize(n);
}

void fill_from_amplitudes(TimeSeries& s, std::size_t k,
                          const AmplitudeState& a) {
    s.t[k] = a.t;
    s.p_a[k] = std::norm(a.alpha);
    s.p_b[k] = std::norm(a.beta);
    s.p_c[k] = std::norm(a.gamma);
    s.p_d[k] = std::norm(a.delta);
    s.p_e[k] = a.eps_sq;
    s.c_at[k] = concurrence_atoms_closed(a.alpha, a.gamma);
    s.c_cav[k] = concurrence_cavities_closed(a.beta, a.delta);
}

void fill_from_density(TimeSeries& s, std::size_t k, double t,
                       const Matrix5& rho) {
    using namespace basis;
    s.t[k] = t;
    s.p_a[k] = rho(atom_a, atom_a).real();
    s.p_b[k] = rho(cavity_a, cavity_a).real();
    s.p_c[k] = rho(atom_b, atom_b).real();
    s.p_d[k] = rho(cavity_b, cavity_b).real();
    s.p_e[k] = rho(ground, ground).real();
    s.c_at[k] = concurrence(partial_trace_cavities(rho));
    s.c_cav[k] = concurrence(partial_trace_atoms(rho));
}

}  // namespace

std::vector<double> uniform_grid(double t_max, double dt) {
    const long long n_steps = std::llround(t_max / dt);
    std::vector<double> grid(static_cast<std::size_t>(n_steps) + 1);
    for (long long i = 0; i <= n_steps; ++i) {
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i) * dt;
    }
    return grid;
}

TimeSeries series_from_amplitudes(const SystemParams& params,
                                  std::span<const double> grid) {
    const OmegaConstants consts = omega_constants(params);
    TimeSeries s;
    resize_all(s, grid.size());
    const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        fill_from_amplitudes(s, i, amplitudes(params, consts, grid[i]));
    }
    return s;
}

TimeSeries series_from_schrodinger(const SystemParams& params,
                                   const IntegratorConfig& cfg) {
    const auto states = integrate_schrodinger(params, cfg);
    TimeSeries s;
    resize_all(s, states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        fill_from_amplitudes(s, k, states[k]);
    }
    return s;
}

TimeSeries series_from_master(const SystemParams& params,
                              const IntegratorConfig& cfg) {
    const auto samples =
        integrate_master(params, cfg, pure_state(basis::atom_a));
    TimeSeries s;
    resize_all(s, samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        fill_from_density(s, k, samples[k].t, samples[k].rho);
    }
    return s;
}

TimeSeries series_from_ensemble(const EnsembleEstimate& ensemble) {
    TimeSeries s;
    resize_all(s, ensemble.t_grid.size());
    for (std::size_t k = 0; k < ensemble.t_grid.size(); ++k) {
        fill_from_density(s, k, ensemble.t_grid[k], ensemble.rho_hat[k]);
    }
    return s;
}

}  // namespace qsim
