// series.hpp — Uniform time-grid observables (occupation probabilities and
// the two concurrences) produced by each of the simulation routes.

#pragma once

#include <span>
#include <vector>

#include "qsim/dynamics.hpp"
#include "qsim/params.hpp"
#include "qsim/trajectories.hpp"

namespace qsim {

struct TimeSeries {
    std::vector<double> t;
    std::vector<double> p_a, p_b, p_c, p_d, p_e;  // basis populations
    std::vector<double> c_at, c_cav;              // concurrences

    std::size_t size() const { return t.size(); }
};

// Grid points i * dt for i = 0 .. round(t_max/dt).
std::vector<double> uniform_grid(double t_max, double dt);

// Closed-form route; concurrences from the closed forms. The per-point
// evaluations are independent and run OpenMP-parallel.
TimeSeries series_from_amplitudes(const SystemParams& params,
                                  std::span<const double> grid);

// Amplitude-ODE route (RK4 of the no-jump system).
TimeSeries series_from_schrodinger(const SystemParams& params,
                                   const IntegratorConfig& cfg);

// Master-equation route; concurrences via the Wootters eigensolver on the
// partial traces of the integrated density matrix.
TimeSeries series_from_master(const SystemParams& params,
                              const IntegratorConfig& cfg);

// Monte Carlo route, from an already-computed ensemble estimate.
TimeSeries series_from_ensemble(const EnsembleEstimate& ensemble);

}  // namespace qsim
