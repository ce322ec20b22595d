// params.hpp — Physical parameter set for the two cascaded atom-cavity nodes.
//
// All rates are expressed in units of the total cavity linewidth K (the
// presets use K_a = K_b = K = 1) and hbar is set to 1, so couplings and
// detunings are angular frequencies in 1/time.

#pragma once

#include <string>

namespace qsim {

// Parameters of the source node (suffix _a) and target node (suffix _b).
struct SystemParams {
    double g_a{0.0};            // atom-cavity coupling, node A
    double g_b{0.0};
    double kappa_a{0.0};        // cavity output coupling (wanted loss)
    double kappa_b{0.0};
    double kappa_prime_a{0.0};  // mirror absorption/scattering (unwanted loss)
    double kappa_prime_b{0.0};
    double gamma_a{0.0};        // atomic spontaneous emission
    double gamma_b{0.0};
    double delta_a{0.0};        // atom-cavity detuning
    double delta_b{0.0};
    double phi{0.0};            // cascade phase (observables do not depend on it)

    // Total cavity loss K_k = kappa_k + kappa_prime_k.
    double total_loss_a() const { return kappa_a + kappa_prime_a; }
    double total_loss_b() const { return kappa_b + kappa_prime_b; }

    // Throws std::invalid_argument naming the offending field and rule.
    // Rates must be nonnegative and finite, couplings/detunings finite,
    // and each cavity must keep at least one loss channel open (K_k > 0).
    void validate() const;

    // True when the two nodes carry identical parameters within rel_tol,
    // the precondition of the simplified closed forms.
    bool nodes_equal(double rel_tol = 1e-12) const;

    static SystemParams equal_nodes(double g, double kappa, double kappa_prime,
                                    double gamma, double delta, double phi = 0.0);
};

struct DerivedRates {
    double K_a;
    double K_b;
};

DerivedRates derived_rates(const SystemParams& params);

}  // namespace qsim
