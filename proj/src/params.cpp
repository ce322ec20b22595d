#include "qsim/params.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {
namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

void require_nonnegative_rate(double value, const char* name) {
    require_finite(value, name);
    if (value < 0.0) {
        throw std::invalid_argument(std::string(name) +
                                    " is a rate and must be nonnegative");
    }
}

bool close_rel(double a, double b, double rel_tol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel_tol * scale;
}

}  // namespace

void SystemParams::validate() const {
    require_finite(g_a, "g_a");
    require_finite(g_b, "g_b");
    require_nonnegative_rate(kappa_a, "kappa_a");
    require_nonnegative_rate(kappa_b, "kappa_b");
    require_nonnegative_rate(kappa_prime_a, "kappa_prime_a");
    require_nonnegative_rate(kappa_prime_b, "kappa_prime_b");
    require_nonnegative_rate(gamma_a, "gamma_a");
    require_nonnegative_rate(gamma_b, "gamma_b");
    require_finite(delta_a, "delta_a");
    require_finite(delta_b, "delta_b");
    require_finite(phi, "phi");
    if (total_loss_a() <= 0.0) {
        throw std::invalid_argument(
            "kappa_a + kappa_prime_a must be positive: cavity A needs an open "
            "loss channel");
    }
    if (total_loss_b() <= 0.0) {
        throw std::invalid_argument(
            "kappa_b + kappa_prime_b must be positive: cavity B needs an open "
            "loss channel");
    }
}

bool SystemParams::nodes_equal(double rel_tol) const {
    return close_rel(g_a, g_b, rel_tol) && close_rel(kappa_a, kappa_b, rel_tol) &&
           close_rel(total_loss_a(), total_loss_b(), rel_tol) &&
           close_rel(gamma_a, gamma_b, rel_tol) &&
           close_rel(delta_a, delta_b, rel_tol);
}

SystemParams SystemParams::equal_nodes(double g, double kappa, double kappa_prime,
                                       double gamma, double delta, double phi) {
    SystemParams p;
    p.g_a = p.g_b = g;
    p.kappa_a = p.kappa_b = kappa;
    p.kappa_prime_a = p.kappa_prime_b = kappa_prime;
    p.gamma_a = p.gamma_b = gamma;
    p.delta_a = p.delta_b = delta;
    p.phi = phi;
    return p;
}

DerivedRates derived_rates(const SystemParams& params) {
    return {params.total_loss_a(), params.total_loss_b()};
}

}  // namespace qsim
