#include "sqg/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sqg {

void GevreyParams::validate() const {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("gevrey.lambda: must be positive");
    }
    if (!(kappa > 0.0) || kappa > 1.0) {
        throw std::invalid_argument("gevrey.kappa: must lie in (0, 1], got " +
                                    std::to_string(kappa));
    }
    if (!(alpha > 0.0) || !(alpha < kappa)) {
        throw std::invalid_argument("gevrey.alpha: must lie in (0, kappa), got " +
                                    std::to_string(alpha));
    }
    const double beta_cap = std::min({kappa / 2.0, 2.0 * (kappa - alpha), alpha});
    if (!(beta > 0.0) || !(beta < beta_cap)) {
        throw std::invalid_argument("gevrey.beta: must lie in (0, " + std::to_string(beta_cap) +
                                    "), got " + std::to_string(beta));
    }
    if (std::abs(zeta - (alpha - beta / 2.0)) > 1e-12) {
        throw std::invalid_argument("gevrey.zeta: must equal alpha - beta/2");
    }
    // Consequences of the admissible box; failing here would be a logic bug.
    if (!(std::min(beta, zeta) > 0.0) || !(beta + zeta < kappa) || !(zeta < alpha)) {
        throw std::invalid_argument("gevrey: derived constraints violated");
    }
}

GevreyParams make_gevrey_params(double lambda, double alpha, double kappa, double beta) {
    GevreyParams p{lambda, alpha, kappa, beta, alpha - beta / 2.0};
    p.validate();
    return p;
}

} // namespace sqg
