#pragma once

#include <cmath>

namespace sqg {

/// Parameter bundle (lambda, alpha, kappa, beta, zeta) for the Gevrey
/// multiplier exp(lambda * s^(alpha/kappa) * |k|^alpha) and the weighted
/// path norms built on it.
///
/// Admissible ranges: kappa in (0,1], 0 < alpha < kappa,
/// 0 < beta < min{kappa/2, 2(kappa - alpha), alpha}, zeta = alpha - beta/2.
/// These imply min{beta, zeta} > 0, beta + zeta < kappa and zeta < alpha,
/// which validate() re-checks.
struct GevreyParams {
    double lambda = 0.1;
    double alpha = 0.6;
    double kappa = 0.8;
    double beta = 0.2;
    double zeta = 0.5;

    /// Exponent weight lambda * s^(alpha/kappa) in front of |k|^alpha.
    double weight(double s) const { return lambda * std::pow(s, alpha / kappa); }

    /// Sobolev index 2 - kappa + beta used by the path norm.
    double path_order() const { return 2.0 - kappa + beta; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Builds a validated bundle with zeta derived as alpha - beta/2.
GevreyParams make_gevrey_params(double lambda, double alpha, double kappa, double beta);

} // namespace sqg
