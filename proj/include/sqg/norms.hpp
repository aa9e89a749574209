#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqg/field.hpp"
#include "sqg/multipliers.hpp"
#include "sqg/params.hpp"
#include "sqg/trajectory.hpp"

namespace sqg {

enum class NormKind { Sobolev, HomSobolev, Gevrey, Path };

std::string norm_kind_name(NormKind kind);

struct NormReport {
    NormKind kind = NormKind::HomSobolev;
    double order = 0.0;
    std::optional<double> s;
    double value = 0.0;
    std::optional<GevreyParams> gevrey;
};

/// Plancherel-side Sobolev norm: (sum_k w(k)^(2m) |coeff(k)|^2)^(1/2) with
/// w = |k| (homogeneous) or 1 + |k|. The zero mode is excluded, which keeps
/// negative orders finite on mean-zero data.
double sobolev_norm(const SpectralField& f, double m, bool homogeneous = true);

/// Exponentially weighted norm || exp(lambda s^(a/k) Lambda^a) f ||_{H^m,hom}.
/// Always >= the unweighted norm; propagates OverflowError past the cap.
double gevrey_norm(const SpectralField& f, const GevreyParams& p, double s, double m,
                   double exp_cap = kExpCap);

/// Time-weighted supremum over stored samples:
///   max_{s>0} s^(beta/kappa) * gevrey_norm(theta(s), p, s, m_base),
/// with m_base defaulting to 2 - kappa + beta. Samples at s = 0 carry zero
/// weight and are skipped. Throws on an empty trajectory.
double path_norm(const Trajectory& traj, const GevreyParams& p,
                 std::optional<double> m_base = std::nullopt, double exp_cap = kExpCap);

/// Result of fitting log-amplitude = c - rho * |k|^alpha to shell statistics.
struct RadiusFit {
    double rho_hat = 0.0;
    double alpha_hat = 0.0;
    double residual = 0.0;  // weighted RMS of the log-linear fit
    int shell_lo = 0;       // first and last shells used, in lattice units
    int shell_hi = 0;
    bool decaying = false;  // rho_hat > 0; a flat or growing tail is reported, not clamped
};

/// Estimates the exponential-decay rate of the spectrum from shell
/// statistics on unit-width annuli centred at integer lattice radii. Each
/// shell contributes its geometric-mean amplitude and its mean |k|^alpha,
/// weighted by mode count, so a field with exact exp(-rho |k|^alpha) decay
/// fits with zero residual. If alpha_fixed is empty, alpha is chosen by a
/// one-dimensional residual minimization. Throws when fewer than min_shells
/// shells survive the relative noise floor.
RadiusFit fit_gevrey_radius(const SpectralField& f,
                            std::optional<double> alpha_fixed = std::nullopt,
                            double noise_floor_rel = 1e-14, int min_shells = 8);

struct DecayRow {
    int n = 0;
    double norm = 0.0;   // || Lambda^n f || in the Sobolev order 2 - kappa
    double bound = 0.0;  // C * ref * (n!)^(1/alpha) / rho^(n/alpha)
    double ratio = 0.0;  // norm / bound
    bool flagged = false; // bound overflowed double range
};

/// Tabulates derivative growth against the factorial envelope with
/// rho = lambda * alpha * s^(alpha/kappa). The constant C is calibrated at
/// the smallest integer order above 2 - kappa (or calib_n when given) and the
/// reference amplitude defaults to the plain l2 norm of f itself. n_max is
/// capped at 12 to keep factorial powers in double range.
std::vector<DecayRow> derivative_decay_table(const SpectralField& f, const GevreyParams& p,
                                             double s, int n_max,
                                             std::optional<double> ref_l2 = std::nullopt,
                                             std::optional<int> calib_n = std::nullopt);

} // namespace sqg
