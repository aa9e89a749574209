#include "sqg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sqg/trajectory.hpp"

namespace sqg {

void Trajectory::push(double t, SpectralField state) {
    if (!times.empty()) {
        if (t <= times.back()) {
            throw std::invalid_argument("trajectory: times must be strictly increasing");
        }
        if (!(state.grid == states.front().grid)) {
            throw std::invalid_argument("trajectory: grid mismatch");
        }
    }
    times.push_back(t);
    states.push_back(std::move(state));
}

std::string norm_kind_name(NormKind kind) {
    switch (kind) {
        case NormKind::Sobolev: return "sobolev";
        case NormKind::HomSobolev: return "hom-sobolev";
        case NormKind::Gevrey: return "gevrey";
        case NormKind::Path: return "path";
    }
    return "unknown";
}

double sobolev_norm(const SpectralField& f, double m, bool homogeneous) {
    const int n = f.grid.n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex c = f.at(i, j);
            if (c == Complex{}) continue;
            const double k = f.grid.k_abs(i, j);
            if (k == 0.0) continue;
            const double w = homogeneous ? k : 1.0 + k;
            acc += std::pow(w, 2.0 * m) * std::norm(c);
        }
    }
    return std::sqrt(acc);
}

double gevrey_norm(const SpectralField& f, const GevreyParams& p, double s, double m,
                   double exp_cap) {
    return sobolev_norm(gevrey_multiplier(f, p, s, 1, exp_cap), m, true);
}

double path_norm(const Trajectory& traj, const GevreyParams& p, std::optional<double> m_base,
                 double exp_cap) {
    if (traj.empty()) throw std::invalid_argument("path_norm: empty trajectory");
    const double order = m_base.value_or(p.path_order());
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double s = traj.times[i];
        if (s <= 0.0) continue; // the weight vanishes at s = 0
        const double weighted = std::pow(s, p.beta / p.kappa) *
                                gevrey_norm(traj.states[i], p, s, order, exp_cap);
        worst = std::max(worst, weighted);
    }
    return worst;
}

namespace {

struct Shell {
    double mean_log_amp = 0.0; // mean of log|coeff| over occupied modes
    double count = 0.0;
    std::vector<double> k_values;
};

// Weighted linear regression y = c - rho * x; returns (rho, weighted RMS).
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y,
                                   const std::vector<double>& w) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
        sxx += w[i] * x[i] * x[i];
        sxy += w[i] * x[i] * y[i];
    }
    const double det = sw * sxx - sx * sx;
    const double slope = det != 0.0 ? (sw * sxy - sx * sy) / det : 0.0;
    const double intercept = sw != 0.0 ? (sy - slope * sx) / sw : 0.0;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        rss += w[i] * r * r;
    }
    return {-slope, std::sqrt(rss / std::max(sw, 1e-300))};
}

double fit_residual_at_alpha(const std::vector<Shell>& shells, double alpha, double* rho_out) {
    std::vector<double> x, y, w;
    x.reserve(shells.size());
    for (const auto& sh : shells) {
        double mean_pow = 0.0;
        for (double k : sh.k_values) mean_pow += std::pow(k, alpha);
        mean_pow /= static_cast<double>(sh.k_values.size());
        x.push_back(mean_pow);
        y.push_back(sh.mean_log_amp);
        w.push_back(sh.count);
    }
    auto [rho, rms] = fit_line(x, y, w);
    if (rho_out) *rho_out = rho;
    return rms;
}

} // namespace

RadiusFit fit_gevrey_radius(const SpectralField& f, std::optional<double> alpha_fixed,
                            double noise_floor_rel, int min_shells) {
    const GridSpec& g = f.grid;
    const double kq = g.k_quantum();
    const int max_shell = static_cast<int>(std::floor(g.max_retained_k() / kq + 0.5));

    const double peak = coeff_max(f);
    if (peak == 0.0) throw std::invalid_argument("fit_gevrey_radius: zero field");
    const double floor_log = std::log(noise_floor_rel * peak);

    // Gather per-shell geometric means over unit-width annuli.
    std::vector<Shell> raw(static_cast<std::size_t>(max_shell) + 1);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            const Complex c = f.at(i, j);
            if (c == Complex{}) continue;
            const double k = g.k_abs(i, j);
            const int shell = static_cast<int>(std::floor(k / kq + 0.5));
            if (shell < 1 || shell > max_shell) continue;
            raw[shell].mean_log_amp += std::log(std::abs(c));
            raw[shell].count += 1.0;
            raw[shell].k_values.push_back(k);
        }
    }

    RadiusFit fit;
    std::vector<Shell> shells;
    for (int m = 1; m <= max_shell; ++m) {
        if (raw[m].count == 0.0) continue;
        raw[m].mean_log_amp /= raw[m].count;
        if (raw[m].mean_log_amp < floor_log) continue;
        if (shells.empty()) fit.shell_lo = m;
        fit.shell_hi = m;
        shells.push_back(std::move(raw[m]));
    }
    if (static_cast<int>(shells.size()) < min_shells) {
        throw std::invalid_argument("fit_gevrey_radius: only " + std::to_string(shells.size()) +
                                    " usable shells, need " + std::to_string(min_shells));
    }

    if (alpha_fixed) {
        fit.alpha_hat = *alpha_fixed;
        fit.residual = fit_residual_at_alpha(shells, fit.alpha_hat, &fit.rho_hat);
    } else {
        // Coarse scan then golden-section refinement of the 1-D residual.
        double best_alpha = 0.05, best_res = std::numeric_limits<double>::infinity();
        for (int step = 0; step <= 145; ++step) {
            const double a = 0.05 + 0.01 * step; // alpha in [0.05, 1.50]
            const double res = fit_residual_at_alpha(shells, a, nullptr);
            if (res < best_res) {
                best_res = res;
                best_alpha = a;
            }
        }
        double lo = std::max(0.01, best_alpha - 0.01), hi = std::min(1.6, best_alpha + 0.01);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a1 = hi - gr * (hi - lo), a2 = lo + gr * (hi - lo);
        double r1 = fit_residual_at_alpha(shells, a1, nullptr);
        double r2 = fit_residual_at_alpha(shells, a2, nullptr);
        for (int it = 0; it < 80; ++it) {
            if (r1 < r2) {
                hi = a2; a2 = a1; r2 = r1;
                a1 = hi - gr * (hi - lo);
                r1 = fit_residual_at_alpha(shells, a1, nullptr);
            } else {
                lo = a1; a1 = a2; r1 = r2;
                a2 = lo + gr * (hi - lo);
                r2 = fit_residual_at_alpha(shells, a2, nullptr);
            }
        }
        fit.alpha_hat = 0.5 * (lo + hi);
        fit.residual = fit_residual_at_alpha(shells, fit.alpha_hat, &fit.rho_hat);
    }
    fit.decaying = fit.rho_hat > 0.0;
    return fit;
}

std::vector<DecayRow> derivative_decay_table(const SpectralField& f, const GevreyParams& p,
                                             double s, int n_max, std::optional<double> ref_l2,
                                             std::optional<int> calib_n) {
    if (n_max > 12) throw std::invalid_argument("derivative_decay_table: n_max must be <= 12");
    if (!(s > 0.0)) throw std::invalid_argument("derivative_decay_table: s must be positive");
    const double base_order = 2.0 - p.kappa;
    const double rho = p.lambda * p.alpha * std::pow(s, p.alpha / p.kappa);
    const double ref = ref_l2.value_or(sobolev_norm(f, 0.0));
    // Smallest integer order strictly above 2 - kappa, per the factorial
    // envelope's admissibility.
    const int n_cal = calib_n.value_or(static_cast<int>(std::floor(base_order)) + 1);

    auto log_envelope = [&](int n) {
        return std::lgamma(n + 1.0) / p.alpha - (n / p.alpha) * std::log(rho);
    };
    auto norm_at = [&](int n) { return sobolev_norm(f, base_order + n); };

    const double cal_norm = norm_at(n_cal);
    // C solves cal_norm = C * ref * envelope(n_cal); degenerate data gives C = 0.
    double log_C = -std::numeric_limits<double>::infinity();
    if (cal_norm > 0.0 && ref > 0.0) {
        log_C = std::log(cal_norm) - std::log(ref) - log_envelope(n_cal);
    }

    std::vector<DecayRow> rows;
    const double log_max = std::log(std::numeric_limits<double>::max());
    for (int n = 0; n <= n_max; ++n) {
        DecayRow row;
        row.n = n;
        row.norm = norm_at(n);
        const double log_bound = log_C + (ref > 0.0 ? std::log(ref) : 0.0) + log_envelope(n);
        if (log_bound > log_max) {
            row.flagged = true;
            row.bound = std::numeric_limits<double>::infinity();
            row.ratio = 0.0;
        } else {
            row.bound = std::exp(log_bound);
            row.ratio = row.bound > 0.0 ? row.norm / row.bound : 0.0;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace sqg
