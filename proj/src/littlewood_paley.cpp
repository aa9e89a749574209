#include "sqg/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

#include "sqg/fft.hpp"

namespace sqg {

namespace {

double transition(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double standard_psi(double r) {
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    const double lo = transition(2.0 - 2.0 * r);
    const double hi = transition(2.0 * r - 1.0);
    return lo / (lo + hi);
}

template <class Weight>
SpectralField apply_radial(const SpectralField& f, Weight&& weight) {
    SpectralField out(f.grid);
    const int n = f.grid.n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex c = f.at(i, j);
            if (c != Complex{}) out.at(i, j) = weight(f.grid.k_abs(i, j)) * c;
        }
    }
    return out;
}

double pow2(int j) { return std::ldexp(1.0, j); }

} // namespace

double DyadicProfile::psi(double r) const { return psi_fn ? psi_fn(r) : standard_psi(r); }

BandIndexRange resolvable_bands(const GridSpec& grid) {
    const int j_min = static_cast<int>(std::floor(std::log2(grid.min_nonzero_k()))) - 1;
    const int j_max = static_cast<int>(std::ceil(std::log2(grid.max_retained_k()))) + 1;
    return {j_min, j_max};
}

SpectralField lp_project(const SpectralField& f, int j, const DyadicProfile& profile) {
    const double scale = pow2(j);
    return apply_radial(f, [&](double k) { return profile.phi(k / scale); });
}

SpectralField lp_lowpass(const SpectralField& f, int j, const DyadicProfile& profile) {
    const double scale = pow2(j - 3);
    return apply_radial(f, [&](double k) { return profile.psi(k / scale); });
}

SpectralField lp_tilde(const SpectralField& f, int j, const DyadicProfile& profile) {
    return apply_radial(f, [&](double k) {
        double w = 0.0;
        for (int b = j - 3; b <= j + 3; ++b) w += profile.phi(k / pow2(b));
        return w;
    });
}

SpectralField paraproduct_T(const SpectralField& f, const SpectralField& g,
                            const DyadicProfile& profile) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("paraproduct_T: grid mismatch");
    const auto bands = resolvable_bands(f.grid);
    SpectralField acc(f.grid);
    for (int j = bands.j_min; j <= bands.j_max; ++j) {
        acc += dealiased_product(lp_lowpass(f, j, profile), lp_project(g, j, profile));
    }
    return acc;
}

SpectralField paraproduct_R(const SpectralField& f, const SpectralField& g,
                            const DyadicProfile& profile) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("paraproduct_R: grid mismatch");
    const auto bands = resolvable_bands(f.grid);
    SpectralField acc(f.grid);
    for (int j = bands.j_min; j <= bands.j_max; ++j) {
        acc += dealiased_product(lp_project(f, j, profile), lp_tilde(g, j, profile));
    }
    return acc;
}

SpectralField gevrey_commutator(const SpectralField& f, const SpectralField& g, int j,
                                const GevreyParams& p, double s, const DyadicProfile& profile,
                                double exp_cap) {
    SpectralField weighted_band = gevrey_multiplier(lp_project(g, j, profile), p, s, 1, exp_cap);
    SpectralField direct = dealiased_product(f, weighted_band);
    SpectralField swapped =
        gevrey_multiplier(lp_project(dealiased_product(f, g), j, profile), p, s, 1, exp_cap);
    return direct - swapped;
}

SpectralField gevrey_commutator_paraproduct(const SpectralField& f, const SpectralField& g,
                                            int j, const GevreyParams& p, double s,
                                            const DyadicProfile& profile, double exp_cap) {
    auto weight = [&](const SpectralField& x) { return gevrey_multiplier(x, p, s, 1, exp_cap); };
    const SpectralField mdg = weight(lp_project(g, j, profile));

    SpectralField acc = paraproduct_T(f, mdg, profile);                      // T_f (M band_j g)
    acc -= weight(lp_project(paraproduct_T(f, g, profile), j, profile));     // M band_j (T_f g)
    acc += paraproduct_T(mdg, f, profile);                                   // T_{M band_j g} f
    acc -= weight(lp_project(paraproduct_T(g, f, profile), j, profile));     // M band_j (T_g f)
    acc += paraproduct_R(f, mdg, profile);                                   // R(f, M band_j g)
    acc -= weight(lp_project(paraproduct_R(f, g, profile), j, profile));     // M band_j R(f, g)
    return acc;
}

SpectralField commutator_band_shift_term(const SpectralField& f, const SpectralField& g, int j,
                                         int k, const GevreyParams& p, double s,
                                         const DyadicProfile& profile, double exp_cap) {
    auto weight = [&](const SpectralField& x) { return gevrey_multiplier(x, p, s, 1, exp_cap); };
    const SpectralField low = lp_lowpass(f, k, profile);
    const SpectralField band_k = lp_project(g, k, profile);
    const SpectralField inner_band = lp_project(band_k, j, profile);
    return weight(dealiased_product(low, inner_band)) -
           weight(lp_project(dealiased_product(low, band_k), j, profile));
}

SpectralField commutator_weight_shift_term(const SpectralField& f, const SpectralField& g, int j,
                                           int k, const GevreyParams& p, double s,
                                           const DyadicProfile& profile, double exp_cap) {
    auto weight = [&](const SpectralField& x) { return gevrey_multiplier(x, p, s, 1, exp_cap); };
    const SpectralField low = lp_lowpass(f, k, profile);
    const SpectralField inner_band = lp_project(lp_project(g, k, profile), j, profile);
    return dealiased_product(low, weight(inner_band)) -
           weight(dealiased_product(low, inner_band));
}

std::pair<double, double> spectral_localization_check(const SpectralField& f,
                                                      const SpectralField& g, int i, int k,
                                                      const DyadicProfile& profile) {
    const SpectralField low_high =
        dealiased_product(lp_lowpass(f, k, profile), lp_project(g, k, profile));
    const SpectralField diag =
        dealiased_product(lp_project(f, k, profile), lp_tilde(g, k, profile));
    return {coeff_l2(lp_project(low_high, i, profile)),
            coeff_l2(lp_project(diag, i, profile))};
}

} // namespace sqg
