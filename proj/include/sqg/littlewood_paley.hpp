#pragma once

#include <utility>

#include "sqg/field.hpp"
#include "sqg/multipliers.hpp"
#include "sqg/params.hpp"

namespace sqg {

/// Smooth radial cutoff and the annular bump derived from it.
///
/// psi is 1 on [0, 1/2], 0 on [1, inf), strictly decreasing between, built
/// from the C-infinity transition h(x) = exp(-1/x):
///   psi(r) = h(2 - 2r) / (h(2 - 2r) + h(2r - 1)) on (1/2, 1).
/// phi(r) = psi(r/2) - psi(r) is nonnegative, supported on the open annulus
/// (1/2, 2), and the dilates phi(r / 2^j) telescope to 1 for every r > 0.
struct DyadicProfile {
    double (*psi_fn)(double) = nullptr; // nullptr selects the standard cutoff

    double psi(double r) const;
    double phi(double r) const { return psi(r / 2.0) - psi(r); }
};

/// Dyadic indices that can act nontrivially on a grid's lattice. Bands
/// outside [j_min, j_max] annihilate every retained mode.
struct BandIndexRange {
    int j_min = 0;
    int j_max = 0;
};

BandIndexRange resolvable_bands(const GridSpec& grid);

/// Band projection: coeff(k) -> phi(|k| / 2^j) coeff(k).
SpectralField lp_project(const SpectralField& f, int j, const DyadicProfile& profile = {});

/// Low-pass companion: coeff(k) -> psi(|k| / 2^(j-3)) coeff(k). On the
/// mean-zero lattice this equals the band sum over indices <= j - 4.
SpectralField lp_lowpass(const SpectralField& f, int j, const DyadicProfile& profile = {});

/// Widened band: sum of the seven projections j-3 .. j+3.
SpectralField lp_tilde(const SpectralField& f, int j, const DyadicProfile& profile = {});

/// Low-high paraproduct: sum over bands of (lowpass_j f) * (band_j g),
/// products dealiased.
SpectralField paraproduct_T(const SpectralField& f, const SpectralField& g,
                            const DyadicProfile& profile = {});

/// Comparable-frequency remainder: sum over bands of (band_j f) * (tilde_j g).
SpectralField paraproduct_R(const SpectralField& f, const SpectralField& g,
                            const DyadicProfile& profile = {});

/// Commutator of multiplication by f with the Gevrey-weighted band
/// projection: f * (M band_j g) - M band_j (f * g), where M is the
/// exponential multiplier at (p, s). Both products share one dealiasing rule,
/// so the paraproduct expansion of the same bracket matches to round-off.
SpectralField gevrey_commutator(const SpectralField& f, const SpectralField& g, int j,
                                const GevreyParams& p, double s,
                                const DyadicProfile& profile = {}, double exp_cap = kExpCap);

/// The same bracket assembled from its five paraproduct pieces:
///   [T_f, M band_j] g + T_{M band_j g} f - M band_j (T_g f)
///   + R(f, M band_j g) - M band_j R(f, g).
/// Used to cross-check gevrey_commutator; the two agree to round-off.
SpectralField gevrey_commutator_paraproduct(const SpectralField& f, const SpectralField& g,
                                            int j, const GevreyParams& p, double s,
                                            const DyadicProfile& profile = {},
                                            double exp_cap = kExpCap);

/// Low-high piece of the bracket restricted to one interacting band k:
///   [lowpass_k f, M band_j] band_k g,  nonzero only for |k - j| <= 2.
/// Splits into a band-shift part (the projection profile moves across the
/// convolution) and a weight-shift part (the exponential weight moves):
///   band-shift  = M (S_k f * band_j band_k g) - M band_j (S_k f * band_k g)
///   weight-shift = S_k f * (M band_j band_k g) - M (S_k f * band_j band_k g)
/// and their sum over |k - j| <= 2 equals [T_f, M band_j] g exactly.
SpectralField commutator_band_shift_term(const SpectralField& f, const SpectralField& g, int j,
                                         int k, const GevreyParams& p, double s,
                                         const DyadicProfile& profile = {},
                                         double exp_cap = kExpCap);
SpectralField commutator_weight_shift_term(const SpectralField& f, const SpectralField& g, int j,
                                           int k, const GevreyParams& p, double s,
                                           const DyadicProfile& profile = {},
                                           double exp_cap = kExpCap);

/// Norms of the two localized interactions:
///   first  = || band_i (lowpass_k f * band_k g) ||      (zero when |i-k| >= 3)
///   second = || band_i (band_k f * tilde_k g) ||        (zero when i >= k+6)
std::pair<double, double> spectral_localization_check(const SpectralField& f,
                                                      const SpectralField& g, int i, int k,
                                                      const DyadicProfile& profile = {});

} // namespace sqg
