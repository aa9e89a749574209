#pragma once

#include <cmath>
#include <cstdint>

namespace sqg {

/// Square periodic grid [0, L)^2 with n modes per axis and a dealiasing rule.
///
/// The wavenumber lattice is k = (2*pi/L) * (i, j) with signed integer
/// frequencies i, j in {-n/2, ..., n/2 - 1}, stored in FFT order
/// (0, ..., n/2-1, -n/2, ..., -1) along each axis. Pointwise products keep
/// only modes with max(|i|, |j|) <= floor(dealias_fraction * n/2), which at
/// the default 2/3 makes quadratic products alias-free after truncation.
struct GridSpec {
    int n = 0;
    double domain_length = 0.0;
    double dealias_fraction = 2.0 / 3.0;

    /// Spacing of the wavenumber lattice, 2*pi/L.
    double k_quantum() const { return 2.0 * M_PI / domain_length; }

    /// Largest retained integer frequency under the dealiasing rule.
    int dealias_limit() const {
        return static_cast<int>(std::floor(dealias_fraction * (n / 2) + 1e-12));
    }

    /// Signed integer frequency of storage index idx in {0, ..., n-1}.
    int freq(int idx) const { return idx < n / 2 ? idx : idx - n; }

    /// Storage index of signed frequency f in {-n/2, ..., n/2 - 1}.
    int index_of(int f) const { return f >= 0 ? f : f + n; }

    /// |k| for the mode at storage indices (i, j).
    double k_abs(int i, int j) const {
        const double fx = freq(i), fy = freq(j);
        return k_quantum() * std::sqrt(fx * fx + fy * fy);
    }

    /// Wavevector components for the mode at storage indices (i, j).
    double k1(int i) const { return k_quantum() * freq(i); }
    double k2(int j) const { return k_quantum() * freq(j); }

    bool retained(int i, int j) const {
        const int lim = dealias_limit();
        return std::abs(freq(i)) <= lim && std::abs(freq(j)) <= lim;
    }

    /// Largest |k| surviving dealiasing (lattice corner of the retained square).
    double max_retained_k() const {
        const double lim = dealias_limit();
        return k_quantum() * lim * std::sqrt(2.0);
    }

    /// Smallest nonzero |k| on the lattice.
    double min_nonzero_k() const { return k_quantum(); }

    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    bool operator==(const GridSpec&) const = default;
};

/// Validates and builds a GridSpec. Throws std::invalid_argument on a
/// rejected parameter (odd or too-small n, non-positive length, fraction
/// outside (0, 1], or a dealias cutoff too low to resolve dyadic bands 0..2).
GridSpec make_grid(int n, double domain_length, double dealias_fraction = 2.0 / 3.0);

} // namespace sqg
