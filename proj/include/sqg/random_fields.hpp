#pragma once

#include <cstdint>

#include "sqg/field.hpp"

namespace sqg {

/// Radial amplitude profile |coeff(k)| = envelope(|k|) for seeded ensembles.
struct SpectralEnvelope {
    enum class Kind { PowerLawGaussian, Band, Flat, ExpPower };

    Kind kind = Kind::PowerLawGaussian;
    double amplitude = 1.0;
    double power = -1.5;  // spectral slope of the power-law ensemble
    double cutoff = 16.0; // Gaussian cutoff wavenumber
    int band_j = 2;       // dyadic band index for Kind::Band
    double rho = 0.5;     // ExpPower decay rate
    double alpha = 0.7;   // ExpPower decay exponent

    double operator()(double k) const;

    static SpectralEnvelope power_law_gaussian(double amplitude, double power, double cutoff);
    static SpectralEnvelope band(int j, double amplitude = 1.0);
    static SpectralEnvelope flat(double amplitude = 1.0);
    static SpectralEnvelope exp_power(double amplitude, double rho, double alpha);
};

/// Hermitian, mean-zero field with |coeff(k)| = envelope(|k|) and
/// independent uniform phases, bitwise deterministic per seed. Unpaired
/// Nyquist rows are left empty so the field is exactly real.
SpectralField random_band_field(const GridSpec& grid, const SpectralEnvelope& envelope,
                                std::uint64_t seed);

/// Returns f scaled so its homogeneous Sobolev norm of the given order hits
/// target; a zero field is returned unchanged.
SpectralField rescaled_to_sobolev(SpectralField f, double m, double target);

} // namespace sqg
