#include "sqg/random_fields.hpp"

#include <cmath>
#include <random>

#include "sqg/norms.hpp"

namespace sqg {

double SpectralEnvelope::operator()(double k) const {
    if (k <= 0.0) return 0.0;
    switch (kind) {
        case Kind::PowerLawGaussian:
            return amplitude * std::pow(k, power) * std::exp(-(k * k) / (cutoff * cutoff));
        case Kind::Band: {
            const double lo = std::ldexp(1.0, band_j - 1);
            const double hi = std::ldexp(1.0, band_j + 1);
            return (k > lo && k < hi) ? amplitude : 0.0;
        }
        case Kind::Flat:
            return amplitude;
        case Kind::ExpPower:
            return amplitude * std::exp(-rho * std::pow(k, alpha));
    }
    return 0.0;
}

SpectralEnvelope SpectralEnvelope::power_law_gaussian(double amplitude, double power,
                                                      double cutoff) {
    SpectralEnvelope e;
    e.kind = Kind::PowerLawGaussian;
    e.amplitude = amplitude;
    e.power = power;
    e.cutoff = cutoff;
    return e;
}

SpectralEnvelope SpectralEnvelope::band(int j, double amplitude) {
    SpectralEnvelope e;
    e.kind = Kind::Band;
    e.band_j = j;
    e.amplitude = amplitude;
    return e;
}

SpectralEnvelope SpectralEnvelope::flat(double amplitude) {
    SpectralEnvelope e;
    e.kind = Kind::Flat;
    e.amplitude = amplitude;
    return e;
}

SpectralEnvelope SpectralEnvelope::exp_power(double amplitude, double rho, double alpha) {
    SpectralEnvelope e;
    e.kind = Kind::ExpPower;
    e.amplitude = amplitude;
    e.rho = rho;
    e.alpha = alpha;
    return e;
}

SpectralField random_band_field(const GridSpec& grid, const SpectralEnvelope& envelope,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Raw 53-bit uniform; std distributions are not pinned across library
    // versions, the bit recipe is.
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    SpectralField f(grid);
    const int n = grid.n;
    const int nyq = -n / 2;
    for (int i = 0; i < n; ++i) {
        const int fi = grid.freq(i);
        if (fi == nyq) continue;
        for (int j = 0; j < n; ++j) {
            const int fj = grid.freq(j);
            if (fj == nyq) continue;
            const bool owner = fi > 0 || (fi == 0 && fj > 0);
            if (!owner) continue;
            const double amp = grid.retained(i, j) ? envelope(grid.k_abs(i, j)) : 0.0;
            const double phase = 2.0 * M_PI * uniform();
            if (amp == 0.0) continue;
            const Complex c = amp * Complex(std::cos(phase), std::sin(phase));
            f.at(i, j) = c;
            f.at_freq(-fi, -fj) = std::conj(c);
        }
    }
    return f;
}

SpectralField rescaled_to_sobolev(SpectralField f, double m, double target) {
    const double current = sobolev_norm(f, m);
    if (current > 0.0) f *= target / current;
    return f;
}

} // namespace sqg
