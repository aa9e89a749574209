#include "sqg/multipliers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sqg/errors.hpp"
#include "sqg/fft.hpp"

namespace sqg {

namespace {

template <class Symbol>
SpectralField apply_diagonal(const SpectralField& f, Symbol&& symbol) {
    SpectralField out(f.grid);
    const int n = f.grid.n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex c = f.at(i, j);
            if (c != Complex{}) out.at(i, j) = symbol(i, j) * c;
        }
    }
    return out;
}

} // namespace

SpectralField fractional_laplacian(const SpectralField& f, double m) {
    return apply_diagonal(f, [&](int i, int j) -> double {
        const double k = f.grid.k_abs(i, j);
        return k == 0.0 ? 0.0 : std::pow(k, m);
    });
}

std::pair<SpectralField, SpectralField> riesz_velocity(const SpectralField& theta) {
    const GridSpec& g = theta.grid;
    const int nyq = -g.n / 2;
    SpectralField u1(g), u2(g);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            const Complex c = theta.at(i, j);
            if (c == Complex{}) continue;
            // The unpaired Nyquist frequency has no mirror mode; an odd
            // symbol there would break realness.
            if (g.freq(i) == nyq || g.freq(j) == nyq) continue;
            const double k = g.k_abs(i, j);
            if (k == 0.0) continue;
            const Complex factor(0.0, 1.0 / k);
            u1.at(i, j) = -factor * g.k2(j) * c;
            u2.at(i, j) = factor * g.k1(i) * c;
        }
    }
    return {std::move(u1), std::move(u2)};
}

SpectralField gevrey_multiplier(const SpectralField& f, const GevreyParams& p, double s,
                                int sign, double exp_cap) {
    if (s < 0.0) throw std::invalid_argument("gevrey_multiplier: s must be nonnegative");
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("gevrey_multiplier: sign must be +1 or -1");
    }
    const double w = p.weight(s);
    if (sign > 0) {
        // Overflow is decided by the occupied modes, not the full lattice.
        double k_occupied = 0.0;
        for (int i = 0; i < f.grid.n; ++i) {
            for (int j = 0; j < f.grid.n; ++j) {
                if (f.at(i, j) != Complex{}) {
                    k_occupied = std::max(k_occupied, f.grid.k_abs(i, j));
                }
            }
        }
        const double worst = w * std::pow(k_occupied, p.alpha);
        if (worst > exp_cap) {
            throw OverflowError("gevrey_multiplier: exponent " + std::to_string(worst) +
                                " exceeds cap " + std::to_string(exp_cap));
        }
    }
    return apply_diagonal(f, [&](int i, int j) -> double {
        return std::exp(sign * w * std::pow(f.grid.k_abs(i, j), p.alpha));
    });
}

SpectralField dissipative_semigroup(const SpectralField& f, double kappa, double t) {
    if (t < 0.0) throw std::invalid_argument("dissipative_semigroup: t must be nonnegative");
    if (!(kappa > 0.0)) throw std::invalid_argument("dissipative_semigroup: kappa must be positive");
    return apply_diagonal(f, [&](int i, int j) -> double {
        return std::exp(-t * std::pow(f.grid.k_abs(i, j), kappa));
    });
}

SpectralField partial_derivative(const SpectralField& f, int axis) {
    if (axis != 0 && axis != 1) throw std::invalid_argument("partial_derivative: axis must be 0 or 1");
    const GridSpec& g = f.grid;
    const int nyq = -g.n / 2;
    return apply_diagonal(f, [&](int i, int j) -> Complex {
        const int fr = axis == 0 ? g.freq(i) : g.freq(j);
        if (fr == nyq) return Complex{};
        const double k = axis == 0 ? g.k1(i) : g.k2(j);
        return Complex(0.0, k);
    });
}

SpectralField dealias(const SpectralField& f) {
    SpectralField out(f.grid);
    for (int i = 0; i < f.grid.n; ++i) {
        for (int j = 0; j < f.grid.n; ++j) {
            if (f.grid.retained(i, j)) out.at(i, j) = f.at(i, j);
        }
    }
    return out;
}

std::vector<double> dealiased_samples(const SpectralField& f) {
    return to_physical(dealias(f));
}

SpectralField dealiased_product(std::span<const double> f_samples, const SpectralField& g) {
    if (f_samples.size() != g.grid.size()) {
        throw std::invalid_argument("dealiased_product: sample count does not match grid");
    }
    std::vector<double> prod = dealiased_samples(g);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= f_samples[i];
    return dealias(to_spectral(prod, g.grid));
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("dealiased_product: grid mismatch");
    return dealiased_product(dealiased_samples(f), g);
}

} // namespace sqg
