#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sqg/field.hpp"
#include "sqg/params.hpp"

namespace sqg {

/// Default cap on Gevrey exponents; e^709 is the double overflow edge.
inline constexpr double kExpCap = 700.0;

/// coeff(k) -> |k|^m coeff(k), zero mode pinned to 0. Negative m is allowed
/// because the zero mode never carries data.
SpectralField fractional_laplacian(const SpectralField& f, double m);

/// Velocity recovered from the scalar: u1 = -i k2/|k| theta, u2 = i k1/|k| theta.
/// The pair is divergence-free on the lattice by construction. Rows at the
/// unpaired Nyquist frequency are zeroed (an odd symbol there would break
/// Hermitian symmetry).
std::pair<SpectralField, SpectralField> riesz_velocity(const SpectralField& theta);

/// coeff(k) -> exp(sign * lambda * s^(alpha/kappa) * |k|^alpha) coeff(k).
/// For sign=+1 throws OverflowError when the exponent exceeds exp_cap on any
/// occupied mode. sign=-1 contracts every homogeneous Sobolev norm.
SpectralField gevrey_multiplier(const SpectralField& f, const GevreyParams& p, double s,
                                int sign, double exp_cap = kExpCap);

/// coeff(k) -> exp(-t |k|^kappa) coeff(k); the dissipative semigroup.
SpectralField dissipative_semigroup(const SpectralField& f, double kappa, double t);

/// coeff(k) -> i * k_axis * coeff(k) (axis 0 or 1); Nyquist rows zeroed.
SpectralField partial_derivative(const SpectralField& f, int axis);

/// Zeroes every mode outside the grid's retained square.
SpectralField dealias(const SpectralField& f);

/// Physical samples of the dealiased field, for repeated products against it.
std::vector<double> dealiased_samples(const SpectralField& f);

/// Pointwise product evaluated pseudo-spectrally with the grid's dealiasing
/// rule applied to both inputs and to the result. With the 2/3 default the
/// output equals the exact coefficient convolution of the truncated inputs,
/// so algebraic identities between products hold to round-off.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);
SpectralField dealiased_product(std::span<const double> f_samples, const SpectralField& g);

} // namespace sqg
