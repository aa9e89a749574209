#pragma once

#include <span>
#include <vector>

#include "sqg/field.hpp"

namespace sqg {

/// Forward transform of real point samples (row-major, x1-major, size n*n).
///
/// Normalization: coeff(k) = (1/n^2) * sum_x f(x) exp(-i k.x), so that the
/// inverse is the plain exponential sum and the discrete Parseval identity
///   (1/n^2) * sum_x |f(x)|^2 = sum_k |coeff(k)|^2
/// holds with unit constant. All norms in this project are built on the
/// right-hand side. Throws std::invalid_argument on a size mismatch.
SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid);

/// Inverse transform; returns physical samples f(x) = sum_k coeff(k) exp(i k.x).
/// The imaginary residue of a Hermitian field is discarded.
std::vector<double> to_physical(const SpectralField& field);

} // namespace sqg
