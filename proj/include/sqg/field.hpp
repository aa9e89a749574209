#pragma once

#include <complex>
#include <vector>

#include "sqg/grid.hpp"

namespace sqg {

using Complex = std::complex<double>;

/// Fourier coefficients of a real scalar on an n x n periodic grid.
///
/// Coefficients are stored row-major with the first wavenumber component as
/// the row index, each axis in FFT order. A field that is real in physical
/// space satisfies coeff(-k mod n) = conj(coeff(k)); evolution states are in
/// addition mean-zero (coeff(0) == 0), which keeps |k|^m well-defined for
/// negative m and the Riesz transforms bounded.
struct SpectralField {
    GridSpec grid;
    std::vector<Complex> coeffs;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g) : grid(g), coeffs(g.size(), Complex{}) {}

    Complex& at(int i, int j) { return coeffs[static_cast<std::size_t>(i) * grid.n + j]; }
    const Complex& at(int i, int j) const {
        return coeffs[static_cast<std::size_t>(i) * grid.n + j];
    }

    /// Access by signed frequency pair.
    Complex& at_freq(int f1, int f2) { return at(grid.index_of(f1), grid.index_of(f2)); }
    const Complex& at_freq(int f1, int f2) const {
        return at(grid.index_of(f1), grid.index_of(f2));
    }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

/// a + c*b without an extra temporary.
void axpy(SpectralField& a, double c, const SpectralField& b);

/// Largest |coeff(-k mod n) - conj(coeff(k))| over the lattice.
double hermitian_defect(const SpectralField& f);

/// Plain l2 norm of the coefficient array, zero mode included. This is the
/// transform-level Parseval quantity; Sobolev/Gevrey norms live in norms.hpp
/// and exclude the zero mode.
double coeff_l2(const SpectralField& f);

/// Largest coefficient magnitude.
double coeff_max(const SpectralField& f);

/// Real part of the l2 pairing sum(conj(f), g), zero mode included.
double inner(const SpectralField& f, const SpectralField& g);

/// Throws std::invalid_argument unless f is Hermitian-symmetric (relative
/// tolerance 1e-12) and mean-zero.
void require_state_invariants(const SpectralField& f, const char* where);

} // namespace sqg
