#include "sqg/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sqg {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) {
        throw std::invalid_argument("field arithmetic: grid mismatch");
    }
}

} // namespace

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& c : coeffs) c *= a;
    return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

void axpy(SpectralField& a, double c, const SpectralField& b) {
    require_same_grid(a, b);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += c * b.coeffs[i];
}

double hermitian_defect(const SpectralField& f) {
    const int n = f.grid.n;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const int im = (n - i) % n;
        for (int j = 0; j < n; ++j) {
            const int jm = (n - j) % n;
            worst = std::max(worst, std::abs(f.at(im, jm) - std::conj(f.at(i, j))));
        }
    }
    return worst;
}

double coeff_l2(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs) s += std::norm(c);
    return std::sqrt(s);
}

double coeff_max(const SpectralField& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs) m = std::max(m, std::abs(c));
    return m;
}

double inner(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f, g);
    double s = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        s += std::real(std::conj(f.coeffs[i]) * g.coeffs[i]);
    }
    return s;
}

void require_state_invariants(const SpectralField& f, const char* where) {
    const double scale = coeff_max(f);
    const double tol = 1e-12 * std::max(scale, 1e-300);
    if (std::abs(f.at(0, 0)) > tol) {
        throw std::invalid_argument(std::string(where) + ": field is not mean-zero");
    }
    if (hermitian_defect(f) > tol) {
        throw std::invalid_argument(std::string(where) + ": field is not Hermitian-symmetric");
    }
}

} // namespace sqg
