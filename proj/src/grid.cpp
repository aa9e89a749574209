#include "sqg/grid.hpp"

#include <stdexcept>
#include <string>

namespace sqg {

GridSpec make_grid(int n, double domain_length, double dealias_fraction) {
    if (n < 16 || n % 2 != 0) {
        throw std::invalid_argument("grid.n: must be even and >= 16, got " + std::to_string(n));
    }
    if (!(domain_length > 0.0)) {
        throw std::invalid_argument("grid.domain_length: must be positive, got " +
                                    std::to_string(domain_length));
    }
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0) {
        throw std::invalid_argument("grid.dealias_fraction: must lie in (0, 1], got " +
                                    std::to_string(dealias_fraction));
    }
    GridSpec g{n, domain_length, dealias_fraction};
    // Bands j = 0, 1, 2 must survive dealiasing for the dyadic machinery.
    if (dealias_fraction * (n / 2) < 4.0 - 1e-12) {
        throw std::invalid_argument(
            "grid.dealias_fraction: dealias_fraction * n/2 must be >= 4 (got " +
            std::to_string(dealias_fraction * (n / 2)) + ")");
    }
    return g;
}

} // namespace sqg
