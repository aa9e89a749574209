#pragma once

#include <vector>

#include "sqg/field.hpp"

namespace sqg {

/// A time-ordered sequence of spectral states on one grid.
struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;

    bool empty() const { return times.empty(); }
    std::size_t size() const { return times.size(); }

    /// Appends a sample; times must be strictly increasing and grids must match.
    void push(double t, SpectralField state);

    const SpectralField& back() const { return states.back(); }
};

} // namespace sqg
