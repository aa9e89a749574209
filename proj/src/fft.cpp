#include "sqg/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace sqg {

namespace {

// Process-wide cache of out-of-place c2c plans, one pair per grid size.
// FFTW_ESTIMATE keeps planning deterministic; FFTW_UNALIGNED lets the plans
// run on any caller buffer through the new-array interface.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    struct Plans {
        fftw_plan forward;
        fftw_plan backward;
    };

    Plans get(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        std::vector<Complex> a(static_cast<std::size_t>(n) * n);
        std::vector<Complex> b(a.size());
        auto* pa = reinterpret_cast<fftw_complex*>(a.data());
        auto* pb = reinterpret_cast<fftw_complex*>(b.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        Plans p{fftw_plan_dft_2d(n, n, pa, pb, FFTW_FORWARD, flags),
                fftw_plan_dft_2d(n, n, pa, pb, FFTW_BACKWARD, flags)};
        plans_.emplace(n, p);
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<int, Plans> plans_;
};

void execute(fftw_plan plan, std::vector<Complex>& in, std::vector<Complex>& out) {
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

} // namespace

SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid) {
    if (samples.size() != grid.size()) {
        throw std::invalid_argument("to_spectral: sample count does not match grid");
    }
    std::vector<Complex> in(samples.begin(), samples.end());
    SpectralField out(grid);
    execute(PlanCache::instance().get(grid.n).forward, in, out.coeffs);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

std::vector<double> to_physical(const SpectralField& field) {
    std::vector<Complex> in = field.coeffs;
    std::vector<Complex> out(in.size());
    execute(PlanCache::instance().get(field.grid.n).backward, in, out);
    std::vector<double> samples(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) samples[i] = out[i].real();
    return samples;
}

} // namespace sqg
