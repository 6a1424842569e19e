#pragma once

#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "grid.hpp"

namespace wdspec {

/// Half spectrum of a real field: modes k = 0 .. n/2, unnormalized.
using Spectrum = std::vector<std::complex<double>>;

namespace detail {

// FFTW planning is not thread-safe, execution on new arrays is. Plans are
// built once per size under a lock and then shared read-only.
class FftPlanCache {
public:
  struct Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
  };

  static FftPlanCache& instance() {
    static FftPlanCache cache;
    return cache;
  }

  Plans get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    const int in = static_cast<int>(n);
    double* real = fftw_alloc_real(n);
    fftw_complex* cplx = fftw_alloc_complex(n / 2 + 1);
    Plans p;
    p.r2c = fftw_plan_dft_r2c_1d(in, real, cplx, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_1d(in, cplx, real, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(real);
    fftw_free(cplx);
    plans_.emplace(n, p);
    return p;
  }

  FftPlanCache(const FftPlanCache&) = delete;
  FftPlanCache& operator=(const FftPlanCache&) = delete;

private:
  FftPlanCache() = default;
  ~FftPlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.r2c);
      fftw_destroy_plan(p.c2r);
    }
  }

  std::mutex mutex_;
  std::map<std::size_t, Plans> plans_;
};

} // namespace detail

/// Forward real-to-complex transform (no normalization).
inline Spectrum forward_fft(const Field& f) {
  const std::size_t n = f.size();
  auto plans = detail::FftPlanCache::instance().get(n);
  std::vector<double> in(f.data());
  Spectrum out(n / 2 + 1);
  fftw_execute_dft_r2c(plans.r2c, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

/// Inverse transform including the 1/n normalization.
inline Field inverse_fft(Spectrum spec, const PeriodicGrid& grid) {
  const std::size_t n = grid.size();
  if (spec.size() != n / 2 + 1) throw GridError("spectrum size does not match grid");
  auto plans = detail::FftPlanCache::instance().get(n);
  // c2r destroys its input, so spec is taken by value.
  std::vector<double> out(n);
  fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(spec.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return Field(grid, std::move(out));
}

} // namespace wdspec
