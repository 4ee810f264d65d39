#include "tensortomo/fourier.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace tt {

namespace {

std::mutex plan_mutex;

void run(cplx* data, int N, int howmany, int stride, int dist, int sign) {
  fftw_plan plan;
  {
    // planning is not thread safe in FFTW
    std::lock_guard<std::mutex> lk(plan_mutex);
    int n[1] = {N};
    auto* p = reinterpret_cast<fftw_complex*>(data);
    plan = fftw_plan_many_dft(1, n, howmany, p, nullptr, stride, dist, p, nullptr, stride, dist,
                              sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw planning failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lk(plan_mutex);
  fftw_destroy_plan(plan);
}

}  // namespace

void periodic_dft(cplx* data, int N, int howmany, int stride, int dist, int sign) {
  run(data, N, howmany, stride, dist, sign);
}

void centered_dft(cplx* data, int N, int howmany, int stride, int dist, int sign) {
  if (N % 2 != 0) throw std::invalid_argument("centered_dft needs an even length");
  // exp(s 2 pi i (k-N/2)(j-N/2)/N) = exp(s 2 pi i kj/N) (-1)^j (-1)^k (-1)^(N/2)
  const double global = (N / 2) % 2 == 0 ? 1.0 : -1.0;
  for (int b = 0; b < howmany; ++b)
    for (int j = 1; j < N; j += 2) data[b * dist + j * stride] = -data[b * dist + j * stride];
  run(data, N, howmany, stride, dist, sign);
  for (int b = 0; b < howmany; ++b)
    for (int k = 0; k < N; ++k) {
      const double f = (k % 2 == 0 ? 1.0 : -1.0) * global;
      data[b * dist + k * stride] *= f;
    }
}

}  // namespace tt
