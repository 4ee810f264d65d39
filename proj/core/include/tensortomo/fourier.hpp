#pragma once

#include <complex>

namespace tt {

using cplx = std::complex<double>;

// In-place DFT along one axis of a strided batch, for samples centred at
// index N/2:  out_k = sum_j in_j exp(sign * 2 pi i (k - N/2)(j - N/2) / N).
// howmany transforms, element stride `stride`, transform distance `dist`.
void centered_dft(cplx* data, int N, int howmany, int stride, int dist, int sign);

// Plain periodic DFT (no centring), same layout arguments.
void periodic_dft(cplx* data, int N, int howmany, int stride, int dist, int sign);

}  // namespace tt
