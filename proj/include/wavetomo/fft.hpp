#pragma once

#include <complex>
#include <vector>

namespace wt {

// Complex DFT with numpy-style normalization: forward is plain, inverse
// divides by n.  Thread-safe; plans are cached per length behind a mutex
// and execution runs on caller-owned buffers.
void fft(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace wt
