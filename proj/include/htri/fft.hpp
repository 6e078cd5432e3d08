#ifndef HTRI_FFT_HPP
#define HTRI_FFT_HPP

#include <vector>

#include "htri/domain.hpp"
#include "htri/errors.hpp"

namespace htri::detail {

// In-place radix-2 Cooley-Tukey; size must be a power of two. Forward
// transform X_k = sum_j x_j e^{-2 pi i jk/n}.
void fft_pow2(std::vector<Complex>& a, bool inverse);

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Values of the polynomial sum_k c_k z^k at the n points r*e^{2 pi i j/n},
// j = 0..n-1, n a power of two. Coefficients beyond n fold exactly onto
// k mod n (aliasing identity for evaluation at roots of unity).
std::vector<Complex> polynomial_on_circle(const std::vector<Complex>& coeffs,
                                          double r, int n);

} // namespace htri::detail

#endif
