#include "htri/fft.hpp"

#include <cmath>

namespace htri::detail {

void fft_pow2(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw DomainError("fft_pow2: size must be a power of two");
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    // No 1/n scaling on the inverse; callers use it as evaluation at roots of
    // unity with positive twiddle sign.
}

std::vector<Complex> polynomial_on_circle(const std::vector<Complex>& coeffs,
                                          double r, int n) {
    if (!is_pow2(static_cast<std::size_t>(n)))
        throw DomainError("polynomial_on_circle: n must be a power of two");
    std::vector<Complex> bins(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    double rk = 1.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        bins[k % static_cast<std::size_t>(n)] += coeffs[k] * rk;
        rk *= r;
    }
    fft_pow2(bins, /*inverse=*/true);
    return bins;
}

} // namespace htri::detail
