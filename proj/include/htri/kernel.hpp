#ifndef HTRI_KERNEL_HPP
#define HTRI_KERNEL_HPP

#include <functional>
#include <vector>

#include "htri/domain.hpp"
#include "htri/quadrature.hpp"
#include "htri/report.hpp"

namespace htri::kernel {

using quadrature::QuadratureSpec;

// Reproducing kernel of the square-integrable holomorphic functions on the
// Hartogs triangle:
//   K(z,w) = z2 conj(w2) / ((1 - z2 conj(w2))^2 (z2 conj(w2) - z1 conj(w1))^2).
Complex bergman_kernel(const HartogsPoint& z, const HartogsPoint& w);

// Squared L^2 norm of z1^j z2^k: 1 / ((j+1)(j+k+2)). Closed form; serves as
// an independent oracle for the quadrature module.
double monomial_norm_sq(const MonomialIndex& m);

// Orthonormal-expansion partial sum over j <= J, k <= Kmax (k >= -1-j);
// converges to bergman_kernel for interior points.
Complex kernel_series_partial(const HartogsPoint& z, const HartogsPoint& w, int J,
                              int Kmax);

// Numeric Bergman projection  Pf(z) = int_H K(z,w) f(w) dmu(w); f is
// evaluated lazily at quadrature nodes.
Complex project(const std::function<Complex(const HartogsPoint&)>& f,
                const HartogsPoint& z, const QuadratureSpec& spec);

// Max over the grid of |P(monomial)(z) - monomial(z)|.
VerificationReport reproduce_check(const MonomialIndex& m,
                                   const std::vector<HartogsPoint>& grid,
                                   const QuadratureSpec& spec, double tol);

// Default 5-point interior grid with margin on both moduli.
std::vector<HartogsPoint> interior_grid(double margin = 0.8);

} // namespace htri::kernel

#endif
