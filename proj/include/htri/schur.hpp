#ifndef HTRI_SCHUR_HPP
#define HTRI_SCHUR_HPP

#include <optional>
#include <vector>

#include "htri/domain.hpp"
#include "htri/quadrature.hpp"
#include "htri/report.hpp"

namespace htri::schur {

using quadrature::QuadratureSpec;

// Auxiliary boundary-vanishing weight (|z2|^2 - |z1|^2)(1 - |z2|^2).
double weight_h(const HartogsPoint& z);

// Gamma^2(1-t) Gamma^2(t) = pi^2 / sin^2(pi t), 0 < t < 1.
double schur_constant(double t);

// Weighted kernel integral
//   T_t(z) = h(z)^t int_H |z2 conj(w2)| h(w)^(-t)
//            / (|1 - z2 conj(w2)|^2 |z2 conj(w2) - z1 conj(w1)|^2) dmu(w),
// 1/2 < t < 1. In the substitution coordinates the integrand is a product of
// a u-factor and a w2-factor, so the evaluation is the exact product of two
// 2-D disk quadratures (angular resolution auto-scales with the moduli of z).
double schur_integral(const HartogsPoint& z, double t, const QuadratureSpec& spec);

// Literal nested evaluation through integrate_hartogs; cross-validation only
// (cost grows like the square of the per-disk node count).
double schur_integral_nested(const HartogsPoint& z, double t,
                             const QuadratureSpec& spec);

// Inner-disk factor G(l) = (1-l^2)^t int_D (1-|u|^2)^(-t) |1-l conj(u)|^(-2) dnu(u);
// schur_integral(z,t) = G(|z1/z2|) * radial profile(|z2|).
double inner_disk_factor(double lambda, double t, const QuadratureSpec& spec);

// Radial profile I(r) of the |z2| slice. Closed form:
//   I(r) = 2^(2t-1) sqrt(pi) G(2-2t)/G(5/2-2t) r^(2t-1) F(3/2-2t, 1-t; 5/2-2t; r^2).
double radial_profile_closed(double r, double t);
// Same quantity by graded 1-D quadrature of
//   2 (1-r^2)^t r^(2t-1) int_0^1 x^(2-2t) (1-x^2)^(-t) / (1 - x^2 r^2) dx.
double radial_profile_quadrature(double r, double t, const QuadratureSpec& spec);

// Supremum estimate of T_t along the boundary path; reports the sequence,
// monotonicity, and relative gap of the deepest value to schur_constant(t).
VerificationReport schur_sup_estimate(double t, const BoundaryPath& path,
                                      const QuadratureSpec& spec, double tol = 0.05);

// Weighted disk supremum sup_z (1-|z|^2)^c int_D (1-|w|^2)^t2 |1-<z,w>|^-(2+t2+c) dnu
// against the closed form Gamma(t2+1) Gamma(c) / Gamma^2((2+t2+c)/2).
double forelli_rudin_closed(double c, double t2);
double forelli_rudin_value(double z_abs, double c, double t2,
                           const QuadratureSpec& spec);
VerificationReport forelli_rudin_sup(double c, double t2, const BoundaryPath& path,
                                     const QuadratureSpec& spec, double tol = 0.01);

// Torus quadrature of |1-<z,zeta>|^(-2a) against F(a,a;1;|z|^2).
VerificationReport torus_identity_check(double a, double r2, int angular_nodes,
                                        double tol = 1e-8);

// Positivity/monotonicity evidence for the radial profile's series factor.
VerificationReport monotone_g_check(double t, const std::vector<double>& grid);

// Two-sided operator-norm bound formulas, 4/3 < p < 4.
double upper_bound_value(const ExponentPair& e); // G^2(1-2/p) G^2(2/p); pole at p = 2
double lower_bound_value(const ExponentPair& e); // G^2(2/p) G^2(2/q)

struct BoundsRow {
    double p;
    double q;
    double lower;
    std::optional<double> upper;      // absent at p = 2 (gamma pole)
    std::optional<double> exact_norm; // 1 at p = 2
};
std::vector<BoundsRow> bounds_table(const std::vector<double>& p_grid);

// Schur-premise spot check: T_{2/p}(z) <= schur_constant(2/p) * (1 + slack)
// at `count` pseudo-random interior points.
VerificationReport premise_check(double p, int count, unsigned seed,
                                 const QuadratureSpec& spec, double slack = 0.02);

} // namespace htri::schur

#endif
