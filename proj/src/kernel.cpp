#include "htri/kernel.hpp"

#include <cmath>

namespace htri::kernel {

Complex bergman_kernel(const HartogsPoint& z, const HartogsPoint& w) {
    require_in_domain(z, "bergman_kernel");
    require_in_domain(w, "bergman_kernel");
    const Complex t = z.z2 * std::conj(w.z2);
    const Complex d1 = 1.0 - t;
    const Complex d2 = t - z.z1 * std::conj(w.z1);
    return t / (d1 * d1 * d2 * d2);
}

double monomial_norm_sq(const MonomialIndex& m) {
    if (m.j < 0 || m.j + m.k < -1)
        throw DomainError("monomial_norm_sq: requires j >= 0 and j + k >= -1");
    return 1.0 / ((m.j + 1.0) * (m.j + m.k + 2.0));
}

Complex kernel_series_partial(const HartogsPoint& z, const HartogsPoint& w, int J,
                              int Kmax) {
    require_in_domain(z, "kernel_series_partial");
    require_in_domain(w, "kernel_series_partial");
    const Complex a = z.z1 * std::conj(w.z1);
    const Complex b = z.z2 * std::conj(w.z2);
    quadrature::NeumaierSumC acc;
    for (int j = 0; j <= J; ++j) {
        const Complex aj = std::pow(a, j);
        for (int k = -1 - j; k <= Kmax; ++k) {
            // term: z1^j z2^k conj(w1)^j conj(w2)^k / ||z1^j z2^k||^2
            const double inv_norm = (j + 1.0) * (j + k + 2.0);
            acc.add(aj * std::pow(b, k) * inv_norm);
        }
    }
    return acc.value();
}

Complex project(const std::function<Complex(const HartogsPoint&)>& f,
                const HartogsPoint& z, const QuadratureSpec& spec) {
    require_in_domain(z, "project");
    return quadrature::integrate_hartogs(
        [&](const HartogsPoint& w) { return bergman_kernel(z, w) * f(w); }, spec);
}

std::vector<HartogsPoint> interior_grid(double margin) {
    // Moduli pairs (|z1/z2|, |z2|) spread over the interior, one point off the
    // real axis to exercise the phases.
    const double m = margin;
    return {
        HartogsPoint{Complex(0.1 * 0.5, 0.0), Complex(0.5, 0.0)},
        HartogsPoint{Complex(m * m, 0.0), Complex(m, 0.0)},
        HartogsPoint{Complex(0.0, 0.0), Complex(0.3, 0.0)},
        HartogsPoint{Complex(0.6 * 0.35, 0.0), Complex(0.35, 0.0)},
        HartogsPoint{std::polar(0.5 * 0.7, 1.1), std::polar(0.7, -0.4)},
    };
}

VerificationReport reproduce_check(const MonomialIndex& m,
                                   const std::vector<HartogsPoint>& grid,
                                   const QuadratureSpec& spec, double tol) {
    auto rep = make_report("kernel.reproduce");
    rep.in("j", static_cast<double>(m.j)).in("k", static_cast<double>(m.k));
    if (m.j < 0 || m.j + m.k < -1)
        throw DomainError("reproduce_check: invalid monomial index");
    auto mono = [&](const HartogsPoint& w) {
        return std::pow(w.z1, m.j) * std::pow(w.z2, m.k);
    };
    double max_err = 0.0;
    for (const auto& z : grid) {
        const Complex pw = project(mono, z, spec);
        max_err = std::max(max_err, std::abs(pw - mono(z)));
    }
    rep.detail("grid_points", static_cast<double>(grid.size()));
    rep.against(max_err, 0.0, tol);
    return rep;
}

} // namespace htri::kernel
