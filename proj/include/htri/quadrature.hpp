#ifndef HTRI_QUADRATURE_HPP
#define HTRI_QUADRATURE_HPP

#include <atomic>
#include <cmath>
#include <cstddef>
#include <vector>

#include "htri/domain.hpp"
#include "htri/errors.hpp"

namespace htri::quadrature {

// Node counts and mesh grading for the normalized-measure integrals.
// `panels` counts geometrically graded panels toward each endpoint of the
// radial s = r^2 variable (2*panels panels across [0,1]).
struct QuadratureSpec {
    int radial_nodes = 16;
    int panels = 12;
    int angular_nodes = 64;
    double grading = 2.0;

    void validate() const {
        if (radial_nodes < 1 || panels < 1 || angular_nodes < 4 || grading < 1.0)
            throw DomainError("QuadratureSpec: invalid field");
    }

    QuadratureSpec refined() const {
        return {radial_nodes + 4, panels + 2, 2 * angular_nodes, grading};
    }
};

// Compensated (Neumaier) accumulation; fixed traversal order makes reports
// reproducible across runs and thread counts.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        c += (std::abs(s) >= std::abs(x)) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct NeumaierSumC {
    NeumaierSum re, im;
    void add(const Complex& z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

struct RadialNode {
    double s;      // radial variable s = r^2 in (0, 1]
    double weight; // includes the declared endpoint weight s^a0 (1-s)^a1
};

// Nodes/weights for integrals  int_0^1 s^a0 (1-s)^a1 g(s) ds  with g regular
// at the endpoints. The weight is absorbed exactly by the power substitutions
// s = (1/2) v^(1/(1+a0)) and 1-s = (1/2) v^(1/(1+a1)); composite graded GL is
// applied to the residual. Requires a0, a1 > -1.
std::vector<RadialNode> weighted_radial_nodes(double alpha0, double alpha1,
                                              const QuadratureSpec& spec);

// Unit-circle angles 2*pi*j/n as complex points, cached per n.
std::vector<Complex> unit_circle(int n);

// Smallest angular node count for relative trapezoid error ~eps on integrands
// whose angular Fourier coefficients decay like rho^m (rounded to a multiple
// of 8, at least `at_least`).
int angular_nodes_for(double rho, double eps, int at_least);

namespace detail {

inline void check_finite(const Complex& v, std::atomic<bool>& bad) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        bad.store(true, std::memory_order_relaxed);
}

// Combines per-chunk partials in index order (deterministic for any thread
// count, including 1).
Complex combine_ordered(const std::vector<Complex>& partials);
double combine_ordered(const std::vector<double>& partials);

} // namespace detail

// -------------------------------------------------------------------------
// Torus: normalized surface measure, equal-weight trapezoid on the n-th
// roots of unity. Exact for trigonometric polynomials of degree < n.
template <class F>
Complex integrate_torus(F&& f, int angular_nodes) {
    if (angular_nodes < 1) throw DomainError("integrate_torus: need nodes >= 1");
    const auto& circ = unit_circle(angular_nodes);
    NeumaierSumC acc;
    for (int j = 0; j < angular_nodes; ++j) acc.add(f(circ[j]));
    return acc.value() / static_cast<double>(angular_nodes);
}

// -------------------------------------------------------------------------
// 1-D weighted integral  int_0^1 s^a0 (1-s)^a1 g(s) ds.
template <class G>
double integrate_01_weighted(G&& g, double alpha0, double alpha1,
                             const QuadratureSpec& spec) {
    const auto nodes = weighted_radial_nodes(alpha0, alpha1, spec);
    NeumaierSum acc;
    for (const auto& n : nodes) acc.add(n.weight * g(n.s));
    return acc.value();
}

// -------------------------------------------------------------------------
// Disk integrals against the normalized area measure:
//   int_D f dnu = int_0^1 [ (1/n) sum_j f(sqrt(s) e^{i theta_j}) ] ds.
// Radial nodes may carry a declared endpoint weight; the plain variant uses
// alpha0 = alpha1 = 0 with the graded mesh handling mild singularities.
template <class F>
Complex integrate_disk_weighted(F&& f, double alpha0, double alpha1,
                                const QuadratureSpec& spec) {
    spec.validate();
    const auto radial = weighted_radial_nodes(alpha0, alpha1, spec);
    const auto& circ = unit_circle(spec.angular_nodes);
    const int nr = static_cast<int>(radial.size());
    const int na = spec.angular_nodes;
    std::vector<Complex> partials(nr);
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nr; ++i) {
        const double r = std::sqrt(radial[i].s);
        NeumaierSumC row;
        for (int j = 0; j < na; ++j) {
            const Complex v = f(r * circ[j]);
            detail::check_finite(v, bad);
            row.add(v);
        }
        partials[i] = row.value() * (radial[i].weight / na);
    }
    if (bad.load()) throw NonFiniteError("integrate_disk: non-finite node value");
    return detail::combine_ordered(partials);
}

template <class F>
Complex integrate_disk(F&& f, const QuadratureSpec& spec) {
    return integrate_disk_weighted(std::forward<F>(f), 0.0, 0.0, spec);
}

// Identical rule; Gauss-Legendre nodes are interior so no node ever lands on
// the puncture. Integrands may blow up like |z|^s, s > -2, at 0.
template <class F>
Complex integrate_punctured_disk(F&& f, const QuadratureSpec& spec) {
    return integrate_disk(std::forward<F>(f), spec);
}

// Two-level refinement check; `stabilized` false signals a divergent or
// under-resolved integrand.
struct RefinedValue {
    Complex value;
    double est_change = 0.0;
    bool stabilized = false;
};

template <class F>
RefinedValue refine_disk(F&& f, const QuadratureSpec& spec, double rel_tol) {
    const Complex v1 = integrate_disk(f, spec);
    const Complex v2 = integrate_disk(f, spec.refined());
    RefinedValue r;
    r.value = v2;
    r.est_change = std::abs(v2 - v1) / std::max(1.0, std::abs(v2));
    r.stabilized = r.est_change < rel_tol;
    return r;
}

// -------------------------------------------------------------------------
// Hartogs triangle with the normalized measure mu = dV/pi^2 (mass 1/2):
//   int_H f dmu = int_D int_D f(u*z2, z2) |z2|^2 dnu(u) dnu(z2).
// Outer (z2) nodes run in parallel; the inner sweep is serial per node and
// partials combine in outer-node order. The weighted variant integrates
//   |z2|^(2 a0) (1-|z2|^2)^a1 g(z)  against dmu
// with the power factors absorbed exactly into the outer radial rule
// (requires a0 > -2, a1 > -1; the measure contributes one power of s2).
template <class F>
Complex integrate_hartogs_weighted(F&& g, double alpha0_outer, double alpha1_outer,
                                   const QuadratureSpec& spec) {
    spec.validate();
    // Outer weight exponent includes the |z2|^2 Jacobian of the substitution.
    const auto outer_radial =
        weighted_radial_nodes(alpha0_outer + 1.0, alpha1_outer, spec);
    const auto inner_radial = weighted_radial_nodes(0.0, 0.0, spec);
    const auto& circ = unit_circle(spec.angular_nodes);
    const int nr = static_cast<int>(outer_radial.size());
    const int na = spec.angular_nodes;
    const int outer = nr * na;
    std::vector<Complex> partials(outer);
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
    for (int oi = 0; oi < outer; ++oi) {
        const int i = oi / na, j = oi % na;
        const Complex z2 = std::sqrt(outer_radial[i].s) * circ[j];
        NeumaierSumC inner;
        for (std::size_t ii = 0; ii < inner_radial.size(); ++ii) {
            const double ru = std::sqrt(inner_radial[ii].s);
            NeumaierSumC row;
            for (int jj = 0; jj < na; ++jj) {
                const Complex v = g(HartogsPoint{ru * circ[jj] * z2, z2});
                detail::check_finite(v, bad);
                row.add(v);
            }
            inner.add(row.value() * (inner_radial[ii].weight / na));
        }
        partials[oi] = inner.value() * (outer_radial[i].weight / na);
    }
    if (bad.load())
        throw NonFiniteError("integrate_hartogs_weighted: non-finite node value");
    return detail::combine_ordered(partials);
}

template <class F>
Complex integrate_hartogs(F&& f, const QuadratureSpec& spec) {
    spec.validate();
    const auto radial = weighted_radial_nodes(0.0, 0.0, spec);
    const auto& circ = unit_circle(spec.angular_nodes);
    const int nr = static_cast<int>(radial.size());
    const int na = spec.angular_nodes;
    const int outer = nr * na;
    std::vector<Complex> partials(outer);
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
    for (int oi = 0; oi < outer; ++oi) {
        const int i = oi / na, j = oi % na;
        const double s2 = radial[i].s;
        const Complex z2 = std::sqrt(s2) * circ[j];
        NeumaierSumC inner;
        for (int ii = 0; ii < nr; ++ii) {
            const double ru = std::sqrt(radial[ii].s);
            NeumaierSumC row;
            for (int jj = 0; jj < na; ++jj) {
                const Complex u = ru * circ[jj];
                const Complex v = f(HartogsPoint{u * z2, z2});
                detail::check_finite(v, bad);
                row.add(v);
            }
            inner.add(row.value() * (radial[ii].weight / na));
        }
        partials[oi] = inner.value() * (s2 * radial[i].weight / na);
    }
    if (bad.load()) throw NonFiniteError("integrate_hartogs: non-finite node value");
    return detail::combine_ordered(partials);
}

// -------------------------------------------------------------------------
// Serial reference implementations: straightforward loops, plain double
// accumulation. Kept for correctness tests and the benchmark target.
namespace serial {

template <class F>
Complex integrate_disk(F&& f, const QuadratureSpec& spec) {
    spec.validate();
    const auto radial = weighted_radial_nodes(0.0, 0.0, spec);
    const auto& circ = unit_circle(spec.angular_nodes);
    Complex total = 0.0;
    for (const auto& rn : radial) {
        const double r = std::sqrt(rn.s);
        Complex row = 0.0;
        for (int j = 0; j < spec.angular_nodes; ++j) row += f(r * circ[j]);
        total += row * (rn.weight / spec.angular_nodes);
    }
    return total;
}

template <class F>
Complex integrate_hartogs(F&& f, const QuadratureSpec& spec) {
    spec.validate();
    const auto radial = weighted_radial_nodes(0.0, 0.0, spec);
    const auto& circ = unit_circle(spec.angular_nodes);
    Complex total = 0.0;
    for (const auto& r2 : radial) {
        const double s2 = r2.s;
        for (int j = 0; j < spec.angular_nodes; ++j) {
            const Complex z2 = std::sqrt(s2) * circ[j];
            Complex inner = 0.0;
            for (const auto& ru : radial) {
                Complex row = 0.0;
                for (int jj = 0; jj < spec.angular_nodes; ++jj)
                    row += f(HartogsPoint{std::sqrt(ru.s) * circ[jj] * z2, z2});
                inner += row * (ru.weight / spec.angular_nodes);
            }
            total += inner * (s2 * r2.weight / spec.angular_nodes);
        }
    }
    return total;
}

} // namespace serial

} // namespace htri::quadrature

#endif
