#include "htri/schur.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "htri/specfun.hpp"

namespace htri::schur {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

void require_t(double t, const char* who) {
    if (!(t > 0.5 && t < 1.0))
        throw DomainError(std::string(who) + ": t must lie in (1/2, 1)");
}

QuadratureSpec with_angular(const QuadratureSpec& spec, double rho, double eps) {
    QuadratureSpec s = spec;
    s.angular_nodes = quadrature::angular_nodes_for(rho, eps, spec.angular_nodes);
    return s;
}

} // namespace

double weight_h(const HartogsPoint& z) {
    require_in_domain(z, "weight_h");
    return (std::norm(z.z2) - std::norm(z.z1)) * (1.0 - std::norm(z.z2));
}

double schur_constant(double t) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("schur_constant: t must lie in (0,1)");
    const double g = kPi / specfun::sin_pi(t);
    return g * g;
}

double inner_disk_factor(double lambda, double t, const QuadratureSpec& spec) {
    require_t(t, "inner_disk_factor");
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw DomainError("inner_disk_factor: modulus must lie in [0,1)");
    const auto s = with_angular(spec, lambda, 1e-10);
    const double u_int =
        quadrature::integrate_disk_weighted(
            [lambda](const Complex& u) { return 1.0 / std::norm(1.0 - lambda * std::conj(u)); },
            0.0, -t, s)
            .real();
    return std::pow(1.0 - lambda * lambda, t) * u_int;
}

namespace {

// 2-D disk quadrature of the |z2|-slice profile (no angular pre-integration).
double radial_profile_disk(double r, double t, const QuadratureSpec& spec) {
    const auto s = with_angular(spec, r, 1e-10);
    const double w_int =
        quadrature::integrate_disk_weighted(
            [r](const Complex& w) { return 1.0 / std::norm(1.0 - r * std::conj(w)); },
            0.5 - t, -t, s)
            .real();
    return std::pow(1.0 - r * r, t) * std::pow(r, 2.0 * t - 1.0) * w_int;
}

} // namespace

double schur_integral(const HartogsPoint& z, double t, const QuadratureSpec& spec) {
    require_in_domain(z, "schur_integral");
    require_t(t, "schur_integral");
    const double r = std::abs(z.z2);
    const double lambda = std::abs(z.z1) / r;
    return inner_disk_factor(lambda, t, spec) * radial_profile_disk(r, t, spec);
}

double schur_integral_nested(const HartogsPoint& z, double t,
                             const QuadratureSpec& spec) {
    require_in_domain(z, "schur_integral_nested");
    require_t(t, "schur_integral_nested");
    const Complex z1 = z.z1, z2 = z.z2;
    const double pref = std::pow(weight_h(z), t);
    const Complex integral = quadrature::integrate_hartogs(
        [&](const HartogsPoint& w) {
            const Complex t2 = z2 * std::conj(w.z2);
            const Complex d = t2 - z1 * std::conj(w.z1);
            const double hw = (std::norm(w.z2) - std::norm(w.z1)) * (1.0 - std::norm(w.z2));
            return Complex(std::abs(t2) * std::pow(hw, -t) /
                           (std::norm(1.0 - t2) * std::norm(d)));
        },
        spec);
    return pref * integral.real();
}

double radial_profile_closed(double r, double t) {
    require_t(t, "radial_profile_closed");
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("radial_profile_closed: r must lie in (0,1)");
    const double c = std::exp2(2.0 * t - 1.0) * std::sqrt(kPi) *
                     specfun::gamma(2.0 - 2.0 * t) / specfun::gamma(2.5 - 2.0 * t);
    return c * std::pow(r, 2.0 * t - 1.0) *
           specfun::hyp2f1({1.5 - 2.0 * t, 1.0 - t, 2.5 - 2.0 * t}, r * r);
}

double radial_profile_quadrature(double r, double t, const QuadratureSpec& spec) {
    require_t(t, "radial_profile_quadrature");
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("radial_profile_quadrature: r must lie in (0,1)");
    const double r2 = r * r;
    const double integral = quadrature::integrate_01_weighted(
        [r2](double y) { return 1.0 / (1.0 - y * r2); }, 0.5 - t, -t, spec);
    return std::pow(1.0 - r2, t) * std::pow(r, 2.0 * t - 1.0) * integral;
}

VerificationReport schur_sup_estimate(double t, const BoundaryPath& path,
                                      const QuadratureSpec& spec, double tol) {
    require_t(t, "schur_sup_estimate");
    auto rep = make_report("schur.sup");
    rep.in("t", t).in("depth", static_cast<double>(path.depth));
    const double target = schur_constant(t);
    const auto pts = path.points();
    bool nondecreasing = true;
    double prev = 0.0, last = 0.0;
    int k = path.k_min;
    for (const auto& z : pts) {
        last = schur_integral(z, t, spec);
        rep.detail("T_k" + std::to_string(k), last);
        if (last < prev * (1.0 - 1e-9)) nondecreasing = false;
        prev = last;
        ++k;
    }
    rep.detail("monotone", nondecreasing ? 1.0 : 0.0);
    const double gap = std::abs(last - target) / target;
    rep.detail("rel_gap", gap);
    rep.against(last, target, tol);
    rep.passed = rep.passed && nondecreasing;
    return rep;
}

double forelli_rudin_closed(double c, double t2) {
    if (!(c > 0.0) || !(t2 > -1.0))
        throw DomainError("forelli_rudin_closed: requires c > 0 and t > -1");
    const double g = specfun::gamma(0.5 * (2.0 + t2 + c));
    return specfun::gamma(t2 + 1.0) * specfun::gamma(c) / (g * g);
}

double forelli_rudin_value(double z_abs, double c, double t2,
                           const QuadratureSpec& spec) {
    if (!(c > 0.0) || !(t2 > -1.0))
        throw DomainError("forelli_rudin_value: requires c > 0 and t > -1");
    if (!(z_abs >= 0.0 && z_abs < 1.0))
        throw DomainError("forelli_rudin_value: |z| must lie in [0,1)");
    const double expo = 2.0 + t2 + c;
    const auto s = with_angular(spec, z_abs, 1e-10);
    const double integral =
        quadrature::integrate_disk_weighted(
            [z_abs, expo](const Complex& w) {
                return std::pow(std::norm(1.0 - z_abs * std::conj(w)), -0.5 * expo);
            },
            0.0, t2, s)
            .real();
    return std::pow(1.0 - z_abs * z_abs, c) * integral;
}

VerificationReport forelli_rudin_sup(double c, double t2, const BoundaryPath& path,
                                     const QuadratureSpec& spec, double tol) {
    auto rep = make_report("forelli_rudin.sup");
    rep.in("c", c).in("t", t2).in("depth", static_cast<double>(path.depth));
    const double target = forelli_rudin_closed(c, t2);
    double best = 0.0;
    int k = path.k_min;
    for (double r : path.radii()) {
        const double v = forelli_rudin_value(r, c, t2, spec);
        rep.detail("S_k" + std::to_string(k), v);
        best = std::max(best, v);
        ++k;
    }
    rep.against(best, target, tol);
    return rep;
}

VerificationReport torus_identity_check(double a, double r2, int angular_nodes,
                                        double tol) {
    if (!(r2 >= 0.0 && r2 < 1.0))
        throw DomainError("torus_identity_check: |z|^2 must lie in [0,1)");
    auto rep = make_report("torus.identity");
    rep.in("a", a).in("r2", r2);
    const double r = std::sqrt(r2);
    const int n = quadrature::angular_nodes_for(r, 1e-12, angular_nodes);
    const double lhs =
        quadrature::integrate_torus(
            [a, r](const Complex& zeta) {
                return std::pow(std::norm(1.0 - r * std::conj(zeta)), -a);
            },
            n)
            .real();
    const double rhs = (r2 == 0.0) ? 1.0 : specfun::hyp2f1({a, a, 1.0}, r2);
    rep.detail("torus", lhs).detail("series", rhs);
    rep.against(lhs, rhs, tol);
    return rep;
}

VerificationReport monotone_g_check(double t, const std::vector<double>& grid) {
    require_t(t, "monotone_g_check");
    auto rep = make_report("schur.monotone_g");
    rep.in("t", t);
    const double a = 1.5 - 2.0 * t, b = 1.0 - t, c = 2.5 - 2.0 * t;
    bool ok = true;
    double min_val = std::numeric_limits<double>::infinity();
    if (a <= 0.0) {
        // g positivity plus sampled increase of the scaled profile factor.
        double prev_f = 0.0;
        bool first = true;
        for (double lam : grid) {
            const double g = (t - 0.5) * specfun::hyp2f1({a, b, c}, lam) +
                             lam * specfun::hyp2f1({a + 1.0, b + 1.0, c + 1.0}, lam);
            min_val = std::min(min_val, g);
            if (!(g > 0.0)) ok = false;
            const double f = std::pow(lam, t - 0.5) * specfun::hyp2f1({a, b, c}, lam);
            if (!first && !(f > prev_f)) ok = false;
            prev_f = f;
            first = false;
        }
        rep.note = "series-derivative positivity and sampled increase";
    } else {
        // All Pochhammer factors positive: check the leading 100 coefficients.
        double coeff = 1.0;
        for (int k = 0; k < 100; ++k) {
            min_val = std::min(min_val, coeff);
            if (!(coeff > 0.0)) ok = false;
            coeff *= (a + k) * (b + k) / ((c + k) * (k + 1.0));
        }
        rep.note = "first 100 series coefficients positive";
    }
    rep.verdict(min_val, ok);
    return rep;
}

double upper_bound_value(const ExponentPair& e) {
    if (!(e.p > 4.0 / 3.0 && e.p < 4.0))
        throw DomainError("upper_bound: p must lie in (4/3, 4)");
    if (e.p == 2.0) throw PoleError("upper_bound: gamma pole at p = 2");
    const double g = kPi / specfun::sin_pi(2.0 / e.p);
    return g * g;
}

double lower_bound_value(const ExponentPair& e) {
    if (!(e.p > 4.0 / 3.0 && e.p < 4.0))
        throw DomainError("lower_bound: p must lie in (4/3, 4)");
    const double g = specfun::gamma(2.0 / e.p) * specfun::gamma(2.0 / e.q);
    return g * g;
}

std::vector<BoundsRow> bounds_table(const std::vector<double>& p_grid) {
    std::vector<BoundsRow> rows;
    for (double p : p_grid) {
        const auto e = ExponentPair::from_p(p);
        BoundsRow row{e.p, e.q, lower_bound_value(e), std::nullopt, std::nullopt};
        if (std::abs(p - 2.0) < 1e-12) {
            row.exact_norm = 1.0; // orthogonal projection
        } else {
            row.upper = upper_bound_value(e);
        }
        rows.push_back(row);
    }
    return rows;
}

VerificationReport premise_check(double p, int count, unsigned seed,
                                 const QuadratureSpec& spec, double slack) {
    const auto e = ExponentPair::from_p(p);
    const double t = 2.0 / e.p;
    require_t(t, "premise_check");
    auto rep = make_report("schur.premise");
    rep.in("p", p).in("count", static_cast<double>(count));
    const double bound = schur_constant(t) * (1.0 + slack);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> mod2(0.1, 0.9), ratio(0.0, 0.9),
        phase(0.0, 2.0 * kPi);
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < count; ++i) {
        const double r2 = mod2(rng), lam = ratio(rng);
        const HartogsPoint z{std::polar(lam * r2, phase(rng)),
                             std::polar(r2, phase(rng))};
        const double v = schur_integral(z, t, spec);
        worst = std::max(worst, v);
        if (!(v <= bound)) ok = false;
    }
    rep.detail("bound", bound).detail("max_T", worst);
    rep.verdict(worst, ok, slack);
    rep.reference = schur_constant(t);
    return rep;
}

} // namespace htri::schur
