#include "htri/lowerbound.hpp"

#include <algorithm>
#include <cmath>

#include "htri/fft.hpp"
#include "htri/schur.hpp"
#include "htri/specfun.hpp"

namespace htri::lowerbound {

namespace {

void require_p(double p, const char* who) {
    if (!(p > 4.0 / 3.0 && p < 4.0))
        throw DomainError(std::string(who) + ": p must lie in (4/3, 4)");
}

double conjugate(double p) { return p / (p - 1.0); }

int next_pow2(int n) {
    int m = 1;
    while (m < n) m <<= 1;
    return m;
}

// F(2/p-1, k+1; k+2; s) for k = 0..kmax. Backward recurrence
//   F_{k-1} = s (k+1-a) F_k / (k+1) + (1-s)^(1-a)
// (by parts on the Euler integral (k+1) int_0^1 t^k (1-ts)^(-a) dt); the
// forward direction amplifies errors like s^-k, backward damps them, so one
// direct series evaluation at the top index seeds the sweep.
std::vector<double> proj_hyp_table(double a, double s, int kmax) {
    std::vector<double> f(kmax + 1, 1.0);
    if (s == 0.0) return f;
    specfun::SeriesControl ctl;
    f[kmax] = specfun::hyp2f1({a, kmax + 1.0, kmax + 2.0}, s, ctl);
    const double d = std::pow(1.0 - s, 1.0 - a);
    for (int k = kmax; k >= 1; --k)
        f[k - 1] = s * (k + 1.0 - a) * f[k] / (k + 1.0) + d;
    return f;
}

// eps_k = ((2/p)_k / k!) (G(k+2) G(k+1) / (G(k+1+2/q) G(k+2/p)) - 1) via
// stepwise gamma-ratio recurrences.
std::vector<double> psi_coeff_table(int kmax, double p) {
    const double q = conjugate(p);
    std::vector<double> eps(kmax + 1);
    double poch = 1.0;
    double ratio = 1.0 / (specfun::gamma(1.0 + 2.0 / q) * specfun::gamma(2.0 / p));
    for (int k = 0; k <= kmax; ++k) {
        eps[k] = poch * (ratio - 1.0);
        poch *= (2.0 / p + k) / (k + 1.0);
        ratio *= (k + 2.0) * (k + 1.0) / ((k + 1.0 + 2.0 / q) * (k + 2.0 / p));
    }
    return eps;
}

// D_k = G(2/q) G(k+2) / G(k+1+2/q); a_k = F_k - D_k.
std::vector<double> d_table(int kmax, double p) {
    const double q = conjugate(p);
    std::vector<double> d(kmax + 1);
    d[0] = q / 2.0; // G(2/q)/G(1+2/q)
    for (int k = 0; k < kmax; ++k) d[k + 1] = d[k] * (k + 2.0) / (k + 1.0 + 2.0 / q);
    return d;
}

struct HornerResult {
    Complex value;
    double tail;
};

HornerResult horner(const std::vector<double>& c, const Complex& x) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    const double ax = std::abs(x);
    const double tail =
        c.empty() || ax >= 1.0
            ? 0.0
            : std::abs(c.back()) * std::pow(ax, static_cast<double>(c.size() - 1)) /
                  (1.0 - ax);
    return {acc, tail};
}

} // namespace

Complex extremal_function(const HartogsPoint& z, const XiPoint& xi, double p) {
    require_p(p, "extremal_function");
    require_in_domain(z, "extremal_function");
    require_in_domain(xi, "extremal_function");
    const double e = 1.0 - 2.0 / p;
    const Complex lam = xi.z1 / xi.z2;
    const Complex zr = z.z1 / z.z2;
    const Complex num1 = std::pow(1.0 - xi.z2 * std::conj(z.z2), e);
    const Complex num2 = std::pow(1.0 - lam * std::conj(zr), e);
    return num1 / (z.z2 * (1.0 - z.z2 * std::conj(xi.z2))) * num2 /
           (1.0 - zr * std::conj(lam));
}

NormResult extremal_norm(const XiPoint& xi, double p, const QuadratureSpec& spec,
                         bool closed_inner) {
    require_p(p, "extremal_norm");
    require_in_domain(xi, "extremal_norm");
    const double r2 = std::abs(xi.z2);
    const Complex lam = xi.z1 / xi.z2;
    const double lam_abs = std::abs(lam);

    QuadratureSpec outer_spec = spec;
    outer_spec.angular_nodes = quadrature::angular_nodes_for(r2, 1e-10, spec.angular_nodes);
    const Complex xi2c = std::conj(xi.z2);
    const double outer =
        quadrature::integrate_disk_weighted(
            [&](const Complex& z2) { return 1.0 / std::norm(1.0 - z2 * xi2c); },
            0.5 * (2.0 - p), 0.0, outer_spec)
            .real();

    double inner;
    if (closed_inner) {
        const double l2 = lam_abs * lam_abs;
        inner = l2 == 0.0 ? 1.0 : -std::log1p(-l2) / l2;
    } else {
        QuadratureSpec inner_spec = spec;
        inner_spec.angular_nodes =
            quadrature::angular_nodes_for(lam_abs, 1e-10, spec.angular_nodes);
        const Complex lamc = std::conj(lam);
        inner = quadrature::integrate_disk(
                    [&](const Complex& u) { return 1.0 / std::norm(1.0 - u * lamc); },
                    inner_spec)
                    .real();
    }
    NormResult res;
    res.norm_pow = outer * inner;
    res.norm = std::pow(res.norm_pow, 1.0 / p);
    return res;
}

SeriesEval triple_factor_disk_series(double a, double b, double c, double t,
                                     const Complex& z, const Complex& w, int J) {
    if (!(t > -1.0)) throw DomainError("triple_factor_disk_series: t must exceed -1");
    if (!(std::abs(z) < 1.0 && std::abs(w) < 1.0))
        throw DomainError("triple_factor_disk_series: z, w must lie in the disk");
    const double s = std::norm(w);
    const Complex x = z * std::conj(w);
    const double pref = specfun::gamma(1.0 + t) / specfun::gamma(2.0 + t);
    Complex sum(0.0, 0.0);
    double coef = 1.0; // (a)_j (c)_j / ((2+t)_j j!)
    Complex xj(1.0, 0.0);
    double last = 0.0;
    for (int j = 0; j <= J; ++j) {
        const double fj = specfun::hyp2f1({b, c + j, 2.0 + t + j}, s);
        const Complex term = coef * fj * xj;
        sum += term;
        last = std::abs(term);
        coef *= (a + j) * (c + j) / ((2.0 + t + j) * (j + 1.0));
        xj *= x;
    }
    SeriesEval out;
    out.value = pref * sum;
    const double ax = std::abs(x);
    out.tail_estimate = ax < 1.0 ? pref * last * ax / (1.0 - ax) : last;
    out.truncated = out.tail_estimate > 1e-10;
    return out;
}

double psi_coefficient(int k, double p) {
    require_p(p, "psi_coefficient");
    if (k < 0) throw DomainError("psi_coefficient: k must be nonnegative");
    return psi_coeff_table(k, p)[k];
}

double upsilon_coefficient(int k, double s, double p) {
    require_p(p, "upsilon_coefficient");
    if (k < 0 || !(s >= 0.0 && s < 1.0))
        throw DomainError("upsilon_coefficient: need k >= 0 and s in [0,1)");
    return proj_hyp_table(2.0 / p - 1.0, s, k)[k] - d_table(k, p)[k];
}

FactorCoeffs factor_coefficients(double xi_abs, double p, const SeriesCap& cap) {
    require_p(p, "factor_coefficients");
    if (!(xi_abs >= 0.0 && xi_abs < 1.0))
        throw DomainError("factor_coefficients: |xi| must lie in [0,1)");
    const double q = conjugate(p);
    const double s = xi_abs * xi_abs;

    int K = cap.start;
    if (xi_abs > 0.0) {
        const double scale = std::max(1.0, std::pow(1.0 - s, 1.0 - 2.0 / p));
        while (K < cap.cap &&
               scale * std::pow(xi_abs, K) / (1.0 - xi_abs) > cap.tail_tol)
            K *= 2;
        K = std::min(K, cap.cap);
    } else {
        K = 1;
    }

    FactorCoeffs out;
    out.gamma_product = specfun::gamma(2.0 / p) * specfun::gamma(2.0 / q);
    out.full = proj_hyp_table(2.0 / p - 1.0, s, K - 1);
    const auto eps = psi_coeff_table(K - 1, p);
    const auto d = d_table(K - 1, p);
    out.phi.resize(K);
    out.psi.resize(K);
    out.ups.resize(K);
    double poch = 1.0;
    for (int k = 0; k < K; ++k) {
        out.phi[k] = out.gamma_product * poch;
        out.psi[k] = out.gamma_product * eps[k];
        out.ups[k] = out.full[k] - d[k];
        poch *= (2.0 / p + k) / (k + 1.0);
    }
    out.tail_estimate = xi_abs > 0.0 ? std::abs(out.full.back()) *
                                           std::pow(xi_abs, K - 1) / (1.0 - xi_abs)
                                     : 0.0;
    out.truncated = out.tail_estimate > cap.tail_tol;
    return out;
}

Complex phi_factor(const Complex& zeta, const Complex& xi, double p) {
    require_p(p, "phi_factor");
    const double q = conjugate(p);
    return specfun::gamma(2.0 / p) * specfun::gamma(2.0 / q) *
           std::pow(1.0 - zeta * std::conj(xi), -2.0 / p);
}

namespace {

SeriesEval eval_factor_series(const std::vector<double>& coeffs, const Complex& zeta,
                              const Complex& xi, double tail_tol) {
    if (!(std::abs(zeta) < 1.0 && std::abs(xi) < 1.0))
        throw DomainError("factor series: arguments must lie in the disk");
    const auto h = horner(coeffs, zeta * std::conj(xi));
    SeriesEval out;
    out.value = h.value;
    out.tail_estimate = h.tail;
    out.truncated = h.tail > tail_tol;
    return out;
}

} // namespace

SeriesEval psi_factor(const Complex& zeta, const Complex& xi, double p,
                      const SeriesCap& cap) {
    const auto c = factor_coefficients(std::abs(xi), p, cap);
    return eval_factor_series(c.psi, zeta, xi, cap.tail_tol);
}

SeriesEval upsilon_factor(const Complex& zeta, const Complex& xi, double p,
                          const SeriesCap& cap) {
    const auto c = factor_coefficients(std::abs(xi), p, cap);
    return eval_factor_series(c.ups, zeta, xi, cap.tail_tol);
}

SeriesEval projection_factor(const Complex& zeta, const Complex& xi, double p,
                             const SeriesCap& cap) {
    const auto c = factor_coefficients(std::abs(xi), p, cap);
    return eval_factor_series(c.full, zeta, xi, cap.tail_tol);
}

ExtremalProjector::ExtremalProjector(const XiPoint& xi, double p, const SeriesCap& cap)
    : xi_(xi), p_(p) {
    require_in_domain(xi, "ExtremalProjector");
    require_p(p, "ExtremalProjector");
    outer_ = factor_coefficients(std::abs(xi.z2), p, cap);
    inner_ = factor_coefficients(std::abs(xi.z1 / xi.z2), p, cap);
}

SeriesEval ExtremalProjector::operator()(const HartogsPoint& z) const {
    require_in_domain(z, "ExtremalProjector");
    const auto s2 = horner(outer_.full, z.z2 * std::conj(xi_.z2));
    const auto s1 =
        horner(inner_.full, (z.z1 / z.z2) * std::conj(xi_.z1 / xi_.z2));
    SeriesEval out;
    out.value = s2.value * s1.value / z.z2;
    out.tail_estimate =
        std::abs(s1.value) * s2.tail + std::abs(s2.value) * s1.tail;
    out.truncated = outer_.truncated || inner_.truncated;
    return out;
}

SeriesEval project_extremal(const HartogsPoint& z, const XiPoint& xi, double p,
                            const SeriesCap& cap) {
    return ExtremalProjector(xi, p, cap)(z);
}

FactorNormsPow factor_norms_pow(const Complex& xi, double p, double alpha0,
                                const QuadratureSpec& spec, const SeriesCap& cap) {
    require_p(p, "factor_norms_pow");
    const double xi_abs = std::abs(xi);
    const auto coeffs = factor_coefficients(xi_abs, p, cap);
    const int K = static_cast<int>(coeffs.full.size());

    // conj(xi)^k absorbed so the FFT circle evaluation runs in zeta directly.
    std::vector<Complex> cpsi(K), cups(K);
    const Complex xic = std::conj(xi);
    Complex xk(1.0, 0.0);
    for (int k = 0; k < K; ++k) {
        cpsi[k] = coeffs.psi[k] * xk;
        cups[k] = coeffs.ups[k] * xk;
        xk *= xic;
    }

    const auto radial = quadrature::weighted_radial_nodes(alpha0, 0.0, spec);
    const int n_ang = next_pow2(
        quadrature::angular_nodes_for(xi_abs, 1e-10, spec.angular_nodes));
    const auto& circ = quadrature::unit_circle(n_ang);
    const int nr = static_cast<int>(radial.size());
    const double gg_p = std::pow(coeffs.gamma_product, p);
    const double half_p = 0.5 * p;

    std::vector<std::array<double, 4>> partials(nr);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nr; ++i) {
        const double r = std::sqrt(radial[i].s);
        const auto vpsi = detail::polynomial_on_circle(cpsi, r, n_ang);
        const auto vups = detail::polynomial_on_circle(cups, r, n_ang);
        quadrature::NeumaierSum s_full, s_phi, s_psi, s_ups;
        for (int j = 0; j < n_ang; ++j) {
            const Complex one_minus_x = 1.0 - r * circ[j] * xic;
            // |Phi|^p = GG^p |1-x|^-2 exactly (the p and 2/p powers cancel).
            const double phi_pow = gg_p / std::norm(one_minus_x);
            const Complex phi_v =
                coeffs.gamma_product * std::pow(one_minus_x, -2.0 / p);
            const Complex s_v = phi_v + vpsi[j] + vups[j];
            s_full.add(std::pow(std::norm(s_v), half_p));
            s_phi.add(phi_pow);
            s_psi.add(std::pow(std::norm(vpsi[j]), half_p));
            s_ups.add(std::pow(std::norm(vups[j]), half_p));
        }
        const double w = radial[i].weight / n_ang;
        partials[i] = {w * s_full.value(), w * s_phi.value(), w * s_psi.value(),
                       w * s_ups.value()};
    }
    quadrature::NeumaierSum full, phi, psi, ups;
    for (const auto& pt : partials) {
        full.add(pt[0]);
        phi.add(pt[1]);
        psi.add(pt[2]);
        ups.add(pt[3]);
    }
    FactorNormsPow out;
    out.full = full.value();
    out.phi = phi.value();
    out.psi = psi.value();
    out.ups = ups.value();
    out.truncated = coeffs.truncated;
    return out;
}

NormResult projected_norm(const XiPoint& xi, double p, const QuadratureSpec& spec,
                          const SeriesCap& cap) {
    require_in_domain(xi, "projected_norm");
    const Complex lam = xi.z1 / xi.z2;
    const auto outer = factor_norms_pow(xi.z2, p, 0.5 * (2.0 - p), spec, cap);
    const auto inner = factor_norms_pow(lam, p, 0.0, spec, cap);
    NormResult res;
    res.norm_pow = outer.full * inner.full;
    res.norm = std::pow(res.norm_pow, 1.0 / p);
    res.truncated = outer.truncated || inner.truncated;
    return res;
}

RemainderRatios remainder_ratios(const XiPoint& xi, double p,
                                 const QuadratureSpec& spec, const SeriesCap& cap) {
    require_in_domain(xi, "remainder_ratios");
    require_p(p, "remainder_ratios");
    const Complex lam = xi.z1 / xi.z2;
    const auto A = factor_norms_pow(xi.z2, p, 0.5 * (2.0 - p), spec, cap);
    const auto B = factor_norms_pow(lam, p, 0.0, spec, cap);
    const auto fn = extremal_norm(xi, p, spec);
    const double gg = specfun::gamma(2.0 / p) * specfun::gamma(2.0 / conjugate(p));

    RemainderRatios out;
    out.names = {"phi_psi", "phi_ups", "psi_phi", "psi_ups",
                 "ups_phi", "ups_psi", "psi_psi", "ups_ups"};
    const double an[3] = {A.phi, A.psi, A.ups};
    const double bn[3] = {B.phi, B.psi, B.ups};
    const int ia[8] = {0, 0, 1, 1, 2, 2, 1, 2};
    const int ib[8] = {1, 2, 0, 2, 0, 1, 1, 2};
    for (int i = 0; i < 8; ++i) {
        out.norms[i] = std::pow(an[ia[i]] * bn[ib[i]], 1.0 / p);
        out.ratios[i] = out.norms[i] / fn.norm;
    }
    out.f_norm = fn.norm;
    out.phi_phi_identity = std::pow(A.phi * B.phi, 1.0 / p) / (gg * gg * fn.norm);
    out.truncated = A.truncated || B.truncated;
    return out;
}

VerificationReport remainder_report(double p, const BoundaryPath& path,
                                    const QuadratureSpec& spec, const SeriesCap& cap) {
    require_p(p, "remainder_report");
    auto rep = make_report("lowerbound.remainder");
    rep.in("p", p).in("depth", static_cast<double>(path.depth));
    const auto pts = path.points();
    std::vector<RemainderRatios> seq;
    int k = path.k_min;
    for (const auto& xi : pts) {
        seq.push_back(remainder_ratios(xi, p, spec, cap));
        for (int i = 0; i < 8; ++i)
            rep.detail(seq.back().names[i] + "_k" + std::to_string(k),
                       seq.back().ratios[i]);
        rep.detail("phi_phi_identity_k" + std::to_string(k),
                   seq.back().phi_phi_identity);
        ++k;
    }
    bool decreasing = true, halved = true, identity_ok = true;
    double worst_final = 0.0;
    for (int i = 0; i < 8; ++i) {
        for (std::size_t m = 1; m < seq.size(); ++m)
            if (!(seq[m].ratios[i] < seq[m - 1].ratios[i])) decreasing = false;
        if (!(seq.back().ratios[i] < 0.5 * seq.front().ratios[i])) halved = false;
        worst_final = std::max(worst_final, seq.back().ratios[i]);
    }
    for (const auto& r : seq)
        if (std::abs(r.phi_phi_identity - 1.0) > 1e-9) identity_ok = false;
    rep.detail("decreasing", decreasing ? 1.0 : 0.0);
    rep.detail("final_below_half", halved ? 1.0 : 0.0);
    rep.detail("identity_ok", identity_ok ? 1.0 : 0.0);
    rep.verdict(worst_final, decreasing && halved && identity_ok);
    return rep;
}

VerificationReport ratio_path(double p, const BoundaryPath& path,
                              const QuadratureSpec& spec, const SeriesCap& cap,
                              double tol) {
    require_p(p, "ratio_path");
    auto rep = make_report("lowerbound.ratio_path");
    rep.in("p", p).in("depth", static_cast<double>(path.depth));
    const auto e = ExponentPair::from_p(p);
    const bool at_two = std::abs(p - 2.0) < 1e-12;
    const double target = at_two ? 1.0 : schur::lower_bound_value(e);

    std::vector<double> ratios;
    int k = path.k_min;
    for (const auto& xi : path.points()) {
        const auto pn = projected_norm(xi, p, spec, cap);
        const auto fn = extremal_norm(xi, p, spec);
        ratios.push_back(pn.norm / fn.norm);
        rep.detail("ratio_k" + std::to_string(k), ratios.back());
        ++k;
    }
    const double last = ratios.back();
    // Trend over the last three depths; differences at rounding level
    // (constant sequence at p = 2) do not count against monotonicity.
    bool monotone_tail = true;
    if (ratios.size() >= 3) {
        const double sign = ratios.back() >= ratios.front() ? 1.0 : -1.0;
        const double slack = 1e-9 * std::abs(last);
        for (std::size_t m = ratios.size() - 3; m + 1 < ratios.size(); ++m)
            if (sign * (ratios[m + 1] - ratios[m]) < -slack) monotone_tail = false;
    }
    bool below_upper = true;
    if (!at_two) {
        const double ub = schur::upper_bound_value(e);
        below_upper = last < ub;
        rep.detail("upper_bound", ub);
    }
    rep.detail("monotone_tail", monotone_tail ? 1.0 : 0.0);
    rep.against(last, target, tol);
    rep.passed = rep.passed && monotone_tail && below_upper;
    return rep;
}

VerificationReport correction_sup_check(double p, const std::vector<double>& xi_moduli,
                                        const QuadratureSpec& spec,
                                        const SeriesCap& cap, double stab_tol) {
    require_p(p, "correction_sup_check");
    if (xi_moduli.size() < 4)
        throw DomainError("correction_sup_check: need at least 4 grid points");
    auto rep = make_report("lowerbound.correction_sup");
    rep.in("p", p);
    std::vector<double> max_psi, max_ups;
    double mp = 0.0, mu = 0.0;
    for (double m : xi_moduli) {
        const auto n = factor_norms_pow(Complex(m, 0.0), p, 0.0, spec, cap);
        mp = std::max(mp, n.psi);
        mu = std::max(mu, n.ups);
        max_psi.push_back(mp);
        max_ups.push_back(mu);
        rep.detail("psi_int_m" + format_double(m), n.psi);
        rep.detail("ups_int_m" + format_double(m), n.ups);
    }
    // Stability rule: each of the last three refinement steps toward |xi| -> 1
    // must raise the running max by less than stab_tol.
    auto step_growth = [](const std::vector<double>& m) {
        double g = 0.0;
        for (std::size_t i = m.size() - 3; i < m.size(); ++i)
            g = std::max(g, (m[i] - m[i - 1]) / std::max(m[i - 1], 1e-300));
        return g;
    };
    const double grow_psi = step_growth(max_psi);
    const double grow_ups = step_growth(max_ups);
    rep.detail("psi_running_max", mp).detail("ups_running_max", mu);
    rep.detail("psi_step_growth", grow_psi).detail("ups_step_growth", grow_ups);
    rep.verdict(std::max(mp, mu), grow_psi < stab_tol && grow_ups < stab_tol,
                stab_tol);
    return rep;
}

} // namespace htri::lowerbound
