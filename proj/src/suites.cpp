#include "htri/suites.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "htri/kernel.hpp"
#include "htri/lowerbound.hpp"
#include "htri/specfun.hpp"

namespace htri::suites {

namespace {

namespace sf = specfun;
namespace lb = lowerbound;
using quadrature::QuadratureSpec;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

VerificationReport timed(VerificationReport rep, const Stopwatch& sw) {
    rep.runtime_ms = sw.ms();
    return rep;
}

// Node-count budget for reproducing-property projections: the nested rule
// squares the per-disk count, so radial stays small and angular covers the
// 0.8 interior margin.
QuadratureSpec projection_spec(const RunConfig& cfg) {
    QuadratureSpec s = cfg.spec;
    s.radial_nodes = std::min(s.radial_nodes, 10);
    s.panels = std::min(s.panels, 4);
    s.angular_nodes = std::max(s.angular_nodes, 88);
    return s;
}

} // namespace

std::vector<VerificationReport> identities(const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    std::mt19937 rng(20240911);

    { // gamma recurrence battery
        Stopwatch sw;
        std::uniform_real_distribution<double> dist(0.1, 50.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double z = dist(rng);
            const double lhs = z * sf::gamma(z), rhs = sf::gamma(z + 1.0);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        const double tol = cfg.tol_for("identity.recurrence", 1e-12);
        out.push_back(timed(make_report("identity.recurrence")
                                .in("samples", "200")
                                .against(worst, 0.0, tol),
                            sw));
    }
    { // reflection battery
        Stopwatch sw;
        std::uniform_real_distribution<double> dist(1e-3, 1.0 - 1e-3);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double z = dist(rng);
            const double v = sf::gamma(z) * sf::gamma(1.0 - z) * sf::sin_pi(z) / M_PI;
            worst = std::max(worst, std::abs(v - 1.0));
        }
        const double tol = cfg.tol_for("identity.reflection", 1e-12);
        out.push_back(timed(make_report("identity.reflection")
                                .in("samples", "100")
                                .against(worst, 0.0, tol),
                            sw));
    }
    { // duplication battery
        Stopwatch sw;
        std::uniform_real_distribution<double> dist(0.1, 20.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double z = dist(rng);
            const double lhs = sf::gamma(z) * sf::gamma(z + 0.5);
            const double rhs =
                std::exp2(1.0 - 2.0 * z) * std::sqrt(M_PI) * sf::gamma(2.0 * z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        const double tol = cfg.tol_for("identity.duplication", 1e-11);
        out.push_back(timed(make_report("identity.duplication")
                                .in("samples", "100")
                                .against(worst, 0.0, tol),
                            sw));
    }
    { // spot reflection case
        Stopwatch sw;
        out.push_back(timed(sf::identity_check({sf::IdentityKind::reflection, 0.25},
                                               cfg.tol_for("identity", 1e-12)),
                            sw));
    }
    { // Euler transformation battery
        Stopwatch sw;
        std::uniform_real_distribution<double> par(0.1, 2.0), xx(0.05, 0.45);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const sf::HypParams hp{par(rng), par(rng), par(rng) + 2.0};
            const auto rep = sf::identity_check(
                {sf::IdentityKind::euler_transform, 0.0, hp, xx(rng)}, 1.0);
            worst = std::max(worst, rep.computed);
        }
        const double tol = cfg.tol_for("identity.euler_transform", 1e-12);
        out.push_back(timed(make_report("identity.euler_transform")
                                .in("samples", "20")
                                .against(worst, 0.0, tol),
                            sw));
    }
    { // integral representation battery (c > b > 0)
        Stopwatch sw;
        std::uniform_real_distribution<double> bb(0.2, 2.0), cb(0.2, 2.0),
            aa(-1.0, 2.0), xx(0.0, 0.9);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double b = bb(rng);
            const sf::HypParams hp{aa(rng), b, b + cb(rng)};
            const auto rep = sf::identity_check(
                {sf::IdentityKind::integral_rep, 0.0, hp, xx(rng)}, 1.0);
            worst = std::max(worst, rep.computed);
        }
        const double tol = cfg.tol_for("identity.integral_rep", 1e-8);
        out.push_back(timed(make_report("identity.integral_rep")
                                .in("samples", "20")
                                .against(worst, 0.0, tol),
                            sw));
    }
    { // derivative identity vs central difference
        Stopwatch sw;
        const auto rep = sf::identity_check(
            {sf::IdentityKind::derivative, 0.0, {0.5, 1.0, 2.5}, 0.4},
            cfg.tol_for("identity.derivative", 1e-6));
        out.push_back(timed(rep, sw));
    }
    { // series values along x = 1 - 2^-k extrapolated to the gamma closed form
        Stopwatch sw;
        double worst = 0.0;
        for (const auto& hp : {sf::HypParams{0.5, 0.9, 1.8}, sf::HypParams{0.3, 0.4, 1.6}}) {
            const double limit = sf::hyp2f1_at_one(hp);
            std::vector<double> v;
            for (int k = 4; k <= 12; ++k)
                v.push_back(sf::hyp2f1(hp, 1.0 - std::ldexp(1.0, -k)));
            // F(x) - F(1) expands in (1-x)^(theta+j) and (1-x)^(1+j); remove
            // the three smallest exponents by Richardson steps on the 2^-k grid.
            const double theta = hp.c - hp.a - hp.b;
            for (double e : {theta, 1.0, theta + 1.0}) {
                const double rho = std::exp2(-e);
                std::vector<double> next;
                for (std::size_t i = 0; i + 1 < v.size(); ++i)
                    next.push_back((v[i + 1] - rho * v[i]) / (1.0 - rho));
                v = std::move(next);
            }
            worst = std::max(worst, std::abs(v.back() - limit) / limit);
        }
        const double tol = cfg.tol_for("identity.gauss_value", 1e-4);
        out.push_back(timed(make_report("identity.gauss_value")
                                .in("k", "4..12")
                                .against(worst, 0.0, tol),
                            sw));
    }
    return out;
}

std::vector<VerificationReport> lemma21(const RunConfig& cfg, std::optional<double> a,
                                        std::optional<double> r2) {
    std::vector<VerificationReport> out;
    const double tol = cfg.tol_for("torus.identity", 1e-8);
    const std::vector<double> as =
        a ? std::vector<double>{*a} : std::vector<double>{0.5, 0.75, 1.0};
    const std::vector<double> r2s =
        r2 ? std::vector<double>{*r2} : std::vector<double>{0.0, 0.09, 0.36, 0.81};
    for (double av : as)
        for (double rv : r2s) {
            Stopwatch sw;
            out.push_back(
                timed(schur::torus_identity_check(av, rv, cfg.spec.angular_nodes, tol),
                      sw));
        }
    return out;
}

std::vector<VerificationReport> lemma22(const RunConfig& cfg, std::optional<double> c,
                                        std::optional<double> t2) {
    std::vector<VerificationReport> out;
    const double tol = cfg.tol_for("forelli_rudin.sup", 0.01);
    std::vector<std::pair<double, double>> cases;
    if (c && t2) cases.emplace_back(*c, *t2);
    else cases = {{1.0, 0.0}, {0.5, 0.5}, {1.5, -0.5}};
    const BoundaryPath path{std::min(std::max(cfg.depth, 2), 8), 2};
    for (auto [cv, tv] : cases) {
        Stopwatch sw;
        out.push_back(timed(schur::forelli_rudin_sup(cv, tv, path, cfg.spec, tol), sw));
    }
    return out;
}

std::vector<VerificationReport> lemma23(const RunConfig& cfg, std::optional<double> t,
                                        std::optional<int> depth) {
    std::vector<VerificationReport> out;
    { // closed form vs quadrature on a 5x5 grid
        Stopwatch sw;
        double worst = 0.0;
        for (double tv : {0.55, 0.6, 0.75, 0.85, 0.9})
            for (double rv : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const double ic = schur::radial_profile_closed(rv, tv);
                const double iq = schur::radial_profile_quadrature(rv, tv, cfg.spec);
                worst = std::max(worst, std::abs(ic - iq) / std::abs(ic));
            }
        const double tol = cfg.tol_for("schur.profile", 1e-7);
        out.push_back(timed(make_report("schur.profile")
                                .in("grid", "5x5")
                                .against(worst, 0.0, tol),
                            sw));
    }
    const int d = depth ? *depth : std::max(cfg.depth, 6);
    const double sup_tol = cfg.tol_for("schur.sup", 0.05);
    for (double tv :
         t ? std::vector<double>{*t} : std::vector<double>{0.6, 0.75, 0.9}) {
        Stopwatch sw;
        out.push_back(
            timed(schur::schur_sup_estimate(tv, BoundaryPath{d, 2}, cfg.spec, sup_tol),
                  sw));
    }
    if (!t) {
        std::vector<double> grid;
        for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
        for (double tv : {0.6, 0.8}) {
            Stopwatch sw;
            out.push_back(timed(schur::monotone_g_check(tv, grid), sw));
        }
    }
    return out;
}

std::vector<VerificationReport> lemma24(const RunConfig& cfg) {
    struct Case {
        double a, b, c, t;
        Complex z, w;
    };
    // Includes the projected-factor parameter pattern (a,b,c,t) = (2,-1/3,1,0).
    const Case cases[] = {
        {2.0, 0.5, 1.0, 0.0, {0.3, 0.0}, {0.4, 0.0}},
        {2.0, -1.0 / 3.0, 1.0, 0.0, {0.5, 0.0}, {0.6, 0.0}},
        {2.0, -0.2, 1.0, 0.5, {0.2, 0.0}, {0.5, 0.0}},
        {1.5, 0.3, 1.0, 0.0, {0.4, 0.0}, {0.3, 0.0}},
        {2.0, -1.0 / 3.0, 1.0, 0.0, {0.3, 0.2}, {-0.1, 0.5}},
    };
    std::vector<VerificationReport> out;
    const double tol = cfg.tol_for("disk_series", 1e-7);
    for (const auto& c : cases) {
        Stopwatch sw;
        const auto series =
            lb::triple_factor_disk_series(c.a, c.b, c.c, c.t, c.z, c.w, 60);
        const Complex quad = quadrature::integrate_disk_weighted(
            [&](const Complex& xi) {
                return std::pow(1.0 - c.z * std::conj(xi), -c.a) *
                       std::pow(1.0 - c.w * std::conj(xi), -c.b) *
                       std::pow(1.0 - xi * std::conj(c.w), -c.c);
            },
            0.0, c.t, cfg.spec);
        const double disc = std::abs(series.value - quad) / std::abs(quad);
        auto rep = make_report("disk_series")
                       .in("a", c.a)
                       .in("b", c.b)
                       .in("c", c.c)
                       .in("t", c.t)
                       .against(disc, 0.0, tol);
        rep.detail("series_re", series.value.real()).detail("quad_re", quad.real());
        out.push_back(timed(std::move(rep), sw));
    }
    return out;
}

std::vector<VerificationReport> lemma25(const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    { // per-coefficient decomposition identity, k <= 50
        Stopwatch sw;
        double worst = 0.0;
        for (double p : {2.5, 3.0, 1.6})
            for (double m : {0.0, 0.5, 0.9}) {
                const auto tbl = lb::factor_coefficients(m, p, cfg.series());
                const int kmax = std::min<std::size_t>(51, tbl.full.size());
                for (int k = 0; k < kmax; ++k)
                    worst = std::max(worst,
                                     std::abs(tbl.full[k] -
                                              (tbl.phi[k] + tbl.psi[k] + tbl.ups[k])));
            }
        const double tol = cfg.tol_for("decomposition", 1e-12);
        out.push_back(timed(make_report("decomposition")
                                .in("kmax", "50")
                                .against(worst, 0.0, tol),
                            sw));
    }
    const std::vector<double> grid{0.0,  0.3,  0.5,  0.7,   0.9,
                                   0.95, 0.98, 0.99, 0.995, 0.999};
    for (double p : {2.5, 3.0}) {
        Stopwatch sw;
        out.push_back(timed(
            lb::correction_sup_check(p, grid, cfg.spec, cfg.series(),
                                     cfg.tol_for("lowerbound.correction_sup", 0.05)),
            sw));
    }
    return out;
}

std::vector<VerificationReport> project_check(const RunConfig& cfg, int j, int k) {
    Stopwatch sw;
    const double tol = cfg.tol_for("kernel.reproduce", 1e-6);
    auto rep = kernel::reproduce_check({j, k}, kernel::interior_grid(0.8),
                                       projection_spec(cfg), tol);
    return {timed(std::move(rep), sw)};
}

std::vector<VerificationReport> lower_estimate(const RunConfig& cfg, double p,
                                               std::optional<int> depth) {
    Stopwatch sw;
    const int d = depth ? *depth : cfg.depth;
    const bool at_two = std::abs(p - 2.0) < 1e-12;
    const double tol = cfg.tol_for("lowerbound.ratio_path", at_two ? 1e-6 : 0.10);
    auto rep = lb::ratio_path(p, BoundaryPath{d, 2}, cfg.spec, cfg.series(), tol);
    return {timed(std::move(rep), sw)};
}

std::vector<VerificationReport> remainder(const RunConfig& cfg, double p,
                                          std::optional<int> depth) {
    Stopwatch sw;
    const int d = depth ? *depth : std::max(cfg.depth, 7);
    auto rep = lb::remainder_report(p, BoundaryPath{d, 4}, cfg.spec, cfg.series());
    return {timed(std::move(rep), sw)};
}

std::vector<VerificationReport> premises(const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    for (double p : {2.5, 3.0}) {
        Stopwatch sw;
        out.push_back(timed(schur::premise_check(p, 20, 987654321u, cfg.spec), sw));
    }
    return out;
}

std::vector<VerificationReport> bounds_reports(
    const std::vector<schur::BoundsRow>& rows) {
    std::vector<VerificationReport> out;
    for (const auto& r : rows) {
        auto rep = make_report("bounds.row").in("p", r.p).in("q", r.q);
        rep.detail("lower", r.lower);
        if (r.upper) {
            rep.detail("upper", *r.upper);
            rep.verdict(r.lower, r.lower < *r.upper);
        } else {
            rep.note = "upper bound unbounded at p = 2; exact norm 1";
            if (r.exact_norm) rep.detail("exact_norm", *r.exact_norm);
            rep.verdict(r.lower, true);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<VerificationReport> report_all(const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    append(identities(cfg));
    append(lemma21(cfg));
    append(lemma22(cfg));
    append(lemma23(cfg));
    append(lemma24(cfg));
    append(lemma25(cfg));
    for (auto [j, k] : {std::pair{0, 0}, {0, -1}, {1, -1}, {2, 1}})
        append(project_check(cfg, j, k));
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i)
        grid.push_back(4.0 / 3.0 + (4.0 - 4.0 / 3.0) * (i + 0.5) / 22.0);
    append(bounds_reports(schur::bounds_table(grid)));
    append(lower_estimate(cfg, 3.0));
    append(lower_estimate(cfg, 2.0));
    append(remainder(cfg, 3.0));
    append(premises(cfg));
    return out;
}

} // namespace htri::suites
