#include "htri/quadrature.hpp"

#include <map>
#include <mutex>

namespace htri::quadrature {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gauss_legendre(int n) {
    // Newton iteration on P_n; standard symmetric construction.
    std::vector<double> x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return {x, w};
}

std::mutex g_cache_mutex;

} // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: order must be positive");
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

std::vector<Complex> unit_circle(int n) {
    if (n < 1) throw DomainError("unit_circle: need n >= 1");
    static std::map<int, std::vector<Complex>> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Complex> c(n);
        for (int j = 0; j < n; ++j) {
            const double th = 2.0 * M_PI * j / n;
            c[j] = {std::cos(th), std::sin(th)};
        }
        it = cache.emplace(n, std::move(c)).first;
    }
    return it->second;
}

int angular_nodes_for(double rho, double eps, int at_least) {
    int n = at_least;
    if (rho > 0.0 && rho < 1.0) {
        const double need = std::log(2.0 / eps) / (-std::log(rho));
        if (need > n) n = static_cast<int>(need) + 1;
    }
    n = ((n + 7) / 8) * 8;
    return n;
}

namespace {

// Graded panel breakpoints on [0,1] toward v = 0; first panel touches 0.
std::vector<double> graded_breakpoints(int panels, double grading) {
    std::vector<double> b;
    b.push_back(0.0);
    for (int j = panels - 1; j >= 0; --j) b.push_back(std::pow(grading, -j));
    return b;
}

// Composite graded GL nodes for int_0^1 h(v) dv, residual possibly with a
// weak v^c power singularity at 0.
void append_graded_01(std::vector<double>& vn, std::vector<double>& vw,
                      const QuadratureSpec& spec) {
    const auto bp = graded_breakpoints(spec.panels, spec.grading);
    const auto& [gx, gw] = gauss_legendre(spec.radial_nodes);
    for (std::size_t pnl = 0; pnl + 1 < bp.size(); ++pnl) {
        const double a = bp[pnl], b = bp[pnl + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < gx.size(); ++i) {
            vn.push_back(mid + half * gx[i]);
            vw.push_back(half * gw[i]);
        }
    }
}

} // namespace

std::vector<RadialNode> weighted_radial_nodes(double alpha0, double alpha1,
                                              const QuadratureSpec& spec) {
    if (!(alpha0 > -1.0 && alpha1 > -1.0))
        throw DomainError("weighted_radial_nodes: exponents must exceed -1");
    spec.validate();
    std::vector<double> vn, vw;
    append_graded_01(vn, vw, spec);

    std::vector<RadialNode> nodes;
    nodes.reserve(2 * vn.size());
    const double h = 0.5;

    // Left half [0, 1/2]: s = h v^c0 absorbs s^alpha0 exactly.
    const double c0 = 1.0 / (1.0 + alpha0);
    const double jac0 = std::pow(h, 1.0 + alpha0) / (1.0 + alpha0);
    for (std::size_t i = 0; i < vn.size(); ++i) {
        const double s = h * std::pow(vn[i], c0);
        nodes.push_back({s, jac0 * vw[i] * std::pow(1.0 - s, alpha1)});
    }
    // Right half [1/2, 1]: 1-s = h v^c1 absorbs (1-s)^alpha1; traversal runs
    // toward s = 1 so the full node list is ascending in s.
    const double c1 = 1.0 / (1.0 + alpha1);
    const double jac1 = std::pow(h, 1.0 + alpha1) / (1.0 + alpha1);
    for (std::size_t i = vn.size(); i-- > 0;) {
        const double s = 1.0 - h * std::pow(vn[i], c1);
        nodes.push_back({s, jac1 * vw[i] * std::pow(s, alpha0)});
    }
    return nodes;
}

namespace detail {

Complex combine_ordered(const std::vector<Complex>& partials) {
    NeumaierSumC acc;
    for (const auto& p : partials) acc.add(p);
    return acc.value();
}

double combine_ordered(const std::vector<double>& partials) {
    NeumaierSum acc;
    for (double p : partials) acc.add(p);
    return acc.value();
}

} // namespace detail

} // namespace htri::quadrature
