// Benchmark: OpenMP-parallel quadrature engines against the serial reference
// implementations on representative integrands.
//
//   ./quad_bench [repeats]

#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
static double omp_get_wtime() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
static int omp_get_max_threads() { return 1; }
#endif

#include "htri/lowerbound.hpp"
#include "htri/quadrature.hpp"

using namespace htri;
namespace q = quadrature;

namespace {

struct Timing {
    double serial_s;
    double parallel_s;
    double rel_diff;
};

template <class Serial, class Parallel>
Timing run_case(Serial&& s, Parallel&& p, int repeats) {
    // Warm caches (node tables) outside the timed region.
    Complex vs = s(), vp = p();
    double t0 = omp_get_wtime();
    for (int i = 0; i < repeats; ++i) vs = s();
    double t1 = omp_get_wtime();
    for (int i = 0; i < repeats; ++i) vp = p();
    double t2 = omp_get_wtime();
    return {(t1 - t0) / repeats, (t2 - t1) / repeats,
            std::abs(vs - vp) / std::max(1.0, std::abs(vp))};
}

void report(const char* name, const Timing& t) {
    std::printf("%-28s serial %8.4f s   parallel %8.4f s   speedup %5.2fx   |diff| %.2e\n",
                name, t.serial_s, t.parallel_s, t.serial_s / t.parallel_s, t.rel_diff);
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, repeats: %d\n", omp_get_max_threads(), repeats);

    { // disk quadrature, peaked integrand, large angular count
        q::QuadratureSpec spec{16, 12, 1024, 2.0};
        const double lam = 0.98;
        auto f = [lam](const Complex& u) {
            return Complex(1.0 / std::norm(1.0 - lam * std::conj(u)));
        };
        report("disk (peaked, 1024 ang)",
               run_case([&] { return q::serial::integrate_disk(f, spec); },
                        [&] { return q::integrate_disk(f, spec); }, repeats));
    }
    { // nested Hartogs quadrature, kernel-type integrand
        q::QuadratureSpec spec{10, 5, 48, 2.0};
        const Complex z2(0.5, 0.0), z1(0.05, 0.0);
        auto f = [&](const HartogsPoint& w) {
            const Complex t = z2 * std::conj(w.z2);
            const Complex d = t - z1 * std::conj(w.z1);
            return t / (std::norm(1.0 - t) * std::norm(d));
        };
        report("hartogs (kernel-type)",
               run_case([&] { return q::serial::integrate_hartogs(f, spec); },
                        [&] { return q::integrate_hartogs(f, spec); }, repeats));
    }
    { // factor-series norms: per-node Horner vs folded-FFT radial sweep
        q::QuadratureSpec spec{16, 12, 64, 2.0};
        const double p = 3.0;
        const Complex xi(0.984375, 0.0); // path depth 6
        lowerbound::SeriesCap cap;
        const auto coeffs = lowerbound::factor_coefficients(std::abs(xi), p, cap);
        auto serial_norm = [&]() -> Complex {
            // Straightforward reference: Horner per node, plain accumulation.
            const auto radial = q::weighted_radial_nodes(0.0, 0.0, spec);
            const int n = 2048;
            const auto circ = q::unit_circle(n);
            double total = 0.0;
            for (const auto& rn : radial) {
                const double r = std::sqrt(rn.s);
                double row = 0.0;
                for (int j = 0; j < n; ++j) {
                    Complex acc(0.0, 0.0);
                    const Complex x = r * circ[j] * std::conj(xi);
                    for (std::size_t k = coeffs.full.size(); k-- > 0;)
                        acc = acc * x + coeffs.full[k];
                    row += std::pow(std::norm(acc), 0.5 * p);
                }
                total += row * (rn.weight / n);
            }
            return Complex(total);
        };
        auto parallel_norm = [&]() -> Complex {
            return Complex(
                lowerbound::factor_norms_pow(xi, p, 0.0, spec, cap).full);
        };
        report("factor norm (K=4096)",
               run_case(serial_norm, parallel_norm, repeats));
    }
    return 0;
}
