#ifndef HTRI_DOMAIN_HPP
#define HTRI_DOMAIN_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "htri/errors.hpp"

namespace htri {

using Complex = std::complex<double>;

// Point of the Hartogs triangle H = { (z1,z2) : |z1| < |z2| < 1 }.
struct HartogsPoint {
    Complex z1;
    Complex z2;

    bool in_domain() const {
        const double a1 = std::abs(z1), a2 = std::abs(z2);
        return a1 < a2 && a2 < 1.0;
    }
};

inline void require_in_domain(const HartogsPoint& z, const char* who) {
    if (!z.in_domain())
        throw DomainError(std::string(who) + ": point violates |z1| < |z2| < 1");
}

// Base point for the lower-bound test functions; same membership constraint.
using XiPoint = HartogsPoint;

// Sequence of boundary-approach parameters r_k = 1 - 2^-k, k = k_min..depth.
// points() places both moduli (|z2| and |z1/z2|) at r_k with zero phases.
struct BoundaryPath {
    int depth = 6;
    int k_min = 2;

    std::vector<double> radii() const {
        std::vector<double> r;
        for (int k = k_min; k <= depth; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
        return r;
    }

    std::vector<HartogsPoint> points() const {
        std::vector<HartogsPoint> pts;
        for (double r : radii()) pts.push_back({Complex(r * r, 0.0), Complex(r, 0.0)});
        return pts;
    }
};

// Holder exponent p together with its conjugate q = p/(p-1).
struct ExponentPair {
    double p;
    double q;

    static ExponentPair from_p(double p) {
        if (!(p > 4.0 / 3.0 && p < 4.0))
            throw DomainError("ExponentPair: p must lie in (4/3, 4)");
        return {p, p / (p - 1.0)};
    }
};

// Exponents of the basis monomial z1^j z2^k.
struct MonomialIndex {
    int j; // >= 0
    int k; // j + k >= -1 for square integrability
};

} // namespace htri

#endif
