#ifndef HTRI_SPECFUN_HPP
#define HTRI_SPECFUN_HPP

#include <string>

#include "htri/report.hpp"

namespace htri::specfun {

// Parameters of the Gauss hypergeometric series F(a,b;c;x).
struct HypParams {
    double a;
    double b;
    double c;
};

// Truncation control for infinite series.
struct SeriesControl {
    double rel_tol = 1e-14;
    long max_terms = 1'000'000;
};

// Real-argument gamma function, accurate to >= 12 significant digits on
// [-30, 170]. Nonpositive integers raise PoleError, arguments beyond the
// representable range raise OverflowError.
double gamma(double x);

// log(Gamma(x)) for x > 0.
double log_gamma(double x);

// Rising factorial (a)_m = a (a+1) ... (a+m-1), (a)_0 = 1.
double pochhammer(double a, int m);

// sin(pi*x) with argument reduction; exact zeros at integers.
double sin_pi(double x);

// F(a,b;c;x) for real parameters and 0 <= x < 1. For x > 1/2 the evaluation
// switches to the transformed series (1-x)^(c-a-b) F(c-a,c-b;c;x) when that
// converges faster. Terminating parameter cases (a or b a nonpositive
// integer) are summed exactly.
double hyp2f1(const HypParams& p, double x, const SeriesControl& ctl = {});

// Value of the series at x = 1 via the gamma closed form; requires
// c - a - b > 0 and no gamma pole among c, c-a, c-b.
double hyp2f1_at_one(const HypParams& p);

enum class IdentityKind {
    recurrence,      // z G(z) = G(z+1)
    reflection,      // G(z) G(1-z) = pi / sin(pi z)
    duplication,     // G(z) G(z+1/2) = 2^(1-2z) sqrt(pi) G(2z)
    euler_transform, // F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x)
    integral_rep,    // Euler integral representation, c > b > 0
    derivative,      // d/dx F = (ab/c) F(a+1,b+1;c+1;x) vs central difference
};

struct IdentityCase {
    IdentityKind kind;
    double z = 0.0;   // gamma identities
    HypParams p{0, 0, 0};
    double x = 0.0;   // hypergeometric identities
};

// Evaluates both sides of the named identity and reports the relative
// discrepancy against `tol`.
VerificationReport identity_check(const IdentityCase& c, double tol);

std::string identity_name(IdentityKind k);

} // namespace htri::specfun

#endif
