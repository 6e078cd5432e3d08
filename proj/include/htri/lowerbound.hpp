#ifndef HTRI_LOWERBOUND_HPP
#define HTRI_LOWERBOUND_HPP

#include <array>
#include <string>
#include <vector>

#include "htri/domain.hpp"
#include "htri/quadrature.hpp"
#include "htri/report.hpp"

namespace htri::lowerbound {

using quadrature::QuadratureSpec;

// Truncation policy for the disk-factor power series: start at `start`
// coefficients, double until the geometric tail estimate drops below
// `tail_tol`, hard cap at `cap` (exceeding it flags the result truncated).
struct SeriesCap {
    int start = 64;
    int cap = 4096;
    double tail_tol = 1e-10;
};

struct SeriesEval {
    Complex value{0.0, 0.0};
    double tail_estimate = 0.0;
    bool truncated = false;
};

// Boundary test function
//   f_xi(z) = (1 - xi2 conj(z2))^(1-2/p) / (z2 (1 - z2 conj(xi2)))
//           * (1 - (xi1/xi2)(conj(z1)/conj(z2)))^(1-2/p) / (1 - (z1/z2) conj(xi1/xi2)).
// Non-integer powers take the principal branch (both bases have positive real
// part since the subtracted products have modulus < 1).
Complex extremal_function(const HartogsPoint& z, const XiPoint& xi, double p);

struct NormResult {
    double norm = 0.0;     // p-th root
    double norm_pow = 0.0; // raw p-th power
    bool truncated = false;
};

// ||f_xi||_p via the split form
//   int_D* |z2|^(2-p) |1 - z2 conj(xi2)|^-2 dnu(z2) * int_D |1 - u conj(l)|^-2 dnu(u);
// the inner factor uses the exact series value -log(1-l^2)/l^2 unless
// `closed_inner` is false (then 2-D quadrature).
NormResult extremal_norm(const XiPoint& xi, double p, const QuadratureSpec& spec,
                         bool closed_inner = true);

// Series expansion of the weighted disk integral
//   int_D (1-|xi|^2)^t dnu(xi) / ((1-<z,xi>)^a (1-<w,xi>)^b (1-<xi,w>)^c)
//   = G(1+t)/G(2+t) sum_j (a)_j (c)_j / ((2+t)_j j!) F(b, c+j; 2+t+j; |w|^2) <z,w>^j.
SeriesEval triple_factor_disk_series(double a, double b, double c, double t,
                                     const Complex& z, const Complex& w, int J);

// Coefficient sequences of the factor decomposition.
double psi_coefficient(int k, double p);                      // eps_k
double upsilon_coefficient(int k, double s, double p);        // a_k, s = |xi|^2

// Coefficient tables for one disk factor at modulus |xi| (phases enter only
// through the series variable <zeta, xi>).
struct FactorCoeffs {
    std::vector<double> full; // F(2/p-1, k+1; k+2; s)
    std::vector<double> phi;  // GG (2/p)_k / k!
    std::vector<double> psi;  // GG eps_k
    std::vector<double> ups;  // a_k(s)
    double gamma_product = 0.0; // G(2/p) G(2/q)
    double tail_estimate = 0.0;
    bool truncated = false;
};
FactorCoeffs factor_coefficients(double xi_abs, double p, const SeriesCap& cap = {});

// One-disk factors: Phi closed form, Psi/Upsilon truncated series, and the
// full projected-factor series S = Phi + Psi + Upsilon.
Complex phi_factor(const Complex& zeta, const Complex& xi, double p);
SeriesEval psi_factor(const Complex& zeta, const Complex& xi, double p,
                      const SeriesCap& cap = {});
SeriesEval upsilon_factor(const Complex& zeta, const Complex& xi, double p,
                          const SeriesCap& cap = {});
SeriesEval projection_factor(const Complex& zeta, const Complex& xi, double p,
                             const SeriesCap& cap = {});

// P f_xi (z) = (1/z2) S(z2, xi2) S(z1/z2, xi1/xi2).
SeriesEval project_extremal(const HartogsPoint& z, const XiPoint& xi, double p,
                            const SeriesCap& cap = {});

// Reusable evaluator of P f_xi: builds the two factor-coefficient tables once
// and evaluates pointwise (the per-node path in quadrature cross-checks).
class ExtremalProjector {
public:
    ExtremalProjector(const XiPoint& xi, double p, const SeriesCap& cap = {});
    SeriesEval operator()(const HartogsPoint& z) const;
    bool truncated() const { return outer_.truncated || inner_.truncated; }

private:
    XiPoint xi_;
    double p_;
    FactorCoeffs outer_;
    FactorCoeffs inner_;
};

// ||P f_xi||_p as the product of the two factored disk integrals.
NormResult projected_norm(const XiPoint& xi, double p, const QuadratureSpec& spec,
                          const SeriesCap& cap = {});

// Norms (p-th powers) of one disk factor against the optional radial weight
// |z2|^(2-p): entries for S, Phi, Psi, Upsilon from a single node sweep.
struct FactorNormsPow {
    double full = 0.0;
    double phi = 0.0;
    double psi = 0.0;
    double ups = 0.0;
    bool truncated = false;
};
FactorNormsPow factor_norms_pow(const Complex& xi, double p, double alpha0,
                                const QuadratureSpec& spec, const SeriesCap& cap = {});

// The eight mixed-term norms ||(1/z2) A(z2) B(z1/z2)||_p, A x B != Phi x Phi,
// their ratios to ||f_xi||_p, and the Phi*Phi identity ratio
// ||(1/z2) Phi Phi||_p / (G^2(2/p) G^2(2/q) ||f_xi||_p).
struct RemainderRatios {
    std::array<std::string, 8> names;
    std::array<double, 8> norms;
    std::array<double, 8> ratios;
    double phi_phi_identity = 0.0;
    double f_norm = 0.0;
    bool truncated = false;
};
RemainderRatios remainder_ratios(const XiPoint& xi, double p,
                                 const QuadratureSpec& spec, const SeriesCap& cap = {});
VerificationReport remainder_report(double p, const BoundaryPath& path,
                                    const QuadratureSpec& spec,
                                    const SeriesCap& cap = {});

// Ratios ||P f_xi||_p / ||f_xi||_p along the path; reports trend and the gap
// of the deepest ratio to the lower-bound formula.
VerificationReport ratio_path(double p, const BoundaryPath& path,
                              const QuadratureSpec& spec, const SeriesCap& cap = {},
                              double tol = 0.10);

// Boundedness evidence for the correction-series norms: max over the grid of
// int_D |Psi_xi|^p and |Upsilon_xi|^p; passes when the running max rises by
// less than `stab_tol` over the last three grid points.
VerificationReport correction_sup_check(double p, const std::vector<double>& xi_moduli,
                                        const QuadratureSpec& spec,
                                        const SeriesCap& cap = {},
                                        double stab_tol = 0.05);

} // namespace htri::lowerbound

#endif
