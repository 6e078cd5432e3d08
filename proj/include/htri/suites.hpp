#ifndef HTRI_SUITES_HPP
#define HTRI_SUITES_HPP

#include <optional>
#include <vector>

#include "htri/config.hpp"
#include "htri/report.hpp"
#include "htri/schur.hpp"

namespace htri::suites {

// Check batteries behind the CLI subcommands. Each stamps runtime_ms.

// Gamma and hypergeometric identity corpus (deterministic seeded batteries).
std::vector<VerificationReport> identities(const RunConfig& cfg);

// Torus quadrature vs F(a,a;1;|z|^2); default 3x4 grid.
std::vector<VerificationReport> lemma21(const RunConfig& cfg,
                                        std::optional<double> a = {},
                                        std::optional<double> r2 = {});

// Weighted disk supremum vs its gamma closed form.
std::vector<VerificationReport> lemma22(const RunConfig& cfg,
                                        std::optional<double> c = {},
                                        std::optional<double> t2 = {});

// Radial-profile closed form vs quadrature, supremum path, monotonicity.
std::vector<VerificationReport> lemma23(const RunConfig& cfg,
                                        std::optional<double> t = {},
                                        std::optional<int> depth = {});

// Series expansion of the triple-factor disk integral vs 2-D quadrature.
std::vector<VerificationReport> lemma24(const RunConfig& cfg);

// Factor decomposition identity and correction-norm boundedness.
std::vector<VerificationReport> lemma25(const RunConfig& cfg);

// Reproducing-property battery for one monomial.
std::vector<VerificationReport> project_check(const RunConfig& cfg, int j, int k);

// Lower-bound ratio path at exponent p.
std::vector<VerificationReport> lower_estimate(const RunConfig& cfg, double p,
                                               std::optional<int> depth = {});

// Remainder-term ratios along the path (depths 4..depth).
std::vector<VerificationReport> remainder(const RunConfig& cfg, double p,
                                          std::optional<int> depth = {});

// Schur premise spot checks at p in {2.5, 3}.
std::vector<VerificationReport> premises(const RunConfig& cfg);

// Everything above.
std::vector<VerificationReport> report_all(const RunConfig& cfg);

// Bound-table rows rendered as reports (check_id "bounds.row").
std::vector<VerificationReport> bounds_reports(const std::vector<schur::BoundsRow>& rows);

} // namespace htri::suites

#endif
