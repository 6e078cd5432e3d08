#ifndef HTRI_CONFIG_HPP
#define HTRI_CONFIG_HPP

#include <map>
#include <string>

#include "htri/lowerbound.hpp"
#include "htri/quadrature.hpp"

namespace htri {

// Run-wide knobs. Flat key=value config file ('#' comments); command-line
// flags override file values.
struct RunConfig {
    quadrature::QuadratureSpec spec;
    double rel_tol = 1e-14;
    long max_terms = 1'000'000;
    int series_cap = 4096;
    int depth = 6;
    std::string format = "csv"; // csv | json
    std::string out;            // empty writes to stdout
    bool stable_output = false; // zero runtime_ms for byte-identical output
    std::map<std::string, double> tol_overrides;

    lowerbound::SeriesCap series() const { return {64, series_cap, 1e-10}; }

    // Longest-prefix tolerance override for a check id, else `fallback`.
    double tol_for(const std::string& check_id, double fallback) const;

    void set(const std::string& key, const std::string& value);
    static RunConfig from_file(const std::string& path);
};

} // namespace htri

#endif
