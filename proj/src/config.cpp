#include "htri/config.hpp"

#include <fstream>
#include <stdexcept>

#include "htri/errors.hpp"

namespace htri {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

double RunConfig::tol_for(const std::string& check_id, double fallback) const {
    std::size_t best_len = 0;
    double best = fallback;
    for (const auto& [key, val] : tol_overrides) {
        if (check_id.compare(0, key.size(), key) == 0 && key.size() >= best_len) {
            best_len = key.size();
            best = val;
        }
    }
    return best;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    try {
        if (key == "radial_nodes") spec.radial_nodes = std::stoi(value);
        else if (key == "panels") spec.panels = std::stoi(value);
        else if (key == "angular_nodes") spec.angular_nodes = std::stoi(value);
        else if (key == "grading") spec.grading = std::stod(value);
        else if (key == "rel_tol") rel_tol = std::stod(value);
        else if (key == "max_terms") max_terms = std::stol(value);
        else if (key == "series_cap") series_cap = std::stoi(value);
        else if (key == "depth") depth = std::stoi(value);
        else if (key == "format") {
            if (value != "csv" && value != "json")
                throw DomainError("config: format must be csv or json");
            format = value;
        } else if (key == "out") out = value;
        else if (key == "stable_output") stable_output = (value == "1" || value == "true");
        else if (key.rfind("tol.", 0) == 0) tol_overrides[key.substr(4)] = std::stod(value);
        else throw DomainError("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
        throw DomainError("config: bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("config: bad value for '" + key + "'");
    }
    spec.validate();
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open '" + path + "'");
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: expected key=value, got '" + line + "'");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

} // namespace htri
