#include "htri/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace htri {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

VerificationReport& VerificationReport::in(const std::string& key, double value) {
    inputs.emplace_back(key, format_double(value));
    return *this;
}

VerificationReport& VerificationReport::against(double value, double ref, double tol) {
    computed = value;
    reference = ref;
    tolerance = tol;
    passed = std::isfinite(value) &&
             std::abs(value - ref) <= tol * std::max(1.0, std::abs(ref));
    return *this;
}

VerificationReport& VerificationReport::verdict(double value, bool ok, double tol) {
    computed = value;
    reference.reset();
    tolerance = tol;
    passed = ok;
    return *this;
}

VerificationReport make_report(const std::string& check_id) {
    VerificationReport r;
    r.check_id = check_id;
    return r;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

std::string to_json(const std::vector<VerificationReport>& reports, bool stable) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["check_id"] = r.check_id;
        nlohmann::ordered_json in = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.inputs) in[k] = v;
        j["inputs"] = in;
        if (std::isfinite(r.computed)) {
            j["computed"] = r.computed;
        } else {
            j["computed"] = nullptr;
            j["unbounded"] = true;
        }
        if (r.reference) {
            if (std::isfinite(*r.reference)) {
                j["reference"] = *r.reference;
            } else {
                j["reference"] = nullptr;
                j["unbounded"] = true;
            }
        } else {
            j["reference"] = nullptr;
        }
        j["tolerance"] = r.tolerance;
        j["passed"] = r.passed;
        j["runtime_ms"] = stable ? 0 : r.runtime_ms;
        if (!r.details.empty()) {
            nlohmann::ordered_json det = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.details) det[k] = v;
            j["details"] = det;
        }
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string to_csv(const std::vector<VerificationReport>& reports, bool stable) {
    std::ostringstream os;
    os << "check_id,inputs,computed,reference,tolerance,passed,runtime_ms\n";
    for (const auto& r : reports) {
        std::string in;
        for (const auto& [k, v] : r.inputs) {
            if (!in.empty()) in += ";";
            in += k + "=" + v;
        }
        os << csv_escape(r.check_id) << "," << csv_escape(in) << ","
           << format_double(r.computed) << ","
           << (r.reference ? format_double(*r.reference) : "") << ","
           << format_double(r.tolerance) << "," << (r.passed ? "true" : "false") << ","
           << (stable ? 0 : r.runtime_ms) << "\n";
    }
    return os.str();
}

} // namespace htri
