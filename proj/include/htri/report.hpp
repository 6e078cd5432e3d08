#ifndef HTRI_REPORT_HPP
#define HTRI_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace htri {

// Result record for one named check. `passed` follows the relative-error rule
// |computed - reference| <= tolerance * max(1, |reference|) whenever a
// reference value is present; checks without a reference set it directly.
struct VerificationReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> inputs;
    double computed = 0.0;
    std::optional<double> reference;
    double tolerance = 0.0;
    bool passed = false;
    long long runtime_ms = 0;
    std::vector<std::pair<std::string, double>> details;
    std::string note;

    VerificationReport& in(const std::string& key, const std::string& value) {
        inputs.emplace_back(key, value);
        return *this;
    }
    VerificationReport& in(const std::string& key, double value);
    VerificationReport& detail(const std::string& key, double value) {
        details.emplace_back(key, value);
        return *this;
    }

    // Applies the pass rule against `ref`.
    VerificationReport& against(double value, double ref, double tol);
    // No reference: pass iff `ok`.
    VerificationReport& verdict(double value, bool ok, double tol = 0.0);
};

VerificationReport make_report(const std::string& check_id);

// Serialization. `stable` zeroes runtime_ms so identical configs give
// byte-identical output.
std::string to_json(const std::vector<VerificationReport>& reports, bool stable = false);
std::string to_csv(const std::vector<VerificationReport>& reports, bool stable = false);

std::string format_double(double v);
bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace htri

#endif
