#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuscat {

/// Input data is malformed or internally inconsistent: out-of-range index,
/// ring mismatch between operands, unknown label, data that is not a fusion
/// ring at all. Distinct from an axiom violation, which a validator reports
/// instead of throwing.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative computation failed to reach its tolerance. Carries the last
/// observed residual.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

/// A requested evaluation lies outside the closed forms the engine implements
/// (unsupported surface configuration, missing handle datum, ...).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One violated rule, identified by a short stable id plus a human-readable
/// message naming the offending indices.
struct Violation {
    std::string rule;
    std::string message;
};

/// Outcome of a validation pass. Empty `violations` certifies the checked
/// invariants; `warnings` carry non-fatal findings.
struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool ok() const noexcept { return violations.empty(); }

    void fail(std::string rule, std::string message) {
        violations.push_back({std::move(rule), std::move(message)});
    }

    void warn(std::string rule, std::string message) {
        warnings.push_back({std::move(rule), std::move(message)});
    }

    bool has_violation(const std::string& rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }

    bool has_warning(const std::string& rule) const {
        for (const auto& w : warnings)
            if (w.rule == rule) return true;
        return false;
    }

    /// Merge another report into this one, keeping order.
    void absorb(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }

    std::string to_string() const {
        if (violations.empty() && warnings.empty()) return "ok\n";
        std::string out;
        for (const auto& v : violations) {
            out += "violation [" + v.rule + "] " + v.message + "\n";
        }
        for (const auto& w : warnings) {
            out += "warning [" + w.rule + "] " + w.message + "\n";
        }
        return out;
    }
};

} // namespace fuscat
