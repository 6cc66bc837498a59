#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// One verification record: which identity was checked, at which parameters,
/// whether it held, and (on failure) a witness for the discrepancy.
struct VerificationReport {
    enum class Status { pass, fail, skipped };

    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::pass;
    std::string witness; // required when status == fail
    long elapsed_ms = 0;

    static VerificationReport passed(std::string id,
                                     std::vector<std::pair<std::string, std::string>> p = {});
    static VerificationReport failed(std::string id, std::string witness,
                                     std::vector<std::pair<std::string, std::string>> p = {});
    static VerificationReport skip(std::string id, std::string reason,
                                   std::vector<std::pair<std::string, std::string>> p = {});
    /// pass/fail from a predicate, witness used only on failure.
    static VerificationReport check(std::string id, bool ok, std::string witness,
                                    std::vector<std::pair<std::string, std::string>> p = {});

    std::string status_string() const;
    std::string params_string() const;
};

/// Deterministic order: check_id first, then the parameter list.
bool report_order(const VerificationReport& a, const VerificationReport& b);

bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace hecke
