#include "hecke/report.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

VerificationReport VerificationReport::passed(std::string id,
                                              std::vector<std::pair<std::string, std::string>> p) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.params = std::move(p);
    r.status = Status::pass;
    return r;
}

VerificationReport VerificationReport::failed(std::string id, std::string witness,
                                              std::vector<std::pair<std::string, std::string>> p) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.params = std::move(p);
    r.status = Status::fail;
    r.witness = witness.empty() ? "unspecified discrepancy" : std::move(witness);
    return r;
}

VerificationReport VerificationReport::skip(std::string id, std::string reason,
                                            std::vector<std::pair<std::string, std::string>> p) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.params = std::move(p);
    r.status = Status::skipped;
    r.witness = std::move(reason);
    return r;
}

VerificationReport VerificationReport::check(std::string id, bool ok, std::string witness,
                                             std::vector<std::pair<std::string, std::string>> p) {
    return ok ? passed(std::move(id), std::move(p))
              : failed(std::move(id), std::move(witness), std::move(p));
}

std::string VerificationReport::status_string() const {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

std::string VerificationReport::params_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) os << " ";
        os << params[i].first << "=" << params[i].second;
    }
    return os.str();
}

bool report_order(const VerificationReport& a, const VerificationReport& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.params < b.params;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.status != VerificationReport::Status::fail;
    });
}

} // namespace hecke
