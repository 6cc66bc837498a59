#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/rational_scalar.hpp"
#include "hecke/report.hpp"
#include "hecke/serialization.hpp"

namespace hecke {

/// Parameter grid for a verification run.
struct SuiteOptions {
    std::vector<int> dims = {2, 3}; // local dimensions d
    int max_n = 5;                  // largest algebra order / tensor power
    Rational q0 = Rational(4);      // generic specialization point (mu = sqrt(q0))
    std::optional<Rational> mu_rational;   // explicit rational mu
    std::optional<int> mu_root_order;      // mu = e^{i pi / m}
    std::optional<Rational> lambda;        // extra trace parameter to classify
    bool numeric_mode = false;
    double tolerance = 1e-10;
    int jobs = 1;
    bool force = false; // lift the d <= 4, n <= 6 grid caps
    unsigned seed = 20260810;

    void validate() const; // throws InvalidGrid
};

const std::vector<std::string>& suite_names();

/// Run one named suite (or "all") over the grid; reports come back sorted
/// deterministically.  Throws UnknownSuite / InvalidGrid.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

/// {"meta": {...}, "results": [...]}; results carry no timing, the elapsed
/// total lives in meta only.
Json reports_to_json(const std::vector<VerificationReport>& reports,
                     const std::vector<std::pair<std::string, std::string>>& flags,
                     long elapsed_ms);

/// Markdown document with one row per report and a check-id cross-reference
/// table.
std::string reports_to_markdown(const std::vector<VerificationReport>& reports);

} // namespace hecke
