#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/suites.hpp"

using namespace hecke;

TEST_CASE("report records") {
    auto pass = VerificationReport::passed("a-check", {{"n", "2"}});
    CHECK(pass.status == VerificationReport::Status::pass);
    CHECK(pass.witness.empty());

    auto fail = VerificationReport::failed("a-check", "", {{"n", "2"}});
    CHECK(fail.status == VerificationReport::Status::fail);
    CHECK(!fail.witness.empty()); // failures always carry a witness

    auto skip = VerificationReport::skip("a-check", "precondition", {});
    CHECK(skip.status == VerificationReport::Status::skipped);

    CHECK(all_passed({pass, skip}));
    CHECK(!all_passed({pass, fail}));
}

TEST_CASE("deterministic ordering") {
    VerificationReport a = VerificationReport::passed("b-check", {{"n", "2"}});
    VerificationReport b = VerificationReport::passed("a-check", {{"n", "3"}});
    VerificationReport c = VerificationReport::passed("a-check", {{"n", "2"}});
    CHECK(report_order(b, a));
    CHECK(report_order(c, b));
    CHECK(!report_order(a, c));
}

TEST_CASE("unknown suite and grid validation") {
    SuiteOptions options;
    CHECK_THROWS_AS(run_suite("bogus", options), UnknownSuite);

    SuiteOptions bad = options;
    bad.dims = {5};
    CHECK_THROWS_AS(run_suite("hecke-axioms", bad), InvalidGrid);
    bad.force = true; // the cap is liftable
    bad.dims = {2};
    bad.max_n = 3;
    CHECK_NOTHROW(run_suite("hecke-axioms", bad));

    SuiteOptions tiny = options;
    tiny.max_n = 1;
    CHECK_THROWS_AS(run_suite("hecke-axioms", tiny), InvalidGrid);
}

TEST_CASE("suite runs are deterministic and parallelizable") {
    SuiteOptions options;
    options.dims = {2};
    options.max_n = 3;

    auto first = run_suite("lemma-2.1", options);
    CHECK(all_passed(first));
    CHECK(std::is_sorted(first.begin(), first.end(), report_order));

    options.jobs = 4;
    auto second = run_suite("lemma-2.1", options);
    REQUIRE(first.size() == second.size());
    Json j1 = reports_to_json(first, {{"suite", "lemma-2.1"}}, 0);
    Json j2 = reports_to_json(second, {{"suite", "lemma-2.1"}}, 99);
    // results are byte-identical; timing lives only in meta
    CHECK(j1.at("results").dump() == j2.at("results").dump());
    CHECK(j1.at("meta").at("elapsed_ms") != j2.at("meta").at("elapsed_ms"));
    j2["meta"]["elapsed_ms"] = 0;
    j1["meta"]["elapsed_ms"] = 0;
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("json shape") {
    SuiteOptions options;
    options.dims = {2};
    options.max_n = 2;
    auto reports = run_suite("hecke-axioms", options);
    Json doc = reports_to_json(reports, {{"suite", "hecke-axioms"}}, 5);
    CHECK(doc.contains("meta"));
    CHECK(doc.contains("results"));
    CHECK(doc["meta"].contains("version"));
    CHECK(doc["meta"].contains("flags"));
    for (const auto& r : doc["results"]) {
        CHECK(r.contains("check_id"));
        CHECK(r.contains("params"));
        CHECK(r.contains("status"));
        if (r["status"] == "fail") CHECK(r.contains("witness"));
    }
}

TEST_CASE("markdown shape") {
    SuiteOptions options;
    options.dims = {2};
    options.max_n = 2;
    auto reports = run_suite("hecke-axioms", options);
    std::string md = reports_to_markdown(reports);
    CHECK(md.find("# Verification report") != std::string::npos);
    CHECK(md.find("## Check cross-reference") != std::string::npos);
    CHECK(md.find("eq-2.3-quadratic") != std::string::npos);

    std::string empty = reports_to_markdown({});
    CHECK(empty.find("# Verification report") != std::string::npos);
}
