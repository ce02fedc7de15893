#include "funho/verify/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace funho;

namespace {

Corpus small_corpus() {
    Corpus c = Corpus::empty();
    c.algebras = {"trunc:2"};
    c.fields = {ScalarField::prime(2)};
    c.max_degree = 2;
    c.samples = 10;
    return c;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("status names") {
    for (auto s : {Status::pass, Status::fail, Status::skipped}) CHECK(parse_status(status_name(s)) == s);
    CHECK(status_name(Status::skipped) == "skipped-resource");
    CHECK_THROWS_AS(parse_status("maybe"), Error);
    CHECK(parse_report_format("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(parse_report_format("xml"), Error);
}

TEST_CASE("empty corpus gives a valid report") {
    for (const auto& name : suite_names()) {
        auto r = run_suite(name, Corpus::empty(), 42);
        CHECK(r.suite == name);
        CHECK(r.overall() != Status::fail);
        auto back = report_from_json(report_to_json(r));
        CHECK(back.checks.size() == r.checks.size());
    }
    CHECK_THROWS_AS(run_suite("bogus", Corpus::empty(), 1), UnknownSuite);
}

TEST_CASE("reports render in every format") {
    auto r = run_suite("prop53", small_corpus(), 7);
    REQUIRE_FALSE(r.checks.empty());
    CHECK(r.overall() == Status::pass);
    auto md = render_report(r, ReportFormat::markdown);
    // title, counts, blank lines and the two header rows precede one row per check
    CHECK(count_lines(md) == r.checks.size() + 6);
    auto csv = render_report(r, ReportFormat::csv, false);
    CHECK(count_lines(csv) == r.checks.size() + 1);
    CHECK(csv.find("seconds") == std::string::npos);
    auto j = nlohmann::ordered_json::parse(render_report(r, ReportFormat::json));
    CHECK(j["checks"].size() == r.checks.size());
}

TEST_CASE("failing checks carry witnesses that survive a round trip") {
    auto r = run_suite("stab-b", small_corpus(), 42);
    CHECK(r.overall() == Status::fail);
    bool seen = false;
    for (const auto& c : r.checks) {
        if (c.status != Status::fail) {
            CHECK(c.witness.is_null());
            continue;
        }
        seen = true;
        CHECK_FALSE(c.witness.is_null());
        CHECK_FALSE(c.detail.empty());
    }
    CHECK(seen);
    auto back = report_from_json(report_to_json(r, false));
    CHECK(report_to_json(back, false) == report_to_json(r, false));
}

TEST_CASE("reports are deterministic") {
    auto c = small_corpus();
    auto a = report_to_json(run_suite("identities", c, 42), false).dump();
    auto b = report_to_json(run_suite("identities", c, 42), false).dump();
    CHECK(a == b);
    RunOptions two;
    two.threads = 2;
    CHECK(report_to_json(run_suite("identities", c, 42, two), false).dump() == a);
    auto s1 = report_to_json(run_suite("stab-b", c, 1), false).dump();
    CHECK(report_to_json(run_suite("stab-b", c, 1, two), false).dump() == s1);
}

TEST_CASE("resource refusals are reported as skipped") {
    auto c = small_corpus();
    c.cap = 16;
    auto r = run_suite("identities", c, 42);
    CHECK(r.count(Status::skipped) > 0);
    CHECK(r.count(Status::fail) == 0);
    CHECK(r.overall() == Status::skipped);
}
