#pragma once

// Named verification suites turning the theorems into pass/fail checks.

#include "funho/exactlin/field.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace funho {

enum class Status { pass, fail, skipped };

std::string status_name(Status s);
Status parse_status(std::string_view s);

struct CheckResult {
    std::string name;
    std::string input;
    Status status = Status::pass;
    std::string detail;
    nlohmann::ordered_json witness;  // null unless failing
    double seconds = 0;
};

struct Corpus {
    std::vector<std::string> algebras{"trunc:2", "trunc:3", "group:2", "group:3", "prod:2"};
    std::vector<ScalarField> fields{ScalarField::rationals(), ScalarField::prime(2), ScalarField::prime(3)};
    int max_degree = 3;
    int samples = 100;
    std::uint64_t cap = std::uint64_t{1} << 18;
    std::vector<int> representables{1, 2, 3};

    static Corpus empty();
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    Corpus corpus;
    std::vector<CheckResult> checks;

    std::size_t count(Status s) const;
    /// fail if any check failed, else skipped if any was skipped, else pass.
    Status overall() const;
};

const std::vector<std::string>& suite_names();

/// Raised for unknown suite names.
class UnknownSuite : public Error {
public:
    using Error::Error;
};

struct RunOptions {
    int threads = 1;
};

SuiteReport run_suite(const std::string& name, const Corpus& corpus, std::uint64_t seed, const RunOptions& opts = {});

enum class ReportFormat { json, markdown, csv };
ReportFormat parse_report_format(std::string_view s);

nlohmann::ordered_json report_to_json(const SuiteReport& r, bool timings = true);
SuiteReport report_from_json(const nlohmann::ordered_json& j);
std::string render_report(const SuiteReport& r, ReportFormat format, bool timings = true);

}  // namespace funho
