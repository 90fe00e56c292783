#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cms {

struct CheckItem {
    std::string label;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckItem> items;
    bool informational = false;  // never fails the overall verdict
    double elapsed_ms = 0;

    int failures() const;
    bool ok() const { return informational || failures() == 0; }
};

// Unset fields take the suite's default bound.
struct SuiteBounds {
    std::optional<int> max_degree;  // commutators
    std::optional<int> max_weight;  // partition-indexed suites
    std::optional<int> degree;      // hyper truncation degree
    std::optional<int> n, m;        // ideals and super; default is every n, m <= 2
};

const std::vector<std::string>& suite_names();  // excludes "all"
// "all" runs every suite in suite_names() order. Throws UnknownSuite.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteBounds& bounds = {});

// The super suite split into kernel, intertwine, duality and eigen.
const std::vector<std::string>& super_parts();
SuiteReport run_super_part(std::string_view part, const SuiteBounds& bounds = {});

}  // namespace cms
