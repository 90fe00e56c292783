#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cms/super.hpp"
#include "cms/verify.hpp"

namespace cms {

enum class Format { Json, Text, Latex };
std::string_view format_name(Format f);
std::optional<Format> format_from_name(std::string_view name);

// Plain text for Json and Text, LaTeX math for Latex.
std::string render(const Scalar& x, Format f);
std::string render(const SymFunc& x, Format f);
std::string render(const MVPoly& x, const SuperAlgebra& alg, Format f);

using Json = nlohmann::ordered_json;

struct ReportVerdict {
    std::string check;
    bool pass = false;
    bool informational = false;
};

// What every CLI command prints. Key order is fixed, so equal inputs give equal bytes.
struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    std::vector<ReportVerdict> verdicts;
    std::optional<double> elapsed_ms;  // null when timing is off

    bool ok() const;
};

// Items and counts of a suite run; per-suite time only when timing is on.
Json suite_json(const SuiteReport& r, bool timing);

std::string render_report(const Report& r, Format f);

}  // namespace cms
