#include "cms/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cms {

std::string_view format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Text: return "text";
        case Format::Latex: return "latex";
    }
    return "?";
}

std::optional<Format> format_from_name(std::string_view name) {
    for (Format f : {Format::Json, Format::Text, Format::Latex})
        if (format_name(f) == name) return f;
    return std::nullopt;
}

std::string render(const Scalar& x, Format f) { return f == Format::Latex ? x.to_latex() : x.to_string(); }

std::string render(const SymFunc& x, Format f) { return f == Format::Latex ? x.to_latex() : x.to_string(); }

std::string render(const MVPoly& x, const SuperAlgebra& alg, Format f) {
    if (f != Format::Latex) return x.to_string(alg);
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        bool constant = std::all_of(it->first.begin(), it->first.end(), [](int e) { return e == 0; });
        if (constant || !it->second.is_one()) os << "\\left(" << it->second.to_latex() << "\\right)";
        for (int v = 0; v < x.vars(); ++v) {
            int e = it->first[v];
            if (e == 0) continue;
            os << (v < alg.n ? "x" : "y") << "_{" << (v < alg.n ? v + 1 : v - alg.n + 1) << "}";
            if (e > 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

bool Report::ok() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const ReportVerdict& v) { return v.pass || v.informational; });
}

Json suite_json(const SuiteReport& r, bool timing) {
    Json items = Json::array();
    for (const auto& c : r.items) items.push_back({{"check", c.label}, {"pass", c.pass}});
    Json out = {{"suite", r.suite}, {"informational", r.informational}, {"items", items.size()},
                {"failures", r.failures()}, {"checks", items}};
    if (timing) out["elapsed_ms"] = std::llround(r.elapsed_ms);
    return out;
}

namespace {

Json to_json(const Report& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json j = {{"check", v.check}, {"pass", v.pass}};
        if (v.informational) j["informational"] = true;
        verdicts.push_back(j);
    }
    Json out = {{"command", r.command}, {"params", r.params}, {"results", r.results}, {"verdicts", verdicts}};
    out["elapsed_ms"] = r.elapsed_ms ? Json(std::llround(*r.elapsed_ms)) : Json(nullptr);
    return out;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_check(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("check") && j.contains("pass"); }

void text_value(std::ostringstream& os, const std::string& indent, const std::string& key, const Json& j) {
    if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_check)) {
        os << indent << key << ":\n";
        for (const auto& c : j) os << indent << "  " << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["check"].get<std::string>() << "\n";
    } else if (j.is_object() && j.empty()) {
        os << indent << key << ": {}\n";
    } else if (j.is_object()) {
        os << indent << key << ":\n";
        for (const auto& [k, v] : j.items()) text_value(os, indent + "  ", k, v);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        os << indent << key << ":\n";
        for (std::size_t i = 0; i < j.size(); ++i) text_value(os, indent + "  ", "- " + std::to_string(i + 1), j[i]);
    } else {
        os << indent << key << ": " << scalar_text(j) << "\n";
    }
}

const char* mark(const ReportVerdict& v) {
    if (v.informational) return v.pass ? "INFO pass" : "INFO fail";
    return v.pass ? "PASS" : "FAIL";
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
        out += c;
    }
    return out;
}

void latex_value(std::ostringstream& os, const std::string& key, const Json& j) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) latex_value(os, key.empty() ? k : key + "." + k, v);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) latex_value(os, key + "." + std::to_string(i + 1), j[i]);
    } else {
        os << "\\text{" << latex_escape(key) << "} &= " << scalar_text(j) << " \\\\\n";
    }
}

}  // namespace

std::string render_report(const Report& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json:
            return to_json(r).dump(2) + "\n";
        case Format::Text:
            os << "command: " << r.command << "\n";
            text_value(os, "", "params", r.params);
            text_value(os, "", "results", r.results);
            if (!r.verdicts.empty()) {
                os << "verdicts:\n";
                for (const auto& v : r.verdicts) os << "  " << mark(v) << "  " << v.check << "\n";
            }
            if (r.elapsed_ms) os << "elapsed_ms: " << std::llround(*r.elapsed_ms) << "\n";
            return os.str();
        case Format::Latex:
            os << "% " << r.command << "\n\\begin{align*}\n";
            latex_value(os, "", r.results);
            os << "\\end{align*}\n";
            for (const auto& v : r.verdicts) os << "% " << mark(v) << " " << v.check << "\n";
            return os.str();
    }
    return {};
}

}  // namespace cms
