#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cms/errors.hpp"

namespace cms::text {

// Splits at top-level '+' and '-' (outside brackets); keeps signs with chunks.
inline std::vector<std::string> split_sum(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        bool sign = (c == '+' || c == '-') && depth == 0;
        if (sign) {
            std::size_t j = cur.find_last_not_of(' ');
            bool after_operand = j != std::string::npos && cur[j] != '*' && cur[j] != '/' && cur[j] != '^';
            if (after_operand) {
                out.push_back(cur);
                cur.clear();
            }
        }
        cur += c;
    }
    if (cur.find_first_not_of(' ') != std::string::npos) out.push_back(cur);
    return out;
}

inline std::vector<std::string> split_product(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string_view::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n");
    return std::string(s.substr(a, b - a + 1));
}

inline int bracket_int(const std::string& s, std::size_t open) {
    std::size_t close = s.find(']', open);
    if (close == std::string::npos || close != s.size() - 1) throw ParseError("bad index in '" + s + "'");
    return std::stoi(s.substr(open + 1, close - open - 1));
}

// Removes leading signs; returns true when the net sign is negative.
inline bool strip_sign(std::string& t) {
    bool negative = false;
    t = trim(t);
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        if (t[0] == '-') negative = !negative;
        t = trim(t.substr(1));
    }
    return negative;
}

}  // namespace cms::text
