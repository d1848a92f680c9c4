#pragma once

// Plain-text ring tables:
//
//   ring <name>
//   order <n>
//   one <index>
//   add
//   <n rows of n indices>
//   mul
//   <n rows of n indices>
//
// '#' starts a comment; blank lines are ignored. Element 0 must be the zero.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ringline/finite_ring.hpp"

namespace ringline {

namespace detail {

struct SourceLine {
    std::size_t number;
    std::string text;
};

inline std::vector<SourceLine> significant_lines(std::string_view text) {
    std::vector<SourceLine> out;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(first, last - first + 1)});
    }
    return out;
}

[[noreturn]] inline void syntax_error(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_count(const SourceLine& line, std::string_view keyword) {
    std::istringstream in(line.text);
    std::string word;
    long long value = -1;
    std::string extra;
    if (!(in >> word) || word != keyword || !(in >> value) || (in >> extra) || value < 0)
        syntax_error(line.number, "expected '" + std::string(keyword) + " <integer>'");
    return static_cast<std::size_t>(value);
}

}  // namespace detail

inline FiniteRing parse_ring_file(std::string_view text) {
    const auto lines = detail::significant_lines(text);
    std::size_t cursor = 0;
    auto next = [&](std::string_view expecting) -> const detail::SourceLine& {
        if (cursor >= lines.size())
            detail::syntax_error(lines.empty() ? 1 : lines.back().number + 1,
                                 "unexpected end of input, expecting " + std::string(expecting));
        return lines[cursor++];
    };

    const auto& header = next("ring <name>");
    if (header.text.rfind("ring", 0) != 0 || (header.text.size() > 4 && header.text[4] != ' ' && header.text[4] != '\t'))
        detail::syntax_error(header.number, "expected 'ring <name>'");
    std::string name = header.text.size() > 4 ? header.text.substr(4) : "";
    name.erase(0, name.find_first_not_of(" \t"));
    if (name.empty()) detail::syntax_error(header.number, "ring name missing");

    const std::size_t n = detail::parse_count(next("order"), "order");
    if (n < 2) detail::syntax_error(lines[cursor - 1].number, "order must be at least 2");
    if (n > kMaxTableOrder) throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " too large");
    const auto one = static_cast<Elem>(detail::parse_count(next("one"), "one"));

    auto read_table = [&](std::string_view keyword) {
        const auto& head = next(keyword);
        if (head.text != keyword) detail::syntax_error(head.number, "expected '" + std::string(keyword) + "'");
        std::vector<Elem> flat;
        flat.reserve(n * n);
        for (std::size_t row = 0; row < n; ++row) {
            const auto& line = next("table row");
            std::istringstream in(line.text);
            std::string token;
            std::size_t count = 0;
            while (in >> token) {
                std::size_t used = 0;
                unsigned long v = 0;
                try {
                    v = std::stoul(token, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != token.size() || token[0] == '-')
                    detail::syntax_error(line.number, "'" + token + "' is not an element index");
                flat.push_back(static_cast<Elem>(v));
                ++count;
            }
            if (count != n)
                detail::syntax_error(line.number, "expected " + std::to_string(n) + " entries, found " +
                                                      std::to_string(count));
        }
        return flat;
    };
    auto add = read_table("add");
    auto mul = read_table("mul");
    if (cursor != lines.size()) detail::syntax_error(lines[cursor].number, "trailing content after mul table");
    return validate_ring(std::move(add), std::move(mul), n, one, std::move(name));
}

inline std::string emit_ring_file(const FiniteRing& ring) {
    std::ostringstream out;
    out << "ring " << ring.name() << "\norder " << ring.order() << "\none " << ring.one() << "\n";
    auto table = [&](std::string_view keyword, std::span<const Elem> flat) {
        out << keyword << "\n";
        for (std::size_t i = 0; i < ring.order(); ++i) {
            for (std::size_t j = 0; j < ring.order(); ++j) out << (j ? " " : "") << flat[i * ring.order() + j];
            out << "\n";
        }
    };
    table("add", ring.add_table());
    table("mul", ring.mul_table());
    return out.str();
}

inline FiniteRing load_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_ring_file(buffer.str());
}

}  // namespace ringline
