#pragma once

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <matpak/matrix.hpp>
#include <matpak/result.hpp>

namespace matpak {

enum class ParseErrorKind {
    UnbalancedBrackets,
    RaggedRows,
    EmptyMatrix,
    EmptyRow,
    InvalidNumber,
    TrailingGarbage,
};

constexpr const char* to_string(ParseErrorKind k) noexcept {
    switch (k) {
        case ParseErrorKind::UnbalancedBrackets: return "UnbalancedBrackets";
        case ParseErrorKind::RaggedRows: return "RaggedRows";
        case ParseErrorKind::EmptyMatrix: return "EmptyMatrix";
        case ParseErrorKind::EmptyRow: return "EmptyRow";
        case ParseErrorKind::InvalidNumber: return "InvalidNumber";
        case ParseErrorKind::TrailingGarbage: return "TrailingGarbage";
    }
    return "ParseError";
}

/// Codec failure. `position` is a character offset into the input text.
struct ParseError {
    ParseErrorKind kind;
    std::size_t position;
    std::string detail;

    std::string message() const {
        return std::string(to_string(kind)) + ": " + detail + " at offset " +
               std::to_string(position);
    }
};

namespace detail {

// number := ["+"|"-"] digits ["." digits] [("e"|"E") ["+"|"-"] digits]
// Validated before std::from_chars, which would otherwise also accept
// "inf"/"nan" and hex floats.
inline bool valid_number_token(std::string_view t) noexcept {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i < t.size() && t[i] == '.') {
        ++i;
        digits = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
        if (digits == 0) return false;
    }
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        digits = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
        if (digits == 0) return false;
    }
    return i == t.size();
}

inline bool parse_number_token(std::string_view t, double& out) noexcept {
    if (!valid_number_token(t)) return false;
    if (!t.empty() && t[0] == '+') t.remove_prefix(1); // from_chars rejects '+'
    const auto rc = std::from_chars(t.data(), t.data() + t.size(), out);
    return rc.ec == std::errc{} && rc.ptr == t.data() + t.size() && std::isfinite(out);
}

inline bool is_outer_space(char c) noexcept {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

} // namespace detail

/// Parses the bracket-dash format: rows of space-separated numbers in square
/// brackets, joined by "-", wrapped in one outer bracket pair, e.g.
/// "[[2 3 4]-[5 6 7]]". Leading/trailing whitespace is trimmed; runs of
/// spaces between elements and around the "]-[" row delimiter are accepted.
/// "-" acts as the row delimiter only between "]" and "[", so negative
/// elements parse unambiguously.
inline Result<Matrix, ParseError> parse(std::string_view text) {
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n && detail::is_outer_space(text[i])) ++i;

    if (i == n || text[i] != '[') {
        return ParseError{ParseErrorKind::UnbalancedBrackets, i, "expected '['"};
    }
    ++i;

    std::vector<std::vector<double>> rows;
    while (i < n && text[i] == ' ') ++i;
    if (i < n && text[i] == ']' && rows.empty()) {
        return ParseError{ParseErrorKind::EmptyMatrix, i, "matrix has no rows"};
    }

    for (;;) {
        while (i < n && text[i] == ' ') ++i;
        if (i == n) {
            return ParseError{ParseErrorKind::UnbalancedBrackets, n, "matrix not closed"};
        }
        if (text[i] != '[') {
            return ParseError{ParseErrorKind::UnbalancedBrackets, i,
                              "expected '[' to open a row"};
        }
        const std::size_t row_start = i;
        ++i;

        std::vector<double> row;
        for (;;) {
            while (i < n && text[i] == ' ') ++i;
            if (i == n) {
                return ParseError{ParseErrorKind::UnbalancedBrackets, n, "row not closed"};
            }
            if (text[i] == ']') {
                if (row.empty()) {
                    return ParseError{ParseErrorKind::EmptyRow, i, "row has no elements"};
                }
                ++i;
                break;
            }
            if (text[i] == '[') {
                return ParseError{ParseErrorKind::UnbalancedBrackets, i,
                                  "unexpected '[' inside a row"};
            }
            std::size_t j = i;
            while (j < n && text[j] != ' ' && text[j] != ']' && text[j] != '[') ++j;
            const std::string_view token = text.substr(i, j - i);
            double value = 0.0;
            if (!detail::parse_number_token(token, value)) {
                return ParseError{ParseErrorKind::InvalidNumber, i, std::string(token)};
            }
            row.push_back(value);
            i = j;
        }

        if (!rows.empty() && row.size() != rows.front().size()) {
            return ParseError{ParseErrorKind::RaggedRows, row_start,
                              "row " + std::to_string(rows.size()) + " has " +
                                  std::to_string(row.size()) + " elements, expected " +
                                  std::to_string(rows.front().size())};
        }
        rows.push_back(std::move(row));

        while (i < n && text[i] == ' ') ++i;
        if (i == n) {
            return ParseError{ParseErrorKind::UnbalancedBrackets, n, "matrix not closed"};
        }
        if (text[i] == '-') {
            ++i;
            continue;
        }
        if (text[i] == ']') {
            ++i;
            break;
        }
        return ParseError{ParseErrorKind::UnbalancedBrackets, i,
                          "expected '-' between rows or ']'"};
    }

    while (i < n && detail::is_outer_space(text[i])) ++i;
    if (i < n) {
        std::size_t j = i;
        while (j < n && !detail::is_outer_space(text[j])) ++j;
        return ParseError{ParseErrorKind::TrailingGarbage, i,
                          std::string(text.substr(i, j - i))};
    }

    auto m = Matrix::from_rows(rows);
    assert(m.ok()); // structure was fully validated above
    return std::move(m).value();
}

namespace detail {

// Shortest digit sequence + decimal exponent that round-trips `v`,
// taken from std::to_chars in scientific form.
struct ShortestDigits {
    bool negative;
    std::string digits; // no '.', no trailing zeros beyond what to_chars emits
    int exp10;          // value = 0.d1d2... * 10^(exp10+1), i.e. d1.d2... * 10^exp10
};

inline ShortestDigits shortest_digits(double v) {
    char buf[64];
    const auto rc = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
    std::string_view s(buf, static_cast<std::size_t>(rc.ptr - buf));
    ShortestDigits out{false, {}, 0};
    std::size_t i = 0;
    if (s[i] == '-') {
        out.negative = true;
        ++i;
    }
    const std::size_t e = s.find('e', i);
    for (std::size_t k = i; k < e; ++k) {
        if (s[k] != '.') out.digits.push_back(s[k]);
    }
    out.exp10 = std::stoi(std::string(s.substr(e + 1)));
    return out;
}

} // namespace detail

/// Canonical text for one element: the shortest decimal string that parses
/// back to the identical binary value. Integer-valued doubles are written as
/// plain integers (no '.' and no exponent), everything else in the shortest
/// fixed or scientific form std::to_chars picks.
inline std::string format_scalar(double v) {
    if (v == 0.0) return std::signbit(v) ? "-0" : "0";
    if (std::rint(v) == v) {
        const auto sd = detail::shortest_digits(v);
        const int k = static_cast<int>(sd.digits.size());
        if (sd.exp10 >= k - 1) {
            std::string out;
            if (sd.negative) out.push_back('-');
            out += sd.digits;
            out.append(static_cast<std::size_t>(sd.exp10 - (k - 1)), '0');
            return out;
        }
        // Integral doubles always satisfy exp10 >= digits-1; fall through
        // to the default form if that ever fails to hold.
    }
    char buf[64];
    const auto rc = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, static_cast<std::size_t>(rc.ptr - buf));
}

/// Canonical bracket-dash form; parse(serialize(m)) reproduces m bit for bit.
inline std::string serialize(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back('[');
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out.push_back(' ');
            out += format_scalar(m(i, j));
        }
        out.push_back(']');
        if (i + 1 < m.rows()) out.push_back('-');
    }
    out.push_back(']');
    return out;
}

} // namespace matpak
