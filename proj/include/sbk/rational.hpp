#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbk {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; every operation is exact.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

/// Serialize as "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parse "p" or "p/q" with optional leading sign. Returns nullopt on syntax
/// errors or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Integer(std::string(text)));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer d{std::string(den)};
        if (d == 0) return std::nullopt;
        return Rational(Integer(std::string(num)), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Exact square root when the argument is the square of a rational;
/// nullopt otherwise (including negative input).
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    Integer n = numerator(q), d = denominator(q);
    Integer sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace sbk
