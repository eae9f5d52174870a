#ifndef STATEX_NUMBER_HPP
#define STATEX_NUMBER_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "types.hpp"

namespace statex {

/// A numeric literal as read from text.
struct NumberParse {
    double value = 0.0;
    int decimals = 0;          // digits after the decimal point as written
    std::size_t consumed = 0;  // bytes of the token that formed the number
    bool plain = true;         // no exponent, fraction or percent sign
};

namespace detail {

struct Mantissa {
    double value = 0.0;
    int decimals = 0;
    std::size_t consumed = 0;
};

/// Longest valid decimal prefix: [sign] digits [. digits] [e[sign]digits].
/// At least one digit is required.
inline std::optional<Mantissa> scan_mantissa(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t int_digits = 0;
    while (i < s.size() && is_ascii_digit(s[i])) {
        ++i;
        ++int_digits;
    }
    int frac_digits = 0;
    bool has_point = false;
    if (i < s.size() && s[i] == '.') {
        std::size_t j = i + 1;
        while (j < s.size() && is_ascii_digit(s[j])) {
            ++j;
            ++frac_digits;
        }
        if (int_digits > 0 || frac_digits > 0) {
            has_point = true;
            i = j;
        }
    }
    if (int_digits == 0 && frac_digits == 0) return std::nullopt;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s.size() && is_ascii_digit(s[k])) ++k;
        if (k > j) i = k;
    }

    std::string buf(s.substr(0, i));
    if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
    // from_chars rejects "1." and ".5" style forms; pad them.
    if (has_point && frac_digits == 0) {
        auto dot = buf.find('.');
        buf.insert(dot + 1, "0");
    }
    std::size_t lead = (!buf.empty() && buf.front() == '-') ? 1 : 0;
    if (lead < buf.size() && buf[lead] == '.') buf.insert(lead, "0");

    Mantissa m;
    auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), m.value);
    if (ec != std::errc{} || ptr != buf.data() + buf.size()) return std::nullopt;
    m.decimals = frac_digits;
    m.consumed = i;
    return m;
}

/// Fewest decimals (up to 6) that represent `v` to within 1e-9.
inline int shortest_decimals(double v)
{
    for (int d = 0; d < 6; ++d) {
        double scale = std::pow(10.0, d);
        if (std::fabs(std::round(v * scale) / scale - v) < 1e-9) return d;
    }
    return 6;
}

} // namespace detail

/// Parses the numeric literal at the start of `token`.
///
/// Accepts leading-dot decimals (`.34`), percentages (`5%` is 0.05),
/// fractions (`4/5`), caret exponents (`1.2^3`) and e-notation. A corrupted
/// literal yields its longest valid prefix (`1..2` is 1). Throws
/// MalformedNumber when no digit can be read (`n3`, `.n3`).
inline NumberParse parse_number_prefix(std::string_view token)
{
    auto m = detail::scan_mantissa(token);
    if (!m) throw MalformedNumber(token);
    NumberParse out;
    out.value = m->value;
    out.decimals = m->decimals;
    out.consumed = m->consumed;

    std::string_view rest = token.substr(out.consumed);
    if (rest.size() > 1 && (rest.front() == '^' || rest.front() == '/')) {
        if (auto rhs = detail::scan_mantissa(rest.substr(1))) {
            if (rest.front() == '^') {
                out.value = std::pow(out.value, rhs->value);
            } else if (rhs->value != 0.0) {
                out.value = out.value / rhs->value;
            }
            out.consumed += 1 + rhs->consumed;
            out.plain = false;
            rest = token.substr(out.consumed);
        }
    }
    if (!rest.empty() && rest.front() == '%') {
        out.value /= 100.0;
        out.consumed += 1;
        if (out.plain) {
            out.decimals += 2;
        }
        out.plain = false;
    }
    if (!out.plain && out.decimals == m->decimals) out.decimals = detail::shortest_decimals(out.value);
    return out;
}

inline double parse_number(std::string_view token)
{
    return parse_number_prefix(token).value;
}

/// Degrees of freedom read from a parenthesized group or a `df=` value.
struct DegreesOfFreedom {
    double df1 = 0.0;
    std::optional<double> df2;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

inline bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!is_ascii_digit(c)) return false;
    return true;
}

inline double parse_df_part(std::string_view part, std::string_view whole)
{
    part = trim(part);
    if (part.empty()) throw MalformedNumber(whole);
    auto n = parse_number_prefix(part);
    if (n.consumed != part.size() || n.value < 0.0 || !std::isfinite(n.value)) throw MalformedNumber(whole);
    return n.value;
}

} // namespace detail

/// Parses a degrees-of-freedom group such as `(12)`, `(1,23)` or `(2, N = 100)`.
///
/// `two_df` selects the F-family reading of `(a,b)`. For single-df statistics
/// `(1,234)` is one df with a thousands separator, accepted only when the part
/// after the comma is exactly three digits with no space around the comma.
/// A sample-size part (`N = 100`) is ignored.
inline DegreesOfFreedom parse_df(std::string_view group, bool two_df)
{
    std::string_view g = detail::trim(group);
    if (!g.empty() && (g.front() == '(' || g.front() == '[')) g.remove_prefix(1);
    if (!g.empty() && (g.back() == ')' || g.back() == ']')) g.remove_suffix(1);

    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= g.size(); ++i) {
        if (i == g.size() || g[i] == ',') {
            parts.push_back(g.substr(start, i - start));
            start = i + 1;
        }
    }
    std::vector<std::string_view> kept;
    for (auto p : parts) {
        auto t = detail::trim(p);
        if (!t.empty() && (t.front() == 'N' || t.front() == 'n')) continue;
        kept.push_back(p);
    }
    if (kept.empty() || kept.size() > 2) throw MalformedNumber(group);

    DegreesOfFreedom df;
    if (kept.size() == 1) {
        df.df1 = detail::parse_df_part(kept[0], group);
        return df;
    }
    if (two_df) {
        df.df1 = detail::parse_df_part(kept[0], group);
        df.df2 = detail::parse_df_part(kept[1], group);
        return df;
    }
    std::string_view hi = kept[0];
    std::string_view lo = kept[1];
    bool tight = !hi.empty() && hi.back() != ' ' && !lo.empty() && lo.front() != ' ';
    hi = detail::trim(hi);
    lo = detail::trim(lo);
    if (tight && detail::all_digits(hi) && hi.size() <= 3 && detail::all_digits(lo) && lo.size() == 3) {
        df.df1 = detail::parse_df_part(hi, group) * 1000.0 + detail::parse_df_part(lo, group);
        return df;
    }
    throw MalformedNumber(group);
}

} // namespace statex

#endif
