#ifndef STATEX_TYPES_HPP
#define STATEX_TYPES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace statex {

// Errors. All derive from std::runtime_error so callers can catch broadly.

class MalformedNumber : public std::runtime_error {
public:
    explicit MalformedNumber(std::string_view token)
        : std::runtime_error("malformed number: '" + std::string(token) + "'"), token_(token) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CorruptCorpus : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotMutable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Recognized statistic families. `POnly` marks a bare p-clause, `Unknown` a
/// labelled statistic whose label is not one of the families below.
enum class StatKind { t, F, r, Z, Chi2, Q, H, G2, U, R2, BetaSE, POnly, Unknown };

enum class Comparator { Eq, Lt, Gt, Le, Ge, Indeterminate, NotSignificant };

enum class TailMode { two_tailed, one_tailed };

constexpr std::string_view to_string(StatKind k) noexcept
{
    switch (k) {
    case StatKind::t: return "t";
    case StatKind::F: return "F";
    case StatKind::r: return "r";
    case StatKind::Z: return "Z";
    case StatKind::Chi2: return "Chi2";
    case StatKind::Q: return "Q";
    case StatKind::H: return "H";
    case StatKind::G2: return "G2";
    case StatKind::U: return "U";
    case StatKind::R2: return "R2";
    case StatKind::BetaSE: return "BetaSE";
    case StatKind::POnly: return "POnly";
    case StatKind::Unknown: return "Unknown";
    }
    return "Unknown";
}

constexpr std::string_view to_string(Comparator c) noexcept
{
    switch (c) {
    case Comparator::Eq: return "=";
    case Comparator::Lt: return "<";
    case Comparator::Gt: return ">";
    case Comparator::Le: return "<=";
    case Comparator::Ge: return ">=";
    case Comparator::Indeterminate: return "<=>";
    case Comparator::NotSignificant: return "ns";
    }
    return "=";
}

constexpr std::string_view to_string(TailMode m) noexcept
{
    return m == TailMode::one_tailed ? "one_tailed" : "two_tailed";
}

inline std::optional<StatKind> stat_kind_from_string(std::string_view s) noexcept
{
    for (int i = 0; i <= static_cast<int>(StatKind::Unknown); ++i) {
        auto k = static_cast<StatKind>(i);
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

inline std::optional<Comparator> comparator_from_string(std::string_view s) noexcept
{
    for (int i = 0; i <= static_cast<int>(Comparator::NotSignificant); ++i) {
        auto c = static_cast<Comparator>(i);
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

/// Sign-symmetric statistics: the one-tailed p is half the two-tailed one.
constexpr bool is_sign_symmetric(StatKind k) noexcept
{
    return k == StatKind::t || k == StatKind::r || k == StatKind::Z || k == StatKind::BetaSE;
}

namespace detail {

constexpr bool is_ascii_alpha(char c) noexcept
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
constexpr bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr bool is_ascii_alnum(char c) noexcept { return is_ascii_alpha(c) || is_ascii_digit(c); }
constexpr char ascii_lower(char c) noexcept { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

constexpr bool iequals(std::string_view a, std::string_view b) noexcept
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    return true;
}

constexpr bool istarts_with(std::string_view s, std::string_view prefix) noexcept
{
    return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

} // namespace detail

} // namespace statex

#endif
