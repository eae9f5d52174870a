#ifndef STATEX_LABEL_HPP
#define STATEX_LABEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "types.hpp"

namespace statex {

/// Maps a canonical statistic label (case preserved, trailing `2`/`^2` kept,
/// plural `'s` removed) to its statistic family.
///
/// The table follows the letter sweeps of the reference output exactly; any
/// squared or unrecognized letter stays `Unknown` and is never folded into
/// `Chi2`. Only `x`/`X` (any squared form) and the canonical `chi2` token are
/// chi-square.
inline StatKind classify_statistic(std::string_view label) noexcept
{
    bool squared = false;
    std::string_view base = label;
    if (base.size() > 2 && base.substr(base.size() - 2) == "^2") {
        base.remove_suffix(2);
        squared = true;
    } else if (base.size() > 1 && base.back() == '2') {
        base.remove_suffix(1);
        squared = true;
    }

    if (base == "chi") return squared ? StatKind::Chi2 : StatKind::Unknown;
    if (base.size() != 1) return StatKind::Unknown;

    switch (base.front()) {
    case 't': return StatKind::t;
    case 'F': return squared ? StatKind::Unknown : StatKind::F;
    case 'r': return squared ? StatKind::R2 : StatKind::r;
    case 'R': return squared ? StatKind::R2 : StatKind::Unknown;
    case 'Z':
    case 'z': return squared ? StatKind::Unknown : StatKind::Z;
    case 'Q': return StatKind::Q;
    case 'q': return squared ? StatKind::Unknown : StatKind::Q;
    case 'H': return StatKind::H;
    case 'G': return squared ? StatKind::G2 : StatKind::Unknown;
    case 'U': return squared ? StatKind::Unknown : StatKind::U;
    case 'X':
    case 'x': return StatKind::Chi2;
    default: return StatKind::Unknown;
    }
}

namespace detail {

struct LabelToken {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string head; // letters plus squared mark as written
    bool plural = false;
};

constexpr bool is_label_boundary(std::string_view text, std::size_t pos) noexcept
{
    if (pos == 0) return true;
    char prev = text[pos - 1];
    return !(is_ascii_alnum(prev) || prev == '_' || prev == '\'' || prev == '^' ||
             static_cast<unsigned char>(prev) >= 0x80);
}

constexpr std::size_t kMaxLabelLetters = 10;

/// Reads a label starting at `pos`: 1-10 ASCII letters, an optional `2` or
/// `^2`, an optional plural `'s`; it must end at a non-alphanumeric.
inline std::optional<LabelToken> scan_label(std::string_view text, std::size_t pos)
{
    if (pos >= text.size() || !is_ascii_alpha(text[pos]) || !is_label_boundary(text, pos)) return std::nullopt;
    std::size_t i = pos;
    while (i < text.size() && is_ascii_alpha(text[i])) ++i;
    if (i - pos > kMaxLabelLetters) return std::nullopt;

    if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '2' &&
        (i + 2 >= text.size() || !is_ascii_digit(text[i + 2])))
        i += 2;
    else if (i < text.size() && text[i] == '2' && (i + 1 >= text.size() || !is_ascii_digit(text[i + 1])))
        i += 1;

    LabelToken tok;
    tok.begin = pos;
    tok.head = std::string(text.substr(pos, i - pos));
    if (i + 1 < text.size() && text[i] == '\'' && (text[i + 1] == 's' || text[i + 1] == 'S') &&
        (i + 2 >= text.size() || !is_ascii_alnum(text[i + 2]))) {
        tok.plural = true;
        i += 2;
    }
    if (i < text.size() && (is_ascii_alnum(text[i]) || text[i] == '_')) return std::nullopt;
    tok.end = i;
    return tok;
}

/// True when a numeric literal (possibly signed or leading-dot) starts at `pos`.
constexpr bool number_starts_at(std::string_view text, std::size_t pos) noexcept
{
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    if (pos >= text.size()) return false;
    if (is_ascii_digit(text[pos])) return true;
    return text[pos] == '.' && pos + 1 < text.size() && is_ascii_digit(text[pos + 1]);
}

constexpr bool is_df_group_char(char c) noexcept
{
    return is_ascii_digit(c) || c == '.' || c == ',' || c == ' ' || c == 'N' || c == 'n' || c == '=';
}

/// Length of a parenthesized degrees-of-freedom group starting at `pos`
/// (including both parentheses), or 0 when none is present.
constexpr std::size_t df_group_length(std::string_view text, std::size_t pos) noexcept
{
    if (pos >= text.size() || text[pos] != '(') return 0;
    bool digit = false;
    for (std::size_t i = pos + 1; i < text.size() && i - pos <= 32; ++i) {
        char c = text[i];
        if (c == ')') return digit ? i - pos + 1 : 0;
        if (!is_df_group_char(c)) return 0;
        digit = digit || is_ascii_digit(c);
    }
    return 0;
}

} // namespace detail

} // namespace statex

#endif
