#ifndef STATEX_NORMALIZE_HPP
#define STATEX_NORMALIZE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "label.hpp"
#include "types.hpp"

namespace statex {

/// Canonical text plus, for every byte of `text`, the raw byte range of the
/// source character that produced it. `offset_map` is the start of that range
/// and is non-decreasing.
struct NormalizedText {
    std::string text;
    std::vector<std::size_t> offset_map;
    std::vector<std::size_t> offset_end;

    /// Raw byte range covering normalized bytes [begin, end).
    std::pair<std::size_t, std::size_t> raw_range(std::size_t begin, std::size_t end) const
    {
        if (begin >= end || begin >= text.size()) return {0, 0};
        end = std::min(end, text.size());
        std::size_t raw_end = offset_end[begin];
        for (std::size_t i = begin; i < end; ++i) raw_end = std::max(raw_end, offset_end[i]);
        return {offset_map[begin], raw_end};
    }

    static NormalizedText identity(std::string_view raw)
    {
        NormalizedText out;
        out.text = std::string(raw);
        out.offset_map.resize(raw.size());
        out.offset_end.resize(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            out.offset_map[i] = i;
            out.offset_end[i] = i + 1;
        }
        return out;
    }
};

struct NormalizeOptions {
    bool fold_chi = true;
};

namespace detail {

struct Unit {
    char32_t cp = 0;
    std::size_t begin = 0; // byte range in the pass input
    std::size_t end = 0;
    bool decoded = false; // produced by an HTML/numeric entity
};

inline void append_utf8(std::string& out, char32_t cp)
{
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Marker for bytes that are not valid UTF-8; they pass through verbatim.
inline constexpr char32_t kInvalidByte = 0x110000;

inline std::size_t decode_utf8(std::string_view s, std::size_t i, char32_t& cp)
{
    auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        cp = b0;
        return 1;
    }
    std::size_t len = 0;
    char32_t v = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        v = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        v = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        v = b0 & 0x07;
    } else {
        cp = kInvalidByte;
        return 1;
    }
    if (i + len > s.size()) {
        cp = kInvalidByte;
        return 1;
    }
    for (std::size_t k = 1; k < len; ++k) {
        auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            cp = kInvalidByte;
            return 1;
        }
        v = (v << 6) | (b & 0x3F);
    }
    cp = v;
    return len;
}

struct NamedEntity {
    std::string_view name;
    char32_t cp;
};

inline constexpr NamedEntity kNamedEntities[] = {
    {"lt", U'<'},       {"gt", U'>'},        {"amp", U'&'},       {"le", 0x2264},     {"ge", 0x2265},
    {"nbsp", 0x00A0},   {"thinsp", 0x2009},  {"ensp", 0x2002},    {"emsp", 0x2003},   {"chi", 0x03C7},
    {"Chi", 0x03A7},    {"beta", 0x03B2},    {"minus", 0x2212},   {"ndash", 0x2013},  {"sup2", 0x00B2},
    {"quot", U'"'},     {"apos", U'\''},     {"rsquo", 0x2019},   {"lsquo", 0x2018},  {"prime", 0x2032},
};

/// Decodes `&name;`, `&#NNN;` or `&#xHH;` at `i`. Returns the entity length or 0.
inline std::size_t decode_entity(std::string_view s, std::size_t i, char32_t& cp)
{
    if (s[i] != '&') return 0;
    std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12 || semi == i + 1) return 0;
    std::string_view body = s.substr(i + 1, semi - i - 1);
    if (body.front() == '#') {
        body.remove_prefix(1);
        int base = 10;
        if (!body.empty() && (body.front() == 'x' || body.front() == 'X')) {
            base = 16;
            body.remove_prefix(1);
        }
        if (body.empty() || body.size() > 7) return 0;
        std::uint32_t v = 0;
        for (char c : body) {
            int d = -1;
            if (is_ascii_digit(c)) d = c - '0';
            else if (base == 16 && c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (base == 16 && c >= 'A' && c <= 'F') d = c - 'A' + 10;
            if (d < 0) return 0;
            v = v * static_cast<std::uint32_t>(base) + static_cast<std::uint32_t>(d);
        }
        if (v == 0 || v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) return 0;
        cp = static_cast<char32_t>(v);
        return semi - i + 1;
    }
    for (const auto& e : kNamedEntities) {
        if (e.name == body) {
            cp = e.cp;
            return semi - i + 1;
        }
    }
    return 0;
}

inline std::vector<Unit> decode_units(std::string_view s)
{
    std::vector<Unit> units;
    units.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        Unit u;
        u.begin = i;
        if (std::size_t n = decode_entity(s, i, u.cp); n > 0) {
            u.decoded = true;
            i += n;
        } else {
            i += decode_utf8(s, i, u.cp);
        }
        u.end = i;
        units.push_back(u);
    }
    return units;
}

constexpr bool is_space_cp(char32_t cp) noexcept
{
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' || cp == U'\v' ||
           cp == 0x00A0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 ||
           cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

/// Greek chi in every code point a text extractor is likely to emit.
constexpr bool is_chi_cp(char32_t cp) noexcept
{
    switch (cp) {
    case 0x03C7: // GREEK SMALL LETTER CHI
    case 0x03A7: // GREEK CAPITAL LETTER CHI
    case 0x1D6BE: // MATHEMATICAL BOLD CAPITAL CHI
    case 0x1D6D8: // MATHEMATICAL BOLD SMALL CHI
    case 0x1D6F8: // MATHEMATICAL ITALIC CAPITAL CHI
    case 0x1D712: // MATHEMATICAL ITALIC SMALL CHI
    case 0x1D732: // MATHEMATICAL BOLD ITALIC CAPITAL CHI
    case 0x1D74C: // MATHEMATICAL BOLD ITALIC SMALL CHI
    case 0x1D76C: // MATHEMATICAL SANS-SERIF BOLD CAPITAL CHI
    case 0x1D786: // MATHEMATICAL SANS-SERIF BOLD SMALL CHI
    case 0x1D7A6: // MATHEMATICAL SANS-SERIF BOLD ITALIC CAPITAL CHI
    case 0x1D7C0: // MATHEMATICAL SANS-SERIF BOLD ITALIC SMALL CHI
        return true;
    default:
        return false;
    }
}

constexpr bool is_beta_cp(char32_t cp) noexcept
{
    return cp == 0x03B2 || cp == 0x1D6C3 || cp == 0x1D6FD || cp == 0x1D737;
}

constexpr bool is_ascii_alpha_cp(char32_t cp) noexcept
{
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

class FoldPass {
public:
    FoldPass(std::string_view in, const NormalizeOptions& opts) : in_(in), opts_(opts), units_(decode_units(in)) {}

    /// Output text and, per output byte, the [begin, end) byte range of the input it came from.
    std::pair<std::string, std::vector<std::pair<std::size_t, std::size_t>>> run()
    {
        std::size_t pending_close = static_cast<std::size_t>(-1);
        std::size_t k = 0;
        while (k < units_.size()) {
            const Unit& u = units_[k];
            char32_t cp = u.cp;

            if (k == pending_close) {
                emit(")", k, k + 1);
                pending_close = static_cast<std::size_t>(-1);
                ++k;
                continue;
            }
            if (is_space_cp(cp)) {
                std::size_t j = k;
                while (j < units_.size() && is_space_cp(units_[j].cp)) ++j;
                if (out_.empty() || out_.back() != ' ') emit(" ", k, j);
                k = j;
                continue;
            }
            if (opts_.fold_chi) {
                if (std::size_t n = match_chi(k); n > 0) {
                    emit("chi2", k, k + n);
                    k += n;
                    continue;
                }
            }
            if (std::size_t n = match_sup2(k); n > 0) {
                emit("2", k, k + n);
                k += n;
                continue;
            }
            if (cp == 0x00B2) {
                emit("2", k, k + 1);
                ++k;
                continue;
            }
            if (is_beta_cp(cp)) {
                emit("beta", k, k + 1);
                ++k;
                continue;
            }
            if (std::string_view repl = simple_fold(cp); !repl.empty()) {
                emit(repl, k, k + 1);
                ++k;
                continue;
            }
            if (cp == U'[' && !u.decoded) {
                if (std::size_t close = match_df_bracket(k); close != 0) {
                    emit("(", k, k + 1);
                    pending_close = close;
                    ++k;
                    continue;
                }
            }
            if (u.decoded) {
                std::string bytes;
                append_utf8(bytes, cp);
                emit(bytes, k, k + 1);
            } else {
                emit(in_.substr(u.begin, u.end - u.begin), k, k + 1);
            }
            ++k;
        }
        return {std::move(out_), std::move(src_)};
    }

private:
    static std::string_view simple_fold(char32_t cp) noexcept
    {
        switch (cp) {
        case 0x2264: case 0x2266: case 0x2A7D: return "<=";
        case 0x2265: case 0x2267: case 0x2A7E: return ">=";
        case 0xFF1C: return "<";
        case 0xFF1D: return "=";
        case 0xFF1E: return ">";
        case 0x2212: case 0x2013: case 0xFE63: case 0xFF0D: return "-";
        case 0x2018: case 0x2019: case 0x2032: case 0x00B4: case 0x02BC: return "'";
        default: return {};
        }
    }

    char32_t cp_at(std::size_t k) const noexcept { return k < units_.size() ? units_[k].cp : 0; }

    bool ascii_word_at(std::size_t k, std::string_view word) const noexcept
    {
        for (std::size_t i = 0; i < word.size(); ++i) {
            char32_t c = cp_at(k + i);
            if (c >= 0x80 || ascii_lower(static_cast<char>(c)) != ascii_lower(word[i])) return false;
        }
        return true;
    }

    /// `<sup>2</sup>` in any letter case; returns its unit length or 0.
    std::size_t match_sup2(std::size_t k) const noexcept
    {
        return ascii_word_at(k, "<sup>2</sup>") ? 12 : 0;
    }

    /// Units consumed by a chi head and its optional squared mark, or 0.
    std::size_t match_chi(std::size_t k) const noexcept
    {
        std::size_t n = 0;
        if (is_chi_cp(cp_at(k))) {
            n = 1;
        } else if (ascii_word_at(k, "chi") && (k == 0 || !is_ascii_alpha_cp(cp_at(k - 1)))) {
            n = 3;
            for (std::string_view tail : {"-squared", "-square", " squared", " square", "squared", "square"}) {
                if (ascii_word_at(k + 3, tail) && !is_ascii_alpha_cp(cp_at(k + 3 + tail.size())))
                    return 3 + tail.size();
            }
            if (is_ascii_alpha_cp(cp_at(k + 3))) return 0;
        } else {
            return 0;
        }
        std::size_t j = k + n;
        if (cp_at(j) == 0x00B2) return n + 1;
        if (std::size_t s = match_sup2(j); s > 0) return n + s;
        if (ascii_word_at(j, "^{2}")) return n + 4;
        if (cp_at(j) == U'^' && cp_at(j + 1) == U'2') return n + 2;
        if (cp_at(j) == U'2') return n + 1;
        return n;
    }

    /// For a `[` that opens a degrees-of-freedom group directly after a label,
    /// the unit index of the matching `]`; 0 otherwise.
    std::size_t match_df_bracket(std::size_t k) const noexcept
    {
        if (out_.empty()) return 0;
        char prev = out_.back();
        if (!(is_ascii_alnum(prev) || prev == '\'')) return 0;
        bool digit = false;
        for (std::size_t j = k + 1; j < units_.size() && j - k <= 24; ++j) {
            char32_t c = units_[j].cp;
            if (c == U']') return digit ? j : 0;
            if (c >= 0x80 || !is_df_group_char(static_cast<char>(c))) return 0;
            digit = digit || is_ascii_digit(static_cast<char>(c));
        }
        return 0;
    }

    void emit(std::string_view bytes, std::size_t unit_begin, std::size_t unit_end)
    {
        std::size_t b = units_[unit_begin].begin;
        std::size_t e = units_[unit_end - 1].end;
        for (char c : bytes) {
            out_.push_back(c);
            src_.emplace_back(b, e);
        }
    }

    std::string_view in_;
    NormalizeOptions opts_;
    std::vector<Unit> units_;
    std::string out_;
    std::vector<std::pair<std::size_t, std::size_t>> src_;
};

/// Re-expresses `next` (whose ranges index into `prev.text`) against raw offsets.
inline NormalizedText compose(const NormalizedText& prev, std::string text,
                              const std::vector<std::pair<std::size_t, std::size_t>>& src)
{
    NormalizedText out;
    out.text = std::move(text);
    out.offset_map.resize(out.text.size());
    out.offset_end.resize(out.text.size());
    for (std::size_t i = 0; i < out.text.size(); ++i) {
        auto [b, e] = src[i];
        out.offset_map[i] = prev.offset_map[b];
        out.offset_end[i] = prev.offset_end[e - 1];
    }
    return out;
}

} // namespace detail

/// Canonicalizes raw text: decodes HTML/numeric entities, folds every chi
/// variant (with or without a squared mark) to `chi2`, superscript two and
/// `<sup>2</sup>` to `2`, less/greater-equal glyphs to `<=`/`>=`, square
/// brackets around degrees of freedom to parentheses, and collapses whitespace
/// runs to one space. The result is a fixpoint: normalizing it again is a no-op.
inline NormalizedText normalize_text(std::string_view raw, const NormalizeOptions& opts = {})
{
    NormalizedText cur = NormalizedText::identity(raw);
    for (int pass = 0; pass < 8; ++pass) {
        auto [text, src] = detail::FoldPass(cur.text, opts).run();
        if (text == cur.text) break;
        cur = detail::compose(cur, std::move(text), src);
    }
    return cur;
}

namespace detail {

constexpr std::size_t kRepairWindow = 40;

/// True when a p-clause head (`p` followed by a comparator) starts within `window` bytes after `pos`.
inline bool p_clause_follows(std::string_view text, std::size_t pos, std::size_t window)
{
    std::size_t stop = std::min(text.size(), pos + window);
    for (std::size_t i = pos; i < stop; ++i) {
        if ((text[i] == 'p' || text[i] == 'P') && is_label_boundary(text, i)) {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] == ' ') ++j;
            if (j < text.size() && (text[j] == '=' || text[j] == '<' || text[j] == '>')) return true;
        }
    }
    return false;
}

/// True when a recognized statistic label occurs within `window` bytes before `pos`.
inline bool stat_label_precedes(std::string_view text, std::size_t pos, std::size_t window)
{
    std::size_t start = pos > window ? pos - window : 0;
    for (std::size_t i = start; i < pos; ++i) {
        auto tok = scan_label(text, i);
        if (!tok || tok->end > pos) continue;
        if (classify_statistic(tok->head) != StatKind::Unknown || tok->head == "beta") return true;
    }
    return false;
}

} // namespace detail

/// Repairs the two operator artifacts left by PDF-to-text conversion, inside
/// candidate result windows only:
///   - a statistic head followed by a bare number gets the indeterminate
///     comparator: `t(12) 1.2` -> `t(12)<=>1.2`;
///   - a `5` standing in for `=` in a p-clause: `p 5 .34` -> `p=.34`.
inline NormalizedText repair_pdf_artifacts(const NormalizedText& in)
{
    const std::string_view text = in.text;
    std::string out;
    std::vector<std::pair<std::size_t, std::size_t>> src;
    out.reserve(text.size() + 8);
    src.reserve(text.size() + 8);
    auto copy = [&](std::size_t i) {
        out.push_back(text[i]);
        src.emplace_back(i, i + 1);
    };
    auto replace = [&](std::string_view with, std::size_t b, std::size_t e) {
        for (char c : with) {
            out.push_back(c);
            src.emplace_back(b, e);
        }
    };

    std::size_t i = 0;
    while (i < text.size()) {
        // p-side: `p 5 <number>`
        if ((text[i] == 'p' || text[i] == 'P') && detail::is_label_boundary(text, i) && i + 3 < text.size() &&
            text.substr(i + 1, 3) == " 5 " && detail::number_starts_at(text, i + 4) &&
            detail::stat_label_precedes(text, i, detail::kRepairWindow)) {
            copy(i);
            replace("=", i + 1, i + 4);
            i += 4;
            continue;
        }
        // statistic side: `<label>[(df)] <number>`
        if (auto tok = detail::scan_label(text, i); tok && !tok->plural) {
            StatKind kind = classify_statistic(tok->head);
            bool is_p = tok->head == "p" || tok->head == "P";
            if (kind != StatKind::Unknown && !is_p) {
                std::size_t j = tok->end;
                std::size_t df = detail::df_group_length(text, j);
                j += df;
                std::size_t k = j;
                while (k < text.size() && text[k] == ' ') ++k;
                if (k > j && detail::number_starts_at(text, k) &&
                    (df > 0 || detail::p_clause_follows(text, k, detail::kRepairWindow))) {
                    for (std::size_t m = i; m < j; ++m) copy(m);
                    replace("<=>", j, k);
                    i = k;
                    continue;
                }
            }
            for (std::size_t m = i; m < tok->end; ++m) copy(m);
            i = tok->end;
            continue;
        }
        copy(i);
        ++i;
    }
    if (out == in.text) return in;
    return detail::compose(in, std::move(out), src);
}

} // namespace statex

#endif
