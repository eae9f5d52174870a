#ifndef STATEX_EXTRACT_HPP
#define STATEX_EXTRACT_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "label.hpp"
#include "normalize.hpp"
#include "number.hpp"
#include "types.hpp"

namespace statex {

/// Character range of one result: [start, end) in the normalized text and
/// [raw_start, raw_end) in the raw input.
struct ResultSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t raw_start = 0;
    std::size_t raw_end = 0;

    friend bool operator==(const ResultSpan&, const ResultSpan&) = default;
};

/// [begin, end) in normalized text.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

/// Where each part of a result sits in the normalized text.
struct ResultLayout {
    std::optional<TokenSpan> label;
    std::optional<TokenSpan> df_group;
    std::optional<TokenSpan> stat_comp;
    std::optional<TokenSpan> stat_value;
    std::optional<TokenSpan> p_clause;
    std::optional<TokenSpan> p_comp;
    std::optional<TokenSpan> p_value;
};

struct RangeViolations {
    bool p_out_of_range = false;
    bool r_out_of_range = false;
    bool R2_out_of_range = false;

    bool any() const noexcept { return p_out_of_range || r_out_of_range || R2_out_of_range; }
    friend bool operator==(const RangeViolations&, const RangeViolations&) = default;
};

/// One extracted statistical report.
///
/// For `BetaSE` results `stat_value` holds the z estimate beta/SE. `Unknown`
/// results keep only their label and p-clause. `malformed` lists value tokens
/// that had no numeric prefix; the corresponding fields are absent.
struct ParsedResult {
    StatKind kind = StatKind::Unknown;
    std::string label;
    std::optional<Comparator> stat_comp;
    std::optional<double> stat_value;
    std::optional<double> df1;
    std::optional<double> df2;
    std::optional<double> d;
    std::optional<double> beta;
    std::optional<double> se_beta;
    std::optional<double> r2; // trailing or embedded R^2 companion
    std::optional<Comparator> p_comp;
    std::optional<double> reported_p;
    int reported_p_decimals = 0;
    bool plural = false;
    RangeViolations range_violations;
    std::vector<std::string> malformed;
    ResultSpan span;
    ResultLayout layout;

    /// Equality of the extracted values, ignoring position information.
    bool same_values(const ParsedResult& o) const
    {
        return kind == o.kind && label == o.label && stat_comp == o.stat_comp && stat_value == o.stat_value &&
               df1 == o.df1 && df2 == o.df2 && d == o.d && beta == o.beta && se_beta == o.se_beta && r2 == o.r2 &&
               p_comp == o.p_comp && reported_p == o.reported_p && reported_p_decimals == o.reported_p_decimals &&
               plural == o.plural && range_violations == o.range_violations;
    }
};

/// True for statistic families whose p-value depends on degrees of freedom.
constexpr bool takes_df(StatKind k) noexcept
{
    switch (k) {
    case StatKind::t:
    case StatKind::F:
    case StatKind::r:
    case StatKind::Chi2:
    case StatKind::Q:
    case StatKind::H:
    case StatKind::G2: return true;
    default: return false;
    }
}

namespace detail {

enum class ClauseRole { Stat, P, NotSig };

struct Clause {
    ClauseRole role = ClauseRole::Stat;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string label;
    bool plural = false;
    StatKind kind = StatKind::Unknown;
    TokenSpan label_span;
    std::optional<TokenSpan> df_group;
    Comparator comp = Comparator::Eq;
    TokenSpan comp_span;
    TokenSpan value_span;
};

inline bool is_p_label(std::string_view head) { return head == "p" || head == "P" || head == "ps"; }

inline bool is_beta_label(std::string_view head)
{
    return head == "beta" || head == "Beta" || head == "BETA" || head == "b" || head == "B";
}

inline bool is_se_label(std::string_view head) { return head == "SE" || head == "se" || head == "SEb"; }

/// Reads a comparator at `pos`; returns its length (0 if none).
inline std::size_t scan_comparator(std::string_view text, std::size_t pos, Comparator& out)
{
    auto at = [&](std::string_view s) { return text.substr(pos, s.size()) == s; };
    if (at("<=>")) { out = Comparator::Indeterminate; return 3; }
    if (at("<=") || at("=<")) { out = Comparator::Le; return 2; }
    if (at(">=") || at("=>")) { out = Comparator::Ge; return 2; }
    if (at("=")) { out = Comparator::Eq; return 1; }
    if (at("<")) { out = Comparator::Lt; return 1; }
    if (at(">")) { out = Comparator::Gt; return 1; }
    return 0;
}

constexpr bool ends_value_token(char c) noexcept
{
    return c == ' ' || c == ',' || c == ';' || c == ')' || c == ']' || c == '(' || c == ':';
}

/// `n.s.`, `n. s.`, `ns` (any case) at a label boundary.
inline std::optional<Clause> scan_not_significant(std::string_view text, std::size_t pos)
{
    if (!is_label_boundary(text, pos) || (text[pos] != 'n' && text[pos] != 'N')) return std::nullopt;
    for (std::string_view form : {"n. s.", "n.s.", "n. s", "n.s", "ns"}) {
        if (!istarts_with(text.substr(pos), form)) continue;
        std::size_t end = pos + form.size();
        if (end < text.size() && is_ascii_alnum(text[end])) continue;
        Clause c;
        c.role = ClauseRole::NotSig;
        c.begin = pos;
        c.end = end;
        c.comp = Comparator::NotSignificant;
        c.comp_span = {pos, end};
        return c;
    }
    return std::nullopt;
}

/// Reads one `label [index] [(df)] comparator value` clause starting at `pos`.
inline std::optional<Clause> scan_clause(std::string_view text, std::size_t pos)
{
    if (auto ns = scan_not_significant(text, pos)) return ns;
    auto tok = scan_label(text, pos);
    if (!tok) return std::nullopt;

    Clause c;
    c.begin = pos;
    c.label = tok->head;
    c.plural = tok->plural;
    c.label_span = {tok->begin, tok->end};
    std::size_t j = tok->end;
    const bool p_head = is_p_label(tok->head);

    if (p_head) {
        if (istarts_with(text.substr(j), "-value") || istarts_with(text.substr(j), " value")) j += 6;
    } else if (classify_statistic(tok->head) != StatKind::Unknown && j < text.size() &&
               (text[j] == ' ' || text[j] == '_')) {
        // indexed statistic: `t index(12)`, `t_within(12)`
        std::size_t k = j + 1;
        while (k < text.size() && (is_ascii_alnum(text[k]) || text[k] == '_')) ++k;
        std::size_t m = (k < text.size() && text[k] == ' ') ? k + 1 : k;
        if (k > j + 1 && df_group_length(text, m) > 0) j = m;
    }

    std::size_t df_at = (j < text.size() && text[j] == ' ') ? j + 1 : j;
    if (std::size_t n = df_group_length(text, df_at); n > 0) {
        c.df_group = TokenSpan{df_at, df_at + n};
        j = df_at + n;
    }
    c.role = (p_head && !c.df_group) ? ClauseRole::P : ClauseRole::Stat;
    c.kind = c.role == ClauseRole::Stat ? classify_statistic(tok->head) : StatKind::POnly;

    while (j < text.size() && text[j] == ' ') ++j;
    std::size_t cl = scan_comparator(text, j, c.comp);
    if (cl == 0) return std::nullopt;
    c.comp_span = {j, j + cl};
    j += cl;
    while (j < text.size() && text[j] == ' ') ++j;

    std::size_t v = j;
    while (v < text.size() && !ends_value_token(text[v])) ++v;
    while (v > j && text[v - 1] == '.') --v;
    bool digit = false;
    for (std::size_t i = j; i < v; ++i) digit = digit || is_ascii_digit(text[i]);
    if (!digit) return std::nullopt;
    c.value_span = {j, v};
    c.end = v;
    return c;
}

inline std::vector<Clause> scan_clauses(std::string_view text, std::size_t lo, std::size_t hi)
{
    std::string_view bounded = text.substr(0, hi);
    std::vector<Clause> out;
    std::size_t pos = lo;
    while (pos < bounded.size()) {
        if (auto c = scan_clause(bounded, pos)) {
            pos = c->end;
            out.push_back(std::move(*c));
        } else {
            ++pos;
        }
    }
    return out;
}

constexpr std::size_t kMaxSeparator = 4;

inline bool is_separator_gap(std::string_view text, std::size_t a, std::size_t b)
{
    if (b < a || b - a > kMaxSeparator) return false;
    for (std::size_t i = a; i < b; ++i) {
        char c = text[i];
        if (c != ' ' && c != ',' && c != ';' && c != ':' && c != '(') return false;
    }
    return true;
}

struct Group {
    std::optional<Clause> head;
    std::optional<Clause> beta;
    std::optional<Clause> se;
    std::optional<Clause> p;
    std::vector<Clause> companions;
    std::size_t begin = 0;
    std::size_t end = 0;

    void extend(const Clause& c) { end = c.end; }
    StatKind head_kind() const { return head ? head->kind : StatKind::Unknown; }
};

/// Groups clauses into results. A statistic or beta clause opens a result;
/// companions (`d=`, `df=`, `SE=`, other unlabelled values, an `R2=`
/// alongside another statistic) attach to the open result; a p-clause closes
/// it. A second statistic label, or a gap that is not a separator, closes the
/// open result early.
inline std::vector<Group> group_clauses(std::string_view text, const std::vector<Clause>& clauses)
{
    std::vector<Group> groups;
    std::optional<Group> cur;
    std::optional<std::size_t> last_closed;

    auto close = [&]() {
        if (!cur) return;
        groups.push_back(std::move(*cur));
        last_closed = groups.size() - 1;
        cur.reset();
    };
    auto contiguous_next = [&](std::size_t idx, std::size_t from) -> const Clause* {
        if (idx + 1 >= clauses.size()) return nullptr;
        const Clause& n = clauses[idx + 1];
        return is_separator_gap(text, from, n.begin) ? &n : nullptr;
    };

    for (std::size_t idx = 0; idx < clauses.size(); ++idx) {
        const Clause& c = clauses[idx];
        if (cur && !is_separator_gap(text, cur->end, c.begin)) close();

        if (c.role != ClauseRole::Stat) {
            if (cur && !cur->p) {
                cur->p = c;
                cur->extend(c);
                close();
            } else if (c.role == ClauseRole::P) {
                close();
                Group g;
                g.p = c;
                g.begin = c.begin;
                g.end = c.end;
                cur = std::move(g);
                close();
            }
            continue;
        }

        const std::string& lbl = c.label;
        const bool bare = !c.df_group;
        if (cur) {
            if (is_se_label(lbl) && bare && cur->beta && !cur->se) {
                cur->se = c;
                cur->extend(c);
                continue;
            }
            const bool other_stat = cur->head || cur->beta;
            if (other_stat && bare && c.kind == StatKind::R2 && cur->head_kind() != StatKind::R2) {
                cur->companions.push_back(c);
                cur->extend(c);
                continue;
            }
            if (other_stat && bare && c.kind == StatKind::Unknown && !is_beta_label(lbl)) {
                cur->companions.push_back(c);
                cur->extend(c);
                continue;
            }
            close();
        } else if (bare && c.kind == StatKind::R2 && last_closed) {
            Group& prev = groups[*last_closed];
            const Clause* next = contiguous_next(idx, c.end);
            bool has_r2 = false;
            for (const auto& comp : prev.companions) has_r2 = has_r2 || comp.kind == StatKind::R2;
            if (prev.end <= c.begin && is_separator_gap(text, prev.end, c.begin) && prev.head &&
                prev.head_kind() != StatKind::R2 && prev.head_kind() != StatKind::Unknown && !has_r2 &&
                !(next && next->role != ClauseRole::Stat)) {
                prev.companions.push_back(c);
                prev.extend(c);
                continue;
            }
        }

        Group g;
        g.begin = c.begin;
        g.end = c.end;
        const Clause* next = contiguous_next(idx, c.end);
        bool beta_head = bare && (lbl == "beta" || lbl == "Beta" || lbl == "BETA" ||
                                  (is_beta_label(lbl) && next && is_se_label(next->label)));
        if (beta_head)
            g.beta = c;
        else
            g.head = c;
        cur = std::move(g);
    }
    close();
    return groups;
}

inline std::string_view slice(std::string_view text, TokenSpan s) { return text.substr(s.begin, s.end - s.begin); }

inline std::optional<double> read_value(std::string_view text, const Clause& c, ParsedResult& r,
                                        int* decimals = nullptr)
{
    std::string_view tok = slice(text, c.value_span);
    try {
        auto n = parse_number_prefix(tok);
        if (decimals) *decimals = n.decimals;
        return n.value;
    } catch (const MalformedNumber&) {
        r.malformed.emplace_back(tok);
        return std::nullopt;
    }
}

inline std::optional<ParsedResult> assemble(const NormalizedText& nt, const Group& g)
{
    std::string_view text = nt.text;
    ParsedResult r;

    if (g.head) {
        const Clause& h = *g.head;
        r.kind = h.kind;
        // a bare x/X is only chi-square when it carries a df group
        if (r.kind == StatKind::Chi2 && h.label.front() != 'c' && !h.df_group) r.kind = StatKind::Unknown;
        r.label = h.label;
        r.plural = h.plural;
        r.layout.label = h.label_span;
        if (r.kind != StatKind::Unknown) {
            r.stat_comp = h.comp;
            r.stat_value = read_value(text, h, r);
            r.layout.stat_comp = h.comp_span;
            r.layout.stat_value = h.value_span;
            if (h.df_group && takes_df(r.kind)) {
                r.layout.df_group = h.df_group;
                try {
                    auto df = parse_df(slice(text, *h.df_group), r.kind == StatKind::F);
                    r.df1 = df.df1;
                    r.df2 = df.df2;
                } catch (const MalformedNumber&) {
                    r.malformed.emplace_back(slice(text, *h.df_group));
                }
            }
        }
    } else if (g.beta) {
        r.label = g.beta->label;
        r.layout.label = g.beta->label_span;
        r.beta = read_value(text, *g.beta, r);
        if (g.se) {
            auto se = read_value(text, *g.se, r);
            if (se && *se > 0.0) r.se_beta = se;
        }
        if (r.beta && r.se_beta) {
            r.kind = StatKind::BetaSE;
            r.stat_comp = g.beta->comp;
            r.stat_value = *r.beta / *r.se_beta;
            r.layout.stat_comp = g.beta->comp_span;
            r.layout.stat_value = g.beta->value_span;
        } else {
            r.kind = StatKind::Unknown;
        }
    } else {
        r.kind = StatKind::POnly;
    }

    for (const Clause& c : g.companions) {
        r.plural = r.plural || c.plural;
        if (c.kind == StatKind::R2) {
            r.r2 = read_value(text, c, r);
        } else if (c.label == "d") {
            r.d = read_value(text, c, r);
        } else if (c.label == "df") {
            auto v = read_value(text, c, r);
            if (v && !r.df1 && takes_df(r.kind) && *v >= 0.0) {
                r.df1 = v;
                r.layout.df_group = c.value_span;
            }
        }
    }

    if (g.p) {
        const Clause& p = *g.p;
        r.plural = r.plural || p.plural;
        r.p_comp = p.comp;
        r.layout.p_clause = TokenSpan{p.begin, p.end};
        r.layout.p_comp = p.comp_span;
        if (p.role == ClauseRole::P) {
            r.layout.p_value = p.value_span;
            int decimals = 0;
            r.reported_p = read_value(text, p, r, &decimals);
            if (r.reported_p) r.reported_p_decimals = decimals;
        }
    }

    if (r.reported_p && (*r.reported_p > 1.0 || *r.reported_p < 0.0)) r.range_violations.p_out_of_range = true;
    if (r.kind == StatKind::r && r.stat_value && std::fabs(*r.stat_value) > 1.0)
        r.range_violations.r_out_of_range = true;
    if (r.kind == StatKind::R2 && r.stat_value && (*r.stat_value > 1.0 || *r.stat_value < 0.0))
        r.range_violations.R2_out_of_range = true;
    if (r.r2 && (*r.r2 > 1.0 || *r.r2 < 0.0)) r.range_violations.R2_out_of_range = true;

    if (!r.stat_value && !r.reported_p) return std::nullopt;

    r.span.start = g.begin;
    r.span.end = g.end;
    auto [rb, re] = nt.raw_range(g.begin, g.end);
    r.span.raw_start = rb;
    r.span.raw_end = re;
    return r;
}

inline std::vector<ParsedResult> extract_range(const NormalizedText& text, std::size_t lo, std::size_t hi)
{
    auto clauses = scan_clauses(text.text, lo, hi);
    auto groups = group_clauses(text.text, clauses);
    std::vector<ParsedResult> out;
    for (const auto& g : groups)
        if (auto r = assemble(text, g)) out.push_back(std::move(*r));
    return out;
}

} // namespace detail

/// Non-overlapping result spans, left to right.
inline std::vector<ResultSpan> find_result_spans(const NormalizedText& text)
{
    std::vector<ResultSpan> spans;
    for (const auto& r : detail::extract_range(text, 0, text.text.size())) spans.push_back(r.span);
    return spans;
}

/// Parses the result inside a span produced by find_result_spans.
inline ParsedResult parse_result(const ResultSpan& span, const NormalizedText& text)
{
    if (span.start >= span.end || span.end > text.text.size())
        throw std::invalid_argument("parse_result: span outside text");
    auto found = detail::extract_range(text, span.start, span.end);
    if (found.empty()) throw std::invalid_argument("parse_result: no result inside span");
    return std::move(found.front());
}

/// All results of a normalized document, in text order.
inline std::vector<ParsedResult> extract_results(const NormalizedText& text)
{
    return detail::extract_range(text, 0, text.text.size());
}

namespace detail {

inline std::string shortest(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline std::string fixed(double v, int decimals)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return std::string(buf, ptr);
}

// p as written with its decimals; falls back to a small exact fraction when
// the fixed form would not read back as the same double (e.g. "4/53").
inline std::string p_text(double v, int decimals)
{
    std::string s = fixed(v, decimals);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    if (back == v) return s;
    for (int q = 2; q <= 10000; ++q) {
        double n = std::round(v * q);
        if (n / q == v) return shortest(n) + "/" + std::to_string(q);
    }
    return shortest(v);
}

} // namespace detail

/// Canonical text form of a result; re-parsing it reproduces the same values.
inline std::string render(const ParsedResult& r)
{
    std::string out;
    auto comp = [](std::optional<Comparator> c) { return std::string(to_string(c.value_or(Comparator::Eq))); };
    auto plural = [&] { return r.plural ? std::string("'s") : std::string(); };

    if (r.kind == StatKind::BetaSE) {
        out = r.label + comp(r.stat_comp) + detail::shortest(*r.beta) + ", SE=" + detail::shortest(*r.se_beta);
    } else if (r.kind == StatKind::Unknown && !r.label.empty()) {
        out = r.label + plural() + "=" + (r.beta ? detail::shortest(*r.beta) : std::string("0"));
    } else if (r.kind != StatKind::POnly && r.kind != StatKind::Unknown) {
        out = r.label + plural();
        if (r.df1) {
            out += "(" + detail::shortest(*r.df1);
            if (r.df2) out += "," + detail::shortest(*r.df2);
            out += ")";
        }
        out += comp(r.stat_comp);
        if (r.stat_value) out += detail::shortest(*r.stat_value);
    }
    if (r.d) out += ", d=" + detail::shortest(*r.d);
    if (r.r2 && !r.p_comp) out += ", R2=" + detail::shortest(*r.r2);
    if (r.p_comp) {
        if (!out.empty()) out += ", ";
        if (*r.p_comp == Comparator::NotSignificant) {
            out += "n.s.";
        } else {
            out += std::string("p") + (r.kind == StatKind::POnly ? plural() : std::string()) + comp(r.p_comp);
            if (r.reported_p) out += detail::p_text(*r.reported_p, r.reported_p_decimals);
        }
    }
    if (r.r2 && r.p_comp) out += ", R2=" + detail::shortest(*r.r2);
    return out;
}

} // namespace statex

#endif
