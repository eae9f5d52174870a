#ifndef STATEX_MUTATE_HPP
#define STATEX_MUTATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "extract.hpp"
#include "normalize.hpp"
#include "types.hpp"

namespace statex {

enum class MutationKind { digit_substitute, digit_omit, digit_add, swap_stat_p, separator_corrupt, operator_corrupt };

/// Which part of the result a mutation may touch.
enum class MutationTarget { any, statistic, p_value };

struct Mutation {
    MutationKind kind = MutationKind::digit_substitute;
    std::uint64_t seed = 0;
    MutationTarget target = MutationTarget::any;
};

inline constexpr std::array<MutationKind, 6> kAllMutationKinds = {
    MutationKind::digit_substitute, MutationKind::digit_omit,        MutationKind::digit_add,
    MutationKind::swap_stat_p,      MutationKind::separator_corrupt, MutationKind::operator_corrupt};

constexpr std::string_view to_string(MutationKind k) noexcept
{
    switch (k) {
    case MutationKind::digit_substitute: return "digit_substitute";
    case MutationKind::digit_omit: return "digit_omit";
    case MutationKind::digit_add: return "digit_add";
    case MutationKind::swap_stat_p: return "swap_stat_p";
    case MutationKind::separator_corrupt: return "separator_corrupt";
    case MutationKind::operator_corrupt: return "operator_corrupt";
    }
    return "digit_substitute";
}

namespace detail {

struct RawSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct MutationSites {
    std::optional<RawSpan> stat_comp;
    std::optional<RawSpan> stat_value;
    std::optional<RawSpan> p_comp;
    std::optional<RawSpan> p_value;
    std::optional<RawSpan> separator; // between the statistic value and the p-clause
};

inline MutationSites mutation_sites(std::string_view input)
{
    NormalizedText nt = repair_pdf_artifacts(normalize_text(input));
    auto results = extract_results(nt);
    if (results.empty()) throw NotMutable("input has no result");
    const ResultLayout& L = results.front().layout;
    auto raw = [&](const std::optional<TokenSpan>& s) -> std::optional<RawSpan> {
        if (!s || s->begin >= s->end) return std::nullopt;
        auto [b, e] = nt.raw_range(s->begin, s->end);
        if (b >= e || e > input.size()) return std::nullopt;
        return RawSpan{b, e};
    };
    MutationSites m;
    m.stat_comp = raw(L.stat_comp);
    m.stat_value = raw(L.stat_value);
    m.p_comp = raw(L.p_comp);
    m.p_value = raw(L.p_value);
    if (m.stat_value && L.p_clause) {
        auto pc = raw(L.p_clause);
        if (pc && pc->begin > m.stat_value->end) m.separator = RawSpan{m.stat_value->end, pc->begin};
    }
    return m;
}

inline std::vector<std::size_t> digit_positions(std::string_view s, std::optional<RawSpan> span)
{
    std::vector<std::size_t> out;
    if (!span) return out;
    for (std::size_t i = span->begin; i < span->end; ++i)
        if (is_ascii_digit(s[i])) out.push_back(i);
    return out;
}

template <std::size_t N, class Pick>
std::string_view pick_other(const std::array<std::string_view, N>& options, std::string_view current, Pick&& pick)
{
    std::vector<std::string_view> others;
    for (auto o : options)
        if (o != current) others.push_back(o);
    return others[pick(others.size())];
}

} // namespace detail

/// Applies one seeded single-edit mutation to the first result in `input`.
///
/// Digit edits touch the statistic value and/or the reported p value,
/// swap_stat_p exchanges the two value tokens, separator_corrupt rewrites the
/// gap before the p-clause and operator_corrupt replaces a comparator.
/// Throws NotMutable when the input lacks the element the kind requires.
inline std::string mutate(std::string_view input, const Mutation& m)
{
    const auto sites = detail::mutation_sites(input);
    std::mt19937_64 rng(m.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(m.kind));
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    const bool want_stat = m.target != MutationTarget::p_value;
    const bool want_p = m.target != MutationTarget::statistic;
    std::string out(input);

    switch (m.kind) {
    case MutationKind::digit_substitute:
    case MutationKind::digit_omit:
    case MutationKind::digit_add: {
        std::vector<std::size_t> digits;
        if (want_stat) digits = detail::digit_positions(input, sites.stat_value);
        if (want_p) {
            auto more = detail::digit_positions(input, sites.p_value);
            digits.insert(digits.end(), more.begin(), more.end());
        }
        if (digits.empty()) throw NotMutable(std::string(to_string(m.kind)) + ": no digit to edit");
        const std::size_t at = digits[pick(digits.size())];
        if (m.kind == MutationKind::digit_substitute) {
            int d = out[at] - '0';
            out[at] = static_cast<char>('0' + (d + 1 + static_cast<int>(pick(9))) % 10);
        } else if (m.kind == MutationKind::digit_omit) {
            out.erase(at, 1);
        } else {
            const std::size_t where = at + pick(2);
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(where), static_cast<char>('0' + pick(10)));
        }
        return out;
    }
    case MutationKind::swap_stat_p: {
        if (!sites.stat_value || !sites.p_value) throw NotMutable("swap_stat_p: needs a statistic and a p value");
        auto a = *sites.stat_value;
        auto b = *sites.p_value;
        if (a.begin > b.begin) std::swap(a, b);
        std::string first(input.substr(a.begin, a.end - a.begin));
        std::string second(input.substr(b.begin, b.end - b.begin));
        out.replace(b.begin, b.end - b.begin, first);
        out.replace(a.begin, a.end - a.begin, second);
        return out;
    }
    case MutationKind::separator_corrupt: {
        if (!sites.separator) throw NotMutable("separator_corrupt: needs a statistic followed by a p-clause");
        static constexpr std::array<std::string_view, 6> kSeparators = {"", " ", ";", ", ,", ",  ", " . "};
        std::string_view current = input.substr(sites.separator->begin, sites.separator->end - sites.separator->begin);
        std::string_view with = detail::pick_other(kSeparators, current, pick);
        out.replace(sites.separator->begin, sites.separator->end - sites.separator->begin, with);
        return out;
    }
    case MutationKind::operator_corrupt: {
        std::vector<detail::RawSpan> ops;
        if (want_stat && sites.stat_comp) ops.push_back(*sites.stat_comp);
        if (want_p && sites.p_comp) ops.push_back(*sites.p_comp);
        if (ops.empty()) throw NotMutable("operator_corrupt: no comparator");
        const auto op = ops[pick(ops.size())];
        static constexpr std::array<std::string_view, 7> kOperators = {"=", "<", ">", "<=", ">=", " 5 ", " "};
        std::string_view current = input.substr(op.begin, op.end - op.begin);
        std::string_view with = detail::pick_other(kOperators, current, pick);
        out.replace(op.begin, op.end - op.begin, with);
        return out;
    }
    }
    return out;
}

} // namespace statex

#endif
