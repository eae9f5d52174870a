#ifndef STATEX_CHECK_HPP
#define STATEX_CHECK_HPP

#include <cmath>
#include <optional>
#include <string_view>

#include "extract.hpp"
#include "normalize.hpp"
#include "stats.hpp"
#include "types.hpp"

namespace statex {

struct CheckOptions {
    double alpha = 0.05;
    bool one_tailed_txt = false;    // accept p/2 when the document mentions one-sided testing
    bool assume_one_tailed = false; // always use p/2 for sign-symmetric statistics
};

struct Verdict {
    std::optional<RecomputedP> recomputed;
    std::optional<bool> error;
    std::optional<bool> decision_error;
    bool one_tailed_in_txt = false;
};

/// Whether the document mentions one-sided testing: "one-sided", "one-tailed"
/// or "directional", in any case, joined by hyphen, space or nothing.
/// "non-directional" and "bidirectional" do not count.
inline bool detect_one_tailed_text(const NormalizedText& document)
{
    std::string_view t = document.text;
    auto lower = [&](std::size_t i) { return detail::ascii_lower(t[i]); };
    auto word_at = [&](std::size_t i, std::string_view w) {
        if (i + w.size() > t.size()) return false;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (lower(i + k) != w[k]) return false;
        return true;
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (word_at(i, "one") && (i == 0 || !detail::is_ascii_alpha(t[i - 1]))) {
            std::size_t j = i + 3;
            if (j < t.size() && (t[j] == '-' || t[j] == ' ')) ++j;
            if (word_at(j, "sided") || word_at(j, "tailed")) return true;
        }
        if (word_at(i, "directional")) {
            bool prefixed = i > 0 && detail::is_ascii_alpha(t[i - 1]);
            if (!prefixed && i >= 4) {
                std::size_t k = i - 4;
                prefixed = word_at(k, "non-") || word_at(k, "non ");
            }
            if (!prefixed) return true;
        }
    }
    return false;
}

namespace detail {

/// Reported p-clause consistent with a computed p? Equality is judged at the
/// reported precision, boundary inclusive.
inline bool consistent(double computed, Comparator comp, double reported, int decimals, double alpha)
{
    switch (comp) {
    case Comparator::Eq: {
        const double half_unit = 0.5 * std::pow(10.0, -decimals);
        return std::fabs(computed - reported) <= half_unit * (1.0 + 1e-9);
    }
    case Comparator::Lt: return computed < reported;
    case Comparator::Gt: return computed > reported;
    case Comparator::Le: return computed <= reported;
    case Comparator::Ge: return computed >= reported;
    case Comparator::NotSignificant: return computed > alpha;
    case Comparator::Indeterminate: return true;
    }
    return true;
}

/// Significance claimed by the p-clause, when the clause determines it.
inline std::optional<bool> reported_significant(Comparator comp, std::optional<double> reported, double alpha)
{
    switch (comp) {
    case Comparator::NotSignificant: return false;
    case Comparator::Eq: return *reported <= alpha;
    case Comparator::Lt:
    case Comparator::Le:
        if (*reported <= alpha) return true;
        return std::nullopt;
    case Comparator::Gt:
    case Comparator::Ge:
        if (*reported >= alpha) return false;
        return std::nullopt;
    case Comparator::Indeterminate: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace detail

/// Compares a result's p-clause with its recomputed p.
///
/// `recomputed` is the two-tailed value from recompute_p. `one_tailed_in_txt`
/// is the document-level detect_one_tailed_text flag. `error` and
/// `decision_error` stay empty when the clause cannot be checked (no
/// recomputation, no p-clause, unreadable p, or the `<=>` comparator).
inline Verdict check_consistency(const ParsedResult& result, const std::optional<RecomputedP>& recomputed,
                                 const CheckOptions& opts, bool one_tailed_in_txt = false)
{
    Verdict v;
    v.one_tailed_in_txt = one_tailed_in_txt;
    v.recomputed = recomputed;
    if (!recomputed || !result.p_comp) return v;
    const Comparator comp = *result.p_comp;
    if (comp == Comparator::Indeterminate) return v;
    if (comp != Comparator::NotSignificant && !result.reported_p) return v;

    const double reported = result.reported_p.value_or(0.0);
    const int decimals = result.reported_p_decimals;
    const bool symmetric = is_sign_symmetric(recomputed->method);

    double computed = recomputed->value;
    if (opts.assume_one_tailed && symmetric && recomputed->tails == TailMode::two_tailed) {
        computed /= 2.0;
        v.recomputed->value = computed;
        v.recomputed->tails = TailMode::one_tailed;
    }

    bool error = !detail::consistent(computed, comp, reported, decimals, opts.alpha);
    if (error && opts.one_tailed_txt && one_tailed_in_txt && symmetric && !opts.assume_one_tailed &&
        detail::consistent(computed / 2.0, comp, reported, decimals, opts.alpha))
        error = false;

    v.error = error;
    bool decision_error = false;
    if (error) {
        auto claimed = detail::reported_significant(comp, result.reported_p, opts.alpha);
        decision_error = claimed && *claimed != (computed <= opts.alpha);
    }
    v.decision_error = decision_error;
    return v;
}

} // namespace statex

#endif
