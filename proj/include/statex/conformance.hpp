#ifndef STATEX_CONFORMANCE_HPP
#define STATEX_CONFORMANCE_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "pipeline.hpp"

namespace statex {

struct FieldDiff {
    std::string field;
    std::string expected;
    std::string actual;
};

struct CaseFailure {
    int id = 0;
    std::string input;
    bool lenient = false;
    std::vector<FieldDiff> diffs;
};

struct ConformanceReport {
    std::size_t cases = 0;
    std::size_t detected = 0;        // cases producing at least one result
    std::size_t p_clauses = 0;       // cases whose expected result carries a p-clause
    std::size_t p_detected = 0;      // of those, reported p extracted and matching
    std::size_t recalc_expected = 0; // non-lenient cases with a reference recalculated p
    std::size_t recalc_matches = 0;
    std::size_t strict_cases = 0;
    std::size_t strict_passed = 0;
    std::vector<CaseFailure> failures; // ordered by id; lenient cases included

    bool pass() const { return detected == cases && strict_passed == strict_cases; }
};

using Pipeline = std::function<DocumentAnalysis(std::string_view)>;

inline constexpr double kConformanceTolerance = 0.005;

namespace detail {

struct CaseOutcome {
    bool detected = false;
    bool p_expected = false;
    bool p_matched = false;
    bool recalc_expected = false;
    bool recalc_matched = false;
    std::vector<FieldDiff> diffs;
};

inline std::string show(const std::optional<double>& v)
{
    return v ? shortest(*v) : std::string("(absent)");
}

inline std::string show(const std::optional<Comparator>& c)
{
    return c ? std::string(to_string(*c)) : std::string("(absent)");
}

inline bool near(const std::optional<double>& want, const std::optional<double>& got)
{
    if (!want || !got) return want.has_value() == got.has_value();
    return std::fabs(*want - *got) <= kConformanceTolerance + 1e-12;
}

inline CaseOutcome evaluate_case(const CorpusCase& c, const DocumentAnalysis& doc)
{
    CaseOutcome o;
    const ExpectedResult& e = c.expected;
    o.p_expected = e.has_p_clause() && e.reported_p.has_value();
    o.recalc_expected = e.recalculated_p.has_value();
    if (doc.results.empty()) {
        o.diffs.push_back({"detected", "yes", "no"});
        return o;
    }
    o.detected = true;
    const Extraction& x = doc.results.front();
    const ParsedResult& r = x.result;
    auto num = [&](const char* field, const std::optional<double>& want, const std::optional<double>& got) {
        if (!near(want, got)) o.diffs.push_back({field, show(want), show(got)});
    };
    auto cmp = [&](const char* field, const std::optional<Comparator>& want, const std::optional<Comparator>& got) {
        if (want != got) o.diffs.push_back({field, show(want), show(got)});
    };

    if (e.kind != r.kind) o.diffs.push_back({"kind", std::string(to_string(e.kind)), std::string(to_string(r.kind))});
    if (e.stat_value) cmp("stat_comp", e.stat_comp, r.stat_comp);
    num("stat_value", e.stat_value, r.stat_value);
    num("df1", e.df1, r.df1);
    num("df2", e.df2, r.df2);
    num("d", e.d, r.d);
    num("beta", e.beta, r.beta);
    num("se_beta", e.se_beta, r.se_beta);
    num("r2", e.r2, r.r2);
    cmp("p_comp", e.p_comp, r.p_comp);
    num("reported_p", e.reported_p, r.reported_p);
    std::optional<double> recalc;
    if (x.recomputed) recalc = x.recomputed->value;
    num("recalculated_p", e.recalculated_p, recalc);

    o.p_matched = o.p_expected && near(e.reported_p, r.reported_p) && e.p_comp == r.p_comp;
    o.recalc_matched = o.recalc_expected && near(e.recalculated_p, recalc);
    return o;
}

inline std::size_t worker_count(std::size_t jobs)
{
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(n, jobs));
}

} // namespace detail

/// Runs every case through `pipeline` (in parallel) and scores it against the
/// expected fields. The report is ordered by case id.
inline ConformanceReport run_conformance(const Pipeline& pipeline, const std::vector<CorpusCase>& cases)
{
    std::vector<detail::CaseOutcome> outcomes(cases.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
            outcomes[i] = detail::evaluate_case(cases[i], pipeline(cases[i].input));
    };
    std::vector<std::thread> pool;
    const std::size_t workers = detail::worker_count(cases.size());
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    ConformanceReport rep;
    rep.cases = cases.size();
    std::vector<std::size_t> order(cases.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cases[a].id < cases[b].id; });
    for (std::size_t i : order) {
        const auto& c = cases[i];
        const auto& o = outcomes[i];
        rep.detected += o.detected;
        rep.p_clauses += c.expected.has_p_clause();
        rep.p_detected += o.p_matched;
        if (!c.lenient) {
            ++rep.strict_cases;
            rep.strict_passed += o.diffs.empty();
            rep.recalc_expected += o.recalc_expected;
            rep.recalc_matches += o.recalc_matched;
        }
        if (!o.diffs.empty()) rep.failures.push_back({c.id, c.input, c.lenient, o.diffs});
    }
    return rep;
}

inline ConformanceReport run_conformance(const Pipeline& pipeline)
{
    return run_conformance(pipeline, load_corpus());
}

/// The reference pipeline against the embedded corpus.
inline ConformanceReport run_conformance()
{
    return run_conformance([](std::string_view s) { return analyze_document(s); });
}

} // namespace statex

#endif
