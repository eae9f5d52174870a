#ifndef STATEX_PIPELINE_HPP
#define STATEX_PIPELINE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "check.hpp"
#include "extract.hpp"
#include "normalize.hpp"
#include "stats.hpp"

namespace statex {

struct PipelineOptions {
    NormalizeOptions normalize;
    bool repair = true;
    CheckOptions check;
};

/// One result with its recomputation and verdict.
struct Extraction {
    ParsedResult result;
    std::optional<RecomputedP> recomputed;
    Verdict verdict;
    std::string raw; // matched substring of the raw input
};

struct DocumentAnalysis {
    NormalizedText text;
    bool one_tailed_in_txt = false;
    std::vector<Extraction> results;
};

/// normalize -> repair -> extract -> recompute -> check, for one document.
inline DocumentAnalysis analyze_document(std::string_view raw, const PipelineOptions& opts = {})
{
    DocumentAnalysis doc;
    doc.text = normalize_text(raw, opts.normalize);
    if (opts.repair) doc.text = repair_pdf_artifacts(doc.text);
    doc.one_tailed_in_txt = detect_one_tailed_text(doc.text);
    for (auto& r : extract_results(doc.text)) {
        Extraction e;
        e.recomputed = recompute_p(r);
        e.verdict = check_consistency(r, e.recomputed, opts.check, doc.one_tailed_in_txt);
        std::size_t rb = std::min(r.span.raw_start, raw.size());
        std::size_t re = std::min(std::max(r.span.raw_end, rb), raw.size());
        e.raw = std::string(raw.substr(rb, re - rb));
        e.result = std::move(r);
        doc.results.push_back(std::move(e));
    }
    return doc;
}

} // namespace statex

#endif
