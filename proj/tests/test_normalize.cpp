#include <gtest/gtest.h>

#include <random>
#include <string>

#include "statex/corpus.hpp"
#include "statex/extract.hpp"
#include "statex/mutate.hpp"
#include "statex/normalize.hpp"

using namespace statex;

namespace {

std::string norm(std::string_view s) { return normalize_text(s).text; }

std::string repaired(std::string_view s) { return repair_pdf_artifacts(normalize_text(s)).text; }

void expect_offset_map_valid(const NormalizedText& nt, std::size_t raw_size)
{
    ASSERT_EQ(nt.offset_map.size(), nt.text.size());
    for (std::size_t i = 0; i < nt.offset_map.size(); ++i) {
        EXPECT_LT(nt.offset_map[i], raw_size);
        if (i) { EXPECT_LE(nt.offset_map[i - 1], nt.offset_map[i]); }
    }
}

// Raw text as a reader sees it: superscript markup removed.
std::string visible(std::string s)
{
    for (std::string_view tag : {"<sup>", "</sup>"})
        for (auto p = s.find(tag); p != std::string::npos; p = s.find(tag)) s.erase(p, tag.size());
    return s;
}

std::size_t count_of(std::string_view s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

std::vector<std::string> mutated_corpus(std::size_t n)
{
    auto cases = load_corpus();
    std::vector<std::string> out;
    std::mt19937_64 rng(7);
    while (out.size() < n) {
        const auto& c = cases[rng() % cases.size()];
        Mutation m{kAllMutationKinds[rng() % kAllMutationKinds.size()], rng()};
        try {
            out.push_back(mutate(c.input, m));
        } catch (const NotMutable&) {
        }
    }
    return out;
}

} // namespace

TEST(Normalize, ChiVariantsFoldToChi2)
{
    EXPECT_EQ(norm("χ²(12)=3.4, p<.05"), "chi2(12)=3.4, p<.05");
    EXPECT_EQ(norm("χ^2(12)=3.4, p<.05"), "chi2(12)=3.4, p<.05");
    EXPECT_EQ(norm("χ2(12)=3.4, p<.05"), "chi2(12)=3.4, p<.05");
    EXPECT_EQ(norm("Chi^2(12)=3.4, p<.05"), "chi2(12)=3.4, p<.05");
    EXPECT_EQ(norm("chi2(12)=3.4, p<.05"), "chi2(12)=3.4, p<.05");
    EXPECT_EQ(norm("χ<sup>2</sup>(12)=3.4, p<.05"), "chi2(12)=3.4, p<.05");
    EXPECT_EQ(norm("Χ²(3)=1"), "chi2(3)=1");
    EXPECT_EQ(norm("𝜒²(3)=1"), "chi2(3)=1");
    EXPECT_EQ(norm("𝛘2(3)=1"), "chi2(3)=1");
}

TEST(Normalize, EntitiesDecodeBeforeFolding)
{
    EXPECT_EQ(norm("&#967;&#178;(12)=3.4"), "chi2(12)=3.4");
    EXPECT_EQ(norm("&#x3C7;&sup2;(12)=3.4"), "chi2(12)=3.4");
    EXPECT_EQ(norm("&chi;<sup>2</sup>(2)=1, p&lt;.05"), "chi2(2)=1, p<.05");
    EXPECT_EQ(norm("p&le;.05"), "p<=.05");
}

TEST(Normalize, WhitespaceBracketsAndRelations)
{
    EXPECT_EQ(norm("t(12)=1.2,  p<.05"), "t(12)=1.2, p<.05");
    EXPECT_EQ(norm("t(12)=1.2,\t\n p<.05"), "t(12)=1.2, p<.05");
    EXPECT_EQ(norm("t[12]=1.2, p<.05"), "t(12)=1.2, p<.05");
    EXPECT_EQ(norm("t(12)≤1.2, p≥.05"), "t(12)<=1.2, p>=.05");
    EXPECT_EQ(norm("t(12) = −2.1"), "t(12) = -2.1");
}

TEST(Normalize, IdentityOnCanonicalInput)
{
    EXPECT_EQ(norm("plain ascii text"), "plain ascii text");
    EXPECT_EQ(norm(""), "");
    // brackets that are not a df group stay
    EXPECT_EQ(norm("see [12] for details"), "see [12] for details");
}

TEST(Normalize, InvalidUtf8PassesThrough)
{
    std::string raw = "t(12)=2.3\xff, p<.05";
    auto nt = normalize_text(raw);
    EXPECT_EQ(nt.text, raw);
    expect_offset_map_valid(nt, raw.size());
}

TEST(Normalize, OffsetMapIsTotalAndMonotone)
{
    for (const auto& c : load_corpus()) {
        auto nt = normalize_text(c.input);
        expect_offset_map_valid(nt, c.input.size());
    }
}

TEST(Normalize, RawSpanRecoveryContainsLabel)
{
    for (const auto& c : load_corpus()) {
        auto nt = repair_pdf_artifacts(normalize_text(c.input));
        auto results = extract_results(nt);
        ASSERT_FALSE(results.empty()) << c.input;
        const auto& r = results.front();
        ASSERT_LE(r.span.raw_end, c.input.size());
        std::string raw = c.input.substr(r.span.raw_start, r.span.raw_end - r.span.raw_start);
        EXPECT_NE(c.input.find(raw), std::string::npos);
        if (r.layout.label) {
            auto [lb, le] = nt.raw_range(r.layout.label->begin, r.layout.label->end);
            EXPECT_GE(lb, r.span.raw_start) << c.id;
            EXPECT_LE(le, r.span.raw_end) << c.id;
        }
        // the first character of the statistic label survives in the raw span
        char head = r.kind == StatKind::Chi2 ? 0 : nt.text[r.span.start];
        if (head && static_cast<unsigned char>(head) < 0x80) { EXPECT_EQ(raw.front(), head) << c.id; }
    }
}

TEST(Normalize, IdempotentOnCorpus)
{
    for (const auto& c : load_corpus()) {
        auto once = norm(c.input);
        EXPECT_EQ(norm(once), once) << c.id;
    }
}

TEST(Normalize, IdempotentOnMutatedStrings)
{
    for (const auto& s : mutated_corpus(10000)) {
        auto once = norm(s);
        ASSERT_EQ(norm(once), once) << s;
    }
}

TEST(Normalize, NeverDeletesDigitsPointsOrComparators)
{
    auto check = [](const std::string& raw) {
        auto v = visible(raw);
        auto n = norm(raw);
        for (char c : std::string_view("0123456789.<>=")) EXPECT_GE(count_of(n, c), count_of(v, c)) << raw << " " << c;
    };
    for (const auto& c : load_corpus()) check(c.input);
    for (const auto& s : mutated_corpus(2000)) check(s);
}

TEST(Normalize, ChiFoldingCanBeDisabled)
{
    NormalizeOptions opts;
    opts.fold_chi = false;
    EXPECT_EQ(normalize_text("chi2(12)=3.4", opts).text, "chi2(12)=3.4");
    EXPECT_NE(normalize_text("χ²(12)=3.4", opts).text, "chi2(12)=3.4");
}

TEST(Repair, PdfArtifacts)
{
    EXPECT_EQ(repaired("t(12) 1.2, p 5 .34"), "t(12)<=>1.2, p=.34");
    EXPECT_EQ(repaired("F(1,23) 4.5, p 5 .23"), "F(1,23)<=>4.5, p=.23");
    EXPECT_EQ(repaired("t(12)=1.2, p=.34"), "t(12)=1.2, p=.34");
}

TEST(Repair, OnlyInsideCandidateWindows)
{
    // a lone "p 5" without a statistic nearby is prose, not an artifact
    EXPECT_EQ(repaired("see p 5 .34 of the appendix"), "see p 5 .34 of the appendix");
    EXPECT_EQ(repaired("we had 12 participants"), "we had 12 participants");
    auto far = "t(12) was reported " + std::string(60, 'x') + " and p 5 .34";
    EXPECT_EQ(repaired(far), far);
}

TEST(Repair, OffsetsMapIntoRaw)
{
    std::string raw = "t(12) 1.2, p 5 .34";
    auto nt = repair_pdf_artifacts(normalize_text(raw));
    expect_offset_map_valid(nt, raw.size());
    auto pos = nt.text.find(".34");
    EXPECT_EQ(raw.substr(nt.offset_map[pos], 3), ".34");
}
