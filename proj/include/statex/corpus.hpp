#ifndef STATEX_CORPUS_HPP
#define STATEX_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpus_data.hpp"
#include "number.hpp"
#include "types.hpp"

namespace statex {

/// Expected extraction for one corpus string. Values carry the two decimals
/// printed in the reference table; absent fields are expected absent.
struct ExpectedResult {
    StatKind kind = StatKind::Unknown;
    std::optional<Comparator> stat_comp;
    std::optional<double> stat_value;
    std::optional<double> df1;
    std::optional<double> df2;
    std::optional<double> d;
    std::optional<double> beta;
    std::optional<double> se_beta;
    std::optional<double> zest;
    std::optional<double> r2;
    std::optional<Comparator> p_comp;
    std::optional<double> reported_p;
    std::optional<double> recalculated_p;

    bool has_p_clause() const { return p_comp && *p_comp != Comparator::NotSignificant; }
};

struct CorpusCase {
    int id = 0;
    std::string input;
    ExpectedResult expected;
    bool lenient = false; // excluded from strict pass counts
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::optional<double> corpus_number(std::string_view f)
{
    if (f.empty()) return std::nullopt;
    auto n = parse_number_prefix(f);
    if (n.consumed != f.size()) throw CorruptCorpus("bad number in corpus: " + std::string(f));
    return n.value;
}

inline std::optional<Comparator> corpus_comparator(std::string_view f)
{
    if (f.empty()) return std::nullopt;
    auto c = comparator_from_string(f);
    if (!c) throw CorruptCorpus("bad comparator in corpus: " + std::string(f));
    return c;
}

} // namespace detail

/// Parses corpus records and verifies their checksum. Throws CorruptCorpus on
/// a checksum mismatch or malformed record.
inline std::vector<CorpusCase> load_corpus(std::string_view data, std::uint64_t checksum)
{
    if (detail::fnv1a(data) != checksum) throw CorruptCorpus("corpus checksum mismatch");
    std::vector<CorpusCase> cases;
    for (auto line : detail::split(data, '\n')) {
        if (line.empty()) continue;
        auto f = detail::split(line, '\t');
        if (f.size() != 16) throw CorruptCorpus("corpus record has wrong field count");
        CorpusCase c;
        try {
            c.id = std::stoi(std::string(f[0]));
        } catch (const std::exception&) {
            throw CorruptCorpus("bad corpus id");
        }
        c.input = std::string(f[1]);
        c.lenient = f[2] == "L";
        auto kind = stat_kind_from_string(f[3]);
        if (!kind) throw CorruptCorpus("bad kind in corpus: " + std::string(f[3]));
        auto& e = c.expected;
        e.kind = *kind;
        e.stat_comp = detail::corpus_comparator(f[4]);
        e.stat_value = detail::corpus_number(f[5]);
        e.df1 = detail::corpus_number(f[6]);
        e.df2 = detail::corpus_number(f[7]);
        e.d = detail::corpus_number(f[8]);
        e.beta = detail::corpus_number(f[9]);
        e.se_beta = detail::corpus_number(f[10]);
        e.zest = detail::corpus_number(f[11]);
        e.r2 = detail::corpus_number(f[12]);
        e.p_comp = detail::corpus_comparator(f[13]);
        e.reported_p = detail::corpus_number(f[14]);
        e.recalculated_p = detail::corpus_number(f[15]);
        if (c.id != static_cast<int>(cases.size()) + 1) throw CorruptCorpus("corpus ids are not dense");
        cases.push_back(std::move(c));
    }
    return cases;
}

/// The embedded 187-case conformance corpus.
inline std::vector<CorpusCase> load_corpus()
{
    return load_corpus(detail::kCorpusData, detail::kCorpusChecksum);
}

} // namespace statex

#endif
