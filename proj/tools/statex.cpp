// statex: extract statistical results from text and check their p-values.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "statex/conformance.hpp"
#include "statex/corpus.hpp"
#include "statex/html.hpp"
#include "statex/pipeline.hpp"
#include "statex/report.hpp"

namespace fs = std::filesystem;
using namespace statex;

namespace {

struct Document {
    std::string source;
    fs::path path; // empty for stdin
    std::string text;
    bool read_ok = false;
    std::string diagnostic;
    DocumentAnalysis analysis;
};

bool is_html_path(const fs::path& p)
{
    auto ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".html" || ext == ".htm" || ext == ".xhtml" || ext == ".xml";
}

std::size_t thread_cap(std::size_t jobs)
{
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("STATEX_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            std::cerr << "statex: ignoring invalid STATEX_THREADS='" << env << "'\n";
        }
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
}

// Expands directories (recursively, sorted) and keeps files and "-" as given.
std::vector<Document> collect_inputs(const std::vector<std::string>& args)
{
    std::vector<Document> docs;
    for (const auto& a : args) {
        if (a == "-") {
            Document d;
            d.source = "stdin";
            docs.push_back(std::move(d));
            continue;
        }
        fs::path p(a);
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            std::vector<fs::path> files;
            for (auto it = fs::recursive_directory_iterator(p, ec); !ec && it != fs::recursive_directory_iterator();
                 it.increment(ec))
                if (it->is_regular_file(ec)) files.push_back(it->path());
            std::sort(files.begin(), files.end());
            for (auto& f : files) {
                Document d;
                d.source = f.lexically_normal().generic_string();
                d.path = f;
                docs.push_back(std::move(d));
            }
            continue;
        }
        Document d;
        d.source = p.lexically_normal().generic_string();
        d.path = p;
        docs.push_back(std::move(d));
    }
    return docs;
}

void load_and_analyze(Document& d, const PipelineOptions& opts)
{
    if (d.path.empty()) {
        d.text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        d.read_ok = true;
    } else {
        std::ifstream in(d.path, std::ios::binary);
        if (!in || fs::is_directory(d.path)) {
            d.diagnostic = "cannot read input";
            return;
        }
        d.text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        if (in.bad()) {
            d.diagnostic = "read error";
            return;
        }
        d.read_ok = true;
    }
    bool html = d.path.empty() ? looks_like_html(d.text) : (is_html_path(d.path) || looks_like_html(d.text));
    if (html) d.text = strip_html(d.text);
    d.analysis = analyze_document(d.text, opts);
}

struct CheckArgs {
    std::vector<std::string> inputs;
    std::string format = "csv";
    bool wide = false;
    double alpha = 0.05;
    bool one_tailed_txt = false;
    bool assume_one_tailed = false;
    bool strict_numbers = false;
    bool quiet = false;
};

int run_check(const CheckArgs& args)
{
    PipelineOptions opts;
    opts.check.alpha = args.alpha;
    opts.check.one_tailed_txt = args.one_tailed_txt;
    opts.check.assume_one_tailed = args.assume_one_tailed;

    std::vector<std::string> inputs = args.inputs;
    if (inputs.empty()) inputs.push_back("-");
    if (std::count(inputs.begin(), inputs.end(), "-") > 1) {
        std::cerr << "statex: standard input given more than once\n";
        return 1;
    }
    auto docs = collect_inputs(inputs);

    // stdin is read on the calling thread; files go to the pool.
    for (auto& d : docs)
        if (d.path.empty()) load_and_analyze(d, opts);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < docs.size(); i = next++)
            if (!docs[i].path.empty()) load_and_analyze(docs[i], opts);
    };
    std::vector<std::thread> pool;
    const std::size_t workers = thread_cap(docs.size());
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::stable_sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) { return a.source < b.source; });

    const Schema schema = args.wide ? Schema::wide : Schema::long_form;
    std::vector<OutputRow> rows;
    std::size_t failed = 0;
    bool malformed = false;
    bool decision_error = false;
    for (const auto& d : docs) {
        if (!d.read_ok) {
            std::cerr << "statex: warning: " << d.source << ": " << d.diagnostic << "\n";
            ++failed;
            continue;
        }
        if (args.strict_numbers) {
            bool bad = false;
            for (const auto& x : d.analysis.results)
                for (const auto& tok : x.result.malformed) {
                    std::cerr << "statex: error: " << d.source << ": malformed number '" << tok << "' in '" << x.raw
                              << "'\n";
                    bad = true;
                }
            if (bad) {
                malformed = true;
                continue;
            }
        }
        for (const auto& x : d.analysis.results) {
            rows.push_back(make_row(d.source, x, schema));
            decision_error = decision_error || x.verdict.decision_error.value_or(false);
        }
        if (!args.quiet && d.analysis.results.size() > 1)
            std::cerr << "statex: advisory: " << d.source << ": " << d.analysis.results.size()
                      << " results checked individually; multiple-testing corrections are not inferred\n";
    }

    std::cout << (args.format == "json" ? emit_json(rows, schema) : emit_csv(rows, schema));
    std::cout.flush();

    if (!docs.empty() && failed == docs.size()) return 1;
    if (malformed) return 1;
    return decision_error ? 2 : 0;
}

int run_conformance_cmd(bool verbose)
{
    auto report = run_conformance();
    std::cout << report.detected << " detected / " << report.p_detected << " p-clauses / "
              << (report.pass() ? "pass" : "fail") << "\n";
    if (verbose || !report.pass()) {
        for (const auto& f : report.failures) {
            std::cerr << "case " << f.id << (f.lenient ? " (lenient)" : "") << ": " << f.input << "\n";
            for (const auto& d : f.diffs)
                std::cerr << "  " << d.field << ": expected " << d.expected << ", got " << d.actual << "\n";
        }
    }
    return report.pass() ? 0 : 1;
}

int run_corpus_export(const std::string& format)
{
    auto cases = load_corpus();
    auto num = [](const std::optional<double>& v) { return v ? detail::shortest(*v) : std::string(); };
    auto cmp = [](const std::optional<Comparator>& c) { return c ? std::string(to_string(*c)) : std::string(); };
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        auto jnum = [](const std::optional<double>& v) -> nlohmann::ordered_json {
            if (v) return *v;
            return nullptr;
        };
        auto jcmp = [](const std::optional<Comparator>& c) -> nlohmann::ordered_json {
            if (c) return std::string(to_string(*c));
            return nullptr;
        };
        for (const auto& c : cases) {
            const auto& e = c.expected;
            nlohmann::ordered_json o;
            o["id"] = c.id;
            o["input"] = c.input;
            o["lenient"] = c.lenient;
            o["kind"] = std::string(to_string(e.kind));
            o["stat_comp"] = jcmp(e.stat_comp);
            o["stat_value"] = jnum(e.stat_value);
            o["df1"] = jnum(e.df1);
            o["df2"] = jnum(e.df2);
            o["d"] = jnum(e.d);
            o["beta"] = jnum(e.beta);
            o["se_beta"] = jnum(e.se_beta);
            o["zest"] = jnum(e.zest);
            o["r2"] = jnum(e.r2);
            o["p_comp"] = jcmp(e.p_comp);
            o["reported_p"] = jnum(e.reported_p);
            o["recalculated_p"] = jnum(e.recalculated_p);
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::string out = "id,input,lenient,kind,stat_comp,stat_value,df1,df2,d,beta,se_beta,zest,r2,p_comp,reported_p,"
                      "recalculated_p\n";
    for (const auto& c : cases) {
        const auto& e = c.expected;
        std::vector<std::string> f = {std::to_string(c.id), c.input, c.lenient ? "TRUE" : "FALSE",
                                      std::string(to_string(e.kind)), cmp(e.stat_comp), num(e.stat_value),
                                      num(e.df1), num(e.df2), num(e.d), num(e.beta), num(e.se_beta), num(e.zest),
                                      num(e.r2), cmp(e.p_comp), num(e.reported_p), num(e.recalculated_p)};
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out.push_back(',');
            detail::csv_field(out, f[i]);
        }
        out.push_back('\n');
    }
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Extract statistical test results from text and check reported p-values."};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Extract and check results in files, directories or stdin (-)");
    check_cmd->add_option("inputs", check.inputs, "Input files or directories; '-' reads standard input");
    check_cmd->add_option("--format", check.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    check_cmd->add_flag("--wide", check.wide, "Use the wide column set (one column per statistic)");
    check_cmd->add_option("--alpha", check.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    check_cmd->add_flag("--one-tailed-txt", check.one_tailed_txt,
                        "Accept p/2 when the document mentions one-sided testing");
    check_cmd->add_flag("--assume-one-tailed", check.assume_one_tailed, "Use p/2 for t, r and Z throughout");
    check_cmd->add_flag("--strict-numbers", check.strict_numbers, "Treat unreadable numbers as errors");
    check_cmd->add_flag("-q,--quiet", check.quiet, "Suppress advisories on standard error");

    bool verbose = false;
    auto* conf_cmd = app.add_subcommand("conformance", "Run the embedded conformance corpus");
    conf_cmd->add_flag("-v,--verbose", verbose, "List per-case differences");

    std::string export_format = "csv";
    auto* corpus_cmd = app.add_subcommand("corpus", "Corpus utilities");
    corpus_cmd->require_subcommand(1);
    auto* export_cmd = corpus_cmd->add_subcommand("export", "Write the corpus with expected values");
    export_cmd->add_option("--format", export_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (check.alpha <= 0.0 || check.alpha >= 1.0) {
        std::cerr << "statex: --alpha must lie strictly between 0 and 1\n";
        return 1;
    }
    try {
        if (*check_cmd) return run_check(check);
        if (*conf_cmd) return run_conformance_cmd(verbose);
        if (*export_cmd) return run_corpus_export(export_format);
    } catch (const std::exception& e) {
        std::cerr << "statex: error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
