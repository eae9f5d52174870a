// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "statex/check.hpp"
#include "statex/conformance.hpp"
#include "statex/corpus.hpp"
#include "statex/extract.hpp"
#include "statex/label.hpp"
#include "statex/mutate.hpp"
#include "statex/normalize.hpp"
#include "statex/pipeline.hpp"
#include "statex/stats.hpp"

struct OracleBeta {
    double a, b, x, value;
};
struct OracleGamma {
    double s, x, value;
};
#include "data/oracle_grid.inc"

using namespace statex;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail)
{
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << "\n";
    if (!ok) ++failures;
}

bool criterion1(std::ostringstream& msg)
{
    struct Row {
        const char* input;
        double computed;
        bool error, decision;
    };
    const Row rows[] = {
        {"t(12)=2.3, p<.05", 0.04019757, false, false},   {"F(1,23)=4.5, p=.23", 0.04488686, true, true},
        {"r(12)=.34, p=.56", 0.23428054, true, false},    {"Z=1.2, p<.34", 0.23013934, false, false},
        {"χ^2(12)=3.4, p<.05", 0.99200057, true, true},   {"χ2(12)=3.4, p<.05", 0.99200057, true, true},
        {"Chi^2(12)=3.4, p<.05", 0.99200057, true, true}, {"chi2(12)=3.4, p<.05", 0.99200057, true, true},
        {"Q(12)=3.4, p<.01", 0.99200057, true, true},     {"t(12)=.34, n.s.", 0.73973384, false, false},
    };
    auto t0 = Clock::now();
    int ok = 0;
    double worst = 0;
    for (const auto& r : rows) {
        auto doc = analyze_document(r.input);
        if (doc.results.size() != 1) continue;
        const auto& v = doc.results.front().verdict;
        if (!v.recomputed || !v.error || !v.decision_error) continue;
        double diff = std::fabs(v.recomputed->value - r.computed);
        worst = std::max(worst, diff);
        ok += diff <= 1e-6 && *v.error == r.error && *v.decision_error == r.decision;
    }
    double secs = seconds_since(t0);
    msg << ok << "/10 rows match, max |dp| " << worst << ", " << secs << " s";
    return ok == 10 && secs < 1.0;
}

bool criterion2(std::ostringstream& msg)
{
    auto t0 = Clock::now();
    auto rep = run_conformance();
    double secs = seconds_since(t0);
    std::size_t lenient_failures = 0;
    for (const auto& f : rep.failures) lenient_failures += f.lenient;
    msg << rep.detected << "/" << rep.cases << " detected, " << rep.p_detected << "/" << rep.p_clauses
        << " p-clauses, recalculated p " << rep.recalc_matches << "/" << rep.recalc_expected << ", "
        << lenient_failures << " lenient differences, " << secs << " s";
    return rep.cases == 187 && rep.detected == 187 && rep.p_clauses == 185 && rep.p_detected == 184 &&
           rep.recalc_matches == rep.recalc_expected && rep.pass() && secs < 5.0;
}

bool criterion3(std::ostringstream& msg)
{
    const std::map<std::string, StatKind> own = {
        {"t", StatKind::t},    {"t2", StatKind::t},    {"t^2", StatKind::t},   {"F", StatKind::F},
        {"r", StatKind::r},    {"r2", StatKind::R2},   {"r^2", StatKind::R2},  {"R2", StatKind::R2},
        {"R^2", StatKind::R2}, {"Z", StatKind::Z},     {"z", StatKind::Z},     {"Q", StatKind::Q},
        {"q", StatKind::Q},    {"H", StatKind::H},     {"G2", StatKind::G2},   {"G^2", StatKind::G2},
        {"U", StatKind::U},
    };
    const std::string letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    int strings = 0, overcapture = 0, checked = 0, misnamed = 0, undetected = 0;
    for (std::string suffix : {"", "2", "^2"}) {
        for (char c : letters) {
            std::string label = std::string(1, c) + suffix;
            auto doc = analyze_document(label + "(12)=.3, p<.05");
            ++strings;
            if (doc.results.empty()) {
                ++undetected;
                continue;
            }
            StatKind k = doc.results.front().result.kind;
            if (k == StatKind::Chi2 && c != 'x' && c != 'X') ++overcapture;
            if (auto it = own.find(label); it != own.end()) {
                ++checked;
                misnamed += k != it->second;
            }
        }
    }
    msg << strings << " sweep strings, " << overcapture << " non-x chi-square, " << misnamed << "/" << checked
        << " named labels misclassified, " << undetected << " undetected";
    return strings == 156 && overcapture == 0 && misnamed == 0 && undetected == 0;
}

bool criterion4(std::ostringstream& msg)
{
    double worst_beta = 0, worst_gamma = 0, worst_ft = 0;
    for (const auto& o : kBetaGrid) worst_beta = std::max(worst_beta, std::fabs(reg_inc_beta(o.a, o.b, o.x) - o.value));
    for (const auto& o : kGammaGrid)
        worst_gamma = std::max(worst_gamma, std::fabs(reg_inc_gamma_lower(o.s, o.x) - o.value));
    for (double df : {1.0, 2.0, 5.5, 12.0, 30.0, 120.0, 1234.0})
        for (double t : {0.01, 0.3, 1.0, 2.3, 4.0, 9.0})
            worst_ft = std::max(worst_ft, std::fabs(f_upper_p(t * t, 1, df) - t_two_tailed_p(t, df)));
    msg << std::size(kBetaGrid) << " beta / " << std::size(kGammaGrid) << " gamma points, max error " << worst_beta
        << " / " << worst_gamma << ", F=t^2 max diff " << worst_ft;
    return worst_beta <= 1e-10 && worst_gamma <= 1e-10 && worst_ft <= 1e-9;
}

std::vector<std::string> mutated_corpus(std::size_t n, std::uint64_t seed)
{
    auto cases = load_corpus();
    std::vector<std::string> out;
    std::mt19937_64 rng(seed);
    while (out.size() < n) {
        const auto& c = cases[rng() % cases.size()];
        try {
            out.push_back(mutate(c.input, {kAllMutationKinds[rng() % kAllMutationKinds.size()], rng()}));
        } catch (const NotMutable&) {
        }
    }
    return out;
}

bool criterion5(std::ostringstream& msg)
{
    // normalization idempotence
    std::size_t idem_bad = 0, idem_total = 0;
    std::vector<std::string> texts;
    for (const auto& c : load_corpus()) texts.push_back(c.input);
    for (auto& s : mutated_corpus(10000, 7)) texts.push_back(std::move(s));
    for (const auto& s : texts) {
        auto once = normalize_text(s).text;
        idem_bad += normalize_text(once).text != once;
        ++idem_total;
    }

    // parse/print round trip over every parsed corpus and mutant result
    std::size_t rt_bad = 0, rt_total = 0;
    for (const auto& s : texts) {
        for (const auto& r : extract_results(repair_pdf_artifacts(normalize_text(s)))) {
            if (r.range_violations.any() || r.kind == StatKind::Unknown || !r.malformed.empty()) continue;
            auto again = extract_results(normalize_text(render(r)));
            ++rt_total;
            rt_bad += again.size() != 1 || !r.same_values(again.front());
        }
    }

    // CDF monotonicity
    std::size_t mono_bad = 0;
    for (double df : {0.5, 1.0, 3.0, 12.0, 80.0, 500.0}) {
        double pt = 0, pc = 0, pf = 0, pn = 0;
        for (double x = -30; x <= 30; x += 0.01) {
            double ct = student_t_cdf(x, df), cn = normal_cdf(x);
            mono_bad += ct < pt - 1e-15;
            mono_bad += cn < pn - 1e-15;
            pt = ct;
            pn = cn;
            if (x >= 0) {
                double cc = chi2_cdf(x * 4, df), cf = 1.0 - f_upper_p(x, 4, df);
                mono_bad += cc < pc - 1e-15;
                mono_bad += cf < pf - 1e-15;
                pc = cc;
                pf = cf;
            }
        }
    }

    // rounding soundness: a correctly rounded p is never an error
    std::size_t round_bad = 0;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50000; ++i) {
        double comp = std::uniform_real_distribution<>(0, 1)(rng);
        int d = 1 + static_cast<int>(rng() % 5);
        double scale = std::pow(10.0, d);
        ParsedResult r;
        r.kind = StatKind::t;
        r.p_comp = Comparator::Eq;
        r.reported_p = std::round(comp * scale) / scale;
        r.reported_p_decimals = d;
        round_bad += *check_consistency(r, RecomputedP{comp, StatKind::t, TailMode::two_tailed}, {}).error;
    }

    // mutation robustness over Table 1 rows
    const char* reference_rows[] = {"t(12)=2.3, p<.05",   "F(1,23)=4.5, p=.23",   "r(12)=.34, p=.56",
                            "Z=1.2, p<.34",       "χ^2(12)=3.4, p<.05",   "χ2(12)=3.4, p<.05",
                            "Chi^2(12)=3.4, p<.05", "chi2(12)=3.4, p<.05", "Q(12)=3.4, p<.01",
                            "t(12)=.34, n.s."};
    std::size_t total = 0, detected = 0;
    for (std::uint64_t seed = 0; total < 10000; ++seed) {
        const char* row = reference_rows[seed % std::size(reference_rows)];
        auto kind = kAllMutationKinds[(seed / std::size(reference_rows)) % kAllMutationKinds.size()];
        std::string variant;
        try {
            variant = mutate(row, {kind, seed + 1});
        } catch (const NotMutable&) {
            continue;
        }
        ++total;
        detected += !analyze_document(variant).results.empty();
    }
    double rate = static_cast<double>(detected) / static_cast<double>(total);

    msg << "idempotence " << idem_total - idem_bad << "/" << idem_total << ", round trip " << rt_total - rt_bad << "/"
        << rt_total << ", monotonicity violations " << mono_bad << ", rounding errors " << round_bad
        << ", mutation detection " << detected << "/" << total;
    return idem_bad == 0 && rt_bad == 0 && rt_total > 1000 && mono_bad == 0 && round_bad == 0 && rate >= 0.99;
}

std::string capture(const std::string& cmd, int& status)
{
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int st = pclose(pipe);
    status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
}

bool criterion6(std::ostringstream& msg)
{
    std::random_device rd;
    fs::path dir = fs::temp_directory_path() / ("statex-accept-" + std::to_string(::getpid()) + "-" + std::to_string(rd()));
    fs::create_directories(dir);
    for (const auto& c : load_corpus()) {
        char name[32];
        std::snprintf(name, sizeof name, "case%03d.txt", c.id);
        std::ofstream(dir / name, std::ios::binary) << c.input << "\n";
    }
    std::string cmd = "'" STATEX_CLI_PATH "' check --format csv '" + dir.string() + "' 2>/dev/null";
    int s1 = -1, s2 = -1;
    auto a = capture(cmd, s1);
    auto b = capture(cmd, s2);
    fs::remove_all(dir);
    std::size_t rows = static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n'));
    msg << "two runs: " << a.size() << " and " << b.size() << " bytes, " << (rows ? rows - 1 : 0)
        << " rows, exit " << s1 << "/" << s2;
    return s1 == s2 && (s1 == 0 || s1 == 2) && rows > 187 && a == b;
}

} // namespace

int main()
{
    bool (*criteria[])(std::ostringstream&) = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6};
    for (int i = 0; i < 6; ++i) {
        std::ostringstream msg;
        bool ok = false;
        try {
            ok = criteria[i](msg);
        } catch (const std::exception& e) {
            msg << " exception: " << e.what();
        }
        report(i + 1, ok, msg.str());
    }
    return failures == 0 ? 0 : 1;
}
