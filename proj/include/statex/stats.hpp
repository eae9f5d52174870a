#ifndef STATEX_STATS_HPP
#define STATEX_STATS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "extract.hpp"
#include "types.hpp"

namespace statex {

namespace detail {

inline constexpr double kEps = 1e-16;
inline constexpr double kTiny = 1e-300;
inline constexpr int kMaxIter = 100000;

inline double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

/// Modified Lentz evaluation of the incomplete beta continued fraction.
/// Converges quickly for x < (a+1)/(a+b+2).
inline std::optional<double> beta_cf(double a, double b, double x)
{
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    return std::nullopt;
}

/// Power series sum_{n>=0} (1-b)_n x^n / (n! (a+n)), times a.
inline double beta_series(double a, double b, double x)
{
    double term = 1.0;
    double sum = 1.0 / a;
    for (int n = 1; n <= kMaxIter; ++n) {
        term *= (n - b) * x / n;
        const double add = term / (a + n);
        sum += add;
        if (std::fabs(add) < kEps * std::fabs(sum)) break;
    }
    return sum * a;
}

/// I_x(a,b) with y = 1-x supplied separately so tails near x=1 keep precision.
inline double ibeta(double a, double b, double x, double y)
{
    if (x <= 0.0) return 0.0;
    if (y <= 0.0) return 1.0;
    const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        if (auto cf = beta_cf(a, b, x)) return std::clamp(front * *cf / a, 0.0, 1.0);
        return std::clamp(std::exp(a * std::log(x) - log_beta(a, b)) * beta_series(a, b, x) / a, 0.0, 1.0);
    }
    if (auto cf = beta_cf(b, a, y)) return std::clamp(1.0 - front * *cf / b, 0.0, 1.0);
    return std::clamp(1.0 - std::exp(b * std::log(y) - log_beta(a, b)) * beta_series(b, a, y) / b, 0.0, 1.0);
}

inline double gamma_series(double s, double x)
{
    double ap = s;
    double del = 1.0 / s;
    double sum = del;
    for (int n = 1; n <= kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

inline double gamma_cf(double s, double x)
{
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

inline void require(bool ok, const char* what)
{
    if (!ok) throw DomainError(what);
}

} // namespace detail

/// Regularized incomplete beta function I_x(a, b).
inline double reg_inc_beta(double a, double b, double x)
{
    detail::require(std::isfinite(a) && a > 0.0, "reg_inc_beta: a must be > 0");
    detail::require(std::isfinite(b) && b > 0.0, "reg_inc_beta: b must be > 0");
    detail::require(x >= 0.0 && x <= 1.0, "reg_inc_beta: x must lie in [0,1]");
    return detail::ibeta(a, b, x, 1.0 - x);
}

/// Regularized lower incomplete gamma function P(s, x).
inline double reg_inc_gamma_lower(double s, double x)
{
    detail::require(std::isfinite(s) && s > 0.0, "reg_inc_gamma_lower: s must be > 0");
    detail::require(!std::isnan(x) && x >= 0.0, "reg_inc_gamma_lower: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < s + 1.0) return std::clamp(detail::gamma_series(s, x), 0.0, 1.0);
    return std::clamp(1.0 - detail::gamma_cf(s, x), 0.0, 1.0);
}

/// Regularized upper incomplete gamma function Q(s, x) = 1 - P(s, x), computed
/// directly in the upper tail.
inline double reg_inc_gamma_upper(double s, double x)
{
    detail::require(std::isfinite(s) && s > 0.0, "reg_inc_gamma_upper: s must be > 0");
    detail::require(!std::isnan(x) && x >= 0.0, "reg_inc_gamma_upper: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < s + 1.0) return std::clamp(1.0 - detail::gamma_series(s, x), 0.0, 1.0);
    return std::clamp(detail::gamma_cf(s, x), 0.0, 1.0);
}

// Distribution functions. Upper-tail helpers return the p-value directly.

inline double normal_cdf(double z)
{
    const double tail = 0.5 * reg_inc_gamma_upper(0.5, 0.5 * z * z);
    return z >= 0.0 ? 1.0 - tail : tail;
}

/// 2 * (1 - Phi(|z|))
inline double normal_two_tailed_p(double z) { return reg_inc_gamma_upper(0.5, 0.5 * z * z); }

/// 2 * (1 - T_df(|t|))
inline double t_two_tailed_p(double t, double df)
{
    detail::require(df > 0.0, "t_two_tailed_p: df must be > 0");
    const double t2 = t * t;
    if (std::isinf(t2)) return 0.0;
    return detail::ibeta(0.5 * df, 0.5, df / (df + t2), t2 / (df + t2));
}

inline double student_t_cdf(double t, double df)
{
    const double half = 0.5 * t_two_tailed_p(t, df);
    return t >= 0.0 ? 1.0 - half : half;
}

/// 1 - F_{df1,df2}(f)
inline double f_upper_p(double f, double df1, double df2)
{
    detail::require(df1 > 0.0 && df2 > 0.0, "f_upper_p: df must be > 0");
    detail::require(f >= 0.0, "f_upper_p: f must be >= 0");
    const double denom = df2 + df1 * f;
    if (std::isinf(denom)) return 0.0;
    return detail::ibeta(0.5 * df2, 0.5 * df1, df2 / denom, df1 * f / denom);
}

inline double chi2_cdf(double x, double df) { return reg_inc_gamma_lower(0.5 * df, 0.5 * x); }

/// 1 - ChiSq_df(x)
inline double chi2_upper_p(double x, double df)
{
    detail::require(df > 0.0, "chi2_upper_p: df must be > 0");
    detail::require(x >= 0.0, "chi2_upper_p: x must be >= 0");
    return reg_inc_gamma_upper(0.5 * df, 0.5 * x);
}

struct RecomputedP {
    double value = 1.0;
    StatKind method = StatKind::Unknown;
    TailMode tails = TailMode::two_tailed;
};

/// Recomputes the p-value implied by a result's statistic and degrees of freedom.
///
/// Returns nothing when the family has no reference distribution here
/// (Unknown, POnly, U, R2), when required df are missing, or when the
/// statistic is out of range. Q, H and G2 use the chi-square upper tail.
/// One-tailed mode halves the p of sign-symmetric statistics only.
inline std::optional<RecomputedP> recompute_p(const ParsedResult& r, TailMode tails = TailMode::two_tailed)
{
    if (!r.stat_value || !std::isfinite(*r.stat_value)) return std::nullopt;
    const double v = *r.stat_value;
    double p = 0.0;
    auto df_ok = [](const std::optional<double>& df) { return df && std::isfinite(*df) && *df > 0.0; };

    switch (r.kind) {
    case StatKind::t:
        if (!df_ok(r.df1)) return std::nullopt;
        p = t_two_tailed_p(v, *r.df1);
        break;
    case StatKind::F:
        if (!df_ok(r.df1) || !df_ok(r.df2) || v < 0.0) return std::nullopt;
        p = f_upper_p(v, *r.df1, *r.df2);
        break;
    case StatKind::r: {
        if (!df_ok(r.df1) || r.range_violations.r_out_of_range || std::fabs(v) > 1.0) return std::nullopt;
        if (std::fabs(v) == 1.0) {
            p = 0.0;
            break;
        }
        const double t = v * std::sqrt(*r.df1 / (1.0 - v * v));
        p = t_two_tailed_p(t, *r.df1);
        break;
    }
    case StatKind::Z:
        p = normal_two_tailed_p(v);
        break;
    case StatKind::BetaSE:
        if (!r.se_beta || *r.se_beta <= 0.0) return std::nullopt;
        p = normal_two_tailed_p(v);
        break;
    case StatKind::Chi2:
    case StatKind::Q:
    case StatKind::H:
    case StatKind::G2:
        if (!df_ok(r.df1) || v < 0.0) return std::nullopt;
        p = chi2_upper_p(v, *r.df1);
        break;
    default:
        return std::nullopt;
    }

    RecomputedP out;
    out.method = r.kind;
    out.tails = TailMode::two_tailed;
    out.value = std::clamp(p, 0.0, 1.0);
    if (tails == TailMode::one_tailed && is_sign_symmetric(r.kind)) {
        out.value /= 2.0;
        out.tails = TailMode::one_tailed;
    }
    return out;
}

} // namespace statex

#endif
