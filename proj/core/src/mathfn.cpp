#include "hfvol/mathfn.hpp"

#include "hfvol/errors.hpp"

#include <cmath>
#include <limits>

namespace hfvol {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

// Lower incomplete gamma by its power series, scaled by e^-x x^a / Gamma(a).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz's continued fraction, same scaling.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0) raise("mathfn", "gamma_p requires a > 0");
    if (x < 0.0) raise("mathfn", "gamma_p requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0) raise("mathfn", "gamma_q requires a > 0");
    if (x < 0.0) raise("mathfn", "gamma_q requires x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi2_cdf(double x, double dof) {
    if (x <= 0.0) return 0.0;
    return gamma_p(dof / 2.0, x / 2.0);
}

double chi2_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return gamma_q(dof / 2.0, x / 2.0);
}

double chi2_quantile(double p, double dof) {
    if (p <= 0.0 || p >= 1.0) raise("mathfn", "chi2_quantile requires p in (0, 1)");
    // Bracket, then bisect/Newton on the CDF.
    double lo = 0.0;
    double hi = dof + 10.0;
    while (chi2_cdf(hi, dof) < p) hi *= 2.0;
    double x = dof;  // rough start
    for (int i = 0; i < 200; ++i) {
        double f = chi2_cdf(x, dof) - p;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        // Newton step from the gamma density, clipped into the bracket.
        double logpdf = (dof / 2.0 - 1.0) * std::log(x) - x / 2.0 -
                        std::lgamma(dof / 2.0) - (dof / 2.0) * std::log(2.0);
        double pdf = std::exp(logpdf);
        double step = (pdf > 0.0) ? f / pdf : 0.0;
        double next = x - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-14 * std::max(1.0, x)) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

double correlation_p_value(double r, std::size_t n) {
    if (n < 4 || !(std::abs(r) < 1.0)) return 0.0;
    double z = std::atanh(r) * std::sqrt(static_cast<double>(n) - 3.0);
    return 2.0 * (1.0 - normal_cdf(std::abs(z)));
}

double mean(const std::vector<double>& x) {
    if (x.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double sample_variance(const std::vector<double>& x) {
    if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / (static_cast<double>(x.size()) - 1.0);
}

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) raise("mathfn", "correlation: length mismatch");
    std::size_t n = x.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = mean(x);
    double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace hfvol
