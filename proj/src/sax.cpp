#include "eedist/sax.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eedist/errors.hpp"

namespace eedist {

namespace {

constexpr double kSigmaFloor = 1e-10;

// Acklam's rational approximation to the standard normal quantile.
double acklam_estimate(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidParameter("quantile probability must lie strictly inside (0, 1)");
    }
    double x = acklam_estimate(p);
    // One Halley step against the exact CDF.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

std::vector<double> gaussian_breakpoints(int alphabet_size) {
    if (alphabet_size < 2 || alphabet_size > 26) {
        throw InvalidParameter("alphabet size must lie in [2, 26], got " +
                               std::to_string(alphabet_size));
    }
    std::vector<double> breakpoints(static_cast<std::size_t>(alphabet_size) - 1);
    for (int k = 1; k < alphabet_size; ++k) {
        breakpoints[static_cast<std::size_t>(k) - 1] =
            inverse_normal_cdf(static_cast<double>(k) / alphabet_size);
    }
    return breakpoints;
}

TimeSeries z_normalize(const TimeSeries& t) {
    if (t.empty()) {
        throw InvalidParameter("cannot normalize an empty series");
    }
    double sum = 0.0;
    for (const double v : t) {
        if (!std::isfinite(v)) {
            throw InvalidParameter("series contains a non-finite value");
        }
        sum += v;
    }
    const double mean = sum / static_cast<double>(t.size());
    double sq = 0.0;
    for (const double v : t) {
        const double d = v - mean;
        sq += d * d;
    }
    const double sigma = std::sqrt(sq / static_cast<double>(t.size()));
    TimeSeries out(t.size(), 0.0);
    if (sigma < kSigmaFloor) {
        return out;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        out[i] = (t[i] - mean) / sigma;
    }
    return out;
}

TimeSeries paa(const TimeSeries& t, std::size_t segment_count) {
    const std::size_t n = t.size();
    if (segment_count < 1 || segment_count > n) {
        throw InvalidParameter("segment count must lie in [1, series length]");
    }
    TimeSeries out(segment_count);
    const double frame = static_cast<double>(n) / static_cast<double>(segment_count);
    for (std::size_t j = 0; j < segment_count; ++j) {
        const double start = static_cast<double>(j) * static_cast<double>(n) /
                             static_cast<double>(segment_count);
        const double end = static_cast<double>(j + 1) * static_cast<double>(n) /
                           static_cast<double>(segment_count);
        const std::size_t first = static_cast<std::size_t>(start);
        const std::size_t last = std::min(n, static_cast<std::size_t>(std::ceil(end)));
        double acc = 0.0;
        for (std::size_t i = first; i < last; ++i) {
            const double weight = std::min(end, static_cast<double>(i + 1)) -
                                  std::max(start, static_cast<double>(i));
            if (weight > 0.0) {
                acc += weight * t[i];
            }
        }
        out[j] = acc / frame;
    }
    return out;
}

SaxParams SaxParams::make(int alphabet_size, std::size_t segment_count) {
    if (segment_count < 1) {
        throw InvalidParameter("segment count must be positive");
    }
    SaxParams p;
    p.alphabet_size = alphabet_size;
    p.segment_count = segment_count;
    p.breakpoints = gaussian_breakpoints(alphabet_size);
    return p;
}

std::size_t segments_for(std::size_t n, double ratio) {
    if (!(ratio >= 1.0)) {
        throw InvalidParameter("compression ratio must be >= 1");
    }
    if (n == 0) {
        throw InvalidParameter("cannot derive a segment count for an empty series");
    }
    const auto w = static_cast<std::size_t>(std::ceil(static_cast<double>(n) / ratio));
    return std::max<std::size_t>(1, w);
}

SaxWord symbolize(const TimeSeries& t, const SaxParams& p) {
    if (p.breakpoints.size() + 1 != static_cast<std::size_t>(p.alphabet_size)) {
        throw InvalidParameter("breakpoint vector does not match the alphabet size");
    }
    const TimeSeries reduced = paa(z_normalize(t), p.segment_count);
    std::vector<Symbol> symbols(reduced.size());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        // First breakpoint >= value; a value sitting exactly on a breakpoint
        // stays in the lower bucket.
        const auto it = std::lower_bound(p.breakpoints.begin(), p.breakpoints.end(), reduced[i]);
        symbols[i] = static_cast<Symbol>(it - p.breakpoints.begin());
    }
    return SaxWord{SymbolicSequence(std::move(symbols),
                                    static_cast<std::size_t>(p.alphabet_size)),
                   t.size()};
}

double mindist(const SaxWord& a, const SaxWord& b, const SaxParams& p) {
    if (a.word.size() != p.segment_count || b.word.size() != p.segment_count) {
        throw InvalidParameter("word length does not match the segment count");
    }
    if (a.word.alphabet_size() != static_cast<std::size_t>(p.alphabet_size) ||
        b.word.alphabet_size() != static_cast<std::size_t>(p.alphabet_size)) {
        throw InvalidParameter("word alphabet does not match the parameters");
    }
    if (a.original_length != b.original_length) {
        throw InvalidParameter("words come from series of different lengths");
    }
    if (p.breakpoints.size() + 1 != static_cast<std::size_t>(p.alphabet_size)) {
        throw InvalidParameter("breakpoint vector does not match the alphabet size");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < p.segment_count; ++j) {
        const int r = a.word[j];
        const int c = b.word[j];
        if (std::abs(r - c) <= 1) {
            continue;
        }
        const double gap = p.breakpoints[static_cast<std::size_t>(std::max(r, c)) - 1] -
                           p.breakpoints[static_cast<std::size_t>(std::min(r, c))];
        sum += gap * gap;
    }
    return std::sqrt(static_cast<double>(a.original_length) /
                     static_cast<double>(p.segment_count)) *
           std::sqrt(sum);
}

}  // namespace eedist
