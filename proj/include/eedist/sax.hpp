#pragma once

#include <cstddef>
#include <vector>

#include "eedist/symbolic.hpp"

namespace eedist {

using TimeSeries = std::vector<double>;

// Inverse CDF of the standard normal distribution, accurate to well below
// 1e-8 over (0, 1). Rational approximation plus one Halley refinement.
double inverse_normal_cdf(double p);

// The alphabet_size-1 standard-normal quantiles at k/alphabet_size,
// k = 1..alphabet_size-1. They split the real line into equiprobable
// buckets and are symmetric about zero. Valid for 2 <= alphabet_size <= 26.
std::vector<double> gaussian_breakpoints(int alphabet_size);

// Shifts to mean zero and scales to unit population standard deviation.
// Near-constant input (sigma < 1e-10) maps to all zeros.
TimeSeries z_normalize(const TimeSeries& t);

// Piecewise aggregate approximation to segment_count frame means. When the
// length is not divisible, boundary points contribute fractionally to both
// frames they overlap, so every frame aggregates a weight of exactly n/w.
TimeSeries paa(const TimeSeries& t, std::size_t segment_count);

// Symbolization parameters: alphabet size, frame count and the breakpoint
// vector derived from the alphabet size.
struct SaxParams {
    int alphabet_size = 0;
    std::size_t segment_count = 0;
    std::vector<double> breakpoints;

    static SaxParams make(int alphabet_size, std::size_t segment_count);
};

// ceil(n / ratio) frames for a 1:ratio compression.
std::size_t segments_for(std::size_t n, double ratio);

// A symbolized series. The original length feeds the sqrt(n/w) scaling of
// mindist.
struct SaxWord {
    SymbolicSequence word;
    std::size_t original_length = 0;
};

// z_normalize -> paa -> breakpoint bucketing. A value equal to a breakpoint
// goes to the lower symbol.
SaxWord symbolize(const TimeSeries& t, const SaxParams& p);

// SAX lower-bounding word distance:
//   sqrt(n/w) * sqrt(sum_j cell(a_j, b_j)^2)
// where adjacent or equal symbols contribute zero and wider symbol gaps
// contribute the breakpoint span between them. Not a metric: with alphabet
// size 2 every pair of words is at distance zero.
double mindist(const SaxWord& a, const SaxWord& b, const SaxParams& p);

}  // namespace eedist
