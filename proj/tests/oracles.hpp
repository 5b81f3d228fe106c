// Independent reference implementations the suites check the library against.
// Everything here follows the textbook recursive definitions directly; none
// of it shares code with the library's rolling-row DP kernels.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "eedist/metric.hpp"
#include "eedist/sax.hpp"
#include "eedist/symbolic.hpp"
#include "eedist/vptree.hpp"

namespace oracle {

// Memoized plain recursion over suffix pairs.
inline std::uint32_t naive_ed(const eedist::SymbolicSequence& a,
                              const eedist::SymbolicSequence& b) {
    struct Rec {
        const eedist::SymbolicSequence& a;
        const eedist::SymbolicSequence& b;
        std::vector<std::int64_t>& memo;
        std::int64_t run(std::size_t i, std::size_t j) {
            std::int64_t& slot = memo[i * (b.size() + 1) + j];
            if (slot >= 0) {
                return slot;
            }
            std::int64_t r;
            if (i == a.size()) {
                r = static_cast<std::int64_t>(b.size() - j);
            } else if (j == b.size()) {
                r = static_cast<std::int64_t>(a.size() - i);
            } else {
                const std::int64_t sub = run(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
                const std::int64_t del = run(i + 1, j) + 1;
                const std::int64_t ins = run(i, j + 1) + 1;
                r = std::min({sub, del, ins});
            }
            slot = r;
            return r;
        }
    };
    std::vector<std::int64_t> memo((a.size() + 1) * (b.size() + 1), -1);
    Rec rec{a, b, memo};
    return static_cast<std::uint32_t>(rec.run(0, 0));
}

inline std::uint32_t naive_lcss(const eedist::SymbolicSequence& a,
                                const eedist::SymbolicSequence& b) {
    struct Rec {
        const eedist::SymbolicSequence& a;
        const eedist::SymbolicSequence& b;
        std::vector<std::int64_t>& memo;
        std::int64_t run(std::size_t i, std::size_t j) {
            std::int64_t& slot = memo[i * (b.size() + 1) + j];
            if (slot >= 0) {
                return slot;
            }
            std::int64_t r;
            if (i == a.size() || j == b.size()) {
                r = 0;
            } else if (a[i] == b[j]) {
                r = run(i + 1, j + 1) + 1;
            } else {
                r = std::max(run(i + 1, j), run(i, j + 1));
            }
            slot = r;
            return r;
        }
    };
    std::vector<std::int64_t> memo((a.size() + 1) * (b.size() + 1), -1);
    Rec rec{a, b, memo};
    return static_cast<std::uint32_t>(rec.run(0, 0));
}

// L1 distance between the symbol-count maps.
inline std::uint32_t l1_histogram(const eedist::SymbolicSequence& s,
                                  const eedist::SymbolicSequence& t) {
    std::map<eedist::Symbol, std::int64_t> counts;
    for (std::size_t i = 0; i < s.size(); ++i) {
        ++counts[s[i]];
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        --counts[t[i]];
    }
    std::int64_t sum = 0;
    for (const auto& [sym, c] : counts) {
        sum += std::llabs(c);
    }
    return static_cast<std::uint32_t>(sum);
}

inline eedist::IndexMatch scan_nn(const std::vector<eedist::SymbolicSequence>& items,
                                  const eedist::SymbolicSequence& q,
                                  const eedist::MetricSpec& metric) {
    eedist::IndexMatch best{items.size(), std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double d = eedist::symbolic_distance(q, items[i], metric);
        if (d < best.distance) {
            best = eedist::IndexMatch{i, d};
        }
    }
    return best;
}

inline std::vector<eedist::IndexMatch> scan_range(
    const std::vector<eedist::SymbolicSequence>& items, const eedist::SymbolicSequence& q,
    const eedist::MetricSpec& metric, double radius) {
    std::vector<eedist::IndexMatch> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double d = eedist::symbolic_distance(q, items[i], metric);
        if (d <= radius) {
            out.push_back(eedist::IndexMatch{i, d});
        }
    }
    return out;
}

// Uniform double in [0, 1); bit arithmetic keeps the stream identical across
// standard libraries.
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline eedist::TimeSeries random_series(std::mt19937_64& rng, std::size_t n) {
    eedist::TimeSeries t(n);
    double level = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        level += unit_real(rng) - 0.5;
        t[i] = level;
    }
    return t;
}

inline eedist::SymbolicSequence random_word(std::mt19937_64& rng, std::size_t max_len,
                                            std::size_t alpha) {
    const std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
    std::vector<eedist::Symbol> symbols(len);
    for (std::size_t i = 0; i < len; ++i) {
        symbols[i] = static_cast<eedist::Symbol>(rng() % alpha);
    }
    return eedist::SymbolicSequence(std::move(symbols), alpha);
}

}  // namespace oracle
