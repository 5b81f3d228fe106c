#include "eedist/distances.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "eedist/errors.hpp"

namespace eedist {

std::uint32_t edit_distance(const SymbolicSequence& s, const SymbolicSequence& t) {
    // Roll two rows over the shorter side: O(min(m,n)) memory.
    const std::vector<Symbol>* rows = &s.symbols();
    const std::vector<Symbol>* cols = &t.symbols();
    if (rows->size() < cols->size()) {
        std::swap(rows, cols);
    }
    const std::size_t m = rows->size();
    const std::size_t n = cols->size();
    if (n == 0) {
        return static_cast<std::uint32_t>(m);
    }
    std::vector<std::uint32_t> prev(n + 1);
    std::vector<std::uint32_t> cur(n + 1);
    std::iota(prev.begin(), prev.end(), 0u);
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = static_cast<std::uint32_t>(i);
        const Symbol ri = (*rows)[i - 1];
        for (std::size_t j = 1; j <= n; ++j) {
            const std::uint32_t sub = prev[j - 1] + (ri == (*cols)[j - 1] ? 0u : 1u);
            const std::uint32_t ins = std::min(prev[j], cur[j - 1]) + 1u;
            cur[j] = std::min(sub, ins);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::uint32_t histogram_divergence(const SymbolicSequence& s, const SymbolicSequence& t) {
    const FrequencyHistogram hs(s);
    const FrequencyHistogram ht(t);
    const std::size_t bound = std::max(hs.counts().size(), ht.counts().size());
    std::uint64_t common = 0;
    for (std::size_t i = 0; i < bound; ++i) {
        common += std::min(hs.count(i), ht.count(i));
    }
    return static_cast<std::uint32_t>(s.size() + t.size() - 2 * common);
}

double eed(const SymbolicSequence& s, const SymbolicSequence& t, EedParams p) {
    if (!(p.lambda >= 0.0)) {
        throw InvalidParameter("frequency factor lambda must be >= 0");
    }
    return eed_value(edit_distance(s, t), histogram_divergence(s, t), p.lambda);
}

std::uint32_t lcss(const SymbolicSequence& s, const SymbolicSequence& t) {
    const std::vector<Symbol>* rows = &s.symbols();
    const std::vector<Symbol>* cols = &t.symbols();
    if (rows->size() < cols->size()) {
        std::swap(rows, cols);
    }
    const std::size_t m = rows->size();
    const std::size_t n = cols->size();
    if (n == 0) {
        return 0;
    }
    std::vector<std::uint32_t> prev(n + 1, 0u);
    std::vector<std::uint32_t> cur(n + 1, 0u);
    for (std::size_t i = 1; i <= m; ++i) {
        const Symbol ri = (*rows)[i - 1];
        for (std::size_t j = 1; j <= n; ++j) {
            cur[j] = ri == (*cols)[j - 1] ? prev[j - 1] + 1u : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::uint32_t distinct_char_count(const SymbolicSequence& s, const SymbolicSequence& t) {
    const std::size_t bound = std::max(s.alphabet_size(), t.alphabet_size());
    std::vector<bool> seen(bound, false);
    for (const Symbol sym : s.symbols()) {
        seen[sym] = true;
    }
    for (const Symbol sym : t.symbols()) {
        seen[sym] = true;
    }
    return static_cast<std::uint32_t>(std::count(seen.begin(), seen.end(), true));
}

}  // namespace eedist
