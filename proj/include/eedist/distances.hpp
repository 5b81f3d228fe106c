#pragma once

#include <cstdint>

#include "eedist/symbolic.hpp"

namespace eedist {

struct EedParams {
    double lambda = 1.0;  // frequency factor, must be >= 0
};

// Unit-cost Levenshtein distance (insert, delete, substitute).
std::uint32_t edit_distance(const SymbolicSequence& s, const SymbolicSequence& t);

// D(s,t) = |s| + |t| - 2 * sum_i min(f_i(s), f_i(t)).
// Equal to the L1 distance between the character-count histograms; zero
// exactly when s and t are anagrams.
std::uint32_t histogram_divergence(const SymbolicSequence& s, const SymbolicSequence& t);

// Composes an edit-distance / divergence pair into the weighted distance.
// Every EED code path funnels through this so equal inputs give bit-identical
// doubles.
inline double eed_value(std::uint32_t ed, std::uint32_t divergence, double lambda) {
    return static_cast<double>(ed) + lambda * static_cast<double>(divergence);
}

// Extended edit distance: ED(s,t) + lambda * D(s,t). The integer cores keep
// the metric axioms exact; floating arithmetic enters only in the final
// multiply-add. lambda = 0 recovers the plain edit distance.
double eed(const SymbolicSequence& s, const SymbolicSequence& t, EedParams p);

// Length of the longest (not necessarily contiguous) common subsequence.
std::uint32_t lcss(const SymbolicSequence& s, const SymbolicSequence& t);

// Number of distinct symbols appearing in either sequence.
std::uint32_t distinct_char_count(const SymbolicSequence& s, const SymbolicSequence& t);

}  // namespace eedist
