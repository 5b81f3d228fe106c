#pragma once

#include <optional>
#include <string>

#include "eedist/symbolic.hpp"

namespace eedist {

enum class MetricKind { Ed, Eed, SaxMindist, LcssSim, Euclidean };

std::string to_string(MetricKind kind);

/// Accepts the CLI tokens: ed, eed, sax, lcss, euclidean.
MetricKind metric_kind_from_string(const std::string& token);

struct MetricSpec {
    MetricKind kind = MetricKind::Ed;
    // Frequency factor; present iff kind == Eed.
    std::optional<double> lambda;

    bool operator==(const MetricSpec&) const = default;
};

/// Throws InvalidParameter unless lambda is present exactly for EED and
/// nonnegative.
void validate(const MetricSpec& metric);

/// Distance between two words under ED, EED, or the LCSS-derived indel
/// distance |s| + |t| - 2*lcss(s, t). MINDIST and Euclidean need more than
/// the two words and are rejected here.
double symbolic_distance(const SymbolicSequence& s, const SymbolicSequence& t,
                         const MetricSpec& metric);

}  // namespace eedist
