#include "eedist/metric.hpp"

#include "eedist/distances.hpp"
#include "eedist/errors.hpp"

namespace eedist {

std::string to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::Ed:
            return "ed";
        case MetricKind::Eed:
            return "eed";
        case MetricKind::SaxMindist:
            return "sax";
        case MetricKind::LcssSim:
            return "lcss";
        case MetricKind::Euclidean:
            return "euclidean";
    }
    throw InvalidParameter("unknown metric kind");
}

MetricKind metric_kind_from_string(const std::string& token) {
    if (token == "ed") return MetricKind::Ed;
    if (token == "eed") return MetricKind::Eed;
    if (token == "sax") return MetricKind::SaxMindist;
    if (token == "lcss") return MetricKind::LcssSim;
    if (token == "euclidean") return MetricKind::Euclidean;
    throw InvalidParameter("unknown metric '" + token +
                           "'; expected one of ed, eed, sax, lcss, euclidean");
}

void validate(const MetricSpec& metric) {
    if (metric.kind == MetricKind::Eed) {
        if (!metric.lambda) {
            throw InvalidParameter("eed requires a lambda value");
        }
        if (!(*metric.lambda >= 0.0)) {
            throw InvalidParameter("frequency factor lambda must be >= 0");
        }
    } else if (metric.lambda) {
        throw InvalidParameter(to_string(metric.kind) + " does not take a lambda value");
    }
}

double symbolic_distance(const SymbolicSequence& s, const SymbolicSequence& t,
                         const MetricSpec& metric) {
    validate(metric);
    switch (metric.kind) {
        case MetricKind::Ed:
            return static_cast<double>(edit_distance(s, t));
        case MetricKind::Eed:
            return eed(s, t, EedParams{*metric.lambda});
        case MetricKind::LcssSim:
            return static_cast<double>(s.size() + t.size() -
                                       2 * static_cast<std::size_t>(lcss(s, t)));
        case MetricKind::SaxMindist:
        case MetricKind::Euclidean:
            break;
    }
    throw InvalidParameter(to_string(metric.kind) + " is not a plain word distance");
}

}  // namespace eedist
