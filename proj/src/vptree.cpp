#include "eedist/vptree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "eedist/errors.hpp"

namespace eedist {

namespace {

// splitmix64; self-contained so vantage choices do not depend on any
// library's distribution implementation.
std::uint64_t next_rand(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

MetricIndex MetricIndex::build(std::vector<SymbolicSequence> items, const MetricSpec& metric,
                               std::uint64_t seed) {
    if (items.empty()) {
        throw InvalidParameter("cannot build an index over zero items");
    }
    if (metric.kind == MetricKind::SaxMindist) {
        throw InvalidParameter("sax mindist is not a metric; the index needs ed or eed");
    }
    if (metric.kind != MetricKind::Ed && metric.kind != MetricKind::Eed) {
        throw InvalidParameter(to_string(metric.kind) +
                               " is not indexable; the index needs ed or eed");
    }
    validate(metric);

    MetricIndex idx;
    idx.items_ = std::move(items);
    idx.metric_ = metric;
    std::vector<std::size_t> ids(idx.items_.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::uint64_t state = seed;
    idx.root_ = idx.build_node(ids, state);
    return idx;
}

double MetricIndex::distance(const SymbolicSequence& a, const SymbolicSequence& b) const {
    return symbolic_distance(a, b, metric_);
}

std::int32_t MetricIndex::build_node(std::vector<std::size_t>& ids, std::uint64_t& state) {
    if (ids.empty()) {
        return kNone;
    }
    const auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    if (ids.size() <= kLeafCapacity) {
        std::sort(ids.begin(), ids.end());
        nodes_[self].bucket = std::move(ids);
        return self;
    }

    const std::size_t pos = next_rand(state) % ids.size();
    const std::size_t vantage = ids[pos];
    ids[pos] = ids.back();
    ids.pop_back();

    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(ids.size());
    for (const std::size_t id : ids) {
        ranked.emplace_back(distance(items_[vantage], items_[id]), id);
    }
    std::sort(ranked.begin(), ranked.end());

    // Lower median; the split then advances past radius duplicates so the
    // outside subtree holds strictly greater distances.
    const double radius = ranked[(ranked.size() - 1) / 2].first;
    const auto split = std::upper_bound(
        ranked.begin(), ranked.end(), radius,
        [](double r, const std::pair<double, std::size_t>& p) { return r < p.first; });

    std::vector<std::size_t> inside_ids;
    inside_ids.reserve(static_cast<std::size_t>(split - ranked.begin()));
    for (auto it = ranked.begin(); it != split; ++it) {
        inside_ids.push_back(it->second);
    }
    std::vector<std::size_t> outside_ids;
    outside_ids.reserve(static_cast<std::size_t>(ranked.end() - split));
    for (auto it = split; it != ranked.end(); ++it) {
        outside_ids.push_back(it->second);
    }

    nodes_[self].vantage = vantage;
    nodes_[self].radius = radius;
    const std::int32_t inside = build_node(inside_ids, state);
    nodes_[self].inside = inside;
    const std::int32_t outside = build_node(outside_ids, state);
    nodes_[self].outside = outside;
    return self;
}

IndexMatch MetricIndex::query_nn(const SymbolicSequence& query) const {
    QueryStats stats;
    return query_nn(query, stats);
}

IndexMatch MetricIndex::query_nn(const SymbolicSequence& query, QueryStats& stats) const {
    IndexMatch best{std::numeric_limits<std::size_t>::max(),
                    std::numeric_limits<double>::infinity()};
    nn_walk(root_, query, best, stats);
    return best;
}

void MetricIndex::nn_walk(std::int32_t node, const SymbolicSequence& query, IndexMatch& best,
                          QueryStats& stats) const {
    if (node == kNone) {
        return;
    }
    ++stats.nodes_visited;
    const Node& nd = nodes_[node];
    if (!nd.bucket.empty()) {
        for (const std::size_t id : nd.bucket) {
            ++stats.distance_calls;
            const double d = distance(query, items_[id]);
            if (d < best.distance || (d == best.distance && id < best.id)) {
                best = IndexMatch{id, d};
            }
        }
        return;
    }
    ++stats.distance_calls;
    const double dv = distance(query, items_[nd.vantage]);
    if (dv < best.distance || (dv == best.distance && nd.vantage < best.id)) {
        best = IndexMatch{nd.vantage, dv};
    }
    const bool inside_first = dv <= nd.radius;
    nn_walk(inside_first ? nd.inside : nd.outside, query, best, stats);
    // Items on the far side are at least |dv - radius| away; a tie at exactly
    // best.distance could still hold a lower id, so only a strict excess
    // prunes.
    if (std::fabs(dv - nd.radius) <= best.distance) {
        nn_walk(inside_first ? nd.outside : nd.inside, query, best, stats);
    }
}

std::vector<IndexMatch> MetricIndex::query_range(const SymbolicSequence& query,
                                                 double radius) const {
    QueryStats stats;
    return query_range(query, radius, stats);
}

std::vector<IndexMatch> MetricIndex::query_range(const SymbolicSequence& query, double radius,
                                                 QueryStats& stats) const {
    if (!(radius >= 0.0)) {
        throw InvalidParameter("range radius must be >= 0");
    }
    std::vector<IndexMatch> out;
    range_walk(root_, query, radius, out, stats);
    std::sort(out.begin(), out.end(), [](const IndexMatch& a, const IndexMatch& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.id < b.id;
    });
    return out;
}

void MetricIndex::range_walk(std::int32_t node, const SymbolicSequence& query, double radius,
                             std::vector<IndexMatch>& out, QueryStats& stats) const {
    if (node == kNone) {
        return;
    }
    ++stats.nodes_visited;
    const Node& nd = nodes_[node];
    if (!nd.bucket.empty()) {
        for (const std::size_t id : nd.bucket) {
            ++stats.distance_calls;
            const double d = distance(query, items_[id]);
            if (d <= radius) {
                out.push_back(IndexMatch{id, d});
            }
        }
        return;
    }
    ++stats.distance_calls;
    const double dv = distance(query, items_[nd.vantage]);
    if (dv <= radius) {
        out.push_back(IndexMatch{nd.vantage, dv});
    }
    if (dv - nd.radius <= radius) {
        range_walk(nd.inside, query, radius, out, stats);
    }
    if (nd.radius - dv <= radius) {
        range_walk(nd.outside, query, radius, out, stats);
    }
}

void MetricIndex::require_metric(const MetricSpec& expected) const {
    if (!(expected == metric_)) {
        throw InvalidParameter("index was built with a different metric spec");
    }
}

std::size_t MetricIndex::audit() const {
    std::vector<std::size_t> seen;
    audit_walk(root_, seen);
    if (seen.size() != items_.size()) {
        throw std::logic_error("index does not cover every item exactly once");
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] != i) {
            throw std::logic_error("index does not cover every item exactly once");
        }
    }
    return nodes_.size();
}

void MetricIndex::audit_walk(std::int32_t node, std::vector<std::size_t>& seen) const {
    if (node == kNone) {
        return;
    }
    const Node& nd = nodes_[node];
    if (!nd.bucket.empty()) {
        seen.insert(seen.end(), nd.bucket.begin(), nd.bucket.end());
        return;
    }
    seen.push_back(nd.vantage);
    std::vector<std::size_t> sub;
    collect_ids(nd.inside, sub);
    for (const std::size_t id : sub) {
        if (!(distance(items_[nd.vantage], items_[id]) <= nd.radius)) {
            throw std::logic_error("inside item beyond the vantage radius");
        }
    }
    sub.clear();
    collect_ids(nd.outside, sub);
    for (const std::size_t id : sub) {
        if (!(distance(items_[nd.vantage], items_[id]) > nd.radius)) {
            throw std::logic_error("outside item within the vantage radius");
        }
    }
    audit_walk(nd.inside, seen);
    audit_walk(nd.outside, seen);
}

void MetricIndex::collect_ids(std::int32_t node, std::vector<std::size_t>& out) const {
    if (node == kNone) {
        return;
    }
    const Node& nd = nodes_[node];
    if (!nd.bucket.empty()) {
        out.insert(out.end(), nd.bucket.begin(), nd.bucket.end());
        return;
    }
    out.push_back(nd.vantage);
    collect_ids(nd.inside, out);
    collect_ids(nd.outside, out);
}

}  // namespace eedist
