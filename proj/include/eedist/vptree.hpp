#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eedist/metric.hpp"
#include "eedist/symbolic.hpp"

namespace eedist {

struct QueryStats {
    std::size_t distance_calls = 0;
    std::size_t nodes_visited = 0;
};

struct IndexMatch {
    std::size_t id = 0;
    double distance = 0.0;

    bool operator==(const IndexMatch&) const = default;
};

/// Exact nearest-neighbor index over ED or EED (fixed lambda). Vantage-point
/// partitioning; pruning leans on the triangle inequality, so only true
/// metrics are accepted at build time. Immutable once built; concurrent
/// queries need no synchronization.
class MetricIndex {
public:
    /// Vantage points are drawn deterministically from the seed. Leaf buckets
    /// hold at most 16 items. Rejects metrics other than ED and EED.
    static MetricIndex build(std::vector<SymbolicSequence> items, const MetricSpec& metric,
                             std::uint64_t seed);

    /// Exactly the linear-scan nearest neighbor; distance ties resolve to the
    /// lowest item id. A subtree is pruned only when |d(q, vantage) - radius|
    /// exceeds the current best distance.
    IndexMatch query_nn(const SymbolicSequence& query) const;
    IndexMatch query_nn(const SymbolicSequence& query, QueryStats& stats) const;

    /// All items within the radius (inclusive), sorted by (distance, id).
    std::vector<IndexMatch> query_range(const SymbolicSequence& query, double radius) const;
    std::vector<IndexMatch> query_range(const SymbolicSequence& query, double radius,
                                        QueryStats& stats) const;

    /// Distances from one index are not comparable with another spec (a
    /// different lambda reshapes the space); callers holding an expected spec
    /// assert it here before querying.
    void require_metric(const MetricSpec& expected) const;

    std::size_t size() const { return items_.size(); }
    const SymbolicSequence& item(std::size_t id) const { return items_[id]; }
    const MetricSpec& metric() const { return metric_; }

    /// Walks the whole tree checking that inside items sit within the radius
    /// of their vantage, outside items beyond it, and that every id appears
    /// exactly once. Returns the node count; throws std::logic_error on a
    /// violated invariant.
    std::size_t audit() const;

private:
    static constexpr std::size_t kLeafCapacity = 16;
    static constexpr std::int32_t kNone = -1;

    struct Node {
        std::size_t vantage = 0;
        double radius = 0.0;
        std::int32_t inside = kNone;
        std::int32_t outside = kNone;
        // Nonempty exactly for leaves; leaves carry no vantage.
        std::vector<std::size_t> bucket;
    };

    MetricIndex() = default;

    double distance(const SymbolicSequence& a, const SymbolicSequence& b) const;
    std::int32_t build_node(std::vector<std::size_t>& ids, std::uint64_t& state);
    void nn_walk(std::int32_t node, const SymbolicSequence& query, IndexMatch& best,
                 QueryStats& stats) const;
    void range_walk(std::int32_t node, const SymbolicSequence& query, double radius,
                    std::vector<IndexMatch>& out, QueryStats& stats) const;
    void audit_walk(std::int32_t node, std::vector<std::size_t>& seen) const;
    void collect_ids(std::int32_t node, std::vector<std::size_t>& out) const;

    std::vector<SymbolicSequence> items_;
    std::vector<Node> nodes_;
    std::int32_t root_ = kNone;
    MetricSpec metric_;
};

}  // namespace eedist
