#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "connmat/partition.hpp"

namespace connmat {

/// Undirected multigraph on nodes {1..node_count} with edge multiplicities.
/// Self-loops are never stored: they are irrelevant to reliability and are
/// dropped on sight, with a running count kept for degree bookkeeping.
class Multigraph {
public:
    explicit Multigraph(int node_count);

    int node_count() const { return node_count_; }
    long long edge_count() const { return edge_count_; }
    long long dropped_loops() const { return dropped_loops_; }
    const std::map<std::pair<int, int>, long long>& edges() const { return edges_; }
    long long multiplicity(int u, int v) const;

    /// Adds k parallel edges between u and v; u == v adds to the loop count.
    void add_edges(int u, int v, long long k = 1);

    /// Connectivity of the underlying simple graph (single node: connected).
    bool is_connected() const;

    /// Merges v into u and relabels to keep nodes contiguous. The (u,v)
    /// bundle becomes loops and is dropped; the loop count accumulates over
    /// the graph's construction history.
    Multigraph contract(int u, int v) const;

    /// Removes one edge of the (u,v) bundle.
    Multigraph delete_one(int u, int v) const;

    /// A labeled encoding after degree-sequence-refined relabeling. Equal keys
    /// imply isomorphic graphs, so it is a sound memoization key; the
    /// refinement only improves the hit rate.
    std::string canonical_key() const;

private:
    int node_count_ = 0;
    long long edge_count_ = 0;
    long long dropped_loops_ = 0;
    std::map<std::pair<int, int>, long long> edges_;
};

Multigraph complete_graph(int n);

/// K_n with the nodes identified by the blocks of a: blocks become nodes,
/// block pair (i,j) carries |block_i|*|block_j| parallel edges, and the
/// C(|block_i|,2) within-block edges are dropped as loops.
Multigraph quotient_graph(int n, const Partition& a);

/// Format: first line node count, then "u v k" lines (1-based endpoints,
/// multiplicity k >= 1). Blank lines and '#' comments are ignored.
Multigraph parse_graph(std::istream& in);

std::string graph_to_string(const Multigraph& g);

}  // namespace connmat
