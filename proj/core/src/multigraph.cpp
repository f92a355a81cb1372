#include "connmat/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "connmat/errors.hpp"

namespace connmat {

Multigraph::Multigraph(int node_count) : node_count_(node_count) {
    if (node_count < 1) throw DomainError("multigraph needs at least one node");
}

long long Multigraph::multiplicity(int u, int v) const {
    const auto it = edges_.find(std::minmax(u, v));
    return it == edges_.end() ? 0 : it->second;
}

void Multigraph::add_edges(int u, int v, long long k) {
    if (u < 1 || u > node_count_ || v < 1 || v > node_count_)
        throw DomainError("edge endpoint out of range 1.." + std::to_string(node_count_));
    if (k < 1) throw DomainError("edge multiplicity must be >= 1");
    if (u == v) {
        dropped_loops_ += k;
        return;
    }
    edges_[std::minmax(u, v)] += k;
    edge_count_ += k;
}

bool Multigraph::is_connected() const {
    std::vector<int> parent(static_cast<std::size_t>(node_count_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [pair, mult] : edges_) {
        const int ru = find(pair.first - 1), rv = find(pair.second - 1);
        if (ru != rv) parent[static_cast<std::size_t>(ru)] = rv;
    }
    const int root = find(0);
    for (int i = 1; i < node_count_; ++i)
        if (find(i) != root) return false;
    return true;
}

Multigraph Multigraph::contract(int u, int v) const {
    if (u == v) throw DomainError("contract: endpoints must differ");
    if (multiplicity(u, v) == 0) throw DomainError("contract: no such edge");
    const int keep = std::min(u, v), gone = std::max(u, v);
    auto relabel = [&](int x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
    Multigraph out(node_count_ - 1);
    out.dropped_loops_ = dropped_loops_;
    const std::pair<int, int> pivot = std::minmax(u, v);
    for (const auto& [pair, mult] : edges_) {
        long long m = mult;
        if (pair == pivot && --m == 0) continue;  // the contracted edge itself
        out.add_edges(relabel(pair.first), relabel(pair.second), m);
    }
    return out;
}

Multigraph Multigraph::delete_one(int u, int v) const {
    const auto key = std::minmax(u, v);
    const auto it = edges_.find(key);
    if (it == edges_.end()) throw DomainError("delete_one: no such edge");
    Multigraph out = *this;
    if (--out.edges_[key] == 0) out.edges_.erase(key);
    --out.edge_count_;
    return out;
}

std::string Multigraph::canonical_key() const {
    const std::size_t n = static_cast<std::size_t>(node_count_);
    // color refinement: start from weighted degree, fold in neighbor colors
    std::vector<long long> color(n, 0);
    for (const auto& [pair, mult] : edges_) {
        color[static_cast<std::size_t>(pair.first) - 1] += mult;
        color[static_cast<std::size_t>(pair.second) - 1] += mult;
    }
    for (int round = 0; round < 3; ++round) {
        std::vector<std::pair<std::vector<long long>, std::size_t>> sigs(n);
        for (std::size_t i = 0; i < n; ++i) sigs[i] = {{color[i]}, i};
        for (const auto& [pair, mult] : edges_) {
            const std::size_t a = static_cast<std::size_t>(pair.first) - 1;
            const std::size_t b = static_cast<std::size_t>(pair.second) - 1;
            sigs[a].first.push_back(color[b] * 64 + mult);
            sigs[b].first.push_back(color[a] * 64 + mult);
        }
        for (auto& [sig, i] : sigs) std::sort(sig.begin() + 1, sig.end());
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t rank = 0; rank < n; ++rank) {
            const std::size_t node = sorted[rank].second;
            color[node] = static_cast<long long>(
                rank > 0 && sorted[rank].first == sorted[rank - 1].first
                    ? color[sorted[rank - 1].second]
                    : static_cast<long long>(rank));
        }
    }
    // stable relabel by (color, original index), then encode the labeled graph
    std::vector<int> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](int a, int b) { return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)]; });
    std::vector<int> new_label(n);
    for (std::size_t rank = 0; rank < n; ++rank)
        new_label[static_cast<std::size_t>(by_rank[rank])] = static_cast<int>(rank) + 1;

    std::vector<std::tuple<int, int, long long>> relabeled;
    relabeled.reserve(edges_.size());
    for (const auto& [pair, mult] : edges_) {
        const auto [a, b] = std::minmax(new_label[static_cast<std::size_t>(pair.first) - 1],
                                        new_label[static_cast<std::size_t>(pair.second) - 1]);
        relabeled.emplace_back(a, b, mult);
    }
    std::sort(relabeled.begin(), relabeled.end());

    std::string key = std::to_string(node_count_) + ";";
    for (const auto& [a, b, mult] : relabeled)
        key += std::to_string(a) + "-" + std::to_string(b) + ":" + std::to_string(mult) + ",";
    return key;
}

Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edges(u, v);
    return g;
}

Multigraph quotient_graph(int n, const Partition& a) {
    if (a.n() != n) throw DomainError("quotient: partition is not over {1.." + std::to_string(n) + "}");
    const int m = a.num_blocks();
    std::vector<long long> sizes(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= n; ++i) ++sizes[static_cast<std::size_t>(a.block_of(i))];
    Multigraph g(m);
    for (int i = 0; i < m; ++i) {
        const long long s = sizes[static_cast<std::size_t>(i)];
        if (s >= 2) g.add_edges(i + 1, i + 1, s * (s - 1) / 2);  // within-block pairs drop as loops
        for (int j = i + 1; j < m; ++j)
            g.add_edges(i + 1, j + 1, s * sizes[static_cast<std::size_t>(j)]);
    }
    return g;
}

Multigraph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long node_count = -1;
    Multigraph g(1);
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        if (node_count < 0) {
            if (!(fields >> node_count) || node_count < 1)
                throw ParseError("graph line " + std::to_string(lineno) +
                                 ": expected a positive node count");
            std::string rest;
            if (fields >> rest)
                throw ParseError("graph line " + std::to_string(lineno) +
                                 ": node-count line has trailing fields");
            g = Multigraph(static_cast<int>(node_count));
            continue;
        }
        long long u, v, k;
        if (!(fields >> u >> v >> k))
            throw ParseError("graph line " + std::to_string(lineno) + ": expected 'u v k'");
        std::string rest;
        if (fields >> rest)
            throw ParseError("graph line " + std::to_string(lineno) + ": trailing fields");
        try {
            g.add_edges(static_cast<int>(u), static_cast<int>(v), k);
        } catch (const DomainError& err) {
            throw ParseError("graph line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    if (node_count < 0) throw ParseError("graph file is empty");
    return g;
}

std::string graph_to_string(const Multigraph& g) {
    std::string out = std::to_string(g.node_count()) + "\n";
    for (const auto& [pair, mult] : g.edges())
        out += std::to_string(pair.first) + " " + std::to_string(pair.second) + " " +
               std::to_string(mult) + "\n";
    return out;
}

}  // namespace connmat
