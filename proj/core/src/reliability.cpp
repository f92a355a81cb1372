#include "connmat/reliability.hpp"

#include <map>
#include <numeric>
#include <random>
#include <string>

#include "connmat/errors.hpp"

namespace connmat {

namespace {

class FactorizationEngine {
public:
    explicit FactorizationEngine(const ReliabilityOptions& options)
        : options_(options), rng_(options.seed) {}

    Polynomial run(const Multigraph& g) {
        if (g.node_count() == 1) return Polynomial::constant(1);
        if (!g.is_connected()) return {};

        std::string key;
        if (options_.memoize) {
            key = g.canonical_key();
            const auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }

        const auto [u, v] = pick_bundle(g);
        const Polynomial contracted = run(g.contract(u, v));
        const Polynomial deleted = run(g.delete_one(u, v));
        // R = p R(G.a) + (1-p) R(G-a)
        Polynomial out = contracted.shifted(1) + deleted - deleted.shifted(1);

        if (options_.memoize) memo_.emplace(std::move(key), out);
        return out;
    }

private:
    std::pair<int, int> pick_bundle(const Multigraph& g) {
        const auto& edges = g.edges();
        switch (options_.pivot) {
            case PivotRule::FirstEdge:
                return edges.begin()->first;
            case PivotRule::Random: {
                std::uniform_int_distribution<std::size_t> dist(0, edges.size() - 1);
                auto it = edges.begin();
                std::advance(it, dist(rng_));
                return it->first;
            }
            case PivotRule::HighestMultiplicity:
            default: {
                auto best = edges.begin();
                for (auto it = edges.begin(); it != edges.end(); ++it)
                    if (it->second > best->second) best = it;
                return best->first;
            }
        }
    }

    const ReliabilityOptions& options_;
    std::mt19937_64 rng_;
    std::map<std::string, Polynomial> memo_;
};

}  // namespace

Polynomial reliability_polynomial(const Multigraph& g, const ReliabilityOptions& options) {
    if (g.edge_count() > options.max_edges)
        throw SizeLimitError("reliability: " + std::to_string(g.edge_count()) +
                             " edges exceed the cap " + std::to_string(options.max_edges));
    FactorizationEngine engine(options);
    return engine.run(g);
}

std::vector<long long> pathset_counts(const Multigraph& g, long long max_edges) {
    const long long e = g.edge_count();
    if (e > max_edges)
        throw SizeLimitError("pathset counts enumerate 2^E subsets; E=" + std::to_string(e) +
                             " exceeds the cap " + std::to_string(max_edges));
    std::vector<std::pair<int, int>> expanded;
    expanded.reserve(static_cast<std::size_t>(e));
    for (const auto& [pair, mult] : g.edges())
        for (long long k = 0; k < mult; ++k) expanded.push_back(pair);

    const int nodes = g.node_count();
    std::vector<long long> counts(static_cast<std::size_t>(e) + 1, 0);
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        int picked = 0;
        for (std::size_t bit = 0; bit < expanded.size(); ++bit) {
            if (!(mask >> bit & 1)) continue;
            ++picked;
            const int ru = find(expanded[bit].first - 1), rv = find(expanded[bit].second - 1);
            if (ru != rv) parent[static_cast<std::size_t>(ru)] = rv;
        }
        const int root = find(0);
        bool connected = true;
        for (int i = 1; i < nodes && connected; ++i) connected = find(i) == root;
        if (connected) ++counts[static_cast<std::size_t>(picked)];
    }
    return counts;
}

LeadingTerm mgr(const Polynomial& r, long long edge_count) {
    if (edge_count < 0) throw DomainError("mgr: edge count must be nonnegative");
    if (r.degree() > edge_count)
        throw DomainError("mgr: polynomial degree exceeds the claimed edge count");
    return LeadingTerm{r.coeff(static_cast<int>(edge_count)), edge_count};
}

BigInt alpha_via_reliability(int n, const Partition& a, const ReliabilityOptions& options) {
    const Multigraph quotient = quotient_graph(n, a);
    const long long g = quotient.edge_count();
    const Polynomial r = reliability_polynomial(quotient, options);
    const BigInt lead = r.coeff(static_cast<int>(g));
    return g % 2 == 0 ? lead : -lead;
}

BigInt leading_term_complete(int m, const ReliabilityOptions& options) {
    if (m < 1) throw DomainError("complete graph needs at least one node");
    if (m > 8)
        throw SizeLimitError("leading term of K_m capped at m=8 (" + std::to_string(m) +
                             " requested)");
    const Multigraph g = complete_graph(m);
    const Polynomial r = reliability_polynomial(g, options);
    return r.coeff(static_cast<int>(g.edge_count()));
}

}  // namespace connmat
