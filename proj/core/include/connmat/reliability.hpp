#pragma once

#include <cstdint>
#include <vector>

#include "connmat/bigint.hpp"
#include "connmat/multigraph.hpp"
#include "connmat/polynomial.hpp"

namespace connmat {

enum class PivotRule {
    HighestMultiplicity,  // default: an edge in a max-multiplicity bundle
    FirstEdge,            // lexicographically smallest bundle
    Random,               // seeded; results must not depend on the choice
};

struct ReliabilityOptions {
    long long max_edges = 40;
    /// Memoization keyed by Multigraph::canonical_key(). Off by default so a
    /// run is a plain audit of the recursion.
    bool memoize = false;
    PivotRule pivot = PivotRule::HighestMultiplicity;
    std::uint64_t seed = 0;
};

/// All-terminal reliability polynomial: R(G)(p) = sum over edge subsets S
/// (parallel copies distinct) that span a connected subgraph of
/// p^|S| (1-p)^(E-|S|). Computed by the factorization recursion
/// R(G) = p R(G.a) + (1-p) R(G-a); loops created by contraction are dropped.
Polynomial reliability_polynomial(const Multigraph& g, const ReliabilityOptions& options = {});

/// Brute force over all 2^E edge subsets: C[i] = number of connected
/// spanning subsets with exactly i edges. The oracle identity
/// R = sum C_i p^i (1-p)^(E-i) ties this to the recursion above.
std::vector<long long> pathset_counts(const Multigraph& g, long long max_edges = 24);

struct LeadingTerm {
    BigInt coeff;
    long long degree = 0;
};

/// The term of r whose degree equals the graph's edge count; zero coefficient
/// when r's degree falls short.
LeadingTerm mgr(const Polynomial& r, long long edge_count);

/// (-1)^g times the degree-g coefficient of R(K_n^a), g the quotient's edge
/// count. Equals connectivity_number(a) — the bridge between the algebraic
/// and the reliability route.
BigInt alpha_via_reliability(int n, const Partition& a, const ReliabilityOptions& options = {});

/// Coefficient of degree C(m,2) in R(K_m); its absolute value is (m-1)!.
BigInt leading_term_complete(int m, const ReliabilityOptions& options = {});

}  // namespace connmat
