#pragma once

#include <bit>
#include <map>
#include <vector>

#include "covercycle/edge_space.hpp"
#include "covercycle/matrix.hpp"
#include "covercycle/multigraph.hpp"

namespace covercycle {

struct CensusOptions {
    // Hard cap on |E|: the inclusion-exclusion walks 2^|E| subsets.
    int subset_limit = 20;
    // Leaf-prune each edge-deleted subgraph before building its matrix.
    bool prune_subgraphs = true;
};

/// Standard Moebius function.
inline int mobius(unsigned long long n) {
    if (n == 0) throw PreconditionError("mobius requires n >= 1");
    int factors = 0;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

namespace detail {

inline IntMatrix subgraph_cycle_matrix(const MultiGraph& sub, bool prune) {
    if (sub.directed) return directed_edge_matrix(sub);
    const MultiGraph effective = prune ? prune_leaves(sub) : sub;
    return edge_adjacency_matrix(symmetrize(effective));
}

inline void check_census_preconditions(const MultiGraph& g, const CensusOptions& opts) {
    g.validate();
    if (!is_connected(g)) throw PreconditionError("census requires a connected graph");
    if (g.edge_count() > opts.subset_limit)
        throw PreconditionError("|E| exceeds the subset limit (" + std::to_string(opts.subset_limit) + ")");
}

}  // namespace detail

/// omega(1..n_max) by inclusion-exclusion over all edge-deleted subgraphs:
/// omega(N) = sum over subsets s of (-1)^|s| Tr T_{G-s}^N. The empty
/// subgraph contributes trace 0. Result index N-1 holds omega(N).
/// Works for undirected graphs (matrix T) and directed graphs (matrix S).
inline std::vector<Int> covering_counts(const MultiGraph& g, unsigned n_max,
                                        const CensusOptions& opts = {}) {
    if (n_max == 0) throw PreconditionError("N = 0 is rejected");
    detail::check_census_preconditions(g, opts);
    const int m = g.edge_count();
    std::vector<Int> omega(n_max);
    for (EdgeSubset mask = 0; mask < (EdgeSubset{1} << m); ++mask) {
        const MultiGraph sub = delete_edges(g, mask);
        if (sub.edges.empty()) continue;  // empty graph: trace 0 by convention
        const IntMatrix t = detail::subgraph_cycle_matrix(sub, opts.prune_subgraphs);
        const std::vector<Int> tr = trace_powers(t, n_max);
        const bool odd = std::popcount(mask) % 2 == 1;
        for (unsigned n = 0; n < n_max; ++n) {
            if (odd)
                omega[n] -= tr[n];
            else
                omega[n] += tr[n];
        }
    }
    return omega;
}

/// Moebius inversion of a marked-start count table: theta(N) =
/// (1/N) sum_{g | N} mu(g) omega(N/g). The sum is exactly divisible by N.
inline Int invert_to_classes(const std::vector<Int>& omega, unsigned n) {
    if (n == 0 || n > omega.size()) throw PreconditionError("theta index out of computed range");
    Int acc = 0;
    for (unsigned g = 1; g <= n; ++g) {
        if (n % g) continue;
        acc += mobius(g) * omega[n / g - 1];
    }
    Int q, r;
    divide_qr(acc, Int(n), q, r);
    if (r != 0) throw ConsistencyError("Moebius sum for theta(" + std::to_string(n) + ") not divisible by N");
    return q;
}

/// Precomputed census of a single graph: omega and theta for N = 1..n_max.
struct CensusTable {
    unsigned n_max = 0;
    std::vector<Int> omega;  // index N-1
    std::vector<Int> theta;  // index N-1

    const Int& omega_at(unsigned n) const { return omega.at(n - 1); }
    const Int& theta_at(unsigned n) const { return theta.at(n - 1); }
};

inline CensusTable compute_census(const MultiGraph& g, unsigned n_max,
                                  const CensusOptions& opts = {}) {
    CensusTable table;
    table.n_max = n_max;
    table.omega = covering_counts(g, n_max, opts);
    table.theta.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) table.theta.push_back(invert_to_classes(table.omega, n));
    return table;
}

inline Int omega(const MultiGraph& g, unsigned n, const CensusOptions& opts = {}) {
    return covering_counts(g, n, opts)[n - 1];
}

inline Int theta(const MultiGraph& g, unsigned n, const CensusOptions& opts = {}) {
    return invert_to_classes(covering_counts(g, n, opts), n);
}

inline Int omega_directed(const MultiGraph& g, unsigned n, const CensusOptions& opts = {}) {
    if (!g.directed) throw PreconditionError("omega_directed requires a directed graph");
    return omega(g, n, opts);
}

inline Int theta_directed(const MultiGraph& g, unsigned n, const CensusOptions& opts = {}) {
    if (!g.directed) throw PreconditionError("theta_directed requires a directed graph");
    return theta(g, n, opts);
}

/// Number of Euler cycles, theta(|E|)/2 = omega(|E|)/(2|E|). Zero whenever
/// some vertex has odd degree.
inline Int euler_count(const MultiGraph& g, const CensusOptions& opts = {}) {
    if (g.directed) throw PreconditionError("euler_count requires an undirected graph");
    if (g.edges.empty()) return 0;
    const Int classes = theta(g, static_cast<unsigned>(g.edge_count()), opts);
    Int q, r;
    divide_qr(classes, Int(2), q, r);
    if (r != 0) throw ConsistencyError("theta(|E|) is odd; Euler pairing violated");
    return q;
}

struct HamiltonianReport {
    Int marked_count;      // omega(|V|): Hamiltonian cycles with marked start
    Int classes;           // theta(|V|): cycles up to rotation (oracle-validated)
    Rat paper_halved;      // theta(|V|)/2 as stated in the directed-case remark
    bool halved_integral;  // flags the /2 discrepancy when false
};

/// Hamiltonian cycle count via inclusion-exclusion over deleted vertices
/// with the directed vertex adjacency matrix.
inline HamiltonianReport hamiltonian_count(const MultiGraph& g, const CensusOptions& opts = {}) {
    if (!g.directed) throw PreconditionError("hamiltonian_count requires a directed graph");
    g.validate();
    if (!is_connected(g)) throw PreconditionError("hamiltonian_count requires a connected graph");
    const int v = g.vertex_count;
    if (v == 0 || v > opts.subset_limit)
        throw PreconditionError("|V| outside the supported subset range");
    Int marked = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
        // Keep vertices outside the mask, reindexed in order.
        std::vector<int> remap(static_cast<std::size_t>(v), -1);
        int kept = 0;
        for (int u = 0; u < v; ++u)
            if (!((mask >> u) & 1u)) remap[static_cast<std::size_t>(u)] = kept++;
        if (kept == 0) continue;
        MultiGraph sub;
        sub.vertex_count = kept;
        sub.directed = true;
        for (const Edge& e : g.edges) {
            const int a = remap[static_cast<std::size_t>(e.origin)];
            const int b = remap[static_cast<std::size_t>(e.end)];
            if (a >= 0 && b >= 0) sub.edges.push_back({a, b});
        }
        const Int tr = trace_power(directed_vertex_matrix(sub), static_cast<unsigned>(v));
        if (std::popcount(mask) % 2 == 1)
            marked -= tr;
        else
            marked += tr;
    }
    HamiltonianReport rep;
    rep.marked_count = marked;
    Int q, r;
    divide_qr(marked, Int(v), q, r);
    if (r != 0) throw ConsistencyError("Hamiltonian marked count not divisible by |V|");
    rep.classes = q;
    rep.paper_halved = Rat(rep.classes, Int(2));
    rep.halved_integral = is_integer(rep.paper_halved);
    return rep;
}

}  // namespace covercycle
