#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "covercycle/bigint.hpp"
#include "covercycle/edge_space.hpp"
#include "covercycle/multigraph.hpp"

// Brute-force ground truth. Enumerates every closed walk explicitly; kept
// deliberately independent of the matrix / inclusion-exclusion route.

namespace covercycle {

struct OracleOptions {
    // Abort once this many partial walks have been expanded.
    std::uint64_t cap = 10'000'000;
};

namespace oracle_detail {

// One oriented-edge universe, undirected (symmetrized, non-backtracking)
// or directed (edges as given, no inverse rule).
struct WalkUniverse {
    std::vector<int> origin, end;
    std::vector<int> label;                  // undirected edge label per oriented edge
    std::vector<std::vector<int>> succ;      // allowed continuations
    int label_count = 0;
    bool symmetric = false;                  // true: oriented edge i+label_count is the inverse of i

    static WalkUniverse undirected(const MultiGraph& g) {
        const DirectedEdgeSpace sp = symmetrize(g);
        WalkUniverse u;
        u.symmetric = true;
        u.label_count = sp.undirected_count;
        const int n = sp.size();
        u.origin = sp.origin;
        u.end = sp.end;
        u.label.resize(n);
        u.succ.resize(n);
        for (int i = 0; i < n; ++i) {
            u.label[i] = sp.label(i);
            for (int j = 0; j < n; ++j)
                if (sp.end[i] == sp.origin[j] && j != sp.inverse(i)) u.succ[i].push_back(j);
        }
        return u;
    }

    static WalkUniverse directed(const MultiGraph& g) {
        WalkUniverse u;
        u.label_count = g.edge_count();
        const int n = g.edge_count();
        u.origin.resize(n);
        u.end.resize(n);
        u.label.resize(n);
        u.succ.resize(n);
        for (int i = 0; i < n; ++i) {
            u.origin[i] = g.edges[i].origin;
            u.end[i] = g.edges[i].end;
            u.label[i] = i;
            for (int j = 0; j < n; ++j)
                if (g.edges[i].end == g.edges[j].origin) u.succ[i].push_back(j);
        }
        return u;
    }
};

// Depth-first enumeration of all closed walks of length n (chain condition,
// cyclically non-backtracking in the undirected universe). Calls visit with
// the oriented-edge sequence of every closed walk, marked start included.
template <typename Visitor>
void enumerate_closed_walks(const WalkUniverse& u, unsigned n, const OracleOptions& opts,
                            Visitor&& visit) {
    if (n == 0) throw PreconditionError("walk length must be >= 1");
    std::vector<int> walk(n);
    std::uint64_t expanded = 0;
    const int edge_total = static_cast<int>(u.origin.size());

    auto closes = [&](int last, int first) {
        if (u.end[last] != u.origin[first]) return false;
        // Tail-less: the wrap-around step may not backtrack either.
        if (u.symmetric && first == (last + u.label_count) % (2 * u.label_count)) return false;
        return true;
    };

    auto dfs = [&](auto&& self, unsigned depth) -> void {
        if (++expanded > opts.cap) throw CapExceededError("oracle feasibility cap exceeded");
        if (depth == n) {
            if (closes(walk[n - 1], walk[0])) visit(walk);
            return;
        }
        for (int next : u.succ[static_cast<std::size_t>(walk[depth - 1])]) {
            walk[depth] = next;
            self(self, depth + 1);
        }
    };

    for (int start = 0; start < edge_total; ++start) {
        walk[0] = start;
        if (n == 1) {
            if (++expanded > opts.cap) throw CapExceededError("oracle feasibility cap exceeded");
            if (closes(start, start)) visit(walk);
        } else {
            dfs(dfs, 1);
        }
    }
}

inline bool covers_all_labels(const WalkUniverse& u, const std::vector<int>& walk) {
    std::uint64_t seen = 0;
    for (int e : walk) seen |= std::uint64_t{1} << u.label[static_cast<std::size_t>(e)];
    return seen == (std::uint64_t{1} << u.label_count) - 1;
}

// Smaller-rotation test: returns 0 if some rotation is lexicographically
// smaller, 1 if the walk is the unique minimal rotation (nonperiodic
// canonical form), 2 if a nontrivial rotation reproduces the walk (periodic).
inline int rotation_status(const std::vector<int>& w) {
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const int a = w[(k + r) % n];
            if (a < w[k]) return 0;
            if (a > w[k]) break;
            if (k + 1 == n) return 2;  // full match: period divides r
        }
    }
    return 1;
}

inline std::vector<int> minimal_rotation(std::vector<int> w) {
    std::vector<int> best = w;
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

inline WalkUniverse universe_for(const MultiGraph& g) {
    return g.directed ? WalkUniverse::directed(g) : WalkUniverse::undirected(g);
}

}  // namespace oracle_detail

/// Number of closed non-backtracking tail-less walks of length n, marked start.
inline Int count_closed_walks(const MultiGraph& g, unsigned n, const OracleOptions& opts = {}) {
    const auto u = oracle_detail::universe_for(g);
    Int count = 0;
    oracle_detail::enumerate_closed_walks(u, n, opts, [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Closed walks whose underlying undirected edge labels cover the whole edge set.
inline Int count_covering_walks(const MultiGraph& g, unsigned n, const OracleOptions& opts = {}) {
    const auto u = oracle_detail::universe_for(g);
    Int count = 0;
    oracle_detail::enumerate_closed_walks(u, n, opts, [&](const std::vector<int>& w) {
        if (oracle_detail::covers_all_labels(u, w)) ++count;
    });
    return count;
}

/// Equivalence classes (under rotation) of nonperiodic covering walks of
/// length n. Counts canonical representatives directly.
inline Int count_nonperiodic_classes(const MultiGraph& g, unsigned n, const OracleOptions& opts = {}) {
    const auto u = oracle_detail::universe_for(g);
    Int count = 0;
    oracle_detail::enumerate_closed_walks(u, n, opts, [&](const std::vector<int>& w) {
        if (!oracle_detail::covers_all_labels(u, w)) return;
        if (oracle_detail::rotation_status(w) == 1) ++count;
    });
    return count;
}

/// Euler cycle count: nonperiodic covering classes at length |E| with
/// inverse pairs merged. A self-inverse class would falsify the pairing and
/// is reported as an error, never absorbed.
inline Int count_euler_classes(const MultiGraph& g, const OracleOptions& opts = {}) {
    if (g.directed) throw PreconditionError("count_euler_classes requires an undirected graph");
    if (g.edges.empty()) return 0;
    const auto u = oracle_detail::universe_for(g);
    const unsigned n = static_cast<unsigned>(g.edge_count());
    std::set<std::vector<int>> reps;
    oracle_detail::enumerate_closed_walks(u, n, opts, [&](const std::vector<int>& w) {
        if (!oracle_detail::covers_all_labels(u, w)) return;
        if (oracle_detail::rotation_status(w) == 1) reps.insert(w);
    });
    const int half = u.label_count;
    for (const std::vector<int>& w : reps) {
        std::vector<int> inv(w.rbegin(), w.rend());
        for (int& e : inv) e = (e + half) % (2 * half);
        const std::vector<int> canon = oracle_detail::minimal_rotation(inv);
        if (canon == w) throw ConsistencyError("self-inverse Euler class found");
        if (!reps.count(canon)) throw ConsistencyError("inverse of an Euler class is missing");
    }
    return Int(reps.size()) / 2;
}

/// Directed Hamiltonian cycles counted up to rotation: closed walks of
/// length |V| visiting every vertex exactly once.
inline Int count_hamiltonian_classes(const MultiGraph& g, const OracleOptions& opts = {}) {
    if (!g.directed) throw PreconditionError("count_hamiltonian_classes requires a directed graph");
    if (g.vertex_count == 0) return 0;
    const auto u = oracle_detail::WalkUniverse::directed(g);
    Int count = 0;
    oracle_detail::enumerate_closed_walks(u, static_cast<unsigned>(g.vertex_count), opts,
                                          [&](const std::vector<int>& w) {
        std::uint64_t seen = 0;
        for (int e : w) {
            const std::uint64_t bit = std::uint64_t{1} << u.origin[static_cast<std::size_t>(e)];
            if (seen & bit) return;  // vertex revisited
            seen |= bit;
        }
        if (oracle_detail::rotation_status(w) == 1) ++count;
    });
    return count;
}

}  // namespace covercycle
