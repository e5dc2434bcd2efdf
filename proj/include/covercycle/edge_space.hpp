#pragma once

#include <vector>

#include "covercycle/matrix.hpp"
#include "covercycle/multigraph.hpp"

namespace covercycle {

/// The 2|E| oriented edges of the symmetrization G'. Oriented edge i < |E|
/// carries the input orientation; i + |E| is its inverse.
struct DirectedEdgeSpace {
    int undirected_count = 0;       // |E|
    std::vector<int> origin;        // size 2|E|
    std::vector<int> end;           // size 2|E|

    int size() const { return 2 * undirected_count; }

    int inverse(int i) const { return (i + undirected_count) % size(); }

    // Undirected label of oriented edge i.
    int label(int i) const { return i % undirected_count; }
};

inline DirectedEdgeSpace symmetrize(const MultiGraph& g) {
    if (g.directed) throw PreconditionError("symmetrize requires an undirected graph");
    DirectedEdgeSpace sp;
    sp.undirected_count = g.edge_count();
    sp.origin.resize(2 * g.edge_count());
    sp.end.resize(2 * g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        sp.origin[i] = g.edges[i].origin;
        sp.end[i] = g.edges[i].end;
        sp.origin[i + g.edge_count()] = g.edges[i].end;
        sp.end[i + g.edge_count()] = g.edges[i].origin;
    }
    return sp;
}

/// T[i][j] = 1 iff oriented edge j continues i without backtracking:
/// end(i) = origin(j) and j != inverse(i). A loop may follow itself.
inline IntMatrix edge_adjacency_matrix(const DirectedEdgeSpace& sp) {
    const int n = sp.size();
    IntMatrix t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sp.end[i] == sp.origin[j] && j != sp.inverse(i)) t(i, j) = 1;
    return t;
}

/// Directed edge adjacency matrix S: S[i][j] = 1 iff end(i) = origin(j).
/// No inverse-edge exclusion in the directed case.
inline IntMatrix directed_edge_matrix(const MultiGraph& g) {
    if (!g.directed) throw PreconditionError("directed_edge_matrix requires a directed graph");
    const int n = g.edge_count();
    IntMatrix s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edges[i].end == g.edges[j].origin) s(i, j) = 1;
    return s;
}

/// Directed vertex adjacency matrix: entry (u, v) counts edges u -> v.
inline IntMatrix directed_vertex_matrix(const MultiGraph& g) {
    if (!g.directed) throw PreconditionError("directed_vertex_matrix requires a directed graph");
    IntMatrix a(static_cast<std::size_t>(g.vertex_count));
    for (const Edge& e : g.edges) a(e.origin, e.end) += 1;
    return a;
}

}  // namespace covercycle
