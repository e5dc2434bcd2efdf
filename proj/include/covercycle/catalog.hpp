#pragma once

#include <random>
#include <string>
#include <vector>

#include "covercycle/multigraph.hpp"

namespace covercycle {

/// R loops on a single vertex.
inline MultiGraph rose(int r) {
    MultiGraph g;
    g.vertex_count = 1;
    for (int i = 0; i < r; ++i) g.edges.push_back({0, 0});
    return g;
}

/// n parallel edges between two vertices; banana(3) is the theta graph.
inline MultiGraph banana(int n) {
    MultiGraph g;
    g.vertex_count = 2;
    for (int i = 0; i < n; ++i) g.edges.push_back({0, 1});
    return g;
}

inline MultiGraph theta_graph() { return banana(3); }

/// Cycle on n vertices; cycle_graph(2) is a pair of parallel edges,
/// cycle_graph(1) a single loop.
inline MultiGraph cycle_graph(int n) {
    MultiGraph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
    return g;
}

inline MultiGraph directed_cycle(int n) {
    MultiGraph g = cycle_graph(n);
    g.directed = true;
    return g;
}

/// All ordered pairs of distinct vertices as directed edges.
inline MultiGraph complete_directed(int n) {
    MultiGraph g;
    g.vertex_count = n;
    g.directed = true;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.edges.push_back({u, v});
    return g;
}

struct NamedGraph {
    std::string name;
    MultiGraph graph;
};

/// Connected leafless multigraphs with |E| <= 5, sized so the brute-force
/// oracle stays under its default cap through N = 8.
inline std::vector<NamedGraph> small_catalog() {
    std::vector<NamedGraph> cat;
    cat.push_back({"rose1", rose(1)});
    cat.push_back({"rose2", rose(2)});
    cat.push_back({"rose3", rose(3)});
    cat.push_back({"C2", cycle_graph(2)});
    cat.push_back({"C3", cycle_graph(3)});
    cat.push_back({"C4", cycle_graph(4)});
    cat.push_back({"C5", cycle_graph(5)});
    cat.push_back({"theta", theta_graph()});
    cat.push_back({"banana4", banana(4)});

    {   // two loops joined by an edge
        MultiGraph g;
        g.vertex_count = 2;
        g.edges = {{0, 0}, {0, 1}, {1, 1}};
        cat.push_back({"dumbbell", g});
    }
    {   // triangle with one doubled edge
        MultiGraph g;
        g.vertex_count = 3;
        g.edges = {{0, 1}, {0, 1}, {1, 2}, {2, 0}};
        cat.push_back({"triangle_doubled", g});
    }
    {   // triangle with a loop at one vertex
        MultiGraph g;
        g.vertex_count = 3;
        g.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 0}};
        cat.push_back({"triangle_loop", g});
    }
    {   // C4 with a chord
        MultiGraph g;
        g.vertex_count = 4;
        g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
        cat.push_back({"C4_chord", g});
    }
    {   // triangle sharing a vertex with a 2-cycle
        MultiGraph g;
        g.vertex_count = 4;
        g.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}};
        cat.push_back({"triangle_digon", g});
    }
    {   // two loops plus a doubled bridge
        MultiGraph g;
        g.vertex_count = 2;
        g.edges = {{0, 0}, {0, 1}, {0, 1}, {1, 1}};
        cat.push_back({"dumbbell_doubled", g});
    }
    return cat;
}

/// Random connected multigraph with no degree-1 vertices, 1 <= |E| <= max_edges.
/// Deterministic for a given generator state.
inline MultiGraph random_connected_multigraph(std::mt19937& rng, int max_edges) {
    for (;;) {
        MultiGraph g;
        g.vertex_count = std::uniform_int_distribution<int>(1, 4)(rng);
        const int e = std::uniform_int_distribution<int>(1, max_edges)(rng);
        std::uniform_int_distribution<int> pick(0, g.vertex_count - 1);
        for (int i = 0; i < e; ++i) g.edges.push_back({pick(rng), pick(rng)});
        if (!is_connected(g)) continue;
        bool leafless = true;
        for (int d : g.degrees()) leafless = leafless && d != 1;
        if (!leafless || g.edges.empty()) continue;
        return g;
    }
}

/// Random connected directed multigraph (loops and parallel arcs allowed).
inline MultiGraph random_connected_directed(std::mt19937& rng, int max_edges) {
    MultiGraph g = random_connected_multigraph(rng, max_edges);
    g.directed = true;
    return g;
}

}  // namespace covercycle
