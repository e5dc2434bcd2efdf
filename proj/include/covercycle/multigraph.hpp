#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "covercycle/errors.hpp"

namespace covercycle {

/// Subset of undirected edge labels {0..|E|-1} as a bitmask.
using EdgeSubset = std::uint64_t;

struct Edge {
    int origin = 0;
    int end = 0;
    bool operator==(const Edge&) const = default;
};

/// Finite multigraph: loops and parallel edges allowed, edge order is the
/// labeling. Immutable by convention; operations return new graphs.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    bool directed = false;

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const MultiGraph&) const = default;

    void validate() const {
        for (const Edge& e : edges)
            if (e.origin < 0 || e.origin >= vertex_count || e.end < 0 || e.end >= vertex_count)
                throw PreconditionError("edge endpoint out of range");
    }

    // Loops contribute 2 in the undirected case.
    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count, 0);
        for (const Edge& e : edges) {
            ++deg[e.origin];
            ++deg[e.end];
        }
        return deg;
    }
};

inline bool is_connected(const MultiGraph& g) {
    if (g.vertex_count <= 1) return true;
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges) parent[find(e.origin)] = find(e.end);
    const int root = find(0);
    for (int v = 1; v < g.vertex_count; ++v)
        if (find(v) != root) return false;
    return true;
}

/// 2-colorability treating every edge as undirected; a loop breaks it.
inline bool is_bipartite(const MultiGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const Edge& e : g.edges) {
        if (e.origin == e.end) return false;
        adj[e.origin].push_back(e.end);
        adj[e.end].push_back(e.origin);
    }
    std::vector<int> color(g.vertex_count, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Remove the edges whose label bit is set. Vertices stay; remaining edges
/// keep their relative order.
inline MultiGraph delete_edges(const MultiGraph& g, EdgeSubset s) {
    if (g.edge_count() < 64 && (s >> g.edge_count()) != 0)
        throw PreconditionError("edge subset mask out of range");
    MultiGraph out;
    out.vertex_count = g.vertex_count;
    out.directed = g.directed;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!((s >> i) & 1u)) out.edges.push_back(g.edges[i]);
    return out;
}

/// Iteratively delete edges incident to a degree-1 vertex. Leaves every
/// non-backtracking tail-less cycle count unchanged.
inline MultiGraph prune_leaves(const MultiGraph& g) {
    if (g.directed) throw PreconditionError("prune_leaves requires an undirected graph");
    MultiGraph out = g;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg = out.degrees();
        for (std::size_t i = 0; i < out.edges.size(); ++i) {
            const Edge& e = out.edges[i];
            if (deg[e.origin] == 1 || deg[e.end] == 1) {
                out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

// Line-oriented text format:
//   directed 0|1
//   vertices <n>
//   edge <u> <v>     (file order = edge label order)
inline MultiGraph parse_graph(std::istream& in) {
    MultiGraph g;
    bool saw_directed = false, saw_vertices = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (keyword == "directed") {
            int flag;
            if (!(ls >> flag) || (flag != 0 && flag != 1)) fail("expected 'directed 0' or 'directed 1'");
            g.directed = flag == 1;
            saw_directed = true;
        } else if (keyword == "vertices") {
            int n;
            if (!(ls >> n) || n < 0) fail("expected 'vertices <n>' with n >= 0");
            g.vertex_count = n;
            saw_vertices = true;
        } else if (keyword == "edge") {
            if (!saw_directed || !saw_vertices) fail("'edge' before 'directed'/'vertices'");
            Edge e;
            if (!(ls >> e.origin >> e.end)) fail("expected 'edge <u> <v>'");
            if (e.origin < 0 || e.origin >= g.vertex_count || e.end < 0 || e.end >= g.vertex_count)
                fail("edge endpoint out of range");
            g.edges.push_back(e);
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!saw_directed || !saw_vertices) throw ParseError("missing 'directed' or 'vertices' header");
    return g;
}

inline void write_graph(std::ostream& out, const MultiGraph& g) {
    out << "directed " << (g.directed ? 1 : 0) << "\n";
    out << "vertices " << g.vertex_count << "\n";
    for (const Edge& e : g.edges) out << "edge " << e.origin << " " << e.end << "\n";
}

}  // namespace covercycle
