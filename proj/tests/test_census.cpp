#include <algorithm>
#include <random>

#include "covercycle/catalog.hpp"
#include "covercycle/census.hpp"
#include "doctest.h"

using namespace covercycle;

namespace {

// Trial-division Moebius used as an independent check.
int mobius_reference(unsigned n) {
    std::vector<unsigned> primes;
    unsigned m = n;
    for (unsigned p = 2; p <= m; ++p)
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    std::vector<unsigned> unique(primes);
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    if (unique.size() != primes.size()) return 0;
    return primes.size() % 2 == 0 ? 1 : -1;
}

MultiGraph relabel_edges(const MultiGraph& g, std::mt19937& rng) {
    MultiGraph out = g;
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    return out;
}

MultiGraph flip_orientations(const MultiGraph& g, std::mt19937& rng) {
    MultiGraph out = g;
    for (Edge& e : out.edges)
        if (rng() % 2) std::swap(e.origin, e.end);
    return out;
}

}  // namespace

TEST_CASE("mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    for (unsigned n = 1; n <= 100; ++n) CHECK(mobius(n) == mobius_reference(n));
    CHECK_THROWS_AS(mobius(0), PreconditionError);
}

TEST_CASE("omega on the paper examples") {
    CHECK(omega(rose(2), 2) == 8);
    CHECK(omega(rose(2), 1) == 0);
    CHECK(omega(theta_graph(), 4) == 24);  // 2*2^N - 8
    CHECK(omega(theta_graph(), 5) == 0);   // bipartite, odd length
}

TEST_CASE("omega preconditions") {
    MultiGraph split;
    split.vertex_count = 2;
    split.edges = {{0, 0}};
    CHECK_THROWS_AS(omega(split, 2), PreconditionError);
    CHECK_THROWS_AS(covering_counts(rose(2), 0), PreconditionError);
    CensusOptions tight;
    tight.subset_limit = 2;
    CHECK_THROWS_AS(omega(theta_graph(), 3, tight), PreconditionError);
}

TEST_CASE("theta on the paper examples") {
    CHECK(theta(rose(2), 2) == 4);
    CHECK(theta(theta_graph(), 1) == 0);  // omega(1) = 0 below |E|
    CHECK(theta(theta_graph(), 6) == 20);
}

TEST_CASE("euler_count examples") {
    CHECK(euler_count(rose(2)) == 2);
    CHECK(euler_count(theta_graph()) == 0);  // odd degrees
    CHECK(euler_count(cycle_graph(5)) == 1);
    CHECK_THROWS_AS(euler_count(directed_cycle(3)), PreconditionError);
}

TEST_CASE("directed omega and theta") {
    SUBCASE("directed 3-cycle") {
        CHECK(omega_directed(directed_cycle(3), 3) == 3);
        CHECK(theta_directed(directed_cycle(3), 3) == 1);
        CHECK(omega_directed(directed_cycle(3), 2) == 0);  // N < |E|
    }
    SUBCASE("two directed loops at one vertex") {
        MultiGraph g;
        g.vertex_count = 1;
        g.directed = true;
        g.edges = {{0, 0}, {0, 0}};
        CHECK(omega_directed(g, 2) == 2);  // ab and ba
        CHECK(theta_directed(g, 2) == 1);
    }
    SUBCASE("rejects undirected input") {
        CHECK_THROWS_AS(omega_directed(rose(2), 2), PreconditionError);
        CHECK_THROWS_AS(theta_directed(rose(2), 2), PreconditionError);
    }
}

TEST_CASE("hamiltonian_count") {
    SUBCASE("directed 3-cycle has one class; halved value is flagged") {
        const HamiltonianReport rep = hamiltonian_count(directed_cycle(3));
        CHECK(rep.classes == 1);
        CHECK(rep.marked_count == 3);
        CHECK(rep.paper_halved == Rat(1, 2));
        CHECK_FALSE(rep.halved_integral);
    }
    SUBCASE("directed 2-cycle") {
        CHECK(hamiltonian_count(directed_cycle(2)).classes == 1);
    }
    SUBCASE("complete directed graph on 3 vertices") {
        CHECK(hamiltonian_count(complete_directed(3)).classes == 2);
    }
    SUBCASE("rejects undirected input") {
        CHECK_THROWS_AS(hamiltonian_count(rose(2)), PreconditionError);
    }
}

TEST_CASE("omega vanishes below |E| on the whole catalog") {
    for (const auto& [name, g] : small_catalog()) {
        CAPTURE(name);
        const unsigned m = static_cast<unsigned>(g.edge_count());
        if (m < 2) continue;
        const std::vector<Int> w = covering_counts(g, m - 1);
        for (unsigned n = 1; n < m; ++n) CHECK(w[n - 1] == 0);
    }
}

TEST_CASE("bipartite graphs have no odd covering cycles") {
    for (const auto& [name, g] : small_catalog()) {
        if (!is_bipartite(g)) continue;
        CAPTURE(name);
        const std::vector<Int> w = covering_counts(g, 9);
        for (unsigned n = 1; n <= 9; n += 2) CHECK(w[n - 1] == 0);
    }
}

TEST_CASE("power-sum reconstruction: omega(N) = sum (N/g) theta(N/g)") {
    for (const auto& [name, g] : small_catalog()) {
        CAPTURE(name);
        const unsigned n_max = static_cast<unsigned>(2 * g.edge_count() + 4);
        const CensusTable table = compute_census(g, n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            Int acc = 0;
            for (unsigned d = 1; d <= n; ++d)
                if (n % d == 0) acc += Int(n / d) * table.theta_at(n / d);
            CHECK(acc == table.omega_at(n));
        }
    }
}

TEST_CASE("theta(|E|) is even on every undirected catalog graph") {
    for (const auto& [name, g] : small_catalog()) {
        CAPTURE(name);
        CHECK(theta(g, static_cast<unsigned>(g.edge_count())) % 2 == 0);
    }
}

TEST_CASE("census is invariant under edge relabeling and orientation flips") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const MultiGraph g = random_connected_multigraph(rng, 5);
        const CensusTable base = compute_census(g, 8);
        const CensusTable shuffled = compute_census(relabel_edges(g, rng), 8);
        const CensusTable flipped = compute_census(flip_orientations(g, rng), 8);
        CHECK(base.omega == shuffled.omega);
        CHECK(base.omega == flipped.omega);
        CHECK(base.theta == shuffled.theta);
        CHECK(base.theta == flipped.theta);
    }
}

TEST_CASE("per-subset leaf pruning does not change omega") {
    std::mt19937 rng(43);
    CensusOptions unpruned;
    unpruned.prune_subgraphs = false;
    for (int trial = 0; trial < 8; ++trial) {
        const MultiGraph g = random_connected_multigraph(rng, 5);
        CHECK(covering_counts(g, 8) == covering_counts(g, 8, unpruned));
    }
}
