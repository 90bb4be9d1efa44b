#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "hanoi/decomposition.hpp"
#include "hanoi/fractal.hpp"
#include "hanoi/separators.hpp"
#include "hanoi/smallgraphs.hpp"

// Metamorphic checks: single-element mutations of valid artifacts either get
// rejected by the verifier or are genuinely still valid, which the test
// re-establishes independently. Targeted mutations that provably break a
// condition must always be rejected.

using namespace hanoi;

TEST_CASE("decomposition validator vs bag flips") {
    SierpinskiGraph s = build_sierpinski(4);
    TreeDecomposition good = sierpinski_decomposition(s);
    REQUIRE(validate(s.graph, good).ok());

    std::mt19937_64 rng(kHavenOrderCap + 424241);
    for (int trial = 0; trial < 200; ++trial) {
        TreeDecomposition mut = good;
        std::size_t node = rng() % mut.nodes.size();
        auto& bag = mut.nodes[node].bag;
        std::size_t slot = rng() % bag.size();
        Vertex old = bag[slot];
        Vertex repl = static_cast<Vertex>(rng() % s.graph.vertex_count());
        if (repl == old) continue;
        bag[slot] = repl;

        auto check = validate(s.graph, mut);
        if (check.ok()) {
            // acceptance must be sound: every condition holds by recomputation
            std::vector<char> covered(s.graph.vertex_count(), 0);
            for (const auto& n : mut.nodes)
                for (Vertex v : n.bag) covered[v] = 1;
            for (Vertex v = 0; v < s.graph.vertex_count(); ++v) CHECK(covered[v]);
        }
    }

    // targeted: remove a vertex from an internal node of its bag-subtree,
    // which must break the subtree condition
    std::vector<std::vector<std::size_t>> holding(s.graph.vertex_count());
    for (std::size_t i = 0; i < good.nodes.size(); ++i)
        for (Vertex v : good.nodes[i].bag) holding[v].push_back(i);
    bool did = false;
    for (Vertex v = 0; v < s.graph.vertex_count() && !did; ++v) {
        if (holding[v].size() < 3) continue;
        std::set<std::size_t> mine(holding[v].begin(), holding[v].end());
        for (std::size_t node : holding[v]) {
            // internal = adjacent (in the tree) to >= 2 other holding nodes
            int deg = 0;
            if (good.nodes[node].parent >= 0 &&
                mine.count(static_cast<std::size_t>(good.nodes[node].parent)))
                ++deg;
            for (std::size_t j = 0; j < good.nodes.size(); ++j)
                if (good.nodes[j].parent == static_cast<int>(node) && mine.count(j)) ++deg;
            if (deg < 2) continue;
            TreeDecomposition mut = good;
            auto& bag = mut.nodes[node].bag;
            bag.erase(std::find(bag.begin(), bag.end(), v));
            CHECK_FALSE(validate(s.graph, mut).ok());
            did = true;
            break;
        }
    }
    CHECK(did);
}

TEST_CASE("minor verifier vs branch flips") {
    MinorModel good = embed_hanoi_minor(build_sierpinski(4));
    REQUIRE(verify_minor_model(good).ok);

    std::mt19937_64 rng(90125);
    for (int trial = 0; trial < 200; ++trial) {
        MinorModel mut = good;
        std::size_t set = rng() % mut.branch_sets.size();
        auto& bs = mut.branch_sets[set];
        std::size_t slot = rng() % bs.size();
        bs[slot] = static_cast<Vertex>(rng() % mut.host.vertex_count());
        auto rep = verify_minor_model(mut);
        if (rep.ok) {
            // sound acceptance: disjointness holds by recomputation
            std::set<Vertex> seen;
            for (const auto& b : mut.branch_sets)
                for (Vertex v : b) CHECK(seen.insert(v).second);
        }
    }

    // targeted: move a host vertex into a second branch set
    MinorModel mut = good;
    mut.branch_sets[3].push_back(mut.branch_sets[5].front());
    CHECK_FALSE(verify_minor_model(mut).ok);
}

TEST_CASE("subdivision verifier vs witness vertex flips") {
    SierpinskiGraph s5 = build_sierpinski(5);
    auto res = find_octahedron_subdivision(s5.graph);
    REQUIRE(res.status == SearchStatus::found);
    SubdivisionWitness good = *res.witness;
    REQUIRE(verify_subdivision(s5.graph, good).ok);

    std::mt19937_64 rng(5551212);
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SubdivisionWitness mut = good;
        std::size_t path = rng() % mut.paths.size();
        std::size_t slot = rng() % mut.paths[path].size();
        mut.paths[path][slot] = static_cast<Vertex>(rng() % s5.graph.vertex_count());
        auto rep = verify_subdivision(s5.graph, mut);
        if (!rep.ok) ++rejected;
        // acceptance would mean the flip reproduced a valid path system; with
        // a random replacement vertex that requires hitting the original
        if (rep.ok) CHECK(mut.paths[path][slot] == good.paths[path][slot]);
    }
    CHECK(rejected > 150);

    // targeted: flip one branch vertex to a neighbor
    SubdivisionWitness mut = good;
    mut.branch[0] = s5.graph.neighbors(mut.branch[0]).front();
    CHECK_FALSE(verify_subdivision(s5.graph, mut).ok);
}

TEST_CASE("separator verifier vs edge and set flips") {
    Graph g = build_hanoi(3, 3);
    std::vector<Vertex> x;
    for (auto v : hanoi_level_separator(3, 3)) x.push_back(static_cast<Vertex>(v));
    Balance c = Balance::ratio(2, 3);
    REQUIRE(verify_c_separator(g, x, c).ok());

    std::mt19937_64 rng(1899);
    for (int trial = 0; trial < 100; ++trial) {
        auto mut = x;
        mut[rng() % mut.size()] = static_cast<Vertex>(rng() % g.vertex_count());
        auto check = verify_c_separator(g, mut, c);
        if (check.ok()) {
            // recompute: no surviving edge between the two sides
            const auto& sep = *check.separation;
            std::set<Vertex> in_b(sep.side_b.begin(), sep.side_b.end());
            for (Vertex v : sep.side_a)
                for (Vertex w : g.neighbors(v)) CHECK_FALSE(in_b.count(w));
        }
    }
}
