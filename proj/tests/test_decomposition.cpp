#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "hanoi/decomposition.hpp"
#include "hanoi/smallgraphs.hpp"
#include "hanoi/state_space.hpp"

using namespace hanoi;

TEST_CASE("validate accepts and itemizes") {
    Graph k4 = complete_graph(4);
    TreeDecomposition single;
    single.nodes.push_back({{0, 1, 2, 3}, -1});
    auto check = validate(k4, single);
    REQUIRE(check.ok());
    CHECK(*check.width == 3);

    Graph p4 = path_graph(4);
    TreeDecomposition chain;
    chain.nodes.push_back({{0, 1}, -1});
    chain.nodes.push_back({{1, 2}, 0});
    chain.nodes.push_back({{2, 3}, 1});
    check = validate(p4, chain);
    REQUIRE(check.ok());
    CHECK(*check.width == 1);

    TreeDecomposition broken;
    broken.nodes.push_back({{0, 1}, -1});
    broken.nodes.push_back({{2, 3}, 0});
    check = validate(p4, broken);
    CHECK_FALSE(check.ok());
    bool mentions_edge = false;
    for (const auto& v : check.violations)
        if (v.find("edge (1,2)") != std::string::npos) mentions_edge = true;
    CHECK(mentions_edge);

    // broken subtree: vertex 0 in two disconnected bags
    TreeDecomposition disc;
    disc.nodes.push_back({{0, 1}, -1});
    disc.nodes.push_back({{1, 2}, 0});
    disc.nodes.push_back({{2, 3}, 1});
    disc.nodes.push_back({{0, 3}, 2});
    check = validate(p4, disc);
    CHECK_FALSE(check.ok());
    bool mentions_subtree = false;
    for (const auto& v : check.violations)
        if (v.find("subtree") != std::string::npos) mentions_subtree = true;
    CHECK(mentions_subtree);
}

TEST_CASE("sierpinski decomposition structure") {
    auto td1 = sierpinski_decomposition(1);
    auto s1 = build_sierpinski(1);
    auto check1 = validate(s1.graph, td1);
    REQUIRE(check1.ok());
    CHECK(*check1.width == 2);
    CHECK(td1.nodes.size() == 1);

    for (int n = 2; n <= 8; ++n) {
        SierpinskiGraph s = build_sierpinski(n);
        TreeDecomposition td = sierpinski_decomposition(s);
        auto check = validate(s.graph, td);
        REQUIRE(check.ok());
        CHECK(*check.width == 4);
        // bag count: T(n) = 2 + 3 T(n-1), T(1) = 1, so T(n) = 2*3^(n-1) - 1
        std::size_t expect = 1;
        for (int k = 2; k <= n; ++k) expect = 3 * expect + 2;
        CHECK(td.nodes.size() == expect);
        // root bag is the level-n triangular bag
        std::set<Vertex> root(td.nodes[0].bag.begin(), td.nodes[0].bag.end());
        CHECK(root == std::set<Vertex>{s.v_t, s.v_lt, s.v_rt, s.v_l, s.v_r});
    }
}

TEST_CASE("lift through the embed pipeline") {
    for (int n = 2; n <= 5; ++n) {
        SierpinskiGraph host = build_sierpinski(n + 1);
        MinorModel m = embed_hanoi_minor(host);
        TreeDecomposition td = sierpinski_decomposition(host);
        TreeDecomposition lifted = lift_through_minor(td, m);
        auto check = validate(m.pattern, lifted);
        REQUIRE(check.ok());
        CHECK(*check.width <= 4);
        CHECK(*check.width <= td.width());
    }
}

TEST_CASE("lift through the identity model") {
    Graph g = cycle_graph(6);
    MinorModel identity;
    identity.host = g;
    identity.pattern = g;
    for (Vertex v = 0; v < 6; ++v) identity.branch_sets.push_back({v});
    for (auto [u, v] : g.edges()) identity.edge_witnesses.emplace_back(u, v, u, v);
    REQUIRE(verify_minor_model(identity).ok);

    TreeDecomposition td;
    td.nodes.push_back({{0, 1, 5}, -1});
    td.nodes.push_back({{1, 2, 5}, 0});
    td.nodes.push_back({{2, 4, 5}, 1});
    td.nodes.push_back({{2, 3, 4}, 2});
    REQUIRE(validate(g, td).ok());
    TreeDecomposition lifted = lift_through_minor(td, identity);
    auto check = validate(g, lifted);
    REQUIRE(check.ok());
    CHECK(*check.width == td.width());
}

TEST_CASE("lift collapses a whole-host branch set to width 0") {
    Graph g = path_graph(5);
    MinorModel m;
    m.host = g;
    m.pattern = Graph(1);
    m.branch_sets.push_back({0, 1, 2, 3, 4});
    REQUIRE(verify_minor_model(m).ok);
    TreeDecomposition td;
    td.nodes.push_back({{0, 1}, -1});
    td.nodes.push_back({{1, 2}, 0});
    td.nodes.push_back({{2, 3}, 1});
    td.nodes.push_back({{3, 4}, 2});
    TreeDecomposition lifted = lift_through_minor(td, m);
    auto check = validate(m.pattern, lifted);
    REQUIRE(check.ok());
    CHECK(*check.width == 0);
    CHECK(lifted.nodes.size() == 1); // adjacent equal bags merged
}

TEST_CASE("lifting preserves validity on random minor models") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        int hn = 5 + static_cast<int>(rng() % 5);
        Graph host = seeded_random_graph(hn, rng(), 55);
        // random vertex grouping, then split each group into its connected
        // pieces so every branch set is connected
        std::vector<int> owner(hn);
        int groups = 1 + static_cast<int>(rng() % hn);
        for (int v = 0; v < hn; ++v) owner[v] = static_cast<int>(rng() % groups);
        std::vector<char> seen(hn, 0);
        int next_group = 0;
        std::vector<int> final_owner(hn, -1);
        for (Vertex v = 0; v < static_cast<Vertex>(hn); ++v) {
            if (seen[v]) continue;
            int id = next_group++;
            std::vector<Vertex> stack{v};
            seen[v] = 1;
            final_owner[v] = id;
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                for (Vertex w : host.neighbors(u))
                    if (!seen[w] && owner[w] == owner[u]) {
                        seen[w] = 1;
                        final_owner[w] = id;
                        stack.push_back(w);
                    }
            }
        }

        MinorModel m;
        m.host = host;
        m.pattern = Graph(next_group);
        m.branch_sets.assign(next_group, {});
        for (Vertex v = 0; v < static_cast<Vertex>(hn); ++v)
            m.branch_sets[final_owner[v]].push_back(v);
        std::set<std::pair<Vertex, Vertex>> pe;
        for (auto [u, v] : host.edges()) {
            if (final_owner[u] == final_owner[v]) continue;
            Vertex a = static_cast<Vertex>(std::min(final_owner[u], final_owner[v]));
            Vertex b = static_cast<Vertex>(std::max(final_owner[u], final_owner[v]));
            if (pe.emplace(a, b).second) {
                m.pattern.add_edge(a, b);
                bool u_in_a = final_owner[u] == static_cast<int>(a);
                m.edge_witnesses.emplace_back(a, b, u_in_a ? u : v, u_in_a ? v : u);
            }
        }
        m.pattern.finalize();
        REQUIRE(verify_minor_model(m).ok);

        TreeDecomposition td = decomposition_from_order(host, optimal_elimination_order(host));
        REQUIRE(validate(host, td).ok());
        TreeDecomposition lifted = lift_through_minor(td, m);
        auto check = validate(m.pattern, lifted);
        REQUIRE(check.ok());
        CHECK(*check.width <= td.width());
    }
}

TEST_CASE("exact treewidth known values") {
    CHECK(exact_treewidth(complete_graph(4)) == 3);
    CHECK(exact_treewidth(complete_graph(6)) == 5);
    CHECK(exact_treewidth(cycle_graph(6)) == 2);
    CHECK(exact_treewidth(path_graph(7)) == 1);
    CHECK(exact_treewidth(star_graph(5)) == 1);
    CHECK(exact_treewidth(build_octahedron()) == 4);
    CHECK(exact_treewidth(petersen_graph()) == 4);
    for (int k = 3; k <= 5; ++k) CHECK(exact_treewidth(grid_graph(3, k)) == 3);
    CHECK(exact_treewidth(grid_graph(2, 3)) == 2);

    // regression ground truth: the degree-2 corners keep S_2, S_3 and H_3^2
    // below the width of the generic construction
    CHECK(exact_treewidth(build_sierpinski(2).graph) == 2);
    CHECK(exact_treewidth(build_sierpinski(3).graph) == 3);
    CHECK(exact_treewidth(build_hanoi(3, 2)) == 2);

    CHECK_THROWS_AS(exact_treewidth(build_sierpinski(4).graph), capacity_error);
}

TEST_CASE("decision procedure matches the full DP") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = seeded_random_graph(n, rng(), 35 + static_cast<int>(rng() % 40));
        int tw = exact_treewidth(g);
        for (int w = 0; w <= n; ++w) CHECK(treewidth_at_most(g, w) == (w >= tw));
    }
    // beyond the full-table cap: S_4 already has treewidth exactly 4
    Graph s4 = build_sierpinski(4).graph;
    CHECK_FALSE(treewidth_at_most(s4, 3));
    CHECK(treewidth_at_most(s4, 4));
}

TEST_CASE("optimal elimination orders realize the treewidth") {
    for (const Graph& g : {complete_graph(5), cycle_graph(7), grid_graph(3, 3),
                           petersen_graph(), build_hanoi(3, 2)}) {
        int tw = exact_treewidth(g);
        auto order = optimal_elimination_order(g);
        TreeDecomposition td = decomposition_from_order(g, order);
        auto check = validate(g, td);
        REQUIRE(check.ok());
        CHECK(*check.width == tw);
    }
}

TEST_CASE("haven game on hand-checked cases") {
    Graph k4 = complete_graph(4);
    CHECK(haven_order_at_least(k4, 4).robber_wins);
    CHECK_FALSE(haven_order_at_least(k4, 5).robber_wins);

    Graph p5 = path_graph(5);
    CHECK(haven_order_at_least(p5, 2).robber_wins);
    CHECK_FALSE(haven_order_at_least(p5, 3).robber_wins);

    CHECK_THROWS_AS(haven_order_at_least(petersen_graph(), 7), parameter_error);
    CHECK_THROWS_AS(haven_order_at_least(build_hanoi(3, 3), 3), capacity_error);

    // cops-win queries come with a trace ending in a capture
    auto q = haven_order_at_least(p5, 3);
    CHECK_FALSE(q.cop_trace.empty());
}

TEST_CASE("haven order matches treewidth across a corpus") {
    std::vector<Graph> corpus{path_graph(6),  cycle_graph(5), cycle_graph(8),
                              complete_graph(5), star_graph(6), complete_bipartite(3, 3),
                              grid_graph(2, 4),  grid_graph(3, 3), wheel_graph(6),
                              petersen_graph(),  cube_graph(),  build_octahedron(),
                              build_hanoi(3, 2), build_sierpinski(2).graph};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 6; ++i) corpus.push_back(seeded_random_graph(6 + i % 4, rng(), 45));
    for (const Graph& g : corpus) {
        int tw = exact_treewidth(g);
        for (int k = 1; k <= kHavenOrderCap; ++k)
            CHECK(haven_order_at_least(g, k).robber_wins == (tw >= k - 1));
    }
}

TEST_CASE("tree decomposition serialization round trips") {
    Graph g = grid_graph(3, 3);
    TreeDecomposition td = decomposition_from_order(g, optimal_elimination_order(g));
    REQUIRE(validate(g, td).ok());

    auto from_json = TreeDecomposition::from_json(td.to_json());
    auto cj = validate(g, from_json);
    REQUIRE(cj.ok());
    CHECK(*cj.width == td.width());

    auto from_pace = TreeDecomposition::from_pace(td.to_pace(g.vertex_count()));
    auto cp = validate(g, from_pace);
    REQUIRE(cp.ok());
    CHECK(*cp.width == td.width());
}
