#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "hanoi/decomposition.hpp"
#include "hanoi/fractal.hpp"
#include "hanoi/smallgraphs.hpp"

using namespace hanoi;

namespace {

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

// Brute-force isomorphism for graphs up to 8 vertices: permutation search.
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    int n = static_cast<int>(a.vertex_count());
    REQUIRE(n <= 8);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[u], perm[v])) { ok = false; break; }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("sierpinski counts and degrees") {
    SierpinskiGraph s1 = build_sierpinski(1);
    CHECK(s1.graph.vertex_count() == 3);
    CHECK(s1.graph.edge_count() == 3);

    SierpinskiGraph s2 = build_sierpinski(2);
    CHECK(s2.graph.vertex_count() == 6);
    CHECK(s2.graph.edge_count() == 9);

    CHECK(build_sierpinski(4).graph.vertex_count() == 42);

    // |V| via the recurrence |S_n| = 3|S_{n-1}| - 3 and |E_n| = 3|E_{n-1}|
    std::uint64_t v_prev = 3, e_prev = 3;
    for (int n = 2; n <= 7; ++n) {
        SierpinskiGraph s = build_sierpinski(n);
        v_prev = 3 * v_prev - 3;
        e_prev = 3 * e_prev;
        CHECK(s.graph.vertex_count() == v_prev);
        CHECK(s.graph.vertex_count() == (pow3(n) + 3) / 2);
        CHECK(s.graph.edge_count() == e_prev);

        std::set<Vertex> corners{s.v_l, s.v_r, s.v_t};
        for (Vertex v = 0; v < s.graph.vertex_count(); ++v)
            CHECK(s.graph.degree(v) == (corners.count(v) ? 2u : 4u));
        CHECK(is_connected(s.graph));
    }
    CHECK_THROWS_AS(build_sierpinski(0), parameter_error);
    CHECK_THROWS_AS(build_sierpinski(20, 1000), capacity_error);
}

TEST_CASE("contract_boundary_edges produces S_n") {
    for (int n = 1; n <= 7; ++n) {
        Graph h = build_hanoi(3, n);
        auto res = contract_boundary_edges(h, n); // throws when not isomorphic
        CHECK(res.sierpinski.graph.vertex_count() == (pow3(n) + 3) / 2);
        auto rep = verify_minor_model(res.model);
        CHECK(rep.ok);
        std::size_t largest = 0;
        for (const auto& bs : res.model.branch_sets) largest = std::max(largest, bs.size());
        CHECK(largest <= 2);
    }

    // independent oracle at n=2: permutation isomorphism between the quotient
    // and a freshly built S_2
    Graph h = build_hanoi(3, 2);
    auto res = contract_boundary_edges(h, 2);
    Graph quotient(res.sierpinski.graph.vertex_count());
    std::set<std::pair<Vertex, Vertex>> qedges;
    for (auto [u, v] : h.edges()) {
        Vertex a = res.image[u], b = res.image[v];
        if (a != b) qedges.emplace(std::min(a, b), std::max(a, b));
    }
    for (auto [a, b] : qedges) quotient.add_edge(a, b);
    quotient.finalize();
    CHECK(brute_isomorphic(quotient, build_sierpinski(2).graph));

    CHECK_THROWS_AS(contract_boundary_edges(build_hanoi(3, 2), 3), parameter_error);
    CHECK_THROWS_AS(contract_boundary_edges(complete_graph(9), 2), parameter_error);
}

TEST_CASE("embed_hanoi_minor at every level") {
    for (int level = 2; level <= 6; ++level) {
        MinorModel m = embed_hanoi_minor(build_sierpinski(level));
        CHECK(m.pattern.vertex_count() == pow3(level - 1));
        auto rep = verify_minor_model(m);
        for (const auto& why : rep.violations) MESSAGE(why);
        CHECK(rep.ok);
        if (level == 3) CHECK(m.branch_sets.size() == 9);
    }
    CHECK_THROWS_AS(embed_hanoi_minor(build_sierpinski(1)), parameter_error);
}

TEST_CASE("verify_minor_model flags violations") {
    MinorModel m = embed_hanoi_minor(build_sierpinski(3));
    REQUIRE(verify_minor_model(m).ok);

    SUBCASE("overlapping branch sets") {
        m.branch_sets[1].push_back(m.branch_sets[0].front());
        auto rep = verify_minor_model(m);
        CHECK_FALSE(rep.ok);
        CHECK(rep.violations.front().find("shared") != std::string::npos);
    }
    SUBCASE("missing witness") {
        m.edge_witnesses.pop_back();
        CHECK_FALSE(verify_minor_model(m).ok);
    }
    SUBCASE("detached vertex breaks connectivity") {
        std::set<Vertex> used;
        for (const auto& bs : m.branch_sets) used.insert(bs.begin(), bs.end());
        // find a free host vertex not adjacent to branch set 0
        for (Vertex spare = 0; spare < m.host.vertex_count(); ++spare) {
            if (used.count(spare)) continue;
            bool adjacent = false;
            for (Vertex b : m.branch_sets[0])
                if (m.host.has_edge(spare, b)) adjacent = true;
            if (adjacent) continue;
            m.branch_sets[0].push_back(spare);
            CHECK_FALSE(verify_minor_model(m).ok);
            break;
        }
    }
}

TEST_CASE("octahedron and its subdivisions carry witnesses") {
    Graph octa = build_octahedron();
    auto res = find_octahedron_subdivision(octa);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(verify_subdivision(octa, *res.witness).ok);

    // subdivide every edge once: 6 + 12 vertices
    Graph sub(18);
    {
        Vertex next = 6;
        for (auto [i, j] : octahedron_edge_order()) {
            sub.add_edge(static_cast<Vertex>(i), next);
            sub.add_edge(next, static_cast<Vertex>(j));
            ++next;
        }
        sub.finalize();
    }
    auto res2 = find_octahedron_subdivision(sub);
    REQUIRE(res2.status == SearchStatus::found);
    CHECK(verify_subdivision(sub, *res2.witness).ok);
}

TEST_CASE("a verified witness forces treewidth at least 4") {
    // hosts small enough for the exact DP: the octahedron carries the
    // witness directly, its one-step subdivision through 18 vertices
    Graph octa = build_octahedron();
    REQUIRE(find_octahedron_subdivision(octa).status == SearchStatus::found);
    CHECK(exact_treewidth(octa) >= 4);

    Graph sub(18);
    Vertex next = 6;
    for (auto [i, j] : octahedron_edge_order()) {
        sub.add_edge(static_cast<Vertex>(i), next);
        sub.add_edge(next, static_cast<Vertex>(j));
        ++next;
    }
    sub.finalize();
    REQUIRE(find_octahedron_subdivision(sub).status == SearchStatus::found);
    CHECK(exact_treewidth(sub) >= 4);
}

TEST_CASE("minor model json round trips through the verifier") {
    MinorModel m = embed_hanoi_minor(build_sierpinski(3));
    MinorModel back = minor_model_from_json(m.host, minor_model_to_json(m));
    CHECK(back.branch_sets == m.branch_sets);
    CHECK(back.pattern.edges() == m.pattern.edges());
    CHECK(verify_minor_model(back).ok);
}

TEST_CASE("S_2 has no subdivision; verifier rejects mutations") {
    auto s2 = build_sierpinski(2);
    auto res = find_octahedron_subdivision(s2.graph);
    CHECK(res.status == SearchStatus::none);

    Graph octa = build_octahedron();
    auto good = *find_octahedron_subdivision(octa).witness;

    SUBCASE("two paths sharing an internal vertex") {
        Graph sub(18);
        Vertex next = 6;
        for (auto [i, j] : octahedron_edge_order()) {
            sub.add_edge(static_cast<Vertex>(i), next);
            sub.add_edge(next, static_cast<Vertex>(j));
            ++next;
        }
        sub.finalize();
        auto w = *find_octahedron_subdivision(sub).witness;
        REQUIRE(w.paths[0].size() == 3);
        auto tampered = w;
        tampered.paths[1] = {w.paths[1].front(), w.paths[0][1], w.paths[1].back()};
        auto rep = verify_subdivision(sub, tampered);
        CHECK_FALSE(rep.ok);
    }
    SUBCASE("duplicate branch vertex") {
        auto w = good;
        w.branch[1] = w.branch[0];
        CHECK_FALSE(verify_subdivision(octa, w).ok);
    }
    SUBCASE("endpoint mismatch") {
        auto w = good;
        std::swap(w.paths[0].front(), w.paths[0].back());
        CHECK_FALSE(verify_subdivision(octa, w).ok);
    }
}

TEST_CASE("subdivision searches respect budgets") {
    auto s4 = build_sierpinski(4);
    auto res = find_octahedron_subdivision(s4.graph, 10'000);
    CHECK(res.status == SearchStatus::timeout);
    CHECK(res.steps_used >= 10'000);
}

TEST_CASE("witness json round trip") {
    Graph octa = build_octahedron();
    auto w = *find_octahedron_subdivision(octa).witness;
    auto back = subdivision_from_json(subdivision_to_json(w));
    CHECK(back.branch == w.branch);
    CHECK(back.paths == w.paths);
    CHECK(verify_subdivision(octa, back).ok);

    MinorModel m = embed_hanoi_minor(build_sierpinski(3));
    CHECK(minor_model_to_json(m).find("branch_sets") != std::string::npos);
}

TEST_CASE("address helpers") {
    SierpinskiGraph s3 = build_sierpinski(3);
    CHECK(s3.vertex_at(s3.corner_address("", 'l')) == s3.v_l);
    CHECK(s3.vertex_at(s3.junction_address("", "lr")) == s3.v_lr);
    // the two addresses of a junction resolve to one vertex
    CHECK(s3.vertex_at("LRr") == s3.vertex_at("RLl"));
    CHECK_THROWS_AS(s3.vertex_at("ZZz"), parameter_error);
}
