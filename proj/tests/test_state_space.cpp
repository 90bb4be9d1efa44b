#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hanoi/state_space.hpp"

using namespace hanoi;

namespace {

// Independent legal-move oracle: simulate actual peg stacks and test whether
// one move turns a into b. Kept free of the encoding/compatibility code it
// cross-checks.
bool stack_oracle_compatible(const Configuration& a, const Configuration& b) {
    if (a.n != b.n || a.p != b.p) return false;
    std::vector<std::vector<int>> stacks(a.p); // bottom..top per peg
    for (int d = a.n - 1; d >= 0; --d) stacks[a.peg_of_disk[d]].push_back(d);

    for (int from = 0; from < a.p; ++from) {
        if (stacks[from].empty()) continue;
        int disk = stacks[from].back();
        for (int to = 0; to < a.p; ++to) {
            if (to == from) continue;
            if (!stacks[to].empty() && stacks[to].back() < disk) continue; // smaller on top
            Configuration moved = a;
            moved.peg_of_disk[disk] = static_cast<std::uint8_t>(to);
            if (moved == b) return true;
        }
    }
    return false;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

TEST_CASE("configuration encoding is a mixed-radix bijection") {
    for (int p : {3, 4, 5}) {
        for (int n : {1, 2, 3, 4}) {
            std::set<std::uint64_t> seen;
            for (std::uint64_t id = 0; id < ipow(p, n); ++id) {
                Configuration c = Configuration::decode(p, n, id);
                CHECK(c.encode() == id);
                seen.insert(c.encode());
            }
            CHECK(seen.size() == ipow(p, n));
        }
    }
    CHECK(Configuration::from_digits(3, "1121").digits() == "1121");
    CHECK_THROWS_AS(Configuration::decode(3, 2, 9), parameter_error);
}

TEST_CASE("is_compatible on hand-checked cases") {
    auto cfg = [](int p, const std::string& d) { return Configuration::from_digits(p, d); };
    CHECK(is_compatible(cfg(3, "11"), cfg(3, "21")));
    CHECK_FALSE(is_compatible(cfg(3, "11"), cfg(3, "12"))); // d1 blocks d2's source
    CHECK(is_compatible(cfg(3, "21"), cfg(3, "31")));
    CHECK_FALSE(is_compatible(cfg(3, "11"), cfg(3, "11")));
    CHECK_THROWS_AS(is_compatible(cfg(3, "11"), cfg(3, "111")), parameter_error);
}

TEST_CASE("is_compatible agrees with the stack-simulation oracle") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {4, 2}, {5, 2}}) {
        std::uint64_t nv = ipow(p, n);
        REQUIRE(nv <= ipow(3, 5));
        for (std::uint64_t i = 0; i < nv; ++i) {
            Configuration a = Configuration::decode(p, n, i);
            for (std::uint64_t j = 0; j < nv; ++j) {
                Configuration b = Configuration::decode(p, n, j);
                CHECK(is_compatible(a, b) == stack_oracle_compatible(a, b));
            }
        }
    }
}

TEST_CASE("hanoi graph counts") {
    Graph k3 = build_hanoi(3, 1);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph h32 = build_hanoi(3, 2);
    CHECK(h32.vertex_count() == 9);
    CHECK(h32.edge_count() == 12);

    Graph h42 = build_hanoi(4, 2);
    CHECK(h42.vertex_count() == 16);
    CHECK(h42.edge_count() == 36);

    // formula check across the advertised range
    for (int p : {3, 4, 5})
        for (int n = 1; ipow(p, n) <= (1u << 16); ++n)
            CHECK(build_hanoi(p, n).edge_count() == expected_hanoi_edge_count(p, n));
}

TEST_CASE("edge count matches brute-force pair enumeration") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
        std::uint64_t nv = ipow(p, n);
        std::size_t pairs = 0;
        for (std::uint64_t i = 0; i < nv; ++i)
            for (std::uint64_t j = i + 1; j < nv; ++j)
                if (is_compatible(Configuration::decode(p, n, i),
                                  Configuration::decode(p, n, j)))
                    ++pairs;
        CHECK(pairs == build_hanoi(p, n).edge_count());
    }
}

TEST_CASE("degrees, connectivity, cap behavior") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {5, 2}}) {
        Graph g = build_hanoi(p, n);
        CHECK(is_connected(g));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            CHECK(g.degree(v) >= static_cast<std::size_t>(p - 1));
            CHECK(g.degree(v) <= static_cast<std::size_t>(p * (p - 1) / 2));
        }
    }
    CHECK_THROWS_AS(build_hanoi(3, 20, 1000), capacity_error);
    CHECK_THROWS_AS(build_hanoi(2, 3), parameter_error);
}

TEST_CASE("perfect states") {
    auto ids = perfect_states(3, 4);
    CHECK(ids == std::vector<std::uint64_t>{0, 40, 80});
    for (auto id : ids) {
        Configuration c = Configuration::decode(3, 4, id);
        for (int d = 1; d < 4; ++d) CHECK(c.peg_of_disk[d] == c.peg_of_disk[0]);
    }
    CHECK(perfect_states(5, 1).size() == 5);

    // perfect states have exactly p-1 neighbors
    HanoiSpace space{4, 3};
    for (auto id : perfect_states(4, 3)) CHECK(space.neighbors(id).size() == 3);
}

TEST_CASE("boundary vertices and inter-copy edges") {
    auto b32 = boundary_vertices(3, 2);
    CHECK(b32.size() == 6);
    CHECK(boundary_vertices(3, 1).size() == 3);
    CHECK(inter_copy_edge_count(3, 2) == 3);
    CHECK(inter_copy_edge_count(4, 3) == 24);

    // enumeration cross-check: edges whose endpoints differ in the largest disk
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}}) {
        Graph g = build_hanoi(p, n);
        std::uint64_t crossing = 0;
        std::uint64_t copy = ipow(p, n - 1);
        for (auto [u, v] : g.edges())
            if (u / copy != v / copy) ++crossing;
        CHECK(crossing == inter_copy_edge_count(p, n));
    }
}

TEST_CASE("bfs distances and diameter") {
    Graph h33 = build_hanoi(3, 3);
    CHECK(diameter(h33) == 7);
    CHECK(bfs_distance(h33, 0, 0) == 0);
    CHECK_THROWS_AS(bfs_distance(h33, 0, 100), parameter_error);

    for (int n = 1; n <= 8; ++n) {
        HanoiSpace space{3, n};
        auto ig = space.implicit();
        auto ids = perfect_states(3, n);
        CHECK(bfs_distance(ig, static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[2])) ==
              (1u << n) - 1);
    }
}

TEST_CASE("implicit and materialized graphs agree") {
    HanoiSpace space{4, 3};
    Graph g = build_hanoi(4, 3);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto from_space = space.neighbors(v);
        std::vector<std::uint64_t> from_graph(g.neighbors(v).begin(), g.neighbors(v).end());
        CHECK(from_space == from_graph);
    }
}

TEST_CASE("edge list round trip") {
    Graph g = build_hanoi(3, 2);
    write_edge_list(g, "hanoi", "test_h32.edgelist");
    auto back = read_edge_list("test_h32.edgelist");
    CHECK(back.family == "hanoi");
    CHECK(back.graph.vertex_count() == g.vertex_count());
    CHECK(back.graph.edges() == g.edges());
}
