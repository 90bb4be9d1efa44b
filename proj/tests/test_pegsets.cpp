#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "hanoi/pegsets.hpp"
#include "hanoi/separators.hpp"

using namespace hanoi;

namespace {

Pegset make(int p, int n, const std::vector<std::pair<int, int>>& freezes) {
    Pegset ps;
    ps.p = p;
    ps.n = n;
    ps.rho.assign(n, Pegset::kUnfrozen);
    for (auto [disk, peg] : freezes) ps.rho[disk] = static_cast<std::int8_t>(peg);
    return ps;
}

// Brute-force membership over the whole state space.
std::vector<std::uint64_t> member_oracle(const Pegset& ps) {
    std::uint64_t nv = 1;
    for (int i = 0; i < ps.n; ++i) nv *= ps.p;
    std::vector<std::uint64_t> out;
    for (std::uint64_t id = 0; id < nv; ++id)
        if (ps.contains(Configuration::decode(ps.p, ps.n, id))) out.push_back(id);
    return out;
}

} // namespace

TEST_CASE("pegset membership semantics") {
    // p=4, n=3, freeze d_1 on peg 1: members have p_1 = 1 and the other disks
    // on pegs {2,3,4}
    Pegset ps = make(4, 3, {{0, 0}});
    auto members = pegset_members(ps);
    CHECK(members.size() == 9);
    CHECK(members == member_oracle(ps));
    for (auto id : members) {
        Configuration c = Configuration::decode(4, 3, id);
        CHECK(c.peg_of_disk[0] == 0);
        CHECK(c.peg_of_disk[1] != 0);
        CHECK(c.peg_of_disk[2] != 0);
    }

    // freezing nothing keeps all p^n configurations
    Pegset empty = make(3, 3, {});
    CHECK(pegset_members(empty).size() == 27);

    // zero-disk freeze bans the peg for everyone
    Pegset banned = make(4, 2, {});
    banned.extra_frozen_pegs.push_back(0);
    for (auto id : pegset_members(banned)) {
        Configuration c = Configuration::decode(4, 2, id);
        CHECK(c.peg_of_disk[0] != 0);
        CHECK(c.peg_of_disk[1] != 0);
    }
}

TEST_CASE("regular pegset members induce a connected 3-peg Hanoi copy") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {5, 4}}) {
        auto sets = enumerate_regular_pegsets(p, n);
        const Pegset& ps = sets[sets.size() / 2];
        auto members = pegset_members(ps);

        auto loose = ps.unfrozen_disks();
        std::vector<int> open;
        auto frozen = ps.frozen_pegs();
        for (int peg = 0; peg < p; ++peg)
            if (std::find(frozen.begin(), frozen.end(), peg) == frozen.end()) open.push_back(peg);
        REQUIRE(open.size() == 3);
        int d = static_cast<int>(loose.size());

        // explicit bijection onto H_3^d: unfrozen disk i at open peg j -> digit j
        Graph h3d = build_hanoi(3, d);
        std::set<std::pair<Vertex, Vertex>> image;
        std::vector<std::uint64_t> sorted_members(members);
        HanoiSpace big{p, n};
        auto index_of = [&](std::uint64_t id) {
            Configuration c = Configuration::decode(p, n, id);
            std::uint64_t small = 0;
            for (int i = d - 1; i >= 0; --i) {
                int peg = c.peg_of_disk[loose[i]];
                int j = static_cast<int>(std::find(open.begin(), open.end(), peg) - open.begin());
                small = small * 3 + j;
            }
            return static_cast<Vertex>(small);
        };
        for (auto id : members)
            for (auto nb : big.neighbors(id))
                if (std::binary_search(sorted_members.begin(), sorted_members.end(), nb)) {
                    Vertex a = index_of(id), b = index_of(nb);
                    if (a < b) image.emplace(a, b);
                }
        auto expect = h3d.edges();
        CHECK(image.size() == expect.size());
        CHECK(std::equal(image.begin(), image.end(), expect.begin()));
    }
}

TEST_CASE("regular pegset enumeration counts") {
    CHECK(enumerate_regular_pegsets(4, 3).size() == 12);
    CHECK(enumerate_regular_pegsets(4, 5).size() == 40);
    CHECK(enumerate_regular_pegsets(5, 4).size() == 120);
    CHECK(regular_pegset_count(4, 3) == 12);
    CHECK(regular_pegset_count(4, 5) == 40);
    CHECK(regular_pegset_count(5, 4) == 120);
    CHECK(enumerate_regular_pegsets(4, 7).size() == regular_pegset_count(4, 7));

    // residue violation is an explicit error, never silently rounded
    CHECK_THROWS_AS(enumerate_regular_pegsets(4, 4), parameter_error);
    CHECK_THROWS_AS(enumerate_regular_pegsets(5, 5), parameter_error);

    for (const auto& ps : enumerate_regular_pegsets(4, 5)) CHECK(ps.is_regular());
}

TEST_CASE("regular adjacency against the member-intersection oracle") {
    // clean-quota instances: the four adjacency conditions match intersection
    for (auto [p, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}}) {
        auto sets = enumerate_regular_pegsets(p, n);
        std::vector<std::vector<std::uint64_t>> members;
        for (const auto& ps : sets) members.push_back(pegset_members(ps));
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                std::vector<std::uint64_t> common;
                std::set_intersection(members[i].begin(), members[i].end(), members[j].begin(),
                                      members[j].end(), std::back_inserter(common));
                CHECK(regular_adjacent(sets[i], sets[j]) == !common.empty());
            }
    }

    // hand-checked cases at p=4, n=3
    Pegset u = make(4, 3, {{0, 0}});
    Pegset v = make(4, 3, {{1, 1}});
    CHECK(regular_adjacent(u, v));
    CHECK_FALSE(regular_adjacent(u, make(4, 3, {{0, 1}}))); // same disk, different pegs
    CHECK_FALSE(regular_adjacent(u, make(4, 3, {{1, 0}}))); // same frozen peg set

    // the quota-one degeneracy: with q = 1 and p = 5 two pegsets freezing
    // disjoint peg pairs share a configuration although condition 2 fails;
    // the condition-based characterization breaks exactly here
    Pegset a = make(5, 4, {{0, 0}, {1, 1}});
    Pegset b = make(5, 4, {{2, 2}, {3, 3}});
    CHECK_FALSE(regular_adjacent(a, b));
    auto ma = pegset_members(a);
    auto mb = pegset_members(b);
    std::vector<std::uint64_t> common;
    std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(),
                          std::back_inserter(common));
    CHECK_FALSE(common.empty());
}

TEST_CASE("shared configurations for adjacent pegsets") {
    auto sets = enumerate_regular_pegsets(4, 5);
    int checked = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (regular_adjacent(sets[i], sets[j])) {
                Configuration w = shared_configuration(sets[i], sets[j]);
                CHECK(sets[i].contains(w));
                CHECK(sets[j].contains(w));
                ++checked;
            }
    CHECK(checked == 180); // |E(I_4^5)|
}

TEST_CASE("intersection graph regression values") {
    PegsetGraph i43 = build_intersection_graph(4, 3);
    CHECK(i43.graph.vertex_count() == 12);
    CHECK(i43.graph.edge_count() == 36);
    CHECK(is_connected(i43.graph));
    CHECK(vertex_expansion(i43.graph) == Rational(1, 1)); // recorded; positive

    PegsetGraph i45 = build_intersection_graph(4, 5);
    CHECK(i45.graph.vertex_count() == 40);
    CHECK(i45.graph.edge_count() == 180);
    CHECK(diameter(i45.graph) == 3);

    CHECK(diameter(i43.graph) == 2);
}

TEST_CASE("pegset walks") {
    PegsetGraph ipn = build_intersection_graph(4, 5);

    // trivial cases
    auto self_walk = pegset_path(ipn.labels[0], ipn.labels[0]);
    CHECK(self_walk.size() == 1);
    for (auto [u, v] : ipn.graph.edges()) {
        auto walk = pegset_path(ipn.labels[u], ipn.labels[v]);
        CHECK(walk.size() == 2);
        break;
    }

    std::mt19937_64 rng(5150);
    // two frozen pegs at p = 5 exercise the frozen-elsewhere rebuild case,
    // which a single frozen peg (p = 4) never reaches
    for (auto [p, n] : std::vector<std::pair<int, int>>{{4, 5}, {4, 9}, {5, 4}, {5, 7}}) {
        PegsetGraph g = build_intersection_graph(p, n);
        for (int t = 0; t < 100; ++t) {
            Vertex a = static_cast<Vertex>(rng() % g.graph.vertex_count());
            Vertex b = static_cast<Vertex>(rng() % g.graph.vertex_count());
            auto walk = pegset_path(g.labels[a], g.labels[b]);
            CHECK(walk.front() == g.labels[a]);
            CHECK(walk.back() == g.labels[b]);
            for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                CHECK(regular_adjacent(walk[i], walk[i + 1]));
            CHECK(walk.size() - 1 <= static_cast<std::size_t>(kPegsetPathKappa) * n);
            CHECK(walk.size() - 1 >= bfs_distance(g.graph, a, b));
        }
    }
}

TEST_CASE("swap automorphisms") {
    PegsetGraph ipn = build_intersection_graph(4, 3);

    // involution on every vertex
    for (const auto& ps : ipn.labels)
        CHECK(swap_automorphism(swap_automorphism(ps, 0, 1), 0, 1) == ps);

    // edge preservation, exhaustively
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (auto [u, v] : ipn.graph.edges())
                CHECK(ipn.graph.has_edge(ipn.id_of(swap_automorphism(ipn.labels[u], i, j)),
                                         ipn.id_of(swap_automorphism(ipn.labels[v], i, j))));

    CHECK_THROWS_AS(swap_automorphism(ipn.labels[0], 0, 9), parameter_error);
}

TEST_CASE("g4 graph structure") {
    PegsetGraph g43 = build_g4(3);
    CHECK(g43.graph.vertex_count() == 16); // 4 * (C(3,0) + C(3,1))

    PegsetGraph g45 = build_g4(5);
    CHECK(g45.graph.vertex_count() == 64); // 4 * 2^4

    // two empty freezes on distinct pegs are adjacent
    Pegset e0, e1;
    e0.n = e1.n = 3;
    e0.p = e1.p = 4;
    e0.rho.assign(3, Pegset::kUnfrozen);
    e1.rho.assign(3, Pegset::kUnfrozen);
    e0.extra_frozen_pegs.push_back(0);
    e1.extra_frozen_pegs.push_back(1);
    CHECK(g43.graph.has_edge(g43.id_of(e0), g43.id_of(e1)));

    // I_4^3 is an induced subgraph of G_4^3
    PegsetGraph i43 = build_intersection_graph(4, 3);
    for (std::size_t i = 0; i < i43.labels.size(); ++i)
        for (std::size_t j = i + 1; j < i43.labels.size(); ++j)
            CHECK(i43.graph.has_edge(i, j) ==
                  g43.graph.has_edge(g43.id_of(i43.labels[i]), g43.id_of(i43.labels[j])));

    CHECK_THROWS_AS(build_g4(2), parameter_error);
}

TEST_CASE("configuration-to-pegset maps") {
    // perfect state on peg 1 in H_4^3: eligible pegs are those holding
    // exactly one disk, so no regular pegset contains it
    Configuration perfect = Configuration::from_digits(4, "111");
    CHECK(pegsets_of_config(perfect, "regular").empty());

    Configuration spread = Configuration::from_digits(4, "123");
    auto f = pegsets_of_config(spread, "regular");
    CHECK(f.size() == 3); // quota-one degeneracy: three singleton pegs
    for (const auto& ps : f) CHECK(ps.contains(spread));

    // g(f(cfg)) always contains cfg
    auto g = configs_of_pegsets(f);
    CHECK(std::binary_search(g.begin(), g.end(), spread.encode()));

    // g4 family: every config lies in at most 4 pegsets, one per light peg
    for (std::uint64_t id = 0; id < 64; ++id) {
        Configuration c = Configuration::decode(4, 3, id);
        auto fg = pegsets_of_config(c, "g4");
        CHECK(fg.size() <= 4);
        for (const auto& ps : fg) CHECK(ps.contains(c));
    }

    CHECK_THROWS_AS(pegsets_of_config(perfect, "nosuch"), parameter_error);
}

TEST_CASE("pegset json round trip") {
    Pegset ps = make(4, 5, {{0, 2}, {3, 2}});
    Pegset back = Pegset::from_json(ps.to_json());
    CHECK(back == ps);

    Pegset zero;
    zero.n = 3;
    zero.p = 4;
    zero.rho.assign(3, Pegset::kUnfrozen);
    zero.extra_frozen_pegs.push_back(2);
    CHECK(Pegset::from_json(zero.to_json()) == zero);
}
