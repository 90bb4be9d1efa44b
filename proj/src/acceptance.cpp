#include "hanoi/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hanoi/decomposition.hpp"
#include "hanoi/fractal.hpp"
#include "hanoi/pegsets.hpp"
#include "hanoi/separators.hpp"
#include "hanoi/setfamilies.hpp"
#include "hanoi/smallgraphs.hpp"
#include "hanoi/state_space.hpp"

namespace hanoi {

Graph seeded_random_graph(int n, std::uint64_t seed, int percent) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(i, j);
    g.finalize();
    return g;
}

namespace {

Rational rational_abs(const Rational& r) { return r.num < 0 ? Rational(-r.num, r.den) : r; }

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Named corpus of graphs on <= 10 vertices (plus a handful up to 12 for the
// sandwich criterion).
std::vector<std::pair<std::string, Graph>> haven_corpus(std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 1; n <= 8; ++n) out.emplace_back("P" + std::to_string(n), path_graph(n));
    for (int n = 3; n <= 10; ++n) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
    for (int n = 2; n <= 6; ++n) out.emplace_back("K" + std::to_string(n), complete_graph(n));
    for (int n = 3; n <= 6; ++n) out.emplace_back("star" + std::to_string(n), star_graph(n));
    out.emplace_back("K22", complete_bipartite(2, 2));
    out.emplace_back("K23", complete_bipartite(2, 3));
    out.emplace_back("K24", complete_bipartite(2, 4));
    out.emplace_back("K25", complete_bipartite(2, 5));
    out.emplace_back("K33", complete_bipartite(3, 3));
    out.emplace_back("K34", complete_bipartite(3, 4));
    out.emplace_back("grid2x2", grid_graph(2, 2));
    out.emplace_back("grid2x3", grid_graph(2, 3));
    out.emplace_back("grid2x4", grid_graph(2, 4));
    out.emplace_back("grid2x5", grid_graph(2, 5));
    out.emplace_back("grid3x3", grid_graph(3, 3));
    for (int rim = 4; rim <= 8; ++rim)
        out.emplace_back("W" + std::to_string(rim), wheel_graph(rim));
    out.emplace_back("petersen", petersen_graph());
    out.emplace_back("cube", cube_graph());
    out.emplace_back("octahedron", build_octahedron());
    out.emplace_back("H_3^2", build_hanoi(3, 2));
    out.emplace_back("S_2", build_sierpinski(2).graph);
    for (int i = 0; i < 4; ++i)
        out.emplace_back("rand" + std::to_string(i),
                         seeded_random_graph(7 + i, seed + i, 40));
    return out;
}

// Exact canonical form of a graph on <= 8 vertices: the lexicographically
// least adjacency bitstring over all vertex permutations.
std::uint64_t canonical_code(const Graph& g) {
    int n = static_cast<int>(g.vertex_count());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(perm[i], perm[j])) code |= (1ull << bit);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct Runner {
    const AcceptanceOptions& opt;
    std::ostream& log;
    std::vector<CriterionResult> results;

    void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            res.pass = body(res.detail);
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        log << (res.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << ")";
        if (!res.detail.empty()) log << ": " << res.detail;
        log << "  [" << static_cast<int>(res.seconds * 1000) << " ms]\n";
        log.flush();
        results.push_back(res);
    }
};

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& log) {
    Runner r{opt, log, {}};
    const bool quick = opt.quick;

    r.run(1, "hanoi vertex/edge counts", [&](std::string& detail) {
        std::uint64_t cap = quick ? 4096 : 65536;
        for (int p : {3, 4, 5}) {
            for (int n = 1; ipow(p, n) <= cap; ++n) {
                Graph g = build_hanoi(p, n);
                if (g.vertex_count() != ipow(p, n) ||
                    g.edge_count() != expected_hanoi_edge_count(p, n)) {
                    detail = "count mismatch at p=" + std::to_string(p) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    r.run(2, "three-peg perfect-state distance 2^n-1", [&](std::string& detail) {
        int max_n = quick ? 9 : 12;
        for (int n = 1; n <= max_n; ++n) {
            HanoiSpace space{3, n};
            auto perfect = perfect_states(3, n);
            auto ig = space.implicit();
            std::uint64_t d = bfs_distance(ig, static_cast<Vertex>(perfect[0]),
                                           static_cast<Vertex>(perfect[1]));
            if (d != (1ull << n) - 1) {
                detail = "distance " + std::to_string(d) + " at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    r.run(3, "sierpinski decomposition width 4", [&](std::string& detail) {
        int max_n = quick ? 6 : 8;
        for (int n = 3; n <= max_n; ++n) {
            SierpinskiGraph s = build_sierpinski(n);
            auto check = validate(s.graph, sierpinski_decomposition(s));
            if (!check.ok() || *check.width != 4) {
                detail = "level " + std::to_string(n) +
                         (check.ok() ? " width " + std::to_string(*check.width)
                                     : " invalid: " + check.violations.front());
                return false;
            }
        }
        return true;
    });

    r.run(4, "octahedron subdivision witness on S_5", [&](std::string& detail) {
        std::ifstream in(opt.data_dir + "/octahedron_witness_s5.json");
        if (!in) {
            detail = "witness file missing under " + opt.data_dir;
            return false;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        SubdivisionWitness w = subdivision_from_json(buf.str());
        SierpinskiGraph s5 = build_sierpinski(5);
        auto rep = verify_subdivision(s5.graph, w);
        if (!rep.ok) {
            detail = rep.violations.front();
            return false;
        }
        if (exact_treewidth(build_octahedron()) != 4) {
            detail = "octahedron treewidth != 4";
            return false;
        }
        return true;
    });

    r.run(5, "width-4 pipeline and contraction isomorphism", [&](std::string& detail) {
        int max_embed = quick ? 4 : 6;
        for (int n = 1; n <= max_embed; ++n) {
            SierpinskiGraph host = build_sierpinski(n + 1);
            MinorModel m = embed_hanoi_minor(host);
            auto rep = verify_minor_model(m);
            if (!rep.ok) {
                detail = "minor model invalid at n=" + std::to_string(n) + ": " +
                         rep.violations.front();
                return false;
            }
            TreeDecomposition lifted = lift_through_minor(sierpinski_decomposition(host), m);
            auto check = validate(m.pattern, lifted);
            if (!check.ok() || *check.width > 4) {
                detail = "lifted decomposition bad at n=" + std::to_string(n);
                return false;
            }
        }
        int max_contract = quick ? 5 : 7;
        for (int n = 1; n <= max_contract; ++n) {
            auto res = contract_boundary_edges(build_hanoi(3, n), n); // throws if not S_n
            auto rep = verify_minor_model(res.model);
            if (!rep.ok) {
                detail = "contraction model invalid at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    r.run(6, "recursive separator bounds", [&](std::string& detail) {
        std::vector<std::pair<int, int>> cases = quick
            ? std::vector<std::pair<int, int>>{{4, 5}, {5, 4}}
            : std::vector<std::pair<int, int>>{{4, 7}, {5, 6}};
        for (auto [p, max_n] : cases) {
            for (int n = 1; n <= max_n; ++n) {
                auto tree = recursive_separator(p, n);
                auto rep = verify_recursive_separator(build_hanoi(p, n), tree);
                if (!rep.ok) {
                    detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " +
                             rep.violations.front();
                    return false;
                }
            }
        }
        return true;
    });

    r.run(7, "endgame connection probabilities", [&](std::string& detail) {
        Graph h3 = build_hanoi(3, 3);
        std::vector<Vertex> two_x, three_x;
        for (auto v : two_state_removal(3)) two_x.push_back(static_cast<Vertex>(v));
        for (auto v : hanoi_level_separator(3, 3)) three_x.push_back(static_cast<Vertex>(v));
        auto two = connection_probability(h3, two_x);
        auto three = connection_probability(h3, three_x);
        if (two.probability != Rational(373, 729)) {
            detail = "two-state at n=3 gave " + two.probability.str();
            return false;
        }
        if (three.probability != Rational(192, 729)) {
            detail = "three-state at n=3 gave " + three.probability.str();
            return false;
        }
        Graph h8 = build_hanoi(3, 8);
        std::vector<Vertex> two8, three8;
        for (auto v : two_state_removal(8)) two8.push_back(static_cast<Vertex>(v));
        for (auto v : hanoi_level_separator(3, 8)) three8.push_back(static_cast<Vertex>(v));
        auto p2 = connection_probability(h8, two8).probability;
        auto p3 = connection_probability(h8, three8).probability;
        if (rational_abs(p2 - Rational(5, 9)) > Rational(1, 100)) {
            detail = "two-state at n=8 is " + p2.str() + ", not within 0.01 of 5/9";
            return false;
        }
        if (rational_abs(p3 - Rational(1, 3)) > Rational(1, 100)) {
            detail = "three-state at n=8 is " + p3.str() + ", not within 0.01 of 1/3";
            return false;
        }
        return true;
    });

    r.run(8, "sandwich r <= f <= 3s", [&](std::string& detail) {
        std::vector<std::pair<std::string, Graph>> corpus;
        for (int n = 2; n <= 6; ++n) corpus.emplace_back("P" + std::to_string(n), path_graph(n));
        for (int n = 3; n <= 8; ++n) corpus.emplace_back("C" + std::to_string(n), cycle_graph(n));
        for (int n = 2; n <= 5; ++n) corpus.emplace_back("K" + std::to_string(n), complete_graph(n));
        corpus.emplace_back("star5", star_graph(5));
        corpus.emplace_back("K23", complete_bipartite(2, 3));
        corpus.emplace_back("K33", complete_bipartite(3, 3));
        corpus.emplace_back("grid2x3", grid_graph(2, 3));
        corpus.emplace_back("grid2x5", grid_graph(2, 5));
        corpus.emplace_back("grid3x3", grid_graph(3, 3));
        corpus.emplace_back("petersen", petersen_graph());
        corpus.emplace_back("cube", cube_graph());
        corpus.emplace_back("octahedron", build_octahedron());
        corpus.emplace_back("W5", wheel_graph(5));
        corpus.emplace_back("H_3^2", build_hanoi(3, 2));
        corpus.emplace_back("S_2", build_sierpinski(2).graph);
        if (corpus.size() < 20) {
            detail = "corpus too small";
            return false;
        }
        Balance c = Balance::inv_sqrt2();
        for (const auto& [name, g] : corpus) {
            auto [f, witness] = brute_force_f(g);
            int rr = brute_force_r(g, c);
            int ss = brute_force_s(g, c);
            if (!(rr <= f && f <= 3 * ss)) {
                detail = name + ": r=" + std::to_string(rr) + " f=" + std::to_string(f) +
                         " s=" + std::to_string(ss);
                return false;
            }
        }
        return true;
    });

    r.run(9, "pegset adjacency = nonempty intersection", [&](std::string& detail) {
        for (auto [p, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {5, 4}}) {
            auto sets = enumerate_regular_pegsets(p, n);
            std::vector<std::vector<std::uint64_t>> members;
            members.reserve(sets.size());
            for (const auto& ps : sets) members.push_back(pegset_members(ps));
            for (std::size_t i = 0; i < sets.size(); ++i) {
                for (std::size_t j = i + 1; j < sets.size(); ++j) {
                    bool by_conditions = regular_adjacent(sets[i], sets[j]);
                    std::vector<std::uint64_t> common;
                    std::set_intersection(members[i].begin(), members[i].end(),
                                          members[j].begin(), members[j].end(),
                                          std::back_inserter(common));
                    if (by_conditions != !common.empty()) {
                        detail = "I_" + std::to_string(p) + "^" + std::to_string(n) +
                                 " disagreement at pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                        return false;
                    }
                    if (by_conditions) {
                        Configuration witness = shared_configuration(sets[i], sets[j]);
                        if (!sets[i].contains(witness) || !sets[j].contains(witness)) {
                            detail = "witness construction failed";
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    r.run(10, "pegset counts and vertex transitivity", [&](std::string& detail) {
        for (auto [p, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {4, 7}, {5, 4}}) {
            auto sets = enumerate_regular_pegsets(p, n);
            if (sets.size() != regular_pegset_count(p, n)) {
                detail = "count mismatch for I_" + std::to_string(p) + "^" + std::to_string(n);
                return false;
            }
        }
        PegsetGraph ipn = build_intersection_graph(4, 5);
        auto edges = ipn.graph.edges();
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                for (auto [u, v] : edges) {
                    Vertex mu = ipn.id_of(swap_automorphism(ipn.labels[u], i, j));
                    Vertex mv = ipn.id_of(swap_automorphism(ipn.labels[v], i, j));
                    if (!ipn.graph.has_edge(mu, mv)) {
                        detail = "phi_{" + std::to_string(i) + "," + std::to_string(j) +
                                 "} broke an edge";
                        return false;
                    }
                }
            }
        }
        // orbit closure under disk swaps and peg transpositions
        std::set<Vertex> orbit{0};
        std::vector<Vertex> frontier{0};
        while (!frontier.empty()) {
            Vertex v = frontier.back();
            frontier.pop_back();
            auto push = [&](const Pegset& ps) {
                Vertex w = ipn.id_of(ps);
                if (orbit.insert(w).second) frontier.push_back(w);
            };
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) push(swap_automorphism(ipn.labels[v], i, j));
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    std::vector<int> sigma{0, 1, 2, 3};
                    std::swap(sigma[a], sigma[b]);
                    push(relabel_pegs(ipn.labels[v], sigma));
                }
        }
        if (orbit.size() != ipn.graph.vertex_count()) {
            detail = "orbit covers " + std::to_string(orbit.size()) + " of " +
                     std::to_string(ipn.graph.vertex_count());
            return false;
        }
        return true;
    });

    r.run(11, "pegset paths and diameters", [&](std::string& detail) {
        std::vector<int> ns = quick ? std::vector<int>{5, 7} : std::vector<int>{5, 7, 9};
        std::mt19937_64 rng(opt.seed);
        // Recorded linearity constant: measured diameters are 3, 3, 4 at
        // n = 5, 7, 9, so diameter(n)/n stays below 1.
        const std::uint32_t slope = 1;
        for (int n : ns) {
            PegsetGraph ipn = build_intersection_graph(4, n);
            std::uint32_t diam = diameter(ipn.graph);
            if (diam > slope * static_cast<std::uint32_t>(n)) {
                detail = "diameter " + std::to_string(diam) + " too large at n=" + std::to_string(n);
                return false;
            }
            int pairs = quick ? 50 : 200;
            for (int t = 0; t < pairs; ++t) {
                Vertex a = static_cast<Vertex>(rng() % ipn.graph.vertex_count());
                Vertex b = static_cast<Vertex>(rng() % ipn.graph.vertex_count());
                auto walk = pegset_path(ipn.labels[a], ipn.labels[b]);
                for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                    if (!regular_adjacent(walk[i], walk[i + 1])) {
                        detail = "walk step not adjacent";
                        return false;
                    }
                std::size_t len = walk.size() - 1;
                std::uint32_t d = bfs_distance(ipn.graph, a, b);
                if (len > static_cast<std::size_t>(kPegsetPathKappa) * n || len < d) {
                    detail = "walk length " + std::to_string(len) + " vs distance " +
                             std::to_string(d) + " at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    r.run(12, "kneser diameter formula", [&](std::string& detail) {
        int max_n = quick ? 10 : 12;
        for (int n = 3; n <= max_n; ++n) {
            for (int k = 1; 2 * k + 1 <= n; ++k) {
                SubsetGraph kn = build_kneser(n, k);
                std::uint32_t d = diameter(kn.graph);
                if (d != kneser_diameter_formula(n, k)) {
                    detail = "Kn(" + std::to_string(n) + "," + std::to_string(k) + ") diameter " +
                             std::to_string(d);
                    return false;
                }
            }
        }
        return true;
    });

    r.run(13, "kruskal-katona random families", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed);
        int trials = quick ? 200 : 1000;
        for (int t = 0; t < trials; ++t) {
            int n = 4 + static_cast<int>(rng() % 9); // 4..12
            int k = 2 + static_cast<int>(rng() % (n - 2));
            int l = 1 + static_cast<int>(rng() % (k - 1));
            std::uint64_t slice = binomial(n, k);
            std::uint64_t want = 1 + rng() % slice;
            std::set<std::uint64_t> fam;
            while (fam.size() < want) {
                std::uint64_t mask = 0;
                while (std::popcount(mask) != k) mask = rng() & ((1ull << n) - 1);
                fam.insert(mask);
            }
            auto check = kk_check({fam.begin(), fam.end()}, k, l);
            if (!check.ok) {
                detail = "trial " + std::to_string(t) + " failed: shadow " +
                         std::to_string(check.shadow_size) + " < C(" + std::to_string(check.m) +
                         "," + std::to_string(l) + ")";
                return false;
            }
        }
        return true;
    });

    r.run(14, "tensor product treewidth monotonicity", [&](std::string& detail) {
        int max_g = quick ? 4 : 5;
        // one representative per isomorphism class; treewidth and the tensor
        // product are isomorphism-invariant
        std::vector<Graph> reps;
        std::set<std::pair<int, std::uint64_t>> seen;
        for (int s = 1; s <= max_g; ++s) {
            int pairs = s * (s - 1) / 2;
            for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
                Graph g(s);
                int bit = 0;
                for (int i = 0; i < s; ++i)
                    for (int j = i + 1; j < s; ++j, ++bit)
                        if (code & (1u << bit)) g.add_edge(i, j);
                g.finalize();
                if (!is_connected(g)) continue;
                if (seen.emplace(s, canonical_code(g)).second) reps.push_back(g);
            }
        }
        std::vector<std::pair<std::string, Graph>> hs{
            {"K3", complete_graph(3)}, {"K4", complete_graph(4)}, {"C5", cycle_graph(5)}};
        for (const auto& g : reps) {
            int tw_g = exact_treewidth(g);
            for (const auto& [hname, h] : hs) {
                Graph prod = tensor_product(g, h);
                if (treewidth_at_most(prod, tw_g - 1)) {
                    detail = "tw dropped below " + std::to_string(tw_g) + " for a " +
                             std::to_string(g.vertex_count()) + "-vertex G times " + hname;
                    return false;
                }
            }
        }
        detail = std::to_string(reps.size()) + " connected graphs checked";
        return true;
    });

    r.run(15, "haven order iff treewidth", [&](std::string& detail) {
        auto corpus = haven_corpus(opt.seed);
        for (const auto& [name, g] : corpus) {
            if (g.vertex_count() > kHavenVertexCap) continue;
            int tw = exact_treewidth(g);
            int max_k = quick ? 4 : kHavenOrderCap;
            for (int k = 1; k <= max_k; ++k) {
                HavenQuery q = haven_order_at_least(g, k);
                if (q.robber_wins != (tw >= k - 1)) {
                    detail = name + " at k=" + std::to_string(k) + ": robber_wins=" +
                             std::to_string(q.robber_wins) + " but tw=" + std::to_string(tw);
                    return false;
                }
            }
        }
        return true;
    });

    r.run(16, "pegset mapping bounds", [&](std::string& detail) {
        // |f| <= p-2 over H_4^5
        for (std::uint64_t id = 0; id < ipow(4, 5); ++id) {
            auto f = pegsets_of_config(Configuration::decode(4, 5, id), "regular");
            if (f.size() > 2) {
                detail = "H_4^5 config in " + std::to_string(f.size()) + " regular pegsets";
                return false;
            }
        }
        // |f| <= 4 over G_4^5
        for (std::uint64_t id = 0; id < ipow(4, 5); ++id) {
            auto f = pegsets_of_config(Configuration::decode(4, 5, id), "g4");
            if (f.size() > 4) {
                detail = "H_4^5 config in " + std::to_string(f.size()) + " G_4 pegsets";
                return false;
            }
        }
        // |f| <= p-2 over H_5^4 as stated; at n = p-1 the quota is one disk
        // per frozen peg and configurations spreading four disks over four
        // pegs land in C(4,2) = 6 > 3 regular pegsets, so this half is
        // expected to fail.
        std::size_t worst = 0;
        for (std::uint64_t id = 0; id < ipow(5, 4); ++id) {
            auto f = pegsets_of_config(Configuration::decode(5, 4, id), "regular");
            worst = std::max(worst, f.size());
        }
        if (worst > 3) {
            detail = "max |f| over H_5^4 is " + std::to_string(worst) +
                     " > p-2 = 3 (the p-2 bound needs quota >= 2, i.e. n >= 2p-3)";
            return false;
        }
        return true;
    });

    r.run(17, "central mass fraction", [&](std::string& detail) {
        Rational frac = central_mass_fraction(41, 0.75);
        if (frac < Rational(3, 4)) {
            detail = "fraction " + frac.str() + " below 0.75 at n=41";
            return false;
        }
        detail = "n=41 fraction " + frac.str();
        return true;
    });

    return r.results;
}

} // namespace hanoi
