#include "hanoi/separators.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hanoi/bitgraph.hpp"
#include "json.hpp"

namespace hanoi {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Largest-first greedy packing of component sizes into two sides. Exact when
// one component exceeds half, and within the 2/3 bound the fairness argument
// needs otherwise.
void pack_components(const Graph& g, const std::vector<char>& removed,
                     std::vector<Vertex>& side_a, std::vector<Vertex>& side_b) {
    auto comp = components(g, removed);
    int m = 0;
    for (int c : comp) m = std::max(m, c + 1);
    std::vector<std::size_t> sizes(m, 0);
    for (int c : comp)
        if (c >= 0) ++sizes[c];
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[a] > sizes[b]; });
    std::vector<char> to_a(m, 0);
    std::size_t wa = 0, wb = 0;
    for (int c : order) {
        if (wa <= wb) { to_a[c] = 1; wa += sizes[c]; }
        else wb += sizes[c];
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (comp[v] < 0) continue;
        (to_a[comp[v]] ? side_a : side_b).push_back(v);
    }
}

} // namespace

SeparatorCheck verify_c_separator(const Graph& g, const std::vector<Vertex>& x, Balance c) {
    SeparatorCheck out;
    if (c.c_squared < Rational(1, 4) || c.c_squared >= Rational(1, 1)) {
        out.violations.push_back("balance parameter outside [1/2, 1)");
        return out;
    }
    std::vector<char> removed(g.vertex_count(), 0);
    std::set<Vertex> xs;
    for (Vertex v : x) {
        if (v >= g.vertex_count()) {
            out.violations.push_back("separator vertex " + std::to_string(v) + " out of range");
            return out;
        }
        removed[v] = 1;
        xs.insert(v);
    }

    Separation sep;
    sep.separator.assign(xs.begin(), xs.end());
    pack_components(g, removed, sep.side_a, sep.side_b);
    if (sep.side_a.size() < sep.side_b.size()) std::swap(sep.side_a, sep.side_b);

    std::uint64_t total = g.vertex_count();
    std::uint64_t worst = sep.side_a.size();
    if (!c.allows(worst, total)) {
        out.violations.push_back("largest side has " + std::to_string(worst) + " of " +
                                 std::to_string(total) + " vertices, above the c-bound");
        return out;
    }
    out.separation = std::move(sep);
    return out;
}

std::vector<std::uint64_t> hanoi_level_separator(int p, int n, std::uint64_t vertex_cap) {
    if (p < 3 || n < 1) throw parameter_error("hanoi_level_separator needs p >= 3, n >= 1");
    if (ipow(p, n) > vertex_cap) throw capacity_error("hanoi_level_separator: above cap");

    // Inter-copy edges: the largest disk moves between pegs i < j while the
    // other disks sit on the remaining p-2 pegs.
    std::vector<int> others;
    std::set<std::uint64_t> x;
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            int chosen;
            if (p == 3) {
                // cyclic: the pair {a, a+1 mod 3} loses its endpoint in copy a,
                // so each copy loses exactly one vertex
                chosen = (j == (i + 1) % 3) ? i : j;
            } else {
                chosen = i;
            }
            others.clear();
            for (int q = 0; q < p; ++q)
                if (q != i && q != j) others.push_back(q);
            std::uint64_t count = ipow(p - 2, n - 1);
            for (std::uint64_t a = 0; a < count; ++a) {
                Configuration c;
                c.p = p;
                c.n = n;
                c.peg_of_disk.resize(n);
                std::uint64_t rest = a;
                for (int d = 0; d < n - 1; ++d) {
                    c.peg_of_disk[d] = static_cast<std::uint8_t>(others[rest % (p - 2)]);
                    rest /= (p - 2);
                }
                c.peg_of_disk[n - 1] = static_cast<std::uint8_t>(chosen);
                x.insert(c.encode());
            }
        }
    }
    return {x.begin(), x.end()};
}

namespace {

struct RecBuilder {
    const Graph& g;
    int p, n;
    RecursiveSeparatorTree& tree;
    std::vector<Configuration> cfg; // decoded once

    // Number of low disks still free across the set: the largest disk index
    // (1-based) on which two members disagree.
    int free_disks(const std::vector<Vertex>& s) const {
        int m = 1;
        for (std::size_t i = 1; i < s.size(); ++i)
            for (int d = n - 1; d >= m; --d)
                if (cfg[s[i]].peg_of_disk[d] != cfg[s[0]].peg_of_disk[d]) {
                    m = std::max(m, d + 1);
                    break;
                }
        return m;
    }

    std::vector<std::vector<Vertex>> comps_of(const std::vector<Vertex>& s,
                                              const std::set<Vertex>& removed) const {
        std::set<Vertex> in(s.begin(), s.end());
        std::vector<std::vector<Vertex>> out;
        std::set<Vertex> seen;
        for (Vertex v : s) {
            if (seen.count(v) || removed.count(v)) continue;
            std::vector<Vertex> comp{v};
            seen.insert(v);
            std::size_t qi = 0;
            while (qi < comp.size())
                for (Vertex w : g.neighbors(comp[qi++]))
                    if (in.count(w) && !seen.count(w) && !removed.count(w)) {
                        seen.insert(w);
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    static void pack(std::vector<std::vector<Vertex>> comps, std::vector<Vertex>& a,
                     std::vector<Vertex>& b) {
        std::stable_sort(comps.begin(), comps.end(),
                         [](const auto& x, const auto& y) { return x.size() > y.size(); });
        std::size_t wa = 0, wb = 0;
        for (auto& c : comps) {
            auto& side = (wa <= wb) ? a : b;
            (wa <= wb ? wa : wb) += c.size();
            side.insert(side.end(), c.begin(), c.end());
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
    }

    // Level separator of a connected vertex set: one endpoint per surviving
    // inter-copy edge at its top free disk, orientation rule as in
    // hanoi_level_separator. For a single-disk remnant (a damaged clique) the
    // lowest id goes.
    std::set<Vertex> level_cut(const std::vector<Vertex>& comp, int m) const {
        std::set<Vertex> x;
        if (m < 2) {
            x.insert(comp.front());
            return x;
        }
        std::set<Vertex> in(comp.begin(), comp.end());
        for (Vertex v : comp) {
            for (Vertex w : g.neighbors(v)) {
                if (w < v || !in.count(w)) continue;
                int iv = cfg[v].peg_of_disk[m - 1];
                int iw = cfg[w].peg_of_disk[m - 1];
                if (iv == iw) continue;
                int i = std::min(iv, iw), j = std::max(iv, iw);
                int chosen;
                if (p == 3) chosen = (j == (i + 1) % 3) ? i : j;
                else chosen = i;
                x.insert(chosen == iv ? v : w);
            }
        }
        return x;
    }

    int build(std::vector<Vertex> s) {
        int idx = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes[idx].vertices = s;
        if (s.size() <= 1) {
            tree.nodes[idx].level = n; // leaves sit below every copy level
            return idx;
        }

        const Rational bound((p + 1) / 2 + 1, p);
        auto balanced = [&](const std::vector<std::vector<Vertex>>& comps) {
            std::size_t wa = 0, wb = 0;
            std::vector<std::size_t> sizes;
            for (const auto& c : comps) sizes.push_back(c.size());
            std::sort(sizes.rbegin(), sizes.rend());
            for (std::size_t sz : sizes)
                (wa <= wb ? wa : wb) += sz;
            return Rational(static_cast<std::int64_t>(std::max(wa, wb)), 1) <=
                   bound * Rational(static_cast<std::int64_t>(s.size()), 1);
        };

        // Cut the dominant component at its own copy level until the pieces
        // pack within the balance bound. Damaged remnants may need a couple
        // of rounds; the node's level is that of its first (largest) cut.
        std::set<Vertex> x;
        auto comps = comps_of(s, x);
        int level_m = free_disks(s);
        bool first_cut = true;
        while (comps.size() == 1 || !balanced(comps)) {
            auto largest = std::max_element(comps.begin(), comps.end(),
                                            [](const auto& a, const auto& b) {
                                                return a.size() < b.size();
                                            });
            int m = free_disks(*largest);
            if (first_cut) {
                level_m = m;
                first_cut = false;
            }
            auto cut = level_cut(*largest, m);
            x.insert(cut.begin(), cut.end());
            comps = comps_of(s, x);
        }
        tree.nodes[idx].level = n - level_m + 1;

        std::vector<Vertex> a, b;
        pack(std::move(comps), a, b);
        tree.nodes[idx].separator.assign(x.begin(), x.end());
        tree.nodes[idx].left = build(std::move(a));
        tree.nodes[idx].right = build(std::move(b));
        return idx;
    }
};

} // namespace

RecursiveSeparatorTree recursive_separator(int p, int n, std::uint64_t vertex_cap) {
    Graph g = build_hanoi(p, n, vertex_cap);
    RecursiveSeparatorTree tree;
    tree.p = p;
    tree.n = n;
    RecBuilder builder{g, p, n, tree, {}};
    builder.cfg.reserve(g.vertex_count());
    for (std::uint64_t id = 0; id < g.vertex_count(); ++id)
        builder.cfg.push_back(Configuration::decode(p, n, id));
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    builder.build(std::move(all));
    return tree;
}

RecursiveSeparatorReport verify_recursive_separator(const Graph& g,
                                                    const RecursiveSeparatorTree& t) {
    RecursiveSeparatorReport rep;
    rep.max_separator_per_level.assign(t.n, 0);
    const Rational bound(static_cast<std::int64_t>((t.p + 1) / 2 + 1), t.p);

    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        auto fail = [&](const std::string& why) {
            rep.ok = false;
            rep.violations.push_back("node " + std::to_string(i) + ": " + why);
        };

        if (node.left == -1 && node.right == -1) {
            if (node.vertices.size() > 1) fail("leaf with more than one vertex");
            continue;
        }
        if (node.left == -1 || node.right == -1) {
            fail("separating node must have two children");
            continue;
        }
        if (node.level < 1 || node.level > t.n) {
            fail("level out of range");
            continue;
        }
        rep.max_separator_per_level[node.level - 1] =
            std::max(rep.max_separator_per_level[node.level - 1], node.separator.size());

        const auto& a = t.nodes[node.left].vertices;
        const auto& b = t.nodes[node.right].vertices;

        // X, A, B partition the node's vertices.
        std::vector<Vertex> joined;
        joined.insert(joined.end(), node.separator.begin(), node.separator.end());
        joined.insert(joined.end(), a.begin(), a.end());
        joined.insert(joined.end(), b.begin(), b.end());
        std::sort(joined.begin(), joined.end());
        std::vector<Vertex> verts = node.vertices;
        std::sort(verts.begin(), verts.end());
        if (joined != verts) {
            fail("separator and sides do not partition the subgraph");
            continue;
        }

        // No edge between the two sides.
        std::set<Vertex> in_b(b.begin(), b.end());
        for (Vertex v : a)
            for (Vertex w : g.neighbors(v))
                if (in_b.count(w)) fail("edge between the two sides");

        // Balance: max side <= ((ceil(p/2)+1)/p) |subgraph|.
        std::uint64_t worst = std::max(a.size(), b.size());
        if (Rational(static_cast<std::int64_t>(worst), 1) >
            bound * Rational(static_cast<std::int64_t>(node.vertices.size()), 1))
            fail("side of " + std::to_string(worst) + " vertices breaks the balance bound");
    }

    // Per-level size bound C(p,2) (p-2)^(n-i).
    for (int lvl = 1; lvl <= t.n; ++lvl) {
        std::uint64_t limit = static_cast<std::uint64_t>(t.p) * (t.p - 1) / 2 *
                              ipow(t.p - 2, t.n - lvl);
        if (rep.max_separator_per_level[lvl - 1] > limit) {
            rep.ok = false;
            rep.violations.push_back("level " + std::to_string(lvl) + " separator of size " +
                                     std::to_string(rep.max_separator_per_level[lvl - 1]) +
                                     " exceeds the bound " + std::to_string(limit));
        }
    }
    return rep;
}

std::string RecursiveSeparatorTree::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["n"] = n;
    auto& ns = j["nodes"] = nlohmann::json::array();
    for (const auto& node : nodes)
        ns.push_back({{"vertices", node.vertices},
                      {"separator", node.separator},
                      {"level", node.level},
                      {"left", node.left},
                      {"right", node.right}});
    return j.dump();
}

std::string FairnessReport::to_json() const {
    nlohmann::json j;
    j["removed"] = removed;
    j["component_sizes"] = component_sizes;
    j["probability_num"] = probability.num;
    j["probability_den"] = probability.den;
    j["probability"] = probability.to_double();
    j["passes"] = passes;
    return j.dump();
}

FairnessReport connection_probability(const Graph& g, const std::vector<Vertex>& x,
                                      bool with_replacement) {
    FairnessReport rep;
    std::vector<char> removed(g.vertex_count(), 0);
    std::set<Vertex> xs(x.begin(), x.end());
    for (Vertex v : xs) {
        g.check_vertex(v);
        removed[v] = 1;
    }
    rep.removed.assign(xs.begin(), xs.end());
    rep.component_sizes = component_sizes(g, removed);

    std::int64_t total = static_cast<std::int64_t>(g.vertex_count());
    Rational prob(0, 1);
    for (std::size_t s : rep.component_sizes) {
        auto sz = static_cast<std::int64_t>(s);
        if (with_replacement)
            prob = prob + Rational(sz * sz, total * total);
        else
            prob = prob + Rational(sz * (sz - 1), total * (total - 1));
    }
    rep.probability = prob;
    rep.passes = prob <= Rational(1, 2);
    return rep;
}

std::vector<std::uint64_t> two_state_removal(int n, int peg) {
    if (n < 2) throw parameter_error("two_state_removal needs n >= 2");
    if (peg < 0 || peg > 2) throw parameter_error("two_state_removal: peg in [0,3)");
    std::vector<std::uint64_t> out;
    for (int other = 0; other < 3; ++other) {
        if (other == peg) continue;
        Configuration c;
        c.p = 3;
        c.n = n;
        c.peg_of_disk.assign(n, static_cast<std::uint8_t>(other));
        c.peg_of_disk[n - 1] = static_cast<std::uint8_t>(peg);
        out.push_back(c.encode());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// next k-combination of bit mask (Gosper's hack)
inline std::uint64_t next_combination(std::uint64_t x) {
    std::uint64_t u = x & (~x + 1);
    std::uint64_t v = x + u;
    return v + (((v ^ x) / u) >> 2);
}

} // namespace

std::pair<int, std::vector<Vertex>> brute_force_f(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > kBruteForceFCap)
        throw capacity_error("brute_force_f capped at " + std::to_string(kBruteForceFCap));
    BitGraph bg(g);
    const std::uint64_t full = bg.full_mask();
    const std::int64_t total = n;

    for (int k = 0; k <= n; ++k) {
        std::uint64_t x = (k == 0) ? 0 : ((1ull << k) - 1);
        for (;;) {
            Rational prob(0, 1);
            for (std::uint64_t c : bg.component_masks(full & ~x)) {
                std::int64_t sz = std::popcount(c);
                prob = prob + Rational(sz * sz, total * total);
            }
            if (prob <= Rational(1, 2)) {
                std::vector<Vertex> witness;
                for (int v = 0; v < n; ++v)
                    if (x & (1ull << v)) witness.push_back(static_cast<Vertex>(v));
                return {k, witness};
            }
            if (k == 0) break;
            x = next_combination(x);
            if (x > full) break;
        }
    }
    return {n, {}}; // unreachable: removing everything gives probability 0
}

namespace {

bool c_separated(const BitGraph& bg, std::uint64_t x, Balance c, int total) {
    std::size_t wa = 0, wb = 0;
    std::vector<std::size_t> sizes;
    for (std::uint64_t comp : bg.component_masks(bg.full_mask() & ~x))
        sizes.push_back(std::popcount(comp));
    std::sort(sizes.rbegin(), sizes.rend());
    for (std::size_t s : sizes)
        (wa <= wb ? wa : wb) += s;
    return c.allows(std::max(wa, wb), total);
}

} // namespace

int brute_force_r(const Graph& g, Balance c) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > kBruteForceFCap)
        throw capacity_error("brute_force_r capped at " + std::to_string(kBruteForceFCap));
    BitGraph bg(g);
    for (int k = 0; k <= n; ++k) {
        std::uint64_t x = (k == 0) ? 0 : ((1ull << k) - 1);
        for (;;) {
            if (c_separated(bg, x, c, n)) return k;
            if (k == 0) break;
            x = next_combination(x);
            if (x > bg.full_mask()) break;
        }
    }
    return n;
}

namespace {

struct SRec {
    const BitGraph& bg;
    Balance c;
    std::vector<std::int8_t> memo; // -1 unknown

    int solve(std::uint64_t mask) {
        int count = std::popcount(mask);
        if (count <= 1) return 0;
        auto& slot = memo[mask];
        if (slot >= 0) return slot;

        int best = count; // removing everything always works
        // every subset of `mask` as candidate separator, including the empty one
        std::uint64_t x = mask;
        for (;;) {
            x = (x - 1) & mask;
            if (static_cast<int>(std::popcount(x)) < best) {
                // pack components of mask \ x into two sides, largest first
                std::vector<int> sizes;
                std::vector<std::uint64_t> comps = bg.component_masks(mask & ~x);
                std::vector<std::uint64_t> order(comps);
                std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
                    return std::popcount(a) > std::popcount(b);
                });
                std::uint64_t a = 0, b = 0;
                std::size_t wa = 0, wb = 0;
                for (std::uint64_t comp : order) {
                    if (wa <= wb) { a |= comp; wa += std::popcount(comp); }
                    else { b |= comp; wb += std::popcount(comp); }
                }
                if (c.allows(std::max(wa, wb), count)) {
                    int cand = std::max<int>(std::popcount(x),
                                             std::max(solve(a), solve(b)));
                    best = std::min(best, cand);
                }
            }
            if (x == 0) break;
        }
        slot = static_cast<std::int8_t>(best);
        return best;
    }
};

} // namespace

int brute_force_s(const Graph& g, Balance c) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > kBruteForceSCap)
        throw capacity_error("brute_force_s capped at " + std::to_string(kBruteForceSCap));
    BitGraph bg(g);
    SRec rec{bg, c, std::vector<std::int8_t>(1u << n, -1)};
    return rec.solve(bg.full_mask());
}

Rational vertex_expansion(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > kExpansionCap)
        throw capacity_error("vertex_expansion capped at " + std::to_string(kExpansionCap));
    if (n == 0) throw parameter_error("vertex_expansion of the empty graph");
    BitGraph bg(g);
    std::optional<Rational> best;
    const std::uint64_t full = bg.full_mask();
    for (std::uint64_t s = 1; s <= full; ++s) {
        int size = std::popcount(s);
        if (2 * size > n) continue;
        Rational ratio(std::popcount(bg.boundary(s)), size);
        if (!best || ratio < *best) best = ratio;
    }
    return *best;
}

} // namespace hanoi
