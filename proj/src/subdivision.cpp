#include "hanoi/fractal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hanoi {

const std::vector<std::pair<int, int>>& octahedron_edge_order() {
    static const std::vector<std::pair<int, int>> order = [] {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (j - i != 3) e.emplace_back(i, j);
        return e;
    }();
    return order;
}

Graph build_octahedron() {
    Graph g(6);
    for (auto [i, j] : octahedron_edge_order()) g.add_edge(i, j);
    g.finalize();
    return g;
}

VerifyReport verify_subdivision(const Graph& g, const SubdivisionWitness& w) {
    VerifyReport rep;
    const auto& order = octahedron_edge_order();

    std::set<Vertex> branch_set(w.branch.begin(), w.branch.end());
    if (branch_set.size() != 6) rep.fail("branch vertices are not distinct");
    for (Vertex b : w.branch) {
        if (b >= g.vertex_count()) {
            rep.fail("branch vertex " + std::to_string(b) + " out of range");
            return rep;
        }
        if (g.degree(b) < 4)
            rep.fail("branch vertex " + std::to_string(b) + " has degree < 4");
    }
    if (w.paths.size() != order.size()) {
        rep.fail("expected 12 paths, got " + std::to_string(w.paths.size()));
        return rep;
    }

    std::set<Vertex> interior_seen;
    for (std::size_t e = 0; e < order.size(); ++e) {
        const auto& path = w.paths[e];
        auto label = "path " + std::to_string(e);
        if (path.size() < 2) {
            rep.fail(label + " has fewer than 2 vertices");
            continue;
        }
        if (path.front() != w.branch[order[e].first] || path.back() != w.branch[order[e].second]) {
            rep.fail(label + " endpoints do not match its octahedron edge");
            continue;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (path[i] >= g.vertex_count() || path[i + 1] >= g.vertex_count() ||
                !g.has_edge(path[i], path[i + 1])) {
                rep.fail(label + " step " + std::to_string(i) + " is not a host edge");
                break;
            }
        }
        std::set<Vertex> in_path;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            Vertex v = path[i];
            if (branch_set.count(v)) {
                rep.fail(label + " passes through branch vertex " + std::to_string(v));
                continue;
            }
            if (!in_path.insert(v).second) {
                rep.fail(label + " revisits vertex " + std::to_string(v));
                continue;
            }
            if (!interior_seen.insert(v).second)
                rep.fail("paths share internal vertex " + std::to_string(v));
        }
    }
    return rep;
}

namespace {

struct Searcher {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    bool out_of_budget = false;

    bool spend(std::uint64_t k = 1) {
        steps += k;
        if (steps > budget) out_of_budget = true;
        return !out_of_budget;
    }

    // BFS distances towards `to`, interiors restricted to non-blocked
    // vertices. `from` distances are not needed; dist[to] = 0.
    std::vector<std::uint32_t> dist_to(Vertex to, const std::vector<char>& blocked) {
        std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
        std::vector<Vertex> q{to};
        dist[to] = 0;
        std::size_t qi = 0;
        while (qi < q.size()) {
            Vertex u = q[qi++];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] != kUnreachable || blocked[w]) continue;
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
        return dist;
    }

    // Enumerate simple paths from the current end of `path` to `to` whose
    // interior avoids `blocked`, lexicographic neighbor order, pruned by the
    // distance-to-target bound. f returns true to stop with success.
    bool paths_between(Vertex to, const std::vector<char>& blocked,
                       const std::vector<std::uint32_t>& dto, std::size_t max_edges,
                       std::vector<Vertex>& path, std::vector<char>& on_path,
                       const std::function<bool(const std::vector<Vertex>&)>& f) {
        if (!spend()) return false;
        Vertex cur = path.back();
        if (cur == to) return f(path);
        std::size_t used = path.size() - 1;
        for (Vertex w : g.neighbors(cur)) {
            if (on_path[w]) continue;
            if (w != to && blocked[w]) continue;
            std::uint32_t rest = (w == to) ? 0 : dto[w];
            if (rest == kUnreachable || used + 1 + rest > max_edges) continue;
            path.push_back(w);
            on_path[w] = 1;
            bool done = paths_between(to, blocked, dto, max_edges, path, on_path, f);
            on_path[w] = 0;
            path.pop_back();
            if (done || out_of_budget) return done;
        }
        return false;
    }

    bool route(const std::array<Vertex, 6>& branch, std::size_t idx,
               const std::vector<std::pair<int, int>>& todo,
               std::vector<char>& blocked, std::vector<std::vector<Vertex>>& placed) {
        if (idx == todo.size()) return true;
        if (!spend()) return false;
        auto [a, b] = todo[idx];
        Vertex from = branch[a], to = branch[b];

        auto dto = dist_to(to, blocked);
        std::uint32_t shortest = kUnreachable;
        for (Vertex w : g.neighbors(from))
            if (w == to) shortest = std::min(shortest, 1u);
            else if (!blocked[w] && dto[w] != kUnreachable)
                shortest = std::min(shortest, dto[w] + 1);
        if (shortest == kUnreachable) return false;

        // Shortest-available greedy with backtracking: a small slack lets the
        // search take detours before giving up on this placement order.
        const std::size_t slack = 10;
        std::vector<Vertex> path{from};
        std::vector<char> on_path(g.vertex_count(), 0);
        on_path[from] = 1;
        auto accept = [&](const std::vector<Vertex>& p) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i) blocked[p[i]] = 1;
            placed.push_back(p);
            if (route(branch, idx + 1, todo, blocked, placed)) return true;
            placed.pop_back();
            for (std::size_t i = 1; i + 1 < p.size(); ++i) blocked[p[i]] = 0;
            return false;
        };
        return paths_between(to, blocked, dto, shortest + slack, path, on_path, accept) &&
               !out_of_budget;
    }

    std::optional<SubdivisionWitness> try_branch(const std::array<Vertex, 6>& branch) {
        std::vector<char> blocked(g.vertex_count(), 0);
        for (Vertex b : branch) blocked[b] = 1;

        // Pin cheap (often direct-edge) paths before the long detours.
        auto todo = octahedron_edge_order();
        std::vector<std::uint32_t> d(todo.size());
        for (std::size_t e = 0; e < todo.size(); ++e)
            d[e] = bfs_distance(g, branch[todo[e].first], branch[todo[e].second]);
        std::vector<std::size_t> by_dist(todo.size());
        std::iota(by_dist.begin(), by_dist.end(), 0);
        std::stable_sort(by_dist.begin(), by_dist.end(),
                         [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
        std::vector<std::pair<int, int>> ordered;
        ordered.reserve(todo.size());
        for (std::size_t e : by_dist) ordered.push_back(todo[e]);

        std::vector<std::vector<Vertex>> placed;
        if (!route(branch, 0, ordered, blocked, placed)) return std::nullopt;

        SubdivisionWitness w;
        w.branch = branch;
        w.paths.assign(todo.size(), {});
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            auto it = std::find(todo.begin(), todo.end(), ordered[i]);
            w.paths[static_cast<std::size_t>(it - todo.begin())] = placed[i];
        }
        return w;
    }
};

// The 15 ways to split {0..5} into three antipodal pairs, as a permutation
// layout: result[i] tells which slot of the canonical labeling (antipodes =
// (0,3),(1,4),(2,5)) the i-th chosen vertex occupies.
const std::vector<std::array<int, 6>>& antipodal_layouts() {
    static const std::vector<std::array<int, 6>> layouts = [] {
        std::vector<std::array<int, 6>> out;
        std::array<int, 6> ids{0, 1, 2, 3, 4, 5};
        // partner of element 0 (5 ways), then partner of the next free (3),
        // remaining two pair up.
        for (int a = 1; a < 6; ++a) {
            std::vector<int> rest;
            for (int x = 1; x < 6; ++x)
                if (x != a) rest.push_back(x);
            for (int bi = 1; bi < 4; ++bi) {
                int b0 = rest[0], b1 = rest[bi];
                std::vector<int> last;
                for (int x : rest)
                    if (x != b0 && x != b1) last.push_back(x);
                std::array<int, 6> slot{};
                slot[ids[0]] = 0; slot[a] = 3;
                slot[b0] = 1; slot[b1] = 4;
                slot[last[0]] = 2; slot[last[1]] = 5;
                out.push_back(slot);
            }
        }
        return out;
    }();
    return layouts;
}

} // namespace

SubdivisionSearchResult find_octahedron_subdivision(const Graph& g, std::uint64_t budget) {
    SubdivisionSearchResult res;
    Searcher se{g, budget};

    std::vector<Vertex> cands;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 4) cands.push_back(v);

    if (cands.size() >= 6) {
        // Rank candidates by distance from the graph center (the known
        // witnesses sit centrally).
        std::vector<std::uint32_t> ecc(g.vertex_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto dist = bfs_distances(g, v);
            for (auto x : dist)
                if (x != kUnreachable) ecc[v] = std::max(ecc[v], x);
        }
        Vertex center = static_cast<Vertex>(
            std::min_element(ecc.begin(), ecc.end()) - ecc.begin());
        auto cdist = bfs_distances(g, center);
        std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
            if (cdist[a] != cdist[b]) return cdist[a] < cdist[b];
            return a < b;
        });
        std::vector<char> is_cand(g.vertex_count(), 0);
        for (Vertex v : cands) is_cand[v] = 1;

        // Phase 1: triangle cores. A triangle plus one extra vertex per side
        // adjacent to the side's two ends realizes the three antipodal pairs
        // directly; in Sierpinski hosts this matches an S_2 subcopy whose
        // junction triangle and corners carry the witness.
        std::vector<std::array<Vertex, 3>> triangles;
        for (Vertex u : cands) {
            for (Vertex v : g.neighbors(u)) {
                if (v <= u || !is_cand[v]) continue;
                for (Vertex w : g.neighbors(u)) {
                    if (w <= v || !is_cand[w]) continue;
                    if (g.has_edge(v, w)) triangles.push_back({u, v, w});
                }
            }
        }
        std::stable_sort(triangles.begin(), triangles.end(), [&](const auto& a, const auto& b) {
            auto ka = cdist[a[0]] + cdist[a[1]] + cdist[a[2]];
            auto kb = cdist[b[0]] + cdist[b[1]] + cdist[b[2]];
            return ka < kb;
        });

        auto common = [&](Vertex a, Vertex b, Vertex skip) {
            std::vector<Vertex> out;
            for (Vertex x : g.neighbors(a))
                if (x != skip && is_cand[x] && g.has_edge(b, x)) out.push_back(x);
            return out;
        };

        for (const auto& tri : triangles) {
            if (se.out_of_budget) break;
            auto [u, v, w] = std::tuple{tri[0], tri[1], tri[2]};
            for (Vertex ou : common(v, w, u)) {
                for (Vertex ov : common(u, w, v)) {
                    if (ov == ou) continue;
                    for (Vertex ow : common(u, v, w)) {
                        if (ow == ou || ow == ov) continue;
                        std::set<Vertex> six{u, v, w, ou, ov, ow};
                        if (six.size() != 6) continue;
                        auto got = se.try_branch({u, v, w, ou, ov, ow});
                        if (got) {
                            res.status = SearchStatus::found;
                            res.witness = *got;
                            res.steps_used = se.steps;
                            return res;
                        }
                        if (se.out_of_budget) break;
                    }
                    if (se.out_of_budget) break;
                }
                if (se.out_of_budget) break;
            }
        }

        // Phase 2: plain backtracking over candidate 6-tuples and antipodal
        // pairings, center-out. Reached only when no triangle core works.
        std::size_t cn = cands.size();
        std::array<std::size_t, 6> pick{};
        std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t depth,
                                                                   std::size_t start) {
            if (se.out_of_budget) return false;
            if (depth == 6) {
                for (const auto& layout : antipodal_layouts()) {
                    std::array<Vertex, 6> branch{};
                    for (std::size_t i = 0; i < 6; ++i) branch[layout[i]] = cands[pick[i]];
                    auto got = se.try_branch(branch);
                    if (got) {
                        res.status = SearchStatus::found;
                        res.witness = *got;
                        return true;
                    }
                    if (se.out_of_budget) return false;
                }
                return false;
            }
            for (std::size_t i = start; i < cn; ++i) {
                if (!se.spend()) return false;
                pick[depth] = i;
                if (choose(depth + 1, i + 1)) return true;
            }
            return false;
        };
        if (choose(0, 0)) {
            res.steps_used = se.steps;
            return res;
        }
    }

    res.steps_used = se.steps;
    res.status = se.out_of_budget ? SearchStatus::timeout : SearchStatus::none;
    return res;
}

} // namespace hanoi
