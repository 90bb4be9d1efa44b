#include "hanoi/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "hanoi/bitgraph.hpp"

namespace hanoi {

namespace {

// Back-degree of eliminating v after the set S: vertices outside S u {v}
// reachable from v through S.
inline int q_degree(const BitGraph& bg, std::uint64_t s, int v) {
    std::uint64_t inside = bg.reach(1ull << v, s | (1ull << v));
    std::uint64_t outside = bg.boundary(inside) & ~s;
    return std::popcount(outside);
}

struct TwDp {
    BitGraph bg;
    std::vector<std::uint8_t> dp;     // dp[S]: best width eliminating S first
    std::vector<std::uint8_t> choice; // last-eliminated vertex realizing dp[S]

    explicit TwDp(const Graph& g, int vertex_cap) : bg(g) {
        if (bg.n > vertex_cap)
            throw capacity_error("exact treewidth capped at " + std::to_string(vertex_cap) +
                                 " vertices, got " + std::to_string(bg.n));
        const std::uint64_t full = bg.full_mask();
        dp.assign(static_cast<std::size_t>(full) + 1, 0);
        choice.assign(static_cast<std::size_t>(full) + 1, 0);
        for (std::uint64_t s = 1; s <= full; ++s) {
            int best = 255;
            int best_v = -1;
            std::uint64_t it = s;
            while (it) {
                int v = std::countr_zero(it);
                it &= it - 1;
                std::uint64_t rest = s & ~(1ull << v);
                int cand = std::max<int>(dp[rest], q_degree(bg, rest, v));
                if (cand < best) { // ties resolve to the lowest vertex id
                    best = cand;
                    best_v = v;
                }
            }
            dp[s] = static_cast<std::uint8_t>(best);
            choice[s] = static_cast<std::uint8_t>(best_v);
        }
    }
};

} // namespace

int exact_treewidth(const Graph& g, int vertex_cap) {
    if (g.vertex_count() == 0) throw parameter_error("treewidth of the empty graph");
    if (g.vertex_count() == 1) return 0;
    TwDp solver(g, vertex_cap);
    return solver.dp[solver.bg.full_mask()];
}

std::vector<Vertex> optimal_elimination_order(const Graph& g, int vertex_cap) {
    if (g.vertex_count() == 0) throw parameter_error("treewidth of the empty graph");
    if (g.vertex_count() == 1) return {0};
    TwDp solver(g, vertex_cap);
    std::uint64_t s = solver.bg.full_mask();
    std::vector<Vertex> order(solver.bg.n);
    for (int pos = solver.bg.n - 1; pos >= 0; --pos) {
        int v = solver.choice[s];
        order[pos] = static_cast<Vertex>(v);
        s &= ~(1ull << v);
    }
    return order;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    BitGraph bg(g);
    if (order.size() != g.vertex_count())
        throw parameter_error("elimination order must cover every vertex");
    // Bag of the i-th eliminated vertex: itself plus its back-neighbors in
    // the filled graph; the parent bag is the one eliminating the earliest
    // back-neighbor.
    std::vector<int> pos(bg.n);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    TreeDecomposition t;
    t.nodes.resize(order.size());
    std::uint64_t eliminated = 0;
    std::vector<std::uint64_t> back(bg.n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = static_cast<int>(order[i]);
        std::uint64_t inside = bg.reach(1ull << v, eliminated | (1ull << v));
        back[v] = bg.boundary(inside) & ~eliminated;
        eliminated |= (1ull << v);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = static_cast<int>(order[i]);
        std::vector<Vertex> bag{static_cast<Vertex>(v)};
        int first_later = -1;
        std::uint64_t b = back[v];
        while (b) {
            int w = std::countr_zero(b);
            b &= b - 1;
            bag.push_back(static_cast<Vertex>(w));
            if (first_later == -1 || pos[w] < first_later) first_later = pos[w];
        }
        std::sort(bag.begin(), bag.end());
        std::size_t node = order.size() - 1 - i; // root = last eliminated
        t.nodes[node].bag = std::move(bag);
        t.nodes[node].parent =
            first_later == -1 ? -1 : static_cast<int>(order.size() - 1 - first_later);
    }
    // The root (last eliminated) may have picked no parent; any earlier node
    // pointing nowhere attaches to the root so the tree stays connected.
    int root = -1;
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].parent == -1) {
            if (root == -1) root = static_cast<int>(i);
            else t.nodes[i].parent = root;
        }
    return t;
}

bool treewidth_at_most(const Graph& g, int w) {
    if (g.vertex_count() == 0) throw parameter_error("treewidth of the empty graph");
    if (w < 0) return false;
    if (static_cast<int>(g.vertex_count()) <= w + 1) return true;
    BitGraph bg(g);
    const std::uint64_t full = bg.full_mask();

    // DFS over elimination prefixes of back-degree <= w. Vertices whose
    // current back-degree is 0 (or 1 when w >= 1) are eliminated greedily;
    // that is always safe and keeps the explored set small.
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        std::uint64_t s = stack.back();
        stack.pop_back();

        std::uint64_t forced = 0;
        std::uint64_t free = full & ~s;
        std::uint64_t it = free;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            int d = q_degree(bg, s, v);
            if (d == 0 || (d == 1 && w >= 1)) { forced = s | (1ull << v); break; }
        }
        if (forced) {
            if (forced == full) return true;
            if (seen.insert(forced).second) stack.push_back(forced);
            continue;
        }

        it = free;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            if (q_degree(bg, s, v) > w) continue;
            std::uint64_t next = s | (1ull << v);
            if (next == full) return true;
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return false;
}

} // namespace hanoi
