#include "hanoi/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "hanoi/bitgraph.hpp"

namespace hanoi {

namespace {

// Positions are (cop set X, robber component C of G \ X). The robber's exact
// vertex never matters: before a placement lands he may move anywhere in C.
struct Arena {
    BitGraph bg;
    int pieces; // simultaneous cops on the board
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pos; // (X, C)
    std::unordered_map<std::uint64_t, int> index;

    static std::uint64_t key(std::uint64_t x, std::uint64_t c) {
        return (static_cast<std::uint64_t>(x) << 32) | c;
    }

    int id(std::uint64_t x, std::uint64_t c) const { return index.at(key(x, c)); }

    explicit Arena(const Graph& g, int pieces_) : bg(g), pieces(pieces_) {
        std::vector<std::uint64_t> sets{0};
        std::uint64_t full = bg.full_mask();
        for (int size = 1; size <= pieces; ++size) {
            std::vector<std::uint64_t> next;
            for (std::uint64_t x : sets)
                if (std::popcount(x) == size - 1)
                    for (int v = 0; v < bg.n; ++v)
                        if (!(x & (1ull << v))) next.push_back(x | (1ull << v));
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            sets.insert(sets.end(), next.begin(), next.end());
        }
        for (std::uint64_t x : sets)
            for (std::uint64_t c : bg.component_masks(full & ~x)) {
                auto k = key(x, c);
                if (!index.count(k)) {
                    index[k] = static_cast<int>(pos.size());
                    pos.emplace_back(x, c);
                }
            }
    }
};

} // namespace

HavenQuery haven_order_at_least(const Graph& g, int k) {
    if (g.vertex_count() == 0) throw parameter_error("haven query on the empty graph");
    if (g.vertex_count() > static_cast<std::size_t>(kHavenVertexCap))
        throw capacity_error("haven solver capped at " + std::to_string(kHavenVertexCap) +
                             " vertices");
    if (k < 1 || k > kHavenOrderCap)
        throw parameter_error("haven order must be in [1, " + std::to_string(kHavenOrderCap) + "]");

    HavenQuery out;
    out.order = k;

    // A haven of order k is an evasion strategy against k-1 simultaneous
    // cops (Seymour-Thomas: such a haven exists iff tw >= k-1).
    const int pieces = k - 1;
    Arena ar(g, pieces);
    const std::uint64_t full = ar.bg.full_mask();

    // Backward induction: cop-win depths, -1 = robber survives.
    std::vector<int> depth(ar.pos.size(), -1);
    bool changed = true;
    int sweep = 0;
    while (changed) {
        changed = false;
        ++sweep;
        for (std::size_t i = 0; i < ar.pos.size(); ++i) {
            if (depth[i] != -1) continue;
            auto [x, c] = ar.pos[i];
            bool cops_can_win = false;

            // Placement of an off-board cop at v: the robber, seeing v, picks
            // any component of G \ (X+v) meeting C; capture iff C == {v}.
            if (std::popcount(x) < pieces) {
                for (int v = 0; v < ar.bg.n && !cops_can_win; ++v) {
                    if (x & (1ull << v)) continue;
                    std::uint64_t nx = x | (1ull << v);
                    if (c == (1ull << v)) { cops_can_win = true; break; }
                    bool all_lost = true;
                    for (std::uint64_t nc : ar.bg.component_masks(full & ~nx)) {
                        if (!(nc & c)) continue;
                        if (depth[ar.id(nx, nc)] == -1) { all_lost = false; break; }
                    }
                    if (all_lost) cops_can_win = true;
                }
            }
            // Removal of an on-board cop: the robber's territory only grows.
            if (!cops_can_win) {
                std::uint64_t it = x;
                while (it && !cops_can_win) {
                    int v = std::countr_zero(it);
                    it &= it - 1;
                    std::uint64_t nx = x & ~(1ull << v);
                    std::uint64_t nc = ar.bg.reach(c & (~c + 1), full & ~nx);
                    if (depth[ar.id(nx, nc)] != -1) cops_can_win = true;
                }
            }
            if (cops_can_win) {
                depth[i] = sweep;
                changed = true;
            }
        }
    }

    // The robber chooses his start; he wins if any initial component is safe.
    bool robber = false;
    for (std::uint64_t c : ar.bg.component_masks(full))
        if (depth[ar.id(0, c)] == -1) robber = true;
    out.robber_wins = robber;

    if (!robber) {
        // One forced win against the worst robber: follow shrinking depths,
        // recording placements.
        std::uint64_t x = 0;
        std::uint64_t c = 0;
        int cur = -1;
        for (std::uint64_t cc : ar.bg.component_masks(full)) {
            int d = depth[ar.id(0, cc)];
            if (d > cur) { cur = d; c = cc; }
        }
        int guard = 0;
        while (c && guard++ < 1000) {
            auto advance = [&]() -> bool {
                if (std::popcount(x) < pieces) {
                    for (int v = 0; v < ar.bg.n; ++v) {
                        if (x & (1ull << v)) continue;
                        std::uint64_t nx = x | (1ull << v);
                        if (c == (1ull << v)) {
                            out.cop_trace.push_back(static_cast<Vertex>(v));
                            c = 0;
                            return true;
                        }
                        bool all_lost = true;
                        std::uint64_t worst_c = 0;
                        int wd = -1;
                        for (std::uint64_t nc : ar.bg.component_masks(full & ~nx)) {
                            if (!(nc & c)) continue;
                            int d = depth[ar.id(nx, nc)];
                            if (d == -1) { all_lost = false; break; }
                            if (d > wd) { wd = d; worst_c = nc; }
                        }
                        if (all_lost && wd < depth[ar.id(x, c)]) {
                            out.cop_trace.push_back(static_cast<Vertex>(v));
                            x = nx;
                            c = worst_c;
                            return true;
                        }
                    }
                }
                std::uint64_t it = x;
                while (it) {
                    int v = std::countr_zero(it);
                    it &= it - 1;
                    std::uint64_t nx = x & ~(1ull << v);
                    std::uint64_t nc = ar.bg.reach(c & (~c + 1), full & ~nx);
                    int d = depth[ar.id(nx, nc)];
                    if (d != -1 && d < depth[ar.id(x, c)]) {
                        x = nx;
                        c = nc;
                        return true;
                    }
                }
                return false;
            };
            if (!advance()) break;
        }
    }
    return out;
}

} // namespace hanoi
