#ifndef HANOI_BITGRAPH_HPP
#define HANOI_BITGRAPH_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "hanoi/errors.hpp"
#include "hanoi/graph.hpp"

namespace hanoi {

// Adjacency-mask view of a small graph (<= 64 vertices). The exhaustive
// oracles (treewidth DP, haven game, brute-force separators, expansion) all
// run on this.
struct BitGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    BitGraph() = default;
    explicit BitGraph(const Graph& g) {
        if (g.vertex_count() > 64)
            throw capacity_error("BitGraph limited to 64 vertices, got " +
                                 std::to_string(g.vertex_count()));
        n = static_cast<int>(g.vertex_count());
        adj.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
                adj[v] |= (1ull << w);
    }

    std::uint64_t full_mask() const { return n == 64 ? ~0ull : ((1ull << n) - 1); }

    // Vertices reachable from seed staying inside `alive` (seed included).
    std::uint64_t reach(std::uint64_t seed, std::uint64_t alive) const {
        std::uint64_t seen = seed & alive;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            next &= alive & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    // Component masks of the subgraph induced on `alive`, lowest-vertex order.
    std::vector<std::uint64_t> component_masks(std::uint64_t alive) const {
        std::vector<std::uint64_t> comps;
        std::uint64_t rest = alive;
        while (rest) {
            std::uint64_t seed = rest & (~rest + 1);
            std::uint64_t c = reach(seed, alive);
            comps.push_back(c);
            rest &= ~c;
        }
        return comps;
    }

    // Open neighborhood of the set `s`.
    std::uint64_t boundary(std::uint64_t s) const {
        std::uint64_t nb = 0;
        std::uint64_t f = s;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            nb |= adj[v];
        }
        return nb & ~s;
    }
};

} // namespace hanoi

#endif
