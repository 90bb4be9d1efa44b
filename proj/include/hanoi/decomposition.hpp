#ifndef HANOI_DECOMPOSITION_HPP
#define HANOI_DECOMPOSITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/fractal.hpp"
#include "hanoi/graph.hpp"

namespace hanoi {

struct TreeDecomposition {
    struct Node {
        std::vector<Vertex> bag;
        int parent = -1; // -1 for the root
    };
    std::vector<Node> nodes;

    int width() const {
        std::size_t m = 0;
        for (const auto& n : nodes) m = std::max(m, n.bag.size());
        return static_cast<int>(m) - 1;
    }

    std::string to_json() const;
    static TreeDecomposition from_json(const std::string& text);

    // PACE-inspired text form: `s td <bags> <width+1> <V>` header, `b i v...`
    // bag lines, then tree edges `i j`, all 1-indexed.
    std::string to_pace(std::size_t graph_vertices) const;
    static TreeDecomposition from_pace(const std::string& text);
};

struct DecompositionCheck {
    std::optional<int> width; // set iff valid
    std::vector<std::string> violations;
    bool ok() const { return width.has_value(); }
};

// The three tree-decomposition conditions, itemized on failure: every edge
// covered by a bag, every vertex somewhere, and each vertex's bags forming a
// subtree.
DecompositionCheck validate(const Graph& g, const TreeDecomposition& t);

// Width <= 4 decomposition of S_n from the triangular/trapezoidal recursion:
// the root is the level-n triangular bag {v_t, v_lt, v_rt, v_l, v_r}; a
// triangular bag's children are the trapezoidal bag of its level and the
// triangular bag of its top copy; a trapezoidal bag's children are the
// triangular bags of the left and right copies.
TreeDecomposition sierpinski_decomposition(const SierpinskiGraph& s);
TreeDecomposition sierpinski_decomposition(int n);

// Bags mapped through the branch sets of a minor model: each host vertex is
// replaced by the pattern vertex owning it (dropped when none). Valid on the
// pattern with width <= width(t). Adjacent equal bags are merged afterwards.
TreeDecomposition lift_through_minor(const TreeDecomposition& t, const MinorModel& m);

// ---- exact oracles ----------------------------------------------------------

inline constexpr int kTreewidthCap = 22;

// Exact treewidth via the subset DP over elimination orders (Q-value
// memoization across all 2^n vertex sets). Deterministic; ties between equal
// orders are broken toward the lowest vertex id.
int exact_treewidth(const Graph& g, int vertex_cap = kTreewidthCap);

// Exact decision `tw(g) <= w` by the same DP restricted to elimination
// prefixes of back-degree <= w; explores only reachable subsets so it scales
// past the full-table cap (needed for tensor products up to 25 vertices).
bool treewidth_at_most(const Graph& g, int w);

// An optimal elimination order (for cross-checks and decomposition export).
std::vector<Vertex> optimal_elimination_order(const Graph& g, int vertex_cap = kTreewidthCap);

// Tree decomposition realized by an elimination order (width = max back-degree).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

// ---- havens / cops and robbers ----------------------------------------------

struct HavenQuery {
    int order = 0;             // k: robber-wins iff a haven of order k exists
    bool robber_wins = false;
    // For a cop win: one optimal opening sequence of cop placements against
    // the worst-case robber (empty for robber wins).
    std::vector<Vertex> cop_trace;
};

inline constexpr int kHavenVertexCap = 10;
inline constexpr int kHavenOrderCap = 6;

// Retrograde solve of the cops-and-robbers game in which the robber moves,
// knowing the announced placement, before the cop lands. A haven of order k
// lets the robber evade k-1 simultaneous cops forever, so the game is played
// with k-1 cop pieces and robber-wins <=> tw(g) >= k-1.
HavenQuery haven_order_at_least(const Graph& g, int k);

} // namespace hanoi

#endif
