#ifndef HANOI_FRACTAL_HPP
#define HANOI_FRACTAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hanoi/graph.hpp"
#include "hanoi/state_space.hpp"

namespace hanoi {

// Sierpinski triangle graph S_n. Vertices carry canonical path-addresses:
// a word over {L,R,T} naming the copy at each level (outermost first) plus a
// corner tag from {l,r,t}. A junction vertex has two such addresses; the
// lexicographically smaller one is canonical, so identified vertices unify
// without a union-find pass.
struct SierpinskiGraph {
    int level = 0;
    Graph graph;
    Vertex v_l = 0, v_r = 0, v_t = 0;       // outer corners (degree 2)
    Vertex v_lr = 0, v_lt = 0, v_rt = 0;    // top-level junctions (= corners when level 1)
    std::vector<std::string> address;       // vertex id -> canonical address
    std::unordered_map<std::string, Vertex> id_of;

    // Canonical address of role c in the subtriangle at `prefix`
    // (|prefix| < level, c in {'l','r','t'}).
    std::string corner_address(const std::string& prefix, char c) const;
    // Junction of the subtriangle at `prefix`: which is "lr", "lt" or "rt".
    // Requires the subtriangle to have level >= 2.
    std::string junction_address(const std::string& prefix, const std::string& which) const;
    Vertex vertex_at(const std::string& address) const;
};

// Builds S_n by the corner-identification recursion. |V| = (3^n+3)/2,
// |E| = 3^n.
SierpinskiGraph build_sierpinski(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

// Minor model: disjoint connected branch sets in the host, one per pattern
// vertex, plus one witness host edge per pattern edge.
struct MinorModel {
    Graph host;
    Graph pattern;
    std::vector<std::vector<Vertex>> branch_sets; // pattern vertex -> host vertices
    // (pattern u, pattern v, host x, host y) with u < v, x in branch(u), y in branch(v)
    std::vector<std::tuple<Vertex, Vertex, Vertex, Vertex>> edge_witnesses;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string why) {
        ok = false;
        violations.push_back(std::move(why));
    }
};

VerifyReport verify_minor_model(const MinorModel& m);

struct ContractionResult {
    SierpinskiGraph sierpinski;            // rebuilt S_n the contraction maps onto
    MinorModel model;                      // host H_3^n, pattern S_n
    std::vector<Vertex> image;             // host vertex -> S_n vertex
};

// Contracts every edge of H_3^n on which a non-smallest disk moves (the
// boundary edges of every recursion level). The quotient is isomorphic to
// S_n; the isomorphism is built by recursive corner matching and checked
// edge-for-edge. Branch sets have size <= 2.
ContractionResult contract_boundary_edges(const Graph& h, int n);

// H_3^n-minor of S_(n+1): each sub-copy hosts the model of its Hanoi copy and
// the perfect-state branch sets are joined through the three junction
// vertices by vertex-disjoint paths.
MinorModel embed_hanoi_minor(const SierpinskiGraph& s);

// ---- octahedron subdivision ----------------------------------------------

// Octahedron vertices 0..5 with antipodal pairs (0,3), (1,4), (2,5); the 12
// edges in the fixed order used by witness serialization.
const std::vector<std::pair<int, int>>& octahedron_edge_order();
Graph build_octahedron();

struct SubdivisionWitness {
    std::array<Vertex, 6> branch{};             // branch vertices, all degree >= 4
    std::vector<std::vector<Vertex>> paths;     // 12 host paths following octahedron_edge_order()
};

VerifyReport verify_subdivision(const Graph& g, const SubdivisionWitness& w);

enum class SearchStatus { found, none, timeout };

struct SubdivisionSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<SubdivisionWitness> witness;
    std::uint64_t steps_used = 0;
};

inline constexpr std::uint64_t kDefaultSubdivisionBudget = 20'000'000;

// Deterministic backtracking search: branch-vertex candidates are degree-4
// vertices ordered by distance from the graph center, paths are routed
// shortest-available-first with backtracking. Exhausting the budget yields
// `timeout`, exhausting the space yields `none`.
SubdivisionSearchResult find_octahedron_subdivision(
    const Graph& g, std::uint64_t budget = kDefaultSubdivisionBudget);

// ---- JSON interchange ------------------------------------------------------

std::string minor_model_to_json(const MinorModel& m);
MinorModel minor_model_from_json(const Graph& host, const std::string& text);
std::string subdivision_to_json(const SubdivisionWitness& w);
SubdivisionWitness subdivision_from_json(const std::string& text);

} // namespace hanoi

#endif
