#ifndef HANOI_SETFAMILIES_HPP
#define HANOI_SETFAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/graph.hpp"
#include "hanoi/pegsets.hpp"
#include "hanoi/rational.hpp"

namespace hanoi {

// Subsets of [n] are bitmasks over a <= 63-element ground set; binomials stay
// in exact 64-bit integers throughout.
std::uint64_t binomial(int n, int k);

struct SubsetGraph {
    Graph graph;
    std::vector<std::uint64_t> labels; // vertex id -> subset mask
    int n = 0;
    int k = -1; // uniform size for Kneser, -1 for Ds
    int r = -1; // size cap for Ds
};

// Kneser graph Kn(n,k): k-subsets of [n], adjacent when disjoint. Vertices in
// lexicographic combination order.
SubsetGraph build_kneser(int n, int k, std::uint64_t cap = kDefaultVertexCap);

// Valencia-Pabon / Vera: diameter of Kn(n,k) = ceil((k-1)/(n-2k)) + 1 for
// 1 <= k <= (n-1)/2.
std::uint32_t kneser_diameter_formula(int n, int k);

// Disjoint subset graph Ds(n,r): all subsets of size <= r including the empty
// set, adjacent when disjoint and distinct (simple graph, no loop at the
// empty set). Vertices ordered by (size, mask).
SubsetGraph build_ds(int n, int r, std::uint64_t cap = kDefaultVertexCap);

// Ds(n) = Ds(n, (n-1)/2); odd n only.
SubsetGraph build_ds_default(int n, std::uint64_t cap = kDefaultVertexCap);

// Tensor (categorical) product: (u1,v1) ~ (u2,v2) iff both coordinates are
// edges. Vertex id = g_id * |V(H)| + h_id.
Graph tensor_product(const Graph& g, const Graph& h, std::uint64_t cap = kDefaultVertexCap);

// The canonical bijection pegset -> (frozen disk set, frozen peg) between
// G_4^n and Ds(n) x K_4, checked edge for edge. The two disagree exactly on
// pairs of empty-set pegsets: adjacent in G_4^n, non-adjacent in the loopless
// product.
struct G4IsomorphismReport {
    bool vertex_counts_match = false;
    std::uint64_t agreeing_pairs = 0;
    // (g4 vertex, g4 vertex) pairs where the two adjacency notions differ
    std::vector<std::pair<Vertex, Vertex>> disagreements;
    bool agree_on_nonempty = false; // exact agreement once empty freezes are excluded
};

G4IsomorphismReport check_g4_isomorphism(int n, std::uint64_t cap = kDefaultVertexCap);

// All l-subsets of members of F (a family of k-subsets).
std::vector<std::uint64_t> shadow(const std::vector<std::uint64_t>& family, int l);

// Kruskal-Katona check: with m the largest value satisfying C(m,k) <= |F|,
// the l-shadow must have at least C(m,l) members.
struct KruskalKatonaCheck {
    bool ok = false;
    int m = 0;
    std::uint64_t shadow_size = 0;
    std::uint64_t bound = 0;
};
KruskalKatonaCheck kk_check(const std::vector<std::uint64_t>& family, int k, int l);

// With eps = 1 / (2 sqrt(1-beta)): the fraction of V(Ds(n)) lying in the
// Kneser slices k = ceil(n/2 - eps sqrt(n)) .. (n-1)/2, as an exact rational
// over 2^(n-1). Odd n <= 63.
Rational central_mass_fraction(int n, double beta);

// Experimental slice-connectivity check: find an edge between
// A_k and A_l, subsets of the k- and l-slices of Ds(n) with densities > 1/2.
// Randomized probing (seeded) with exhaustive fallback.
struct SliceCrossEdge {
    bool found = false;
    std::uint64_t from = 0, to = 0; // witness masks
};
SliceCrossEdge slice_cross_edge(const std::vector<std::uint64_t>& a_k,
                                const std::vector<std::uint64_t>& a_l, int n, int k, int l,
                                std::uint64_t seed);

} // namespace hanoi

#endif
