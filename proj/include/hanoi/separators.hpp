#ifndef HANOI_SEPARATORS_HPP
#define HANOI_SEPARATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/graph.hpp"
#include "hanoi/rational.hpp"
#include "hanoi/state_space.hpp"

namespace hanoi {

// Balance parameter c with 1/2 <= c < 1. Comparisons go through c^2 so that
// c = 1/sqrt(2) stays exact alongside rational values.
struct Balance {
    Rational c_squared{1, 2};

    static Balance ratio(std::int64_t num, std::int64_t den) {
        if (2 * num < den || num >= den)
            throw parameter_error("balance parameter must satisfy 1/2 <= c < 1");
        return {Rational(num * num, den * den)};
    }
    static Balance inv_sqrt2() { return {Rational(1, 2)}; }

    // side <= c * total, exactly.
    bool allows(std::uint64_t side, std::uint64_t total) const {
        Rational lhs(static_cast<std::int64_t>(side * side), 1);
        Rational rhs = c_squared * Rational(static_cast<std::int64_t>(total * total), 1);
        return lhs <= rhs;
    }
    std::string str() const {
        if (c_squared == Rational(1, 2)) return "1/sqrt(2)";
        return "sqrt(" + c_squared.str() + ")";
    }
};

struct Separation {
    std::vector<Vertex> separator;
    std::vector<Vertex> side_a; // the larger side after packing
    std::vector<Vertex> side_b;
};

struct SeparatorCheck {
    std::optional<Separation> separation; // set iff the c-bound holds
    std::vector<std::string> violations;
    bool ok() const { return separation.has_value(); }
};

// Components of G \ X packed largest-first into two sides; succeeds iff
// max(|A|,|B|) <= c|V|. X, A, B partition V.
SeparatorCheck verify_c_separator(const Graph& g, const std::vector<Vertex>& x, Balance c);

// One endpoint per inter-copy edge of H_p^n. For p = 3 the endpoint is taken
// in the cyclically-previous copy of each pair, so every copy loses exactly
// one vertex; for p > 3 it is taken in the smaller-indexed copy.
// |X| <= C(p,2) (p-2)^(n-1) and removing X disconnects the p copies.
std::vector<std::uint64_t> hanoi_level_separator(int p, int n,
                                                 std::uint64_t vertex_cap = kDefaultVertexCap);

struct RecursiveSeparatorTree {
    struct Node {
        std::vector<Vertex> vertices;   // subgraph this node separates
        std::vector<Vertex> separator;  // empty when the subgraph is already split
        int level = 1;                  // copy level: disks n..1 give levels 1..n
        int left = -1, right = -1;      // children; both -1 at leaves (<= 1 vertex)
    };
    int p = 0, n = 0;
    std::vector<Node> nodes; // node 0 is the root
    std::string to_json() const;
};

// Applies the level separator recursively: the p damaged copies are grouped
// into two sides (largest-first, best balance), sides split copy from copy,
// and single-disk remnants shed one vertex at a time. Every node verifies as
// a c-separator with c <= (ceil(p/2)+1)/p and the level-i separators stay
// within C(p,2) (p-2)^(n-i).
RecursiveSeparatorTree recursive_separator(int p, int n,
                                           std::uint64_t vertex_cap = kDefaultVertexCap);

struct RecursiveSeparatorReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::size_t> max_separator_per_level; // index 0 = level 1
};

RecursiveSeparatorReport verify_recursive_separator(const Graph& g,
                                                    const RecursiveSeparatorTree& t);

// ---- game fairness -----------------------------------------------------------

struct FairnessReport {
    std::vector<Vertex> removed;
    std::vector<std::size_t> component_sizes;
    Rational probability;    // sum over components of (|C|/|V|)^2
    bool passes = false;     // probability <= 1/2
    std::string to_json() const;
};

// Probability that two independent uniform draws from all of V land in the
// same surviving component (a draw hitting X never connects). The
// without-replacement variant divides by |V|(|V|-1) instead.
FairnessReport connection_probability(const Graph& g, const std::vector<Vertex>& x,
                                      bool with_replacement = true);

// The two states with the largest disk on peg `peg` and the n-1 smaller disks
// stacked on one of the other pegs: the k=1 forbidden pair of the three-peg
// endgame analysis.
std::vector<std::uint64_t> two_state_removal(int n, int peg = 0);

inline constexpr int kBruteForceFCap = 16;
inline constexpr int kBruteForceSCap = 12;
inline constexpr int kExpansionCap = 20;

// Minimum |X| with connection probability <= 1/2, by cardinality-increasing
// exhaustive search; the witness is the lexicographically least optimum.
std::pair<int, std::vector<Vertex>> brute_force_f(const Graph& g);

// Minimum size of a c-separator (not necessarily recursive).
int brute_force_r(const Graph& g, Balance c = Balance::inv_sqrt2());

// Minimum recursive-separator order: min over c-separations of
// max(|X|, s(A), s(B)), with s of at most one vertex = 0. Memoized over
// induced subgraphs.
int brute_force_s(const Graph& g, Balance c = Balance::inv_sqrt2());

// min over nonempty S with |S| <= |V|/2 of |boundary(S)| / |S|, exhaustive.
Rational vertex_expansion(const Graph& g);

} // namespace hanoi

#endif
