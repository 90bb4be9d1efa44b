#ifndef HANOI_PEGSETS_HPP
#define HANOI_PEGSETS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hanoi/graph.hpp"
#include "hanoi/state_space.hpp"

namespace hanoi {

// Partial freeze map rho: disk -> peg or unfrozen. A configuration belongs to
// the pegset iff every frozen disk sits on its assigned peg and no unfrozen
// disk sits on a frozen peg. G_4^n permits freezing a peg with the empty disk
// set (banning unfrozen disks from it); such pegs live in extra_frozen_pegs
// since they have no preimage under rho.
struct Pegset {
    int n = 0;
    int p = 0;
    std::vector<std::int8_t> rho;        // size n; peg index or kUnfrozen
    std::vector<std::int8_t> extra_frozen_pegs; // zero-disk freezes, sorted

    static constexpr std::int8_t kUnfrozen = -1;

    std::vector<int> frozen_pegs() const;            // sorted
    std::vector<int> disks_on(int peg) const;        // sorted
    std::vector<int> unfrozen_disks() const;         // sorted
    bool contains(const Configuration& c) const;

    // A regular pegset freezes exactly p-3 pegs, each holding exactly
    // floor((n-1)/(p-2)) disks.
    bool is_regular() const;

    // Canonical key "peg:d1.d2|peg:d3" over sorted pegs and disks; dense ids
    // in every pegset graph follow this key's ordering.
    std::string key() const;

    std::string to_json() const;                      // {n, p, frozen:[{peg, disks}]}, 1-indexed
    static Pegset from_json(const std::string& text);

    bool operator==(const Pegset&) const = default;
};

// All configurations in the pegset: (p - #frozen pegs)^(#unfrozen disks) of them.
std::vector<std::uint64_t> pegset_members(const Pegset& ps,
                                          std::uint64_t cap = kDefaultVertexCap);

// All regular pegsets of H_p^n in canonical order. Requires n ≡ 1 (mod p-2)
// (the cleanliness residue the even-quota analysis relies on); anything else
// parameter error, never silently rounded.
std::vector<Pegset> enumerate_regular_pegsets(int p, int n);

// Exact combinatorial count the enumeration must match:
// C(p, p-3) * n! / ((q!)^(p-3) (n - (p-3) q)!) with q = (n-1)/(p-2).
std::uint64_t regular_pegset_count(int p, int n);

// The four-condition adjacency characterization of the intersection graph:
// shared frozen disks agree, exactly one frozen peg on each side is missing
// from the other, and no disk frozen on one side sits on a peg frozen by the
// other. Equivalent to nonempty member intersection.
bool regular_adjacent(const Pegset& u, const Pegset& v);

// A shared configuration of two adjacent pegsets, built deterministically.
Configuration shared_configuration(const Pegset& u, const Pegset& v);

struct PegsetGraph {
    Graph graph;
    std::vector<Pegset> labels;
    std::string family; // "ipn" or "g4"
    int p = 0, n = 0;
    std::unordered_map<std::string, Vertex> index; // canonical key -> vertex id
    Vertex id_of(const Pegset& ps) const;
};

// I_p^n: regular pegsets, adjacent when their member sets intersect.
PegsetGraph build_intersection_graph(int p, int n);

// G_4^n: pegsets freezing exactly one peg with 0..floor((n-1)/2) disks,
// adjacent when the frozen disk sets are disjoint and the pegs differ. Two
// empty freezes on distinct pegs count as adjacent (the disjointness is
// vacuous), which is what makes |V| = 4 * 2^(n-1) for odd n.
PegsetGraph build_g4(int n, std::uint64_t cap = kDefaultVertexCap);

// Walk from u to v in I_p^n realizing the three-case transformation
// procedure; every consecutive pair is adjacent and the length is at most
// kPegsetPathKappa * n. Returns the full pegset sequence (u first, v last).
std::vector<Pegset> pegset_path(const Pegset& u, const Pegset& v);

// Measured walk-length constant: the procedure spends at most 4 steps per
// mismatched disk plus the peg-migration preamble, which stays under 4n for
// every p >= 4.
inline constexpr int kPegsetPathKappa = 4;

// The disk-swap automorphism phi_{i,j} (an involution mapping edges to edges).
Pegset swap_automorphism(const Pegset& ps, int disk_i, int disk_j);

// Peg relabeling: rho'(k) = sigma(rho(k)) for a permutation sigma of pegs.
Pegset relabel_pegs(const Pegset& ps, const std::vector<int>& sigma);

// f: every family pegset containing cfg; family is "regular" or "g4".
std::vector<Pegset> pegsets_of_config(const Configuration& cfg, const std::string& family);

// g: the union of the members of the given pegsets.
std::vector<std::uint64_t> configs_of_pegsets(const std::vector<Pegset>& sets,
                                              std::uint64_t cap = kDefaultVertexCap);

} // namespace hanoi

#endif
