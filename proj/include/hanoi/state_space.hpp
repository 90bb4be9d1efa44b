#ifndef HANOI_STATE_SPACE_HPP
#define HANOI_STATE_SPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hanoi/graph.hpp"

namespace hanoi {

// Default materialization cap for every family builder.
inline constexpr std::uint64_t kDefaultVertexCap = 1u << 20;

// One Towers-of-Hanoi state: peg of each disk, disks ordered by increasing
// size. Pegs and disks are 0-indexed internally; 1-indexed in all external
// formats (conversions confined to (de)serialization).
struct Configuration {
    int n = 0;
    int p = 0;
    std::vector<std::uint8_t> peg_of_disk; // size n, entries in [0, p)

    // Mixed-radix encoding: disk i contributes peg_of_disk[i] * p^i, so
    // configurations double as dense vertex ids of H_p^n.
    std::uint64_t encode() const;
    static Configuration decode(int p, int n, std::uint64_t id);

    // 1-indexed digit string, smallest disk first ("112" = d1,d2 on peg 1,
    // d3 on peg 2). Requires p <= 9.
    std::string digits() const;
    static Configuration from_digits(int p, const std::string& digits);

    bool operator==(const Configuration&) const = default;
};

// True iff a single legal move transforms a into b: the configurations differ
// in exactly one coordinate i and d_i is the smallest disk on either of the
// two differing pegs. Throws parameter_error when dimensions mismatch.
bool is_compatible(const Configuration& a, const Configuration& b);

struct HanoiSpace {
    int p = 0;
    int n = 0;

    std::uint64_t vertex_count() const;
    // Enumerates the neighbors of the configuration with the given id.
    std::vector<std::uint64_t> neighbors(std::uint64_t id) const;
    ImplicitGraph implicit() const;
};

// Materializes H_p^n: p^n vertices, C(p,2)(p^n - (p-2)^n)/2 edges, vertex ids
// are encoded configurations. Throws capacity_error above the cap (use
// HanoiSpace::implicit() instead).
Graph build_hanoi(int p, int n, std::uint64_t vertex_cap = kDefaultVertexCap);

// The p constant configurations, as vertex ids.
std::vector<std::uint64_t> perfect_states(int p, int n);

// Configurations whose largest disk is alone on its peg while some peg is
// empty: exactly the states in which the largest disk is free to move.
std::vector<std::uint64_t> boundary_vertices(int p, int n,
                                             std::uint64_t vertex_cap = kDefaultVertexCap);

// Number of edges joining distinct largest-disk copies of H_p^(n-1) inside
// H_p^n: C(p,2) * (p-2)^(n-1). This, not the boundary-vertex count, is the
// separator-size formula (the two differ, e.g. 6 vertices vs 3 edges in
// H_3^2).
std::uint64_t inter_copy_edge_count(int p, int n);

std::uint64_t expected_hanoi_edge_count(int p, int n);

// Label sidecar: CSV `id,configuration`, 1-indexed ids, digit strings.
std::string hanoi_label_csv(int p, int n, std::uint64_t vertex_cap = kDefaultVertexCap);

} // namespace hanoi

#endif
