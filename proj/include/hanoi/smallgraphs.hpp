#ifndef HANOI_SMALLGRAPHS_HPP
#define HANOI_SMALLGRAPHS_HPP

#include <cstdint>

#include "hanoi/graph.hpp"

namespace hanoi {

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.finalize();
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.finalize();
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.finalize();
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    g.finalize();
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    g.finalize();
    return g;
}

inline Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    g.finalize();
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);     // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);
    }
    g.finalize();
    return g;
}

inline Graph cube_graph() {
    Graph g(8);
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (!(i & (1 << b))) g.add_edge(i, i | (1 << b));
    g.finalize();
    return g;
}

inline Graph wheel_graph(int rim) {
    Graph g(rim + 1);
    for (int i = 1; i <= rim; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % rim + 1);
    }
    g.finalize();
    return g;
}

// Erdos-Renyi-style graph from raw mt19937_64 draws; deterministic across
// platforms (no std::distribution involved).
Graph seeded_random_graph(int n, std::uint64_t seed, int percent);

} // namespace hanoi

#endif
