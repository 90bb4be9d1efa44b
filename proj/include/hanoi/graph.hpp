#ifndef HANOI_GRAPH_HPP
#define HANOI_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hanoi/errors.hpp"

namespace hanoi {

using Vertex = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Uniform undirected-graph carrier shared by every family in the workbench
// (Hanoi, Sierpinski, pegset intersection, Kneser, disjoint-subset, tensor).
// Simple graph: no self-loops, no parallel edges after finalize().
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t vertex_count() const { return adj_.size(); }

    // Half the sum of degrees; valid once finalize() has deduplicated.
    std::size_t edge_count() const {
        std::size_t total = 0;
        for (const auto& nb : adj_) total += nb.size();
        return total / 2;
    }

    void add_vertex() { adj_.emplace_back(); }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw parameter_error("self-loop rejected: " + std::to_string(u));
        check_vertex(u);
        check_vertex(v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    // Sorts neighbor lists and removes duplicate edges.
    void finalize();

    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    template <class F>
    void for_neighbors(Vertex v, F&& f) const {
        for (Vertex w : adj_[v]) f(w);
    }

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    void check_vertex(Vertex v) const {
        if (v >= adj_.size())
            throw parameter_error("vertex id out of range: " + std::to_string(v));
    }

private:
    std::vector<std::vector<Vertex>> adj_;
};

// Neighbor-function carrier for state spaces above the materialization cap.
// BFS and component routines accept either representation.
struct ImplicitGraph {
    std::size_t n = 0;
    std::function<void(Vertex, const std::function<void(Vertex)>&)> neighbor_fn;

    std::size_t vertex_count() const { return n; }

    template <class F>
    void for_neighbors(Vertex v, F&& f) const {
        neighbor_fn(v, std::function<void(Vertex)>(std::forward<F>(f)));
    }
};

// ---- traversal -------------------------------------------------------------

template <class G>
std::vector<std::uint32_t> bfs_distances(const G& g, Vertex src) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        std::uint32_t du = dist[u];
        g.for_neighbors(u, [&](Vertex w) {
            if (dist[w] == kUnreachable) {
                dist[w] = du + 1;
                q.push(w);
            }
        });
    }
    return dist;
}

// Distance with early exit; kUnreachable if disconnected.
template <class G>
std::uint32_t bfs_distance(const G& g, Vertex u, Vertex v) {
    if (u >= g.vertex_count() || v >= g.vertex_count())
        throw parameter_error("bfs_distance: vertex id out of range");
    if (u == v) return 0;
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    std::queue<Vertex> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        std::uint32_t dx = dist[x];
        bool found = false;
        g.for_neighbors(x, [&](Vertex w) {
            if (dist[w] == kUnreachable) {
                dist[w] = dx + 1;
                if (w == v) { found = true; return; }
                q.push(w);
            }
        });
        if (found) return dist[v];
    }
    return kUnreachable;
}

// Max BFS eccentricity over all sources (all-pairs BFS). Sources may be
// processed by several worker threads; the max-reduction is order-free.
std::uint32_t diameter(const Graph& g, int threads = 0);

// Works on either representation, like the BFS routines.
template <class G>
bool is_connected(const G& g) {
    if (g.vertex_count() == 0) return true;
    for (std::uint32_t d : bfs_distances(g, 0))
        if (d == kUnreachable) return false;
    return true;
}

// Component id per vertex, ids in first-seen order; removed[v] != 0 excludes v
// (its id is -1).
std::vector<int> components(const Graph& g, const std::vector<char>& removed);
std::vector<int> components(const Graph& g);

std::vector<std::size_t> component_sizes(const Graph& g, const std::vector<char>& removed);

// Subgraph induced on `keep` (need not be sorted); second result maps new ids
// back to the originals.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const std::vector<Vertex>& keep);

// ---- edge-list interchange format ------------------------------------------
// Header `# vertices=V edges=E family=NAME`, one `u v` pair per line, 1-indexed.

std::string to_edge_list(const Graph& g, const std::string& family);
void write_edge_list(const Graph& g, const std::string& family, const std::string& path);

struct EdgeListFile {
    Graph graph;
    std::string family;
};
EdgeListFile read_edge_list(const std::string& path);

} // namespace hanoi

#endif
