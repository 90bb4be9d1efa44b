#include "hanoi/graph.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace hanoi {

void Graph::finalize() {
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    if (std::is_sorted(nb.begin(), nb.end()))
        return std::binary_search(nb.begin(), nb.end(), v);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t diameter(const Graph& g, int threads) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min<int>(threads, static_cast<int>(n));

    std::atomic<std::uint32_t> best{0};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        std::uint32_t local = 0;
        for (;;) {
            std::size_t v = next.fetch_add(1);
            if (v >= n) break;
            auto dist = bfs_distances(g, static_cast<Vertex>(v));
            for (std::uint32_t d : dist) {
                if (d == kUnreachable) { local = kUnreachable; break; }
                local = std::max(local, d);
            }
            if (local == kUnreachable) break;
        }
        std::uint32_t cur = best.load();
        while (local > cur && !best.compare_exchange_weak(cur, local)) {}
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return best.load();
}

std::vector<int> components(const Graph& g, const std::vector<char>& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next_id = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1 || (s < removed.size() && removed[s])) continue;
        comp[s] = next_id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (comp[w] != -1 || (w < removed.size() && removed[w])) continue;
                comp[w] = next_id;
                stack.push_back(w);
            }
        }
        ++next_id;
    }
    return comp;
}

std::vector<int> components(const Graph& g) {
    return components(g, std::vector<char>());
}

std::vector<std::size_t> component_sizes(const Graph& g, const std::vector<char>& removed) {
    auto comp = components(g, removed);
    int m = 0;
    for (int c : comp) m = std::max(m, c + 1);
    std::vector<std::size_t> sizes(m, 0);
    for (int c : comp)
        if (c >= 0) ++sizes[c];
    return sizes;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const std::vector<Vertex>& keep) {
    std::vector<Vertex> order(keep);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    std::vector<std::uint32_t> index(g.vertex_count(), kUnreachable);
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<Vertex>(i);

    Graph h(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : g.neighbors(order[i])) {
            if (index[w] != kUnreachable && order[i] < w) {
                h.add_edge(static_cast<Vertex>(i), index[w]);
            }
        }
    }
    h.finalize();
    return {std::move(h), std::move(order)};
}

std::string to_edge_list(const Graph& g, const std::string& family) {
    std::ostringstream os;
    os << "# vertices=" << g.vertex_count() << " edges=" << g.edge_count()
       << " family=" << family << "\n";
    for (auto [u, v] : g.edges()) os << (u + 1) << " " << (v + 1) << "\n";
    return os.str();
}

void write_edge_list(const Graph& g, const std::string& family, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot open for writing: " + path);
    out << to_edge_list(g, family);
}

EdgeListFile read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open: " + path);
    std::string header;
    if (!std::getline(in, header) || header.rfind("# vertices=", 0) != 0)
        throw parameter_error("malformed edge-list header in " + path);

    std::size_t nv = 0, ne = 0;
    std::string family = "unknown";
    {
        std::istringstream hs(header.substr(1));
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("vertices=", 0) == 0) nv = std::stoull(tok.substr(9));
            else if (tok.rfind("edges=", 0) == 0) ne = std::stoull(tok.substr(6));
            else if (tok.rfind("family=", 0) == 0) family = tok.substr(7);
        }
    }
    Graph g(nv);
    std::size_t seen = 0;
    std::uint64_t a, b;
    while (in >> a >> b) {
        if (a < 1 || b < 1 || a > nv || b > nv)
            throw parameter_error("edge endpoint out of range in " + path);
        g.add_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        ++seen;
    }
    if (seen != ne)
        throw parameter_error("edge count mismatch in " + path + ": header says " +
                              std::to_string(ne) + ", file has " + std::to_string(seen));
    g.finalize();
    return {std::move(g), family};
}

} // namespace hanoi
