#include "hanoi/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hanoi {

std::string TreeDecomposition::to_json() const {
    nlohmann::json j;
    auto& ns = j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        ns.push_back({{"id", i}, {"bag", nodes[i].bag}, {"parent", nodes[i].parent}});
    j["width"] = width();
    return j.dump(2);
}

TreeDecomposition TreeDecomposition::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TreeDecomposition t;
    t.nodes.resize(j.at("nodes").size());
    for (const auto& n : j.at("nodes")) {
        std::size_t id = n.at("id").get<std::size_t>();
        if (id >= t.nodes.size()) throw parameter_error("tree decomposition: bad node id");
        t.nodes[id].bag = n.at("bag").get<std::vector<Vertex>>();
        t.nodes[id].parent = n.at("parent").get<int>();
    }
    return t;
}

std::string TreeDecomposition::to_pace(std::size_t graph_vertices) const {
    std::ostringstream os;
    os << "s td " << nodes.size() << " " << (width() + 1) << " " << graph_vertices << "\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << "b " << (i + 1);
        for (Vertex v : nodes[i].bag) os << " " << (v + 1);
        os << "\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].parent >= 0)
            os << (nodes[i].parent + 1) << " " << (i + 1) << "\n";
    return os.str();
}

TreeDecomposition TreeDecomposition::from_pace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TreeDecomposition t;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
    std::size_t declared = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s1, s2;
            ls >> s1 >> s2 >> declared;
            t.nodes.resize(declared);
        } else if (line[0] == 'b') {
            char tag;
            std::size_t id;
            ls >> tag >> id;
            if (id < 1 || id > t.nodes.size()) throw parameter_error("pace: bad bag id");
            std::uint64_t v;
            while (ls >> v) t.nodes[id - 1].bag.push_back(static_cast<Vertex>(v - 1));
        } else {
            std::size_t a, b;
            if (ls >> a >> b) tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    // Root at node 0, orient parents by BFS over the tree edges.
    std::vector<std::vector<std::size_t>> adj(t.nodes.size());
    for (auto [a, b] : tree_edges) {
        if (a >= t.nodes.size() || b >= t.nodes.size())
            throw parameter_error("pace: bad tree edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(t.nodes.size(), 0);
    for (std::size_t root = 0; root < t.nodes.size(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        t.nodes[root].parent = -1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto w : adj[u]) {
                if (seen[w]) continue;
                seen[w] = 1;
                t.nodes[w].parent = static_cast<int>(u);
                stack.push_back(w);
            }
        }
    }
    return t;
}

DecompositionCheck validate(const Graph& g, const TreeDecomposition& t) {
    DecompositionCheck out;
    if (t.nodes.empty()) {
        out.violations.push_back("decomposition has no bags");
        return out;
    }

    std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        for (Vertex v : t.nodes[i].bag)
            if (v >= n)
                out.violations.push_back("bag " + std::to_string(i) +
                                         " references invalid vertex " + std::to_string(v));
        int p = t.nodes[i].parent;
        if (p >= 0 && (static_cast<std::size_t>(p) >= t.nodes.size() ||
                       static_cast<std::size_t>(p) == i))
            out.violations.push_back("bag " + std::to_string(i) + " has bad parent");
    }
    if (!out.violations.empty()) return out;

    std::vector<std::vector<std::size_t>> holding(n);
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (Vertex v : t.nodes[i].bag) holding[v].push_back(i);

    for (Vertex v = 0; v < n; ++v)
        if (holding[v].empty())
            out.violations.push_back("vertex " + std::to_string(v) + " is in no bag");

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        const auto& hu = holding[u];
        for (std::size_t i : holding[v])
            if (std::find(hu.begin(), hu.end(), i) != hu.end()) { covered = true; break; }
        if (!covered)
            out.violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") not covered by any bag");
    }

    // Subtree condition: the bags holding v must be connected in the tree.
    std::vector<std::vector<std::size_t>> children(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].parent >= 0) children[t.nodes[i].parent].push_back(i);
    for (Vertex v = 0; v < n; ++v) {
        if (holding[v].size() <= 1) continue;
        std::set<std::size_t> want(holding[v].begin(), holding[v].end());
        std::vector<std::size_t> stack{holding[v].front()};
        std::set<std::size_t> reached{holding[v].front()};
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            auto step = [&](std::size_t j) {
                if (want.count(j) && !reached.count(j)) {
                    reached.insert(j);
                    stack.push_back(j);
                }
            };
            if (t.nodes[i].parent >= 0) step(static_cast<std::size_t>(t.nodes[i].parent));
            for (auto c : children[i]) step(c);
        }
        if (reached.size() != want.size())
            out.violations.push_back("bags containing vertex " + std::to_string(v) +
                                     " do not form a subtree");
    }

    if (out.violations.empty()) out.width = t.width();
    return out;
}

namespace {

// Bags of the triangular/trapezoidal recursion below the subtriangle at
// `prefix`; parent is the index of the already-emitted parent bag.
void sierpinski_bags(const SierpinskiGraph& s, const std::string& prefix, int parent,
                     TreeDecomposition& t) {
    const int k = s.level - static_cast<int>(prefix.size());
    Vertex c_l = s.vertex_at(s.corner_address(prefix, 'l'));
    Vertex c_r = s.vertex_at(s.corner_address(prefix, 'r'));
    Vertex c_t = s.vertex_at(s.corner_address(prefix, 't'));

    if (k == 1) {
        t.nodes.push_back({{c_l, c_r, c_t}, parent});
        return;
    }

    Vertex j_lr = s.vertex_at(s.junction_address(prefix, "lr"));
    Vertex j_lt = s.vertex_at(s.junction_address(prefix, "lt"));
    Vertex j_rt = s.vertex_at(s.junction_address(prefix, "rt"));

    // Triangular bag, then its children: the top copy and the trapezoid.
    t.nodes.push_back({{c_t, j_lt, j_rt, c_l, c_r}, parent});
    int tri = static_cast<int>(t.nodes.size()) - 1;
    sierpinski_bags(s, prefix + 'T', tri, t);
    t.nodes.push_back({{j_lt, j_rt, c_l, j_lr, c_r}, tri});
    int trap = static_cast<int>(t.nodes.size()) - 1;
    sierpinski_bags(s, prefix + 'L', trap, t);
    sierpinski_bags(s, prefix + 'R', trap, t);
}

} // namespace

TreeDecomposition sierpinski_decomposition(const SierpinskiGraph& s) {
    TreeDecomposition t;
    sierpinski_bags(s, "", -1, t);
    return t;
}

TreeDecomposition sierpinski_decomposition(int n) {
    return sierpinski_decomposition(build_sierpinski(n));
}

TreeDecomposition lift_through_minor(const TreeDecomposition& t, const MinorModel& m) {
    std::vector<int> owner(m.host.vertex_count(), -1);
    for (std::size_t pv = 0; pv < m.branch_sets.size(); ++pv)
        for (Vertex hv : m.branch_sets[pv]) owner[hv] = static_cast<int>(pv);

    TreeDecomposition out;
    out.nodes.resize(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        std::vector<Vertex> bag;
        for (Vertex hv : t.nodes[i].bag)
            if (hv < owner.size() && owner[hv] >= 0) bag.push_back(static_cast<Vertex>(owner[hv]));
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        out.nodes[i] = {std::move(bag), t.nodes[i].parent};
    }

    // Merge children into parents with identical bags; keeps serialized
    // artifacts small without changing the decomposition's meaning.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.nodes.size(); ++i) {
            int p = out.nodes[i].parent;
            if (p < 0 || out.nodes[i].bag != out.nodes[p].bag) continue;
            for (auto& n : out.nodes)
                if (n.parent == static_cast<int>(i)) n.parent = p;
            out.nodes[i].parent = -2; // tombstone
            changed = true;
        }
    }
    TreeDecomposition packed;
    std::vector<int> remap(out.nodes.size(), -1);
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        if (out.nodes[i].parent == -2) continue;
        remap[i] = static_cast<int>(packed.nodes.size());
        packed.nodes.push_back(out.nodes[i]);
    }
    for (auto& n : packed.nodes)
        if (n.parent >= 0) n.parent = remap[n.parent];
    return packed;
}

} // namespace hanoi
