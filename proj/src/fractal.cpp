#include "hanoi/fractal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "json.hpp"

namespace hanoi {

namespace {

char letter_of(char corner) {
    switch (corner) {
        case 'l': return 'L';
        case 'r': return 'R';
        case 't': return 'T';
    }
    throw parameter_error(std::string("bad corner tag: ") + corner);
}

// The identification partner of an address, if any. A vertex identified at
// some level has exactly two addresses; outer corners have one.
std::optional<std::string> partner_address(const std::string& addr) {
    char corner = addr.back();
    std::string path = addr.substr(0, addr.size() - 1);
    char lc = letter_of(corner);
    std::size_t j = 0;
    while (j < path.size() && path[path.size() - 1 - j] == lc) ++j;
    if (j == path.size()) return std::nullopt; // outer corner of S_n
    char X = path[path.size() - 1 - j];
    // v_l of copy R ~ v_r of copy L; v_t of copy L ~ v_l of copy T;
    // v_t of copy R ~ v_r of copy T.
    char X2, c2;
    if (X == 'R' && corner == 'l') { X2 = 'L'; c2 = 'r'; }
    else if (X == 'L' && corner == 'r') { X2 = 'R'; c2 = 'l'; }
    else if (X == 'L' && corner == 't') { X2 = 'T'; c2 = 'l'; }
    else if (X == 'T' && corner == 'l') { X2 = 'L'; c2 = 't'; }
    else if (X == 'R' && corner == 't') { X2 = 'T'; c2 = 'r'; }
    else { X2 = 'R'; c2 = 't'; } // X == 'T' && corner == 'r'
    std::string out = path.substr(0, path.size() - 1 - j);
    out += X2;
    out.append(j, letter_of(c2));
    out += c2;
    return out;
}

std::string canonical(const std::string& addr) {
    auto alt = partner_address(addr);
    if (alt && *alt < addr) return *alt;
    return addr;
}

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

} // namespace

std::string SierpinskiGraph::corner_address(const std::string& prefix, char c) const {
    int k = level - static_cast<int>(prefix.size());
    if (k < 1) throw parameter_error("corner_address: prefix too long");
    std::string a = prefix;
    a.append(k - 1, letter_of(c));
    a += c;
    return canonical(a);
}

std::string SierpinskiGraph::junction_address(const std::string& prefix,
                                              const std::string& which) const {
    int k = level - static_cast<int>(prefix.size());
    if (k < 2) throw parameter_error("junction_address: subtriangle has no junctions");
    std::string a = prefix;
    if (which == "lr") { a += 'L'; a.append(k - 2, 'R'); a += 'r'; }
    else if (which == "lt") { a += 'L'; a.append(k - 2, 'T'); a += 't'; }
    else if (which == "rt") { a += 'R'; a.append(k - 2, 'T'); a += 't'; }
    else throw parameter_error("junction_address: which must be lr, lt or rt");
    return canonical(a);
}

Vertex SierpinskiGraph::vertex_at(const std::string& addr) const {
    auto it = id_of.find(canonical(addr));
    if (it == id_of.end()) throw parameter_error("no vertex with address " + addr);
    return it->second;
}

SierpinskiGraph build_sierpinski(int n, std::uint64_t vertex_cap) {
    if (n < 1) throw parameter_error("Sierpinski level must be >= 1");
    std::uint64_t nv = (pow3(n) + 3) / 2;
    if (nv > vertex_cap)
        throw capacity_error("S_" + std::to_string(n) + " has " + std::to_string(nv) +
                             " vertices, above the cap " + std::to_string(vertex_cap));

    SierpinskiGraph s;
    s.level = n;

    // Every (prefix, corner) pair canonicalized; sorted order gives dense ids.
    std::vector<std::string> prefixes{""};
    for (int d = 1; d < n; ++d) {
        std::vector<std::string> next;
        next.reserve(prefixes.size() * 3);
        for (const auto& p : prefixes)
            for (char x : {'L', 'R', 'T'}) next.push_back(p + x);
        prefixes = std::move(next);
    }

    std::set<std::string> names;
    for (const auto& p : prefixes)
        for (char c : {'l', 'r', 't'}) names.insert(canonical(p + c));

    s.address.assign(names.begin(), names.end());
    for (Vertex i = 0; i < s.address.size(); ++i) s.id_of[s.address[i]] = i;

    s.graph = Graph(s.address.size());
    for (const auto& p : prefixes) {
        Vertex a = s.id_of.at(canonical(p + 'l'));
        Vertex b = s.id_of.at(canonical(p + 'r'));
        Vertex c = s.id_of.at(canonical(p + 't'));
        s.graph.add_edge(a, b);
        s.graph.add_edge(a, c);
        s.graph.add_edge(b, c);
    }
    s.graph.finalize();

    s.v_l = s.id_of.at(s.corner_address("", 'l'));
    s.v_r = s.id_of.at(s.corner_address("", 'r'));
    s.v_t = s.id_of.at(s.corner_address("", 't'));
    if (n >= 2) {
        s.v_lr = s.id_of.at(s.junction_address("", "lr"));
        s.v_lt = s.id_of.at(s.junction_address("", "lt"));
        s.v_rt = s.id_of.at(s.junction_address("", "rt"));
    } else {
        s.v_lr = s.v_l;
        s.v_lt = s.v_t;
        s.v_rt = s.v_r;
    }
    return s;
}

VerifyReport verify_minor_model(const MinorModel& m) {
    VerifyReport rep;
    const std::size_t hn = m.host.vertex_count();
    const std::size_t pn = m.pattern.vertex_count();

    if (m.branch_sets.size() != pn) {
        rep.fail("branch set count " + std::to_string(m.branch_sets.size()) +
                 " != pattern vertex count " + std::to_string(pn));
        return rep;
    }

    std::vector<int> owner(hn, -1);
    for (std::size_t pv = 0; pv < pn; ++pv) {
        if (m.branch_sets[pv].empty())
            rep.fail("empty branch set for pattern vertex " + std::to_string(pv));
        for (Vertex hv : m.branch_sets[pv]) {
            if (hv >= hn) {
                rep.fail("branch set " + std::to_string(pv) + " references bad host vertex " +
                         std::to_string(hv));
                continue;
            }
            if (owner[hv] != -1 && owner[hv] != static_cast<int>(pv))
                rep.fail("host vertex " + std::to_string(hv) + " shared by branch sets " +
                         std::to_string(owner[hv]) + " and " + std::to_string(pv));
            owner[hv] = static_cast<int>(pv);
        }
    }
    if (!rep.ok) return rep;

    // Connectivity of each branch set in the host.
    for (std::size_t pv = 0; pv < pn; ++pv) {
        const auto& bs = m.branch_sets[pv];
        std::set<Vertex> todo(bs.begin(), bs.end());
        std::vector<Vertex> stack{bs.front()};
        todo.erase(bs.front());
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : m.host.neighbors(u)) {
                auto it = todo.find(w);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(w);
                }
            }
        }
        if (!todo.empty())
            rep.fail("branch set " + std::to_string(pv) + " is disconnected (vertex " +
                     std::to_string(*todo.begin()) + " unreachable)");
    }

    // Every pattern edge needs a witness host edge in the right branch sets.
    std::set<std::pair<Vertex, Vertex>> witnessed;
    for (auto [pu, pv, hx, hy] : m.edge_witnesses) {
        if (pu > pv) std::swap(pu, pv);
        if (!m.pattern.has_edge(pu, pv)) {
            rep.fail("witness for non-edge (" + std::to_string(pu) + "," + std::to_string(pv) + ")");
            continue;
        }
        if (!m.host.has_edge(hx, hy)) {
            rep.fail("witness host pair (" + std::to_string(hx) + "," + std::to_string(hy) +
                     ") is not an edge");
            continue;
        }
        bool straight = owner[hx] == static_cast<int>(pu) && owner[hy] == static_cast<int>(pv);
        bool flipped = owner[hx] == static_cast<int>(pv) && owner[hy] == static_cast<int>(pu);
        if (!straight && !flipped) {
            rep.fail("witness endpoints for pattern edge (" + std::to_string(pu) + "," +
                     std::to_string(pv) + ") lie in the wrong branch sets");
            continue;
        }
        witnessed.emplace(pu, pv);
    }
    for (auto [u, v] : m.pattern.edges())
        if (!witnessed.count({u, v}))
            rep.fail("pattern edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has no witness");
    return rep;
}

namespace {

// Corner frames tie Hanoi pegs to triangle roles. frame[role] = peg with
// roles 0=l, 1=r, 2=t; the top-level convention is (l,r,t) = pegs (2,3,1),
// i.e. {1, 2, 0} zero-indexed. Entering a copy permutes the roles of the
// sub-puzzle's perfect states.
using Frame = std::array<int, 3>;

constexpr Frame kTopFrame{1, 2, 0};

Frame enter_copy(const Frame& f, int role) {
    switch (role) {
        case 0: return {f[0], f[2], f[1]}; // L
        case 1: return {f[2], f[1], f[0]}; // R
        default: return {f[1], f[0], f[2]}; // T
    }
}

int role_of_peg(const Frame& f, int peg) {
    for (int x = 0; x < 3; ++x)
        if (f[x] == peg) return x;
    throw parameter_error("frame lookup failed");
}

// Address of a three-peg configuration under the frame recursion.
std::string config_address(const Configuration& c) {
    Frame f = kTopFrame;
    std::string addr;
    addr.reserve(c.n);
    for (int i = c.n - 1; i >= 1; --i) {
        int x = role_of_peg(f, c.peg_of_disk[i]);
        addr += "LRT"[x];
        f = enter_copy(f, x);
    }
    addr += "lrt"[role_of_peg(f, c.peg_of_disk[0])];
    return canonical(addr);
}

// The unique contracted edge at a non-perfect vertex: the move of the
// smallest disk that is not part of the maximal bottom stack... more
// precisely, with d_1..d_m the maximal prefix sharing a peg, disk d_(m+1)
// moves to the peg holding neither it nor the prefix.
std::optional<std::uint64_t> contraction_partner(const Configuration& c) {
    int base = c.peg_of_disk[0];
    int m = 1;
    while (m < c.n && c.peg_of_disk[m] == base) ++m;
    if (m == c.n) return std::nullopt; // perfect state
    int a = c.peg_of_disk[m];
    int b = 3 - a - base;
    std::uint64_t delta = 1;
    for (int i = 0; i < m; ++i) delta *= 3;
    return c.encode() - static_cast<std::uint64_t>(a) * delta +
           static_cast<std::uint64_t>(b) * delta;
}

} // namespace

ContractionResult contract_boundary_edges(const Graph& h, int n) {
    HanoiSpace space{3, n};
    if (h.vertex_count() != space.vertex_count())
        throw parameter_error("contract_boundary_edges: vertex count is not 3^n");
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        auto expect = space.neighbors(v);
        auto got = h.neighbors(v);
        if (!std::equal(expect.begin(), expect.end(), got.begin(), got.end()))
            throw parameter_error("contract_boundary_edges: input is not H_3^" +
                                  std::to_string(n));
    }

    ContractionResult res;
    res.sierpinski = build_sierpinski(n);
    const SierpinskiGraph& s = res.sierpinski;

    const std::uint64_t nv = space.vertex_count();
    res.image.assign(nv, 0);
    std::vector<char> hit(s.graph.vertex_count(), 0);
    for (std::uint64_t id = 0; id < nv; ++id) {
        Configuration c = Configuration::decode(3, n, id);
        Vertex sv = s.id_of.at(config_address(c));
        res.image[id] = sv;
        hit[sv] = 1;
        auto partner = contraction_partner(c);
        if (partner && s.id_of.at(config_address(Configuration::decode(3, n, *partner))) != sv)
            throw parameter_error("contraction map split a contracted pair");
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw parameter_error("contraction map is not onto S_n");

    // Edge check: non-contracted edges map exactly onto E(S_n).
    std::set<std::pair<Vertex, Vertex>> mapped;
    for (auto [u, v] : h.edges()) {
        Vertex a = res.image[u], b = res.image[v];
        if (a == b) continue; // contracted
        mapped.emplace(std::min(a, b), std::max(a, b));
    }
    auto want = s.graph.edges();
    if (mapped.size() != want.size() ||
        !std::equal(mapped.begin(), mapped.end(), want.begin()))
        throw parameter_error("contracted graph is not isomorphic to S_n");

    // Assemble the minor model (branch sets of size <= 2).
    MinorModel m;
    m.host = h;
    m.pattern = s.graph;
    m.branch_sets.assign(s.graph.vertex_count(), {});
    for (std::uint64_t id = 0; id < nv; ++id)
        m.branch_sets[res.image[id]].push_back(static_cast<Vertex>(id));
    std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> witness;
    for (auto [u, v] : h.edges()) {
        Vertex a = res.image[u], b = res.image[v];
        if (a == b) continue;
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (!witness.count(key)) witness[key] = {u, v};
    }
    for (auto& [pe, he] : witness) {
        Vertex hu = he.first, hv = he.second;
        if (res.image[hu] != pe.first) std::swap(hu, hv);
        m.edge_witnesses.emplace_back(pe.first, pe.second, hu, hv);
    }
    res.model = std::move(m);
    return res;
}

namespace {

struct EmbedState {
    // pattern configuration id -> host vertex ids
    std::vector<std::vector<Vertex>> branch;
    std::vector<std::tuple<Vertex, Vertex, Vertex, Vertex>> witnesses;
    // tails[role]: path from a vertex of branch(perfect(frame[role])) to the
    // role's corner of this subtriangle; only tails[x][0] is in a branch set.
    std::array<std::vector<Vertex>, 3> tails;
};

std::uint64_t perfect_id(int peg, int disks) {
    return static_cast<std::uint64_t>(peg) * ((pow3(disks) - 1) / 2);
}

EmbedState embed_rec(const SierpinskiGraph& s, const std::string& prefix, const Frame& f) {
    const int k = s.level - static_cast<int>(prefix.size()); // subtriangle level
    EmbedState st;

    if (k == 2) {
        // K_3 model: the junction triangle of this S_2, with one tail per
        // corner.
        Vertex j_lr = s.vertex_at(s.junction_address(prefix, "lr"));
        Vertex j_lt = s.vertex_at(s.junction_address(prefix, "lt"));
        Vertex j_rt = s.vertex_at(s.junction_address(prefix, "rt"));
        Vertex c_l = s.vertex_at(s.corner_address(prefix, 'l'));
        Vertex c_r = s.vertex_at(s.corner_address(prefix, 'r'));
        Vertex c_t = s.vertex_at(s.corner_address(prefix, 't'));

        st.branch.assign(3, {});
        st.branch[f[0]] = {j_lr};
        st.branch[f[1]] = {j_rt};
        st.branch[f[2]] = {j_lt};
        for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}) {
            Vertex ha = st.branch[a][0], hb = st.branch[b][0];
            st.witnesses.emplace_back(a, b, ha, hb);
        }
        st.tails[0] = {j_lr, c_l};
        st.tails[1] = {j_rt, c_r};
        st.tails[2] = {j_lt, c_t};
        return st;
    }

    const int m = k - 1;                  // pattern disk count
    const std::uint64_t copy_size = pow3(m - 1);

    std::array<EmbedState, 3> sub;
    for (int x = 0; x < 3; ++x)
        sub[x] = embed_rec(s, prefix + "LRT"[x], enter_copy(f, x));

    st.branch.assign(3 * copy_size, {});
    for (int x = 0; x < 3; ++x) {
        std::uint64_t off = static_cast<std::uint64_t>(f[x]) * copy_size;
        for (std::uint64_t pv = 0; pv < copy_size; ++pv)
            st.branch[off + pv] = std::move(sub[x].branch[pv]);
        for (auto [pu, pv, hx, hy] : sub[x].witnesses)
            st.witnesses.emplace_back(static_cast<Vertex>(off + pu),
                                      static_cast<Vertex>(off + pv), hx, hy);
    }

    // Join the copies at the three junctions: the pattern boundary edge
    // between copies i and j runs between the sub-perfect states of the third
    // peg; the copy on the absorbing side keeps the junction vertex.
    auto join = [&](int role_a, int role_b, std::vector<Vertex>& tail_a,
                    std::vector<Vertex>& tail_b) {
        int third = 3 - role_a - role_b;
        std::uint64_t pa = perfect_id(f[third], m - 1) +
                           static_cast<std::uint64_t>(f[role_a]) * copy_size;
        std::uint64_t pb = perfect_id(f[third], m - 1) +
                           static_cast<std::uint64_t>(f[role_b]) * copy_size;
        assert(tail_a.back() == tail_b.back());
        Vertex junction = tail_a.back();
        auto& ba = st.branch[pa];
        ba.insert(ba.end(), tail_a.begin() + 1, tail_a.end()); // includes junction
        auto& bb = st.branch[pb];
        bb.insert(bb.end(), tail_b.begin() + 1, tail_b.end() - 1);
        Vertex b_end = tail_b[tail_b.size() - 2];
        Vertex u = static_cast<Vertex>(std::min(pa, pb));
        Vertex v = static_cast<Vertex>(std::max(pa, pb));
        st.witnesses.emplace_back(u, v, junction, b_end);
    };
    join(0, 1, sub[0].tails[1], sub[1].tails[0]); // v_lr
    join(0, 2, sub[0].tails[2], sub[2].tails[0]); // v_lt
    join(1, 2, sub[1].tails[2], sub[2].tails[1]); // v_rt

    st.tails[0] = std::move(sub[0].tails[0]);
    st.tails[1] = std::move(sub[1].tails[1]);
    st.tails[2] = std::move(sub[2].tails[2]);
    return st;
}

} // namespace

MinorModel embed_hanoi_minor(const SierpinskiGraph& s) {
    if (s.level < 2) throw parameter_error("embed_hanoi_minor needs level >= 2");
    EmbedState st = embed_rec(s, "", kTopFrame);

    MinorModel m;
    m.host = s.graph;
    m.pattern = build_hanoi(3, s.level - 1);
    m.branch_sets = std::move(st.branch);
    m.edge_witnesses = std::move(st.witnesses);
    return m;
}

// ---- JSON ------------------------------------------------------------------

std::string minor_model_to_json(const MinorModel& m) {
    nlohmann::json j;
    j["host_vertices"] = m.host.vertex_count();
    j["pattern_vertices"] = m.pattern.vertex_count();
    j["pattern_edges"] = m.pattern.edges();
    j["branch_sets"] = m.branch_sets;
    auto& w = j["edge_witnesses"] = nlohmann::json::array();
    for (auto [pu, pv, hx, hy] : m.edge_witnesses)
        w.push_back({{"pattern_edge", {pu, pv}}, {"host_edge", {hx, hy}}});
    return j.dump(2);
}

MinorModel minor_model_from_json(const Graph& host, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MinorModel m;
    m.host = host;
    if (j.at("host_vertices").get<std::size_t>() != host.vertex_count())
        throw parameter_error("minor model host size does not match the graph file");
    m.pattern = Graph(j.at("pattern_vertices").get<std::size_t>());
    for (const auto& e : j.at("pattern_edges"))
        m.pattern.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    m.pattern.finalize();
    m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<Vertex>>>();
    for (const auto& w : j.at("edge_witnesses")) {
        auto pe = w.at("pattern_edge").get<std::vector<Vertex>>();
        auto he = w.at("host_edge").get<std::vector<Vertex>>();
        if (pe.size() != 2 || he.size() != 2)
            throw parameter_error("minor model witness entry malformed");
        m.edge_witnesses.emplace_back(pe[0], pe[1], he[0], he[1]);
    }
    return m;
}

std::string subdivision_to_json(const SubdivisionWitness& w) {
    nlohmann::json j;
    j["branch_vertices"] = w.branch;
    auto& p = j["paths"] = nlohmann::json::array();
    const auto& order = octahedron_edge_order();
    for (std::size_t e = 0; e < w.paths.size(); ++e)
        p.push_back({{"ends", {order[e].first, order[e].second}}, {"vertices", w.paths[e]}});
    return j.dump(2);
}

SubdivisionWitness subdivision_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SubdivisionWitness w;
    auto bv = j.at("branch_vertices").get<std::vector<Vertex>>();
    if (bv.size() != 6) throw parameter_error("witness needs 6 branch vertices");
    std::copy(bv.begin(), bv.end(), w.branch.begin());
    const auto& order = octahedron_edge_order();
    const auto& paths = j.at("paths");
    if (paths.size() != order.size()) throw parameter_error("witness needs 12 paths");
    w.paths.resize(order.size());
    for (std::size_t e = 0; e < order.size(); ++e) {
        auto ends = paths[e].at("ends").get<std::vector<int>>();
        if (ends.size() != 2 || ends[0] != order[e].first || ends[1] != order[e].second)
            throw parameter_error("witness path " + std::to_string(e) +
                                  " does not follow the fixed edge order");
        w.paths[e] = paths[e].at("vertices").get<std::vector<Vertex>>();
    }
    return w;
}

} // namespace hanoi
