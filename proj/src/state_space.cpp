#include "hanoi/state_space.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace hanoi {

namespace {

void check_params(int p, int n) {
    if (p < 3) throw parameter_error("peg count must be >= 3, got " + std::to_string(p));
    if (n < 1) throw parameter_error("disk count must be >= 1, got " + std::to_string(n));
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

std::uint64_t Configuration::encode() const {
    std::uint64_t id = 0;
    for (int i = n - 1; i >= 0; --i) id = id * p + peg_of_disk[i];
    return id;
}

Configuration Configuration::decode(int p, int n, std::uint64_t id) {
    check_params(p, n);
    Configuration c;
    c.n = n;
    c.p = p;
    c.peg_of_disk.resize(n);
    for (int i = 0; i < n; ++i) {
        c.peg_of_disk[i] = static_cast<std::uint8_t>(id % p);
        id /= p;
    }
    if (id != 0) throw parameter_error("configuration id out of range");
    return c;
}

std::string Configuration::digits() const {
    if (p > 9) throw parameter_error("digit strings need p <= 9");
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) s[i] = static_cast<char>('1' + peg_of_disk[i]);
    return s;
}

Configuration Configuration::from_digits(int p, const std::string& digits) {
    Configuration c;
    c.p = p;
    c.n = static_cast<int>(digits.size());
    check_params(p, c.n);
    c.peg_of_disk.resize(c.n);
    for (int i = 0; i < c.n; ++i) {
        int d = digits[i] - '1';
        if (d < 0 || d >= p) throw parameter_error("bad peg digit in " + digits);
        c.peg_of_disk[i] = static_cast<std::uint8_t>(d);
    }
    return c;
}

bool is_compatible(const Configuration& a, const Configuration& b) {
    if (a.n != b.n || a.p != b.p)
        throw parameter_error("is_compatible: dimension mismatch");
    int diff = -1;
    for (int i = 0; i < a.n; ++i) {
        if (a.peg_of_disk[i] != b.peg_of_disk[i]) {
            if (diff != -1) return false;
            diff = i;
        }
    }
    if (diff == -1) return false;
    // d_diff must be the smallest disk on either differing peg; n stays small
    // at desk scale, so a linear scan with early exit suffices.
    int x = a.peg_of_disk[diff];
    int y = b.peg_of_disk[diff];
    for (int j = 0; j < diff; ++j) {
        int pj = a.peg_of_disk[j];
        if (pj == x || pj == y) return false;
    }
    return true;
}

std::uint64_t HanoiSpace::vertex_count() const {
    check_params(p, n);
    return ipow(p, n);
}

std::vector<std::uint64_t> HanoiSpace::neighbors(std::uint64_t id) const {
    // For each peg pair the smaller of the two top disks moves; a pair with
    // both pegs empty contributes nothing.
    Configuration c = Configuration::decode(p, n, id);
    std::vector<int> top(p, -1); // smallest disk per peg
    for (int i = n - 1; i >= 0; --i) top[c.peg_of_disk[i]] = i;

    std::vector<std::uint64_t> out;
    for (int a = 0; a < p; ++a) {
        for (int b = a + 1; b < p; ++b) {
            int ta = top[a], tb = top[b];
            if (ta == -1 && tb == -1) continue;
            int disk, dest;
            if (ta == -1) { disk = tb; dest = a; }
            else if (tb == -1) { disk = ta; dest = b; }
            else if (ta < tb) { disk = ta; dest = b; }
            else { disk = tb; dest = a; }
            std::uint64_t delta = ipow(p, disk);
            out.push_back(id - c.peg_of_disk[disk] * delta +
                          static_cast<std::uint64_t>(dest) * delta);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ImplicitGraph HanoiSpace::implicit() const {
    check_params(p, n);
    HanoiSpace copy = *this;
    ImplicitGraph ig;
    ig.n = vertex_count();
    ig.neighbor_fn = [copy](Vertex v, const std::function<void(Vertex)>& f) {
        for (std::uint64_t w : copy.neighbors(v)) f(static_cast<Vertex>(w));
    };
    return ig;
}

Graph build_hanoi(int p, int n, std::uint64_t vertex_cap) {
    check_params(p, n);
    std::uint64_t nv = ipow(p, n);
    if (nv > vertex_cap)
        throw capacity_error("H_" + std::to_string(p) + "^" + std::to_string(n) + " has " +
                             std::to_string(nv) + " vertices, above the cap " +
                             std::to_string(vertex_cap) + "; use the implicit neighbor mode");
    HanoiSpace space{p, n};
    Graph g(nv);
    for (std::uint64_t v = 0; v < nv; ++v)
        for (std::uint64_t w : space.neighbors(v))
            if (v < w) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(w));
    g.finalize();
    return g;
}

std::vector<std::uint64_t> perfect_states(int p, int n) {
    check_params(p, n);
    // Constant configuration on peg k has id k * (p^n - 1) / (p - 1).
    std::uint64_t unit = (ipow(p, n) - 1) / (p - 1);
    std::vector<std::uint64_t> out;
    for (int k = 0; k < p; ++k) out.push_back(k * unit);
    return out;
}

std::vector<std::uint64_t> boundary_vertices(int p, int n, std::uint64_t vertex_cap) {
    check_params(p, n);
    std::uint64_t nv = ipow(p, n);
    if (nv > vertex_cap)
        throw capacity_error("boundary_vertices: state space above cap");
    std::vector<std::uint64_t> out;
    for (std::uint64_t id = 0; id < nv; ++id) {
        Configuration c = Configuration::decode(p, n, id);
        int big = c.peg_of_disk[n - 1];
        bool alone = true;
        std::uint32_t used = 0;
        for (int i = 0; i < n; ++i) {
            used |= (1u << c.peg_of_disk[i]);
            if (i < n - 1 && c.peg_of_disk[i] == big) { alone = false; break; }
        }
        if (!alone) continue;
        if (std::popcount(used) < p) out.push_back(id); // some peg is empty
    }
    return out;
}

std::uint64_t inter_copy_edge_count(int p, int n) {
    check_params(p, n);
    return static_cast<std::uint64_t>(p) * (p - 1) / 2 * ipow(p - 2, n - 1);
}

std::uint64_t expected_hanoi_edge_count(int p, int n) {
    check_params(p, n);
    return static_cast<std::uint64_t>(p) * (p - 1) / 2 * (ipow(p, n) - ipow(p - 2, n)) / 2;
}

std::string hanoi_label_csv(int p, int n, std::uint64_t vertex_cap) {
    std::uint64_t nv = ipow(p, n);
    if (nv > vertex_cap) throw capacity_error("hanoi_label_csv: state space above cap");
    std::ostringstream os;
    os << "id,configuration\n";
    for (std::uint64_t id = 0; id < nv; ++id)
        os << (id + 1) << "," << Configuration::decode(p, n, id).digits() << "\n";
    return os.str();
}

} // namespace hanoi
