#include "hanoi/pegsets.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "json.hpp"

namespace hanoi {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int regular_quota(int p, int n) {
    if (p < 4) throw parameter_error("regular pegsets need p >= 4");
    if ((n - 1) % (p - 2) != 0)
        throw parameter_error("regular pegsets need n ≡ 1 (mod p-2); got n=" +
                              std::to_string(n) + ", p=" + std::to_string(p));
    return (n - 1) / (p - 2);
}

} // namespace

std::vector<int> Pegset::frozen_pegs() const {
    std::set<int> s;
    for (auto r : rho)
        if (r != kUnfrozen) s.insert(r);
    for (auto peg : extra_frozen_pegs) s.insert(peg);
    return {s.begin(), s.end()};
}

std::vector<int> Pegset::disks_on(int peg) const {
    std::vector<int> out;
    for (int d = 0; d < n; ++d)
        if (rho[d] == peg) out.push_back(d);
    return out;
}

std::vector<int> Pegset::unfrozen_disks() const {
    std::vector<int> out;
    for (int d = 0; d < n; ++d)
        if (rho[d] == kUnfrozen) out.push_back(d);
    return out;
}

bool Pegset::contains(const Configuration& c) const {
    if (c.n != n || c.p != p) return false;
    std::uint32_t frozen_mask = 0;
    for (auto r : rho)
        if (r != kUnfrozen) frozen_mask |= (1u << r);
    for (auto peg : extra_frozen_pegs) frozen_mask |= (1u << peg);
    for (int d = 0; d < n; ++d) {
        if (rho[d] != kUnfrozen) {
            if (c.peg_of_disk[d] != rho[d]) return false;
        } else if (frozen_mask & (1u << c.peg_of_disk[d])) {
            return false;
        }
    }
    return true;
}

bool Pegset::is_regular() const {
    auto pegs = frozen_pegs();
    if (static_cast<int>(pegs.size()) != p - 3) return false;
    int q = (n - 1) % (p - 2) == 0 ? (n - 1) / (p - 2) : -1;
    if (q < 0) return false;
    for (int peg : pegs)
        if (static_cast<int>(disks_on(peg).size()) != q) return false;
    return true;
}

std::string Pegset::key() const {
    std::string s;
    for (int peg : frozen_pegs()) {
        if (!s.empty()) s += '|';
        s += std::to_string(peg);
        s += ':';
        bool first = true;
        for (int d : disks_on(peg)) {
            if (!first) s += '.';
            s += std::to_string(d);
            first = false;
        }
    }
    return s;
}

std::string Pegset::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["p"] = p;
    auto& fr = j["frozen"] = nlohmann::json::array();
    for (int peg : frozen_pegs()) {
        nlohmann::json e;
        e["peg"] = peg + 1;
        auto& ds = e["disks"] = nlohmann::json::array();
        for (int d : disks_on(peg)) ds.push_back(d + 1);
        fr.push_back(e);
    }
    return j.dump();
}

Pegset Pegset::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Pegset ps;
    ps.n = j.at("n").get<int>();
    ps.p = j.at("p").get<int>();
    ps.rho.assign(ps.n, kUnfrozen);
    for (const auto& e : j.at("frozen")) {
        int peg = e.at("peg").get<int>() - 1;
        if (peg < 0 || peg >= ps.p) throw parameter_error("pegset json: bad peg");
        auto disks = e.at("disks").get<std::vector<int>>();
        if (disks.empty()) ps.extra_frozen_pegs.push_back(static_cast<std::int8_t>(peg));
        for (int d1 : disks) {
            int d = d1 - 1;
            if (d < 0 || d >= ps.n) throw parameter_error("pegset json: bad disk");
            if (ps.rho[d] != kUnfrozen) throw parameter_error("pegset json: disk frozen twice");
            ps.rho[d] = static_cast<std::int8_t>(peg);
        }
    }
    std::sort(ps.extra_frozen_pegs.begin(), ps.extra_frozen_pegs.end());
    return ps;
}

std::vector<std::uint64_t> pegset_members(const Pegset& ps, std::uint64_t cap) {
    auto frozen = ps.frozen_pegs();
    std::vector<int> open;
    for (int peg = 0; peg < ps.p; ++peg)
        if (std::find(frozen.begin(), frozen.end(), peg) == frozen.end()) open.push_back(peg);
    auto loose = ps.unfrozen_disks();

    std::uint64_t count = ipow(open.size(), loose.size());
    if (count > cap) throw capacity_error("pegset_members: member count above cap");

    Configuration base;
    base.n = ps.n;
    base.p = ps.p;
    base.peg_of_disk.assign(ps.n, 0);
    for (int d = 0; d < ps.n; ++d)
        if (ps.rho[d] != Pegset::kUnfrozen)
            base.peg_of_disk[d] = static_cast<std::uint8_t>(ps.rho[d]);

    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t a = 0; a < count; ++a) {
        Configuration c = base;
        std::uint64_t rest = a;
        for (int d : loose) {
            c.peg_of_disk[d] = static_cast<std::uint8_t>(open[rest % open.size()]);
            rest /= open.size();
        }
        out.push_back(c.encode());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Choose `take` disks from `pool` (sorted), lexicographically, invoking f
// with each choice and the remaining pool.
void choose_disks(const std::vector<int>& pool, int take,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f) {
    std::vector<int> idx(take);
    for (int i = 0; i < take; ++i) idx[i] = i;
    if (take == 0) {
        f({}, pool);
        return;
    }
    if (take > static_cast<int>(pool.size())) return;
    for (;;) {
        std::vector<int> chosen, rest;
        std::size_t at = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (at < idx.size() && static_cast<int>(i) == idx[at]) {
                chosen.push_back(pool[i]);
                ++at;
            } else {
                rest.push_back(pool[i]);
            }
        }
        f(chosen, rest);
        int i = take - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - take + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Pegset> enumerate_regular_pegsets(int p, int n) {
    const int q = regular_quota(p, n);
    std::vector<Pegset> out;

    std::vector<int> all_disks(n);
    for (int d = 0; d < n; ++d) all_disks[d] = d;

    // Frozen peg subsets of size p-3, lexicographic; disks assigned peg by
    // peg in increasing order.
    std::vector<int> pegs(p - 3);
    for (int i = 0; i < p - 3; ++i) pegs[i] = i;
    for (;;) {
        std::function<void(std::size_t, const std::vector<int>&, Pegset&)> assign =
            [&](std::size_t which, const std::vector<int>& pool, Pegset& ps) {
                if (which == pegs.size()) {
                    out.push_back(ps);
                    return;
                }
                choose_disks(pool, q, [&](const std::vector<int>& chosen,
                                          const std::vector<int>& rest) {
                    for (int d : chosen) ps.rho[d] = static_cast<std::int8_t>(pegs[which]);
                    assign(which + 1, rest, ps);
                    for (int d : chosen) ps.rho[d] = Pegset::kUnfrozen;
                });
            };
        Pegset ps;
        ps.n = n;
        ps.p = p;
        ps.rho.assign(n, Pegset::kUnfrozen);
        assign(0, all_disks, ps);

        int i = p - 4;
        while (i >= 0 && pegs[i] == p - (p - 3) + i) --i;
        if (i < 0 || p == 3) break;
        ++pegs[i];
        for (int j = i + 1; j < p - 3; ++j) pegs[j] = pegs[j - 1] + 1;
    }
    return out;
}

std::uint64_t regular_pegset_count(int p, int n) {
    const int q = regular_quota(p, n);
    // C(p, p-3) peg choices times the ordered ways to fill the p-3 quotas.
    auto binom = [](std::uint64_t a, std::uint64_t b) {
        if (b > a) return std::uint64_t{0};
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::uint64_t count = binom(p, 3); // == C(p, p-3)
    int remaining = n;
    for (int i = 0; i < p - 3; ++i) {
        count *= binom(remaining, q);
        remaining -= q;
    }
    return count;
}

bool regular_adjacent(const Pegset& u, const Pegset& v) {
    if (u.n != v.n || u.p != v.p)
        throw parameter_error("regular_adjacent: dimension mismatch");
    if (!u.is_regular() || !v.is_regular())
        throw parameter_error("regular_adjacent needs regular pegsets");
    if (u == v) return false;

    // 1. a disk frozen by both is frozen to the same peg
    for (int d = 0; d < u.n; ++d)
        if (u.rho[d] != Pegset::kUnfrozen && v.rho[d] != Pegset::kUnfrozen &&
            u.rho[d] != v.rho[d])
            return false;

    // 2. each side freezes exactly one peg the other leaves unfrozen
    auto pu = u.frozen_pegs();
    auto pv = v.frozen_pegs();
    std::vector<int> only_u, only_v;
    std::set_difference(pu.begin(), pu.end(), pv.begin(), pv.end(), std::back_inserter(only_u));
    std::set_difference(pv.begin(), pv.end(), pu.begin(), pu.end(), std::back_inserter(only_v));
    if (only_u.size() != 1 || only_v.size() != 1) return false;

    // 3./4. a disk frozen on one side only must avoid the other side's pegs
    std::uint32_t mask_u = 0, mask_v = 0;
    for (int peg : pu) mask_u |= (1u << peg);
    for (int peg : pv) mask_v |= (1u << peg);
    for (int d = 0; d < u.n; ++d) {
        if (u.rho[d] != Pegset::kUnfrozen && v.rho[d] == Pegset::kUnfrozen &&
            (mask_v & (1u << u.rho[d])))
            return false;
        if (v.rho[d] != Pegset::kUnfrozen && u.rho[d] == Pegset::kUnfrozen &&
            (mask_u & (1u << v.rho[d])))
            return false;
    }
    return true;
}

Configuration shared_configuration(const Pegset& u, const Pegset& v) {
    if (!regular_adjacent(u, v))
        throw parameter_error("shared_configuration needs adjacent pegsets");
    // Disks frozen by either side keep their assignment; the rest go to the
    // lowest peg frozen by neither.
    std::uint32_t frozen = 0;
    for (int peg : u.frozen_pegs()) frozen |= (1u << peg);
    for (int peg : v.frozen_pegs()) frozen |= (1u << peg);
    int open = -1;
    for (int peg = 0; peg < u.p; ++peg)
        if (!(frozen & (1u << peg))) { open = peg; break; }

    Configuration c;
    c.n = u.n;
    c.p = u.p;
    c.peg_of_disk.assign(u.n, static_cast<std::uint8_t>(open));
    for (int d = 0; d < u.n; ++d) {
        if (u.rho[d] != Pegset::kUnfrozen) c.peg_of_disk[d] = static_cast<std::uint8_t>(u.rho[d]);
        else if (v.rho[d] != Pegset::kUnfrozen)
            c.peg_of_disk[d] = static_cast<std::uint8_t>(v.rho[d]);
    }
    assert(u.contains(c) && v.contains(c));
    return c;
}

Vertex PegsetGraph::id_of(const Pegset& ps) const {
    auto it = index.find(ps.key());
    if (it == index.end()) throw parameter_error("pegset not in graph: " + ps.key());
    return it->second;
}

PegsetGraph build_intersection_graph(int p, int n) {
    PegsetGraph out;
    out.family = "ipn";
    out.p = p;
    out.n = n;
    out.labels = enumerate_regular_pegsets(p, n);
    for (Vertex i = 0; i < out.labels.size(); ++i) out.index[out.labels[i].key()] = i;
    out.graph = Graph(out.labels.size());
    for (Vertex i = 0; i < out.labels.size(); ++i)
        for (Vertex j = i + 1; j < out.labels.size(); ++j)
            if (regular_adjacent(out.labels[i], out.labels[j])) out.graph.add_edge(i, j);
    out.graph.finalize();
    return out;
}

PegsetGraph build_g4(int n, std::uint64_t cap) {
    if (n < 3) throw parameter_error("G_4^n needs n >= 3");
    const int p = 4;
    const int max_disks = (n - 1) / 2;

    PegsetGraph out;
    out.family = "g4";
    out.p = p;
    out.n = n;

    // 4 pegs x all disk subsets of size <= floor((n-1)/2), subsets in
    // (size, lexicographic) order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> all_disks(n);
    for (int d = 0; d < n; ++d) all_disks[d] = d;
    for (int k = 0; k <= max_disks; ++k)
        choose_disks(all_disks, k,
                     [&](const std::vector<int>& chosen, const std::vector<int>&) {
                         subsets.push_back(chosen);
                     });
    if (subsets.size() * 4 > cap) throw capacity_error("G_4^n above cap");

    for (int peg = 0; peg < p; ++peg)
        for (const auto& disks : subsets) {
            Pegset ps;
            ps.n = n;
            ps.p = p;
            ps.rho.assign(n, Pegset::kUnfrozen);
            for (int d : disks) ps.rho[d] = static_cast<std::int8_t>(peg);
            if (disks.empty()) ps.extra_frozen_pegs.push_back(static_cast<std::int8_t>(peg));
            out.labels.push_back(ps);
        }

    for (Vertex i = 0; i < out.labels.size(); ++i) out.index[out.labels[i].key()] = i;
    out.graph = Graph(out.labels.size());
    for (Vertex i = 0; i < out.labels.size(); ++i) {
        for (Vertex j = i + 1; j < out.labels.size(); ++j) {
            const auto& a = out.labels[i];
            const auto& b = out.labels[j];
            int peg_a = a.frozen_pegs()[0];
            int peg_b = b.frozen_pegs()[0];
            if (peg_a == peg_b) continue;
            bool disjoint = true;
            for (int d = 0; d < n && disjoint; ++d)
                if (a.rho[d] != Pegset::kUnfrozen && b.rho[d] != Pegset::kUnfrozen)
                    disjoint = false;
            if (disjoint) out.graph.add_edge(i, j);
        }
    }
    out.graph.finalize();
    return out;
}

namespace {

// One freeze/unfreeze exchange: unfreeze `drop_peg`, freeze `add_peg` with
// `disks`. The result is adjacent to `cur` whenever the four adjacency
// are met, which the callers arrange.
Pegset exchange(const Pegset& cur, int drop_peg, int add_peg, const std::vector<int>& disks) {
    Pegset next = cur;
    for (int d = 0; d < cur.n; ++d)
        if (next.rho[d] == drop_peg) next.rho[d] = Pegset::kUnfrozen;
    for (int d : disks) next.rho[d] = static_cast<std::int8_t>(add_peg);
    return next;
}

int lowest_unfrozen_peg(const Pegset& ps) {
    auto pegs = ps.frozen_pegs();
    for (int peg = 0; peg < ps.p; ++peg)
        if (std::find(pegs.begin(), pegs.end(), peg) == pegs.end()) return peg;
    throw parameter_error("no unfrozen peg available");
}

} // namespace

std::vector<Pegset> pegset_path(const Pegset& u, const Pegset& v) {
    if (u.n != v.n || u.p != v.p) throw parameter_error("pegset_path: dimension mismatch");
    if (!u.is_regular() || !v.is_regular())
        throw parameter_error("pegset_path needs regular pegsets");

    std::vector<Pegset> walk{u};
    if (u == v) return walk;
    if (regular_adjacent(u, v)) {
        walk.push_back(v);
        return walk;
    }

    Pegset cur = u;
    auto step = [&](const Pegset& next) {
        assert(regular_adjacent(cur, next));
        walk.push_back(next);
        cur = next;
    };

    // Preamble: migrate mismatched frozen pegs one at a time (length depends
    // only on p). The new peg is loaded with currently-unfrozen disks; reusing
    // the released ones would freeze a disk onto two different pegs across the
    // step and break adjacency condition 1.
    for (;;) {
        auto pu = cur.frozen_pegs();
        auto pv = v.frozen_pegs();
        std::vector<int> from, to;
        std::set_difference(pu.begin(), pu.end(), pv.begin(), pv.end(), std::back_inserter(from));
        std::set_difference(pv.begin(), pv.end(), pu.begin(), pu.end(), std::back_inserter(to));
        if (from.empty()) break;
        auto loose = cur.unfrozen_disks();
        std::vector<int> load(loose.begin(), loose.end() - 1);
        step(exchange(cur, from[0], to[0], load));
    }

    // Per-peg transformation, pegs in increasing index.
    for (int peg : v.frozen_pegs()) {
        for (;;) {
            auto ui = cur.disks_on(peg);
            auto vi = v.disks_on(peg);
            if (ui == vi) break; // case 3

            std::vector<int> missing;
            std::set_difference(vi.begin(), vi.end(), ui.begin(), ui.end(),
                                std::back_inserter(missing));
            int d = -1;
            for (int cand : missing)
                if (cur.rho[cand] == Pegset::kUnfrozen) { d = cand; break; }

            if (d == -1) {
                // Case 2: free the lowest missing disk, frozen on a
                // not-yet-processed peg q_s, by rebuilding q_s around a
                // currently-unfrozen spare disk.
                int dd = missing[0];
                int qs = cur.rho[dd];
                auto qs_disks = cur.disks_on(qs);
                auto loose = cur.unfrozen_disks();
                int spare = loose[0];
                std::vector<int> onto_aux(loose.begin() + 1, loose.end());
                int aux = lowest_unfrozen_peg(cur);
                step(exchange(cur, qs, aux, onto_aux));
                std::vector<int> back;
                for (int x : qs_disks)
                    if (x != dd) back.push_back(x);
                back.push_back(spare);
                std::sort(back.begin(), back.end());
                step(exchange(cur, aux, qs, back));
                continue; // dd is unfrozen now; case 1 will pick it up
            }

            // Case 1: swap d into the peg via an auxiliary peg.
            std::vector<int> extra;
            std::set_difference(ui.begin(), ui.end(), vi.begin(), vi.end(),
                                std::back_inserter(extra));
            int drop = extra[0];
            auto loose = cur.unfrozen_disks();
            std::vector<int> onto_aux;
            for (int x : loose)
                if (x != d) onto_aux.push_back(x);
            int aux = lowest_unfrozen_peg(cur);
            step(exchange(cur, peg, aux, onto_aux));
            std::vector<int> rebuilt;
            for (int x : ui)
                if (x != drop) rebuilt.push_back(x);
            rebuilt.push_back(d);
            std::sort(rebuilt.begin(), rebuilt.end());
            step(exchange(cur, aux, peg, rebuilt));
        }
    }
    assert(cur == v);
    return walk;
}

Pegset swap_automorphism(const Pegset& ps, int disk_i, int disk_j) {
    if (disk_i < 0 || disk_j < 0 || disk_i >= ps.n || disk_j >= ps.n)
        throw parameter_error("swap_automorphism: disk index out of range");
    Pegset out = ps;
    std::swap(out.rho[disk_i], out.rho[disk_j]);
    return out;
}

Pegset relabel_pegs(const Pegset& ps, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != ps.p)
        throw parameter_error("relabel_pegs: permutation size mismatch");
    Pegset out = ps;
    for (int d = 0; d < ps.n; ++d)
        if (ps.rho[d] != Pegset::kUnfrozen) out.rho[d] = static_cast<std::int8_t>(sigma[ps.rho[d]]);
    for (auto& peg : out.extra_frozen_pegs) peg = static_cast<std::int8_t>(sigma[peg]);
    std::sort(out.extra_frozen_pegs.begin(), out.extra_frozen_pegs.end());
    return out;
}

std::vector<Pegset> pegsets_of_config(const Configuration& cfg, const std::string& family) {
    std::vector<Pegset> out;
    if (family == "regular") {
        const int q = regular_quota(cfg.p, cfg.n);
        std::vector<int> eligible;
        for (int peg = 0; peg < cfg.p; ++peg) {
            int cnt = 0;
            for (int d = 0; d < cfg.n; ++d)
                if (cfg.peg_of_disk[d] == peg) ++cnt;
            if (cnt == q) eligible.push_back(peg);
        }
        choose_disks(eligible, cfg.p - 3,
                     [&](const std::vector<int>& pegs, const std::vector<int>&) {
                         Pegset ps;
                         ps.n = cfg.n;
                         ps.p = cfg.p;
                         ps.rho.assign(cfg.n, Pegset::kUnfrozen);
                         for (int peg : pegs)
                             for (int d = 0; d < cfg.n; ++d)
                                 if (cfg.peg_of_disk[d] == peg)
                                     ps.rho[d] = static_cast<std::int8_t>(peg);
                         out.push_back(ps);
                     });
    } else if (family == "g4") {
        if (cfg.p != 4) throw parameter_error("g4 family needs p = 4");
        const int max_disks = (cfg.n - 1) / 2;
        for (int peg = 0; peg < 4; ++peg) {
            std::vector<int> disks;
            for (int d = 0; d < cfg.n; ++d)
                if (cfg.peg_of_disk[d] == peg) disks.push_back(d);
            if (static_cast<int>(disks.size()) > max_disks) continue;
            Pegset ps;
            ps.n = cfg.n;
            ps.p = 4;
            ps.rho.assign(cfg.n, Pegset::kUnfrozen);
            for (int d : disks) ps.rho[d] = static_cast<std::int8_t>(peg);
            if (disks.empty()) ps.extra_frozen_pegs.push_back(static_cast<std::int8_t>(peg));
            out.push_back(ps);
        }
    } else {
        throw parameter_error("pegsets_of_config: family must be regular or g4");
    }
    return out;
}

std::vector<std::uint64_t> configs_of_pegsets(const std::vector<Pegset>& sets,
                                              std::uint64_t cap) {
    std::set<std::uint64_t> all;
    for (const auto& ps : sets) {
        auto members = pegset_members(ps, cap);
        all.insert(members.begin(), members.end());
        if (all.size() > cap) throw capacity_error("configs_of_pegsets: union above cap");
    }
    return {all.begin(), all.end()};
}

} // namespace hanoi
