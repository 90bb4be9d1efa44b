#include "hanoi/setfamilies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

namespace hanoi {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > 63) throw capacity_error("binomial table limited to n <= 63");
    // Pascal row; every entry of row 63 fits in 64 bits.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

namespace {

// k-subsets of [n] as masks, lexicographic in the sorted element lists.
std::vector<std::uint64_t> k_subsets(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k == 0) return {0};
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::uint64_t m = 0;
        for (int i : idx) m |= (1ull << i);
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

SubsetGraph build_kneser(int n, int k, std::uint64_t cap) {
    if (n < 1 || k < 0 || k > n) throw parameter_error("build_kneser: bad parameters");
    if (binomial(n, k) > cap) throw capacity_error("Kneser graph above cap");

    SubsetGraph out;
    out.n = n;
    out.k = k;
    out.labels = k_subsets(n, k);
    out.graph = Graph(out.labels.size());
    for (Vertex i = 0; i < out.labels.size(); ++i)
        for (Vertex j = i + 1; j < out.labels.size(); ++j)
            if ((out.labels[i] & out.labels[j]) == 0) out.graph.add_edge(i, j);
    out.graph.finalize();
    return out;
}

std::uint32_t kneser_diameter_formula(int n, int k) {
    if (k < 1 || n - 2 * k < 1)
        throw parameter_error("kneser diameter formula needs 1 <= k <= (n-1)/2");
    return static_cast<std::uint32_t>((k - 1 + (n - 2 * k) - 1) / (n - 2 * k) + 1);
}

SubsetGraph build_ds(int n, int r, std::uint64_t cap) {
    if (n < 1 || r < 0 || r > n) throw parameter_error("build_ds: bad parameters");
    std::uint64_t count = 0;
    for (int k = 0; k <= r; ++k) count += binomial(n, k);
    if (count > cap) throw capacity_error("Ds graph above cap");

    SubsetGraph out;
    out.n = n;
    out.r = r;
    for (int k = 0; k <= r; ++k) {
        auto slice = k_subsets(n, k);
        out.labels.insert(out.labels.end(), slice.begin(), slice.end());
    }
    out.graph = Graph(out.labels.size());
    for (Vertex i = 0; i < out.labels.size(); ++i)
        for (Vertex j = i + 1; j < out.labels.size(); ++j)
            if ((out.labels[i] & out.labels[j]) == 0) out.graph.add_edge(i, j);
    out.graph.finalize();
    return out;
}

SubsetGraph build_ds_default(int n, std::uint64_t cap) {
    if (n % 2 == 0) throw parameter_error("Ds(n) default needs odd n");
    return build_ds(n, (n - 1) / 2, cap);
}

Graph tensor_product(const Graph& g, const Graph& h, std::uint64_t cap) {
    std::uint64_t nv = static_cast<std::uint64_t>(g.vertex_count()) * h.vertex_count();
    if (nv > cap) throw capacity_error("tensor product above cap");
    Graph out(nv);
    const std::size_t hn = h.vertex_count();
    for (auto [gu, gv] : g.edges())
        for (auto [hu, hv] : h.edges()) {
            out.add_edge(static_cast<Vertex>(gu * hn + hu), static_cast<Vertex>(gv * hn + hv));
            out.add_edge(static_cast<Vertex>(gu * hn + hv), static_cast<Vertex>(gv * hn + hu));
        }
    out.finalize();
    return out;
}

G4IsomorphismReport check_g4_isomorphism(int n, std::uint64_t cap) {
    if (n % 2 == 0) throw parameter_error("check_g4_isomorphism needs odd n");
    G4IsomorphismReport rep;

    PegsetGraph g4 = build_g4(n, cap);
    SubsetGraph ds = build_ds_default(n, cap);
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    k4.finalize();
    Graph prod = tensor_product(ds.graph, k4, cap);

    rep.vertex_counts_match = g4.graph.vertex_count() == prod.vertex_count() &&
                              prod.vertex_count() == 4 * ds.graph.vertex_count();

    // pegset (peg, disk mask) -> product vertex (ds index of mask) * 4 + peg
    std::vector<Vertex> ds_index_of_mask;
    {
        std::vector<std::pair<std::uint64_t, Vertex>> pairs;
        for (Vertex i = 0; i < ds.labels.size(); ++i) pairs.emplace_back(ds.labels[i], i);
        std::sort(pairs.begin(), pairs.end());
        auto lookup = [&](std::uint64_t mask) {
            auto it = std::lower_bound(pairs.begin(), pairs.end(),
                                       std::make_pair(mask, Vertex{0}));
            return it->second;
        };
        ds_index_of_mask.resize(g4.labels.size());
        for (Vertex i = 0; i < g4.labels.size(); ++i) {
            std::uint64_t mask = 0;
            for (int d = 0; d < n; ++d)
                if (g4.labels[i].rho[d] != Pegset::kUnfrozen) mask |= (1ull << d);
            ds_index_of_mask[i] = lookup(mask);
        }
    }
    auto to_prod = [&](Vertex g4v) {
        int peg = g4.labels[g4v].frozen_pegs()[0];
        return static_cast<Vertex>(ds_index_of_mask[g4v] * 4 + peg);
    };

    for (Vertex i = 0; i < g4.graph.vertex_count(); ++i) {
        for (Vertex j = i + 1; j < g4.graph.vertex_count(); ++j) {
            bool in_g4 = g4.graph.has_edge(i, j);
            bool in_prod = prod.has_edge(to_prod(i), to_prod(j));
            if (in_g4 == in_prod) ++rep.agreeing_pairs;
            else rep.disagreements.emplace_back(i, j);
        }
    }

    rep.agree_on_nonempty = true;
    for (auto [i, j] : rep.disagreements) {
        bool i_empty = g4.labels[i].unfrozen_disks().size() == static_cast<std::size_t>(n);
        bool j_empty = g4.labels[j].unfrozen_disks().size() == static_cast<std::size_t>(n);
        if (!(i_empty && j_empty)) rep.agree_on_nonempty = false;
    }
    return rep;
}

std::vector<std::uint64_t> shadow(const std::vector<std::uint64_t>& family, int l) {
    std::set<std::uint64_t> out;
    for (std::uint64_t f : family) {
        int k = std::popcount(f);
        if (l >= k) throw parameter_error("shadow needs l < k for every member");
        // all l-subsets of f
        std::vector<int> bits;
        for (int b = 0; b < 64; ++b)
            if (f & (1ull << b)) bits.push_back(b);
        std::vector<int> idx(l);
        for (int i = 0; i < l; ++i) idx[i] = i;
        if (l == 0) { out.insert(0); continue; }
        for (;;) {
            std::uint64_t m = 0;
            for (int i : idx) m |= (1ull << bits[i]);
            out.insert(m);
            int i = l - 1;
            while (i >= 0 && idx[i] == k - l + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

KruskalKatonaCheck kk_check(const std::vector<std::uint64_t>& family, int k, int l) {
    if (l < 1 || l >= k) throw parameter_error("kk_check needs 1 <= l < k");
    for (std::uint64_t f : family)
        if (std::popcount(f) != k) throw parameter_error("kk_check: family is not k-uniform");
    std::set<std::uint64_t> dedup(family.begin(), family.end());

    KruskalKatonaCheck out;
    int m = k;
    while (m + 1 <= 63 && binomial(m + 1, k) <= dedup.size()) ++m;
    out.m = m;
    out.bound = binomial(m, l);
    out.shadow_size = shadow({dedup.begin(), dedup.end()}, l).size();
    out.ok = out.shadow_size >= out.bound;
    return out;
}

Rational central_mass_fraction(int n, double beta) {
    if (n < 1 || n > 63 || n % 2 == 0)
        throw parameter_error("central_mass_fraction needs odd n <= 63");
    if (!(beta > 0.5 && beta < 1.0))
        throw parameter_error("central_mass_fraction needs 1/2 < beta < 1");
    double eps = 1.0 / (2.0 * std::sqrt(1.0 - beta));
    int k_lo = std::max(0, static_cast<int>(std::ceil(n / 2.0 - eps * std::sqrt(n))));
    int k_hi = (n - 1) / 2;
    std::uint64_t num = 0;
    for (int k = k_lo; k <= k_hi; ++k) num += binomial(n, k);
    std::uint64_t den = 1ull << (n - 1);
    // reduce via gcd before the int64 Rational sees the values
    std::uint64_t g = std::gcd(num, den);
    return Rational(static_cast<std::int64_t>(num / g), static_cast<std::int64_t>(den / g));
}

SliceCrossEdge slice_cross_edge(const std::vector<std::uint64_t>& a_k,
                                const std::vector<std::uint64_t>& a_l, int n, int k, int l,
                                std::uint64_t seed) {
    for (std::uint64_t m : a_k)
        if (std::popcount(m) != k) throw parameter_error("slice_cross_edge: A_k not k-uniform");
    for (std::uint64_t m : a_l)
        if (std::popcount(m) != l) throw parameter_error("slice_cross_edge: A_l not l-uniform");
    // strict majority densities required
    if (2 * a_k.size() <= binomial(n, k) || 2 * a_l.size() <= binomial(n, l))
        throw parameter_error("slice_cross_edge needs densities > 1/2 of each slice");

    SliceCrossEdge out;
    std::mt19937_64 rng(seed);
    const std::uint64_t trials = 4096;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t a = a_k[rng() % a_k.size()];
        std::uint64_t b = a_l[rng() % a_l.size()];
        if ((a & b) == 0) {
            out.found = true;
            out.from = a;
            out.to = b;
            return out;
        }
    }
    for (std::uint64_t a : a_k)
        for (std::uint64_t b : a_l)
            if ((a & b) == 0) {
                out.found = true;
                out.from = a;
                out.to = b;
                return out;
            }
    return out;
}

} // namespace hanoi
