// hanoiw: command-line workbench for the Hanoi / Sierpinski / pegset graph
// families, their separators, decompositions and fairness analyses.
//
// Exit codes: 0 ok, 1 verification failure, 2 parameter error, 3 cap exceeded.

#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hanoi/acceptance.hpp"
#include "hanoi/decomposition.hpp"
#include "hanoi/fractal.hpp"
#include "hanoi/pegsets.hpp"
#include "hanoi/separators.hpp"
#include "hanoi/setfamilies.hpp"
#include "hanoi/state_space.hpp"

namespace {

using namespace hanoi;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParameter = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parameter_error("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot open for writing: " + path);
    out << text;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

// Every command can record what it did and what it produced.
struct ManifestSink {
    std::string path; // empty = disabled
    nlohmann::json doc;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void set_command(const std::string& cmd, const nlohmann::json& params) {
        doc["command"] = cmd;
        doc["parameters"] = params;
    }
    void set_seed(std::uint64_t seed) { doc["seed"] = seed; }
    void set_caps(const nlohmann::json& caps) { doc["caps"] = caps; }
    void add_output(const std::string& file, const std::string& contents) {
        doc["outputs"].push_back({{"path", file}, {"fnv1a64", hex64(fnv1a64(contents))}});
    }
    ~ManifestSink() {
        if (path.empty()) return;
        doc["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        if (!doc.contains("outputs")) doc["outputs"] = nlohmann::json::array();
        std::ofstream out(path, std::ios::binary);
        if (out) out << doc.dump(2) << "\n";
    }
};

std::string rational_csv(const Rational& r) {
    std::ostringstream os;
    os << r.num << "," << r.den << "," << r.to_double();
    return os.str();
}

// ---- generate ---------------------------------------------------------------

int cmd_generate(const std::string& family, int pegs, int disks, int n, int k,
                 const std::string& left, const std::string& right, std::uint64_t cap,
                 const std::string& out_path, ManifestSink& manifest) {
    Graph g;
    std::string labels;     // optional sidecar contents
    std::string label_path; // sidecar file

    if (family == "hanoi") {
        g = build_hanoi(pegs, disks, cap);
        labels = hanoi_label_csv(pegs, disks, cap);
        label_path = out_path + ".labels.csv";
    } else if (family == "sierpinski") {
        SierpinskiGraph s = build_sierpinski(n, cap);
        g = s.graph;
        std::ostringstream os;
        os << "id,address\n";
        for (Vertex v = 0; v < s.address.size(); ++v) os << (v + 1) << "," << s.address[v] << "\n";
        labels = os.str();
        label_path = out_path + ".labels.csv";
    } else if (family == "ipn") {
        PegsetGraph ipn = build_intersection_graph(pegs, disks);
        g = ipn.graph;
        nlohmann::json j = nlohmann::json::array();
        for (Vertex v = 0; v < ipn.labels.size(); ++v)
            j.push_back({{"id", v + 1}, {"pegset", nlohmann::json::parse(ipn.labels[v].to_json())}});
        labels = j.dump(2);
        label_path = out_path + ".labels.json";
    } else if (family == "g4") {
        PegsetGraph g4 = build_g4(n, cap);
        g = g4.graph;
        nlohmann::json j = nlohmann::json::array();
        for (Vertex v = 0; v < g4.labels.size(); ++v)
            j.push_back({{"id", v + 1}, {"pegset", nlohmann::json::parse(g4.labels[v].to_json())}});
        labels = j.dump(2);
        label_path = out_path + ".labels.json";
    } else if (family == "kneser") {
        SubsetGraph kn = build_kneser(n, k, cap);
        g = kn.graph;
        std::ostringstream os;
        os << "id,subset\n";
        for (Vertex v = 0; v < kn.labels.size(); ++v) {
            os << (v + 1) << ",";
            bool first = true;
            for (int b = 0; b < n; ++b)
                if (kn.labels[v] & (1ull << b)) {
                    if (!first) os << ";";
                    os << (b + 1);
                    first = false;
                }
            os << "\n";
        }
        labels = os.str();
        label_path = out_path + ".labels.csv";
    } else if (family == "ds") {
        SubsetGraph ds = build_ds_default(n, cap);
        g = ds.graph;
        std::ostringstream os;
        os << "id,subset\n";
        for (Vertex v = 0; v < ds.labels.size(); ++v) {
            os << (v + 1) << ",";
            bool first = true;
            for (int b = 0; b < n; ++b)
                if (ds.labels[v] & (1ull << b)) {
                    if (!first) os << ";";
                    os << (b + 1);
                    first = false;
                }
            os << "\n";
        }
        labels = os.str();
        label_path = out_path + ".labels.csv";
    } else if (family == "tensor") {
        if (left.empty() || right.empty())
            throw parameter_error("tensor needs --left and --right edge-list files");
        g = tensor_product(read_edge_list(left).graph, read_edge_list(right).graph, cap);
    } else {
        throw parameter_error("unknown family: " + family);
    }

    std::string edge_list = to_edge_list(g, family);
    write_file(out_path, edge_list);
    manifest.add_output(out_path, edge_list);
    if (!labels.empty()) {
        write_file(label_path, labels);
        manifest.add_output(label_path, labels);
    }
    std::cout << "wrote " << out_path << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges\n";
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& kind, const std::string& graph_file,
               const std::string& witness_file, std::int64_t c_num, std::int64_t c_den) {
    Graph g = read_edge_list(graph_file).graph;

    if (kind == "decomposition") {
        std::string text = read_file(witness_file);
        TreeDecomposition td = text.rfind("s td", 0) == 0 ? TreeDecomposition::from_pace(text)
                                                          : TreeDecomposition::from_json(text);
        auto check = validate(g, td);
        if (check.ok()) {
            std::cout << "width=" << *check.width << "\n";
            return kExitOk;
        }
        for (const auto& v : check.violations) std::cout << "violation: " << v << "\n";
        return kExitVerifyFail;
    }
    if (kind == "separator") {
        nlohmann::json j = nlohmann::json::parse(read_file(witness_file));
        std::vector<Vertex> x;
        for (auto v : j.at("separator").get<std::vector<std::uint64_t>>())
            x.push_back(static_cast<Vertex>(v - 1));
        Balance c = (c_num * c_num * 2 == c_den * c_den) ? Balance::inv_sqrt2()
                                                         : Balance::ratio(c_num, c_den);
        auto check = verify_c_separator(g, x, c);
        if (check.ok()) {
            std::cout << "separator ok: sides " << check.separation->side_a.size() << " / "
                      << check.separation->side_b.size() << "\n";
            return kExitOk;
        }
        for (const auto& v : check.violations) std::cout << "violation: " << v << "\n";
        return kExitVerifyFail;
    }
    if (kind == "subdivision") {
        SubdivisionWitness w = subdivision_from_json(read_file(witness_file));
        auto rep = verify_subdivision(g, w);
        if (rep.ok) {
            std::cout << "subdivision ok\n";
            return kExitOk;
        }
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
        return kExitVerifyFail;
    }
    if (kind == "minor") {
        MinorModel m = minor_model_from_json(g, read_file(witness_file));
        auto rep = verify_minor_model(m);
        if (rep.ok) {
            std::cout << "minor model ok: " << m.pattern.vertex_count() << " branch sets\n";
            return kExitOk;
        }
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
        return kExitVerifyFail;
    }
    throw parameter_error("unknown verify kind: " + kind +
                          " (expected decomposition|separator|subdivision|minor)");
}

// ---- analyze ----------------------------------------------------------------

int cmd_analyze_fairness(int pegs, int disks_lo, int disks_hi, const std::string& strategy,
                         const std::string& out_path, ManifestSink& manifest) {
    if (pegs != 3) throw parameter_error("fairness analysis covers the three-peg endgame");
    std::ostringstream os;
    os << "n,removed,probability_num,probability_den,probability\n";
    for (int n = disks_lo; n <= disks_hi; ++n) {
        Graph g = build_hanoi(3, n);
        std::vector<Vertex> x;
        if (strategy == "two-state") {
            for (auto v : two_state_removal(n)) x.push_back(static_cast<Vertex>(v));
        } else if (strategy == "three-state") {
            for (auto v : hanoi_level_separator(3, n)) x.push_back(static_cast<Vertex>(v));
        } else {
            throw parameter_error("strategy must be two-state or three-state");
        }
        auto rep = connection_probability(g, x);
        os << n << "," << x.size() << "," << rep.probability.num << "," << rep.probability.den
           << "," << rep.probability.to_double() << "\n";
    }
    std::string csv = os.str();
    if (out_path.empty()) std::cout << csv;
    else {
        write_file(out_path, csv);
        manifest.add_output(out_path, csv);
    }
    return kExitOk;
}

int cmd_analyze_diameter(const std::string& family, int pegs, const std::vector<int>& sizes,
                         int k, int threads, const std::string& out_path,
                         ManifestSink& manifest) {
    std::ostringstream os;
    os << "family,param,vertices,diameter\n";
    for (int n : sizes) {
        Graph g;
        if (family == "ipn") g = build_intersection_graph(pegs, n).graph;
        else if (family == "hanoi") g = build_hanoi(pegs, n);
        else if (family == "kneser") g = build_kneser(n, k).graph;
        else if (family == "sierpinski") g = build_sierpinski(n).graph;
        else throw parameter_error("diameter analysis family: ipn|hanoi|kneser|sierpinski");
        os << family << "," << n << "," << g.vertex_count() << "," << diameter(g, threads)
           << "\n";
    }
    std::string csv = os.str();
    if (out_path.empty()) std::cout << csv;
    else {
        write_file(out_path, csv);
        manifest.add_output(out_path, csv);
    }
    return kExitOk;
}

int cmd_analyze_separators(int pegs, int disks, const std::string& out_path,
                           ManifestSink& manifest) {
    auto tree = recursive_separator(pegs, disks);
    auto rep = verify_recursive_separator(build_hanoi(pegs, disks), tree);
    std::ostringstream os;
    os << "level,max_separator,bound\n";
    for (int lvl = 1; lvl <= disks; ++lvl) {
        std::uint64_t bound = static_cast<std::uint64_t>(pegs) * (pegs - 1) / 2;
        for (int i = 0; i < disks - lvl; ++i) bound *= (pegs - 2);
        os << lvl << "," << rep.max_separator_per_level[lvl - 1] << "," << bound << "\n";
    }
    std::string csv = os.str();
    if (out_path.empty()) std::cout << csv;
    else {
        write_file(out_path, csv);
        manifest.add_output(out_path, csv);
    }
    return rep.ok ? kExitOk : kExitVerifyFail;
}

int cmd_analyze_transitivity(int pegs, int disks) {
    PegsetGraph ipn = build_intersection_graph(pegs, disks);
    auto edges = ipn.graph.edges();
    for (int i = 0; i < disks; ++i)
        for (int j = i + 1; j < disks; ++j)
            for (auto [u, v] : edges)
                if (!ipn.graph.has_edge(ipn.id_of(swap_automorphism(ipn.labels[u], i, j)),
                                        ipn.id_of(swap_automorphism(ipn.labels[v], i, j)))) {
                    std::cout << "phi_" << i << "," << j << " is not an automorphism\n";
                    return kExitVerifyFail;
                }
    std::set<Vertex> orbit{0};
    std::vector<Vertex> frontier{0};
    while (!frontier.empty()) {
        Vertex v = frontier.back();
        frontier.pop_back();
        auto push = [&](const Pegset& ps) {
            Vertex w = ipn.id_of(ps);
            if (orbit.insert(w).second) frontier.push_back(w);
        };
        for (int i = 0; i < disks; ++i)
            for (int j = i + 1; j < disks; ++j) push(swap_automorphism(ipn.labels[v], i, j));
        for (int a = 0; a < pegs; ++a)
            for (int b = a + 1; b < pegs; ++b) {
                std::vector<int> sigma(pegs);
                for (int s = 0; s < pegs; ++s) sigma[s] = s;
                std::swap(sigma[a], sigma[b]);
                push(relabel_pegs(ipn.labels[v], sigma));
            }
    }
    std::cout << "vertices," << ipn.graph.vertex_count() << "\n";
    std::cout << "orbit," << orbit.size() << "\n";
    std::cout << "vertex_transitive," << (orbit.size() == ipn.graph.vertex_count() ? 1 : 0)
              << "\n";
    return orbit.size() == ipn.graph.vertex_count() ? kExitOk : kExitVerifyFail;
}

int cmd_analyze_kk(int trials, int max_n, std::uint64_t seed, const std::string& out_path,
                   ManifestSink& manifest) {
    std::mt19937_64 rng(seed);
    std::ostringstream os;
    os << "trial,seed,n,k,l,family_size,shadow_size,bound,ok\n";
    bool all_ok = true;
    for (int t = 0; t < trials; ++t) {
        int n = 4 + static_cast<int>(rng() % (max_n - 3));
        int k = 2 + static_cast<int>(rng() % (n - 2));
        int l = 1 + static_cast<int>(rng() % (k - 1));
        std::uint64_t want = 1 + rng() % binomial(n, k);
        std::set<std::uint64_t> fam;
        while (fam.size() < want) {
            std::uint64_t mask = 0;
            while (std::popcount(mask) != k) mask = rng() & ((1ull << n) - 1);
            fam.insert(mask);
        }
        auto check = kk_check({fam.begin(), fam.end()}, k, l);
        all_ok = all_ok && check.ok;
        os << t << "," << seed << "," << n << "," << k << "," << l << "," << fam.size() << ","
           << check.shadow_size << "," << check.bound << "," << (check.ok ? 1 : 0) << "\n";
    }
    std::string csv = os.str();
    if (out_path.empty()) std::cout << csv;
    else {
        write_file(out_path, csv);
        manifest.add_output(out_path, csv);
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hanoiw: combinatorial workbench for Hanoi-graph treewidth analyses"};
    app.require_subcommand(1);

    ManifestSink manifest;
    std::uint64_t seed = hanoi::kDefaultSeed;
    int threads = 0; // 0 = available parallelism
    app.add_option("--seed", seed, "seed for randomized routines");
    app.add_option("--threads", threads, "worker pool size (0 = available parallelism)");
    app.add_option("--manifest", manifest.path, "write a run manifest to this file");

    // generate
    auto* gen = app.add_subcommand("generate", "materialize a graph family as an edge list");
    std::string family, out_path = "graph.edgelist", left, right;
    int pegs = 3, disks = 3, nn = 5, kk = 2;
    std::uint64_t cap = hanoi::kDefaultVertexCap;
    gen->add_option("family", family, "hanoi|sierpinski|ipn|g4|kneser|ds|tensor")->required();
    gen->add_option("--pegs", pegs);
    gen->add_option("--disks", disks);
    gen->add_option("--n", nn);
    gen->add_option("--k", kk);
    gen->add_option("--left", left, "left factor edge list (tensor)");
    gen->add_option("--right", right, "right factor edge list (tensor)");
    gen->add_option("--cap", cap, "vertex materialization cap");
    gen->add_option("--out,-o", out_path);

    // verify
    auto* ver = app.add_subcommand("verify", "check a witness file against a graph");
    std::string kind, graph_file, witness_file;
    std::int64_t c_num = 2, c_den = 3;
    ver->add_option("kind", kind, "decomposition|separator|subdivision")->required();
    ver->add_option("graph", graph_file, "edge-list file")->required();
    ver->add_option("witness", witness_file, "witness file (json or pace)")->required();
    ver->add_option("--c-num", c_num, "balance numerator (separator)");
    ver->add_option("--c-den", c_den, "balance denominator (separator)");

    // analyze
    auto* ana = app.add_subcommand("analyze", "emit CSV reports");
    std::string sub, strategy = "two-state", afam = "ipn", aout, agraph;
    int alo = 3, ahi = 9, apegs = 3, ak = 2, atrials = 1000, amaxn = 12, an = 41, adisks = 5;
    double abeta = 0.75;
    std::vector<int> asizes{3, 5, 7, 9};
    ana->add_option("subcommand", sub,
                    "fairness|separators|diameter|expansion|kk|mass|transitivity")
        ->required();
    ana->add_option("--pegs", apegs);
    ana->add_option("--disks", adisks);
    ana->add_option("--from", alo);
    ana->add_option("--to", ahi);
    ana->add_option("--strategy", strategy, "two-state|three-state");
    ana->add_option("--family", afam);
    ana->add_option("--graph", agraph, "edge-list input for expansion analysis");
    ana->add_option("--sizes", asizes, "disk counts for diameter analysis");
    ana->add_option("--k", ak);
    ana->add_option("--trials", atrials);
    ana->add_option("--max-n", amaxn);
    ana->add_option("--beta", abeta);
    ana->add_option("--n", an);
    ana->add_option("--out,-o", aout);

    // decompose
    auto* dec = app.add_subcommand("decompose", "emit a tree decomposition");
    int dlevel = 5;
    std::string dformat = "json", dout = "decomposition.json", dgraph;
    dec->add_option("--n", dlevel, "Sierpinski level");
    dec->add_option("--graph", dgraph,
                    "edge-list input: exact decomposition via the subset DP (<= 22 vertices)");
    dec->add_option("--format", dformat, "json|pace");
    dec->add_option("--out,-o", dout);

    // witness search
    auto* wit = app.add_subcommand("witness", "search for an octahedron subdivision");
    int wlevel = 5;
    std::uint64_t wbudget = hanoi::kDefaultSubdivisionBudget;
    std::string wout = "witness.json", wgraph;
    wit->add_option("--level", wlevel, "Sierpinski level");
    wit->add_option("--graph", wgraph, "edge-list host instead of a Sierpinski level");
    wit->add_option("--budget", wbudget);
    wit->add_option("--out,-o", wout);

    // acceptance
    auto* acc = app.add_subcommand("acceptance", "run the acceptance battery");
    std::string suite = "primary", data_dir = "data";
    bool quick = false;
    acc->add_option("--suite", suite);
    acc->add_flag("--quick", quick, "reduced caps, subset of criteria instances");
    acc->add_option("--data-dir", data_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParameter;
    }

    try {
        if (*gen) {
            manifest.set_command("generate", {{"family", family}, {"pegs", pegs},
                                              {"disks", disks}, {"n", nn}, {"k", kk}});
            manifest.set_seed(seed);
            manifest.set_caps({{"vertex_cap", cap}});
            return cmd_generate(family, pegs, disks, nn, kk, left, right, cap, out_path, manifest);
        }
        if (*ver) {
            manifest.set_command("verify", {{"kind", kind}, {"graph", graph_file},
                                            {"witness", witness_file}});
            manifest.set_seed(seed);
            return cmd_verify(kind, graph_file, witness_file, c_num, c_den);
        }
        if (*ana) {
            manifest.set_command("analyze", {{"subcommand", sub}});
            manifest.set_seed(seed);
            if (sub == "fairness")
                return cmd_analyze_fairness(apegs, alo, ahi, strategy, aout, manifest);
            if (sub == "separators")
                return cmd_analyze_separators(apegs, adisks, aout, manifest);
            if (sub == "diameter")
                return cmd_analyze_diameter(afam, apegs, asizes, ak, threads, aout, manifest);
            if (sub == "kk") return cmd_analyze_kk(atrials, amaxn, seed, aout, manifest);
            if (sub == "mass") {
                hanoi::Rational frac = hanoi::central_mass_fraction(an, abeta);
                std::cout << "n,beta,fraction_num,fraction_den,fraction\n";
                std::cout << an << "," << abeta << "," << rational_csv(frac) << "\n";
                return kExitOk;
            }
            if (sub == "expansion") {
                if (agraph.empty())
                    throw hanoi::parameter_error("expansion analysis needs --graph FILE");
                hanoi::Graph g = hanoi::read_edge_list(agraph).graph;
                hanoi::Rational x = hanoi::vertex_expansion(g);
                std::cout << "expansion," << rational_csv(x) << "\n";
                return kExitOk;
            }
            if (sub == "transitivity") return cmd_analyze_transitivity(apegs, adisks);
            throw hanoi::parameter_error("unknown analyze subcommand: " + sub);
        }
        if (*dec) {
            hanoi::TreeDecomposition td;
            std::size_t nv;
            if (!dgraph.empty()) {
                hanoi::Graph g = hanoi::read_edge_list(dgraph).graph;
                td = hanoi::decomposition_from_order(g, hanoi::optimal_elimination_order(g));
                nv = g.vertex_count();
            } else {
                hanoi::SierpinskiGraph s = hanoi::build_sierpinski(dlevel);
                td = hanoi::sierpinski_decomposition(s);
                nv = s.graph.vertex_count();
            }
            manifest.set_command("decompose", {{"n", dlevel}, {"graph", dgraph},
                                               {"format", dformat}});
            manifest.set_seed(seed);
            std::string text = dformat == "pace" ? td.to_pace(nv) : td.to_json();
            write_file(dout, text);
            manifest.add_output(dout, text);
            std::cout << "wrote " << dout << ": " << td.nodes.size() << " bags, width "
                      << td.width() << "\n";
            return kExitOk;
        }
        if (*wit) {
            hanoi::Graph host = wgraph.empty() ? hanoi::build_sierpinski(wlevel).graph
                                               : hanoi::read_edge_list(wgraph).graph;
            manifest.set_command("witness", {{"level", wlevel}, {"budget", wbudget}});
            manifest.set_seed(seed);
            auto res = hanoi::find_octahedron_subdivision(host, wbudget);
            if (res.status == hanoi::SearchStatus::found) {
                std::string json = hanoi::subdivision_to_json(*res.witness);
                write_file(wout, json);
                manifest.add_output(wout, json);
                std::cout << "witness found after " << res.steps_used << " steps -> " << wout
                          << "\n";
                return kExitOk;
            }
            std::cout << (res.status == hanoi::SearchStatus::none ? "no witness exists\n"
                                                                  : "budget exhausted\n");
            return res.status == hanoi::SearchStatus::none ? kExitVerifyFail : kExitCapacity;
        }
        if (*acc) {
            if (suite != "primary")
                throw hanoi::parameter_error("unknown suite: " + suite);
            hanoi::AcceptanceOptions opts;
            opts.quick = quick;
            opts.data_dir = data_dir;
            opts.seed = seed;
            manifest.set_command("acceptance", {{"suite", suite}, {"quick", quick}});
            manifest.set_seed(seed);
            auto results = hanoi::run_acceptance(opts, std::cout);
            bool all = true;
            for (const auto& res : results) all = all && res.pass;
            std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
            return all ? kExitOk : kExitVerifyFail;
        }
    } catch (const hanoi::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const hanoi::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameter;
    }
    return kExitParameter;
}
