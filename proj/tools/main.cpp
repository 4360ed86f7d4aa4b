#include "legal/checks.hpp"
#include "legal/cubicgen.hpp"
#include "legal/families.hpp"
#include "legal/io.hpp"
#include "legal/iso.hpp"
#include "legal/random_lab.hpp"
#include "legal/search.hpp"
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

using namespace legal;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

GraphFile load_graph(const std::string& path) { return parse_graph_file(slurp(path)); }

EmbeddedGraph load_embedded(const std::string& path) {
    GraphFile gf = load_graph(path);
    if (!gf.emb) throw std::invalid_argument(path + ": no rotation system (rot lines required)");
    return *gf.emb;
}

std::vector<int> parse_ints(const std::string& s) {
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

Bitset parse_set(const std::string& s, int n) {
    Bitset b(n);
    for (int v : parse_ints(s)) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        b.set(v);
    }
    return b;
}

FamilyBundle make_family(const std::string& name, const std::vector<int>& p) {
    auto want = [&](size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family " + name + " takes " + std::to_string(k) +
                                        " integer parameter(s)");
    };
    if (name == "cube") { want(0); return hypercube(3); }
    if (name == "hypercube") { want(1); return hypercube(p[0]); }
    if (name == "wagner") { want(0); return wagner(); }
    if (name == "example-2-3") { want(0); return example_2_3(); }
    if (name == "icosahedron") { want(0); return icosahedron(); }
    if (name == "cell24") { want(0); return cell24(); }
    if (name == "cell600") { want(0); return cell600(); }
    if (name == "brinkmann") { want(0); return brinkmann(); }
    if (name == "dual-lobell") { want(1); return dual_lobell(p[0]); }
    if (name == "bipartite-cone") { want(2); return bipartite_cone(p[0], p[1]); }
    if (name == "tutte") { want(0); return tutte(); }
    if (name == "tbws") { want(0); return tbws_example(); }
    if (name == "house") { want(0); return house(); }
    if (name == "prism") { want(0); return triangular_prism(); }
    if (name == "antiprism") { want(1); return antiprism(p[0]); }
    if (name == "blowup") {
        if (p.size() < 2) throw std::invalid_argument("family blowup takes d n [offsets...]");
        return blowup_cube(p[0], p[1], std::vector<int>(p.begin() + 2, p.end()));
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

struct Ctx {
    bool as_json = false;
    void emit(const json& j, const std::string& text) const {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

int cmd_family(const Ctx& ctx, const std::string& name, const std::vector<int>& params,
               const std::string& dir) {
    FamilyBundle fb = make_family(name, params);
    std::vector<std::string> files;
    std::string gpath = dir + "/" + fb.name + ".graph";
    spit(gpath, fb.emb ? write_embedded(*fb.emb) : write_graph(fb.g));
    files.push_back(gpath);
    if (fb.sys) {
        std::string spath = dir + "/" + fb.name + ".system";
        spit(spath, write_system(*fb.sys, fb.start));
        files.push_back(spath);
    }
    json j{{"name", fb.name}, {"n", fb.g.n},       {"edges", fb.g.edge_count()},
           {"files", files},  {"note", fb.note},   {"embedded", (bool)fb.emb},
           {"system", (bool)fb.sys}};
    std::ostringstream os;
    os << fb.name << ": n=" << fb.g.n << " edges=" << fb.g.edge_count() << "\n";
    for (auto& f : files) os << "wrote " << f << "\n";
    ctx.emit(j, os.str());
    return 0;
}

int cmd_verify(const Ctx& ctx, const std::string& gpath, const std::string& spath,
               const std::string& state_arg, bool exhaustive, int threads, int rank_cap,
               bool override_cap, const std::string& cert_out) {
    GraphFile gf = load_graph(gpath);
    SystemFile sf = parse_system(slurp(spath));
    std::optional<Bitset> start = sf.start;
    if (!state_arg.empty()) start = parse_set(state_arg, gf.g.n);
    if (!start) throw std::invalid_argument("no start state: add a 'state' line or pass --state");
    OrbitOptions opts;
    opts.exhaustive = exhaustive;
    opts.threads = threads;
    opts.rank_cap = rank_cap;
    opts.override_cap = override_cap;
    OrbitReport rep = verify_legal_orbit(gf.g, sf.sys, *start, opts);
    std::string cert = certificate_json(gf.g, sf.sys, *start, rep);
    if (!cert_out.empty()) spit(cert_out, cert);
    std::ostringstream os;
    os << "verdict: " << (rep.legal ? "legal" : "illegal") << " rank=" << rep.rank
       << " orbit=" << rep.orbit_size;
    if (rep.witness) os << " witness={" << [&] {
        std::string s;
        for (int v : rep.witness->to_vector()) s += (s.empty() ? "" : ",") + std::to_string(v);
        return s;
    }() << "}";
    os << "\n";
    ctx.emit(json::parse(cert), os.str());
    return 0;
}

int cmd_search_state(const Ctx& ctx, const std::string& gpath, int threshold, bool strong) {
    GraphFile gf = load_graph(gpath);
    auto s = exists_legal_state(gf.g, threshold, strong);
    json j{{"verdict", s ? "state" : "none"}, {"strong", strong}};
    std::ostringstream os;
    if (s) {
        j["state"] = s->to_vector();
        os << "state: " << s->to_string() << "\n";
    } else {
        os << "none (certified: no " << (strong ? "strongly legal" : "legal") << " state)\n";
    }
    ctx.emit(j, os.str());
    return 0;
}

int cmd_search_system(const Ctx& ctx, const std::string& gpath, bool colorings, int threshold,
                      int max_colors, uint64_t budget, uint64_t seed) {
    GraphFile gf = load_graph(gpath);
    SystemSearchOptions opts;
    opts.mode = colorings ? SearchMode::ColoringDriven : SearchMode::Exhaustive;
    opts.threshold = threshold;
    opts.max_colors = max_colors;
    opts.partition_budget = budget;
    opts.sample_seed = seed;
    SystemSearchResult r = search_partition_system(gf.g, opts);
    const char* verdicts[] = {"found", "none", "inconclusive"};
    json j{{"verdict", verdicts[(int)r.status]}, {"partitions_tested", r.partitions_tested}};
    std::ostringstream os;
    os << "verdict: " << verdicts[(int)r.status] << " (" << r.partitions_tested
       << " partitions tested)\n";
    if (r.status == SystemSearchResult::Found) {
        auto rep = verify_legal_orbit(gf.g, r.sys, r.start);
        j["rank"] = rep.rank;
        j["orbit_size"] = rep.orbit_size;
        j["start"] = r.start.to_vector();
        auto& cls = j["classes"] = json::array();
        for (auto& c : r.classes) cls.push_back(c.to_vector());
        os << "classes:";
        for (auto& c : r.classes) os << " " << c.to_string();
        os << "\nstart: " << r.start.to_string() << "\nrank=" << rep.rank
           << " orbit=" << rep.orbit_size << " legal=" << rep.legal << "\n";
        os << write_system(r.sys, r.start);
    }
    ctx.emit(j, os.str());
    return 0;
}

int cmd_curvature(const Ctx& ctx, const std::string& gpath, int n) {
    GraphFile gf = load_graph(gpath);
    Rat k = curvature(gf.g, n);
    json j{{"curvature", k.to_string()}, {"num", k.num}, {"den", k.den}, {"n", n}};
    ctx.emit(j, k.to_string() + "\n");
    return 0;
}

int cmd_vf(const Ctx& ctx, const std::string& gpath, const std::string& out) {
    VFGraph vf = vf_graph(load_embedded(gpath));
    spit(out, write_embedded(vf.emb));
    json j{{"nv", vf.nv}, {"nf", vf.nf}, {"n", vf.g.n},
           {"edges", vf.g.edge_count()}, {"file", out}};
    std::ostringstream os;
    os << "vf: vertices=" << vf.nv << " faces=" << vf.nf << " n=" << vf.g.n
       << " edges=" << vf.g.edge_count() << "\nwrote " << out << "\n";
    ctx.emit(j, os.str());
    return 0;
}

int cmd_hamilton(const Ctx& ctx, const std::string& gpath, uint64_t budget) {
    GraphFile gf = load_graph(gpath);
    HamiltonResult r = find_hamiltonian_cycle(gf.g, budget);
    if (r.status == HamiltonResult::Budget)
        throw std::length_error("hamiltonicity search exceeded node budget");
    json j{{"verdict", r.status == HamiltonResult::Found ? "cycle" : "none"},
           {"nodes", r.nodes}};
    std::ostringstream os;
    if (r.status == HamiltonResult::Found) {
        j["cycle"] = r.cycle;
        os << "cycle:";
        for (int v : r.cycle) os << " " << v;
        os << "\n";
    } else {
        os << "none (certified: not hamiltonian, " << r.nodes << " nodes)\n";
    }
    ctx.emit(j, os.str());
    return 0;
}

int cmd_vf_bridge(const Ctx& ctx, const std::string& gpath, const std::string& to_state,
                  const std::string& to_cycle) {
    EmbeddedGraph e = load_embedded(gpath);
    if (to_state.empty() == to_cycle.empty())
        throw std::invalid_argument("pass exactly one of --to-state / --to-cycle");
    if (!to_state.empty()) {
        Bitset s = hamilton_to_state(e, parse_ints(to_state));
        json j{{"state", s.to_vector()}};
        ctx.emit(j, "state: " + s.to_string() + "\n");
    } else {
        VFGraph vf = vf_graph(e);
        auto cyc = state_to_hamilton(e, parse_set(to_cycle, vf.g.n));
        json j{{"cycle", cyc}};
        std::ostringstream os;
        os << "cycle:";
        for (int v : cyc) os << " " << v;
        os << "\n";
        ctx.emit(j, os.str());
    }
    return 0;
}

json verdict_json(const ReflectionVerdict& v, const std::string& name) {
    json j{{"check", name}, {"pass", v.pass()}};
    auto& cs = j["conditions"] = json::array();
    for (auto& c : v.conditions)
        cs.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return j;
}

std::string verdict_text(const ReflectionVerdict& v, const std::string& name) {
    std::ostringstream os;
    os << name << ": " << (v.pass() ? "pass" : "fail") << "\n";
    for (auto& c : v.conditions) {
        os << "  " << c.name << ": " << (c.pass ? "pass" : "fail");
        if (!c.witness.empty()) {
            os << " witness:";
            for (int x : c.witness) os << " " << x;
        }
        os << "\n";
    }
    return os.str();
}

int cmd_check(const Ctx& ctx, const std::string& gpath, bool pogorelov, bool cusped, bool relhyp,
              const std::vector<std::string>& tbws) {
    int picked = (int)pogorelov + (int)cusped + (int)relhyp + (int)!tbws.empty();
    if (picked != 1)
        throw std::invalid_argument("pass exactly one of --pogorelov/--cusped/--relhyp/--tbws");
    GraphFile gf = load_graph(gpath);
    if (pogorelov || cusped) {
        if (!gf.emb) throw std::invalid_argument(gpath + ": check needs a rotation system");
        ReflectionVerdict v = pogorelov ? pogorelov_check(*gf.emb) : cusped_check(*gf.emb);
        std::string name = pogorelov ? "pogorelov" : "cusped";
        ctx.emit(verdict_json(v, name), verdict_text(v, name));
        return 0;
    }
    if (relhyp) {
        std::vector<int> w;
        bool ok = relhyp_quads_check(gf.g, &w);
        json j{{"check", "relhyp"}, {"pass", ok}, {"witness", w}};
        std::ostringstream os;
        os << "relhyp: " << (ok ? "pass" : "fail");
        for (int x : w) os << " " << x;
        os << "\n";
        ctx.emit(j, os.str());
        return 0;
    }
    if (tbws.size() != 4) throw std::invalid_argument("--tbws takes 4 vertex lists");
    TbwsResult r = tbws_check(gf.g, parse_set(tbws[0], gf.g.n), parse_set(tbws[1], gf.g.n),
                              parse_set(tbws[2], gf.g.n), parse_set(tbws[3], gf.g.n));
    json j{{"check", "tbws"}, {"pass", r.ok}, {"reason", r.reason}};
    std::ostringstream os;
    os << "tbws: " << (r.ok ? "pass" : "fail");
    if (!r.reason.empty()) os << " (" << r.reason << ")";
    os << "\n";
    if (r.ok) {
        auto rep = verify_legal_orbit(gf.g, r.sys, r.start);
        j["rank"] = rep.rank;
        j["orbit_size"] = rep.orbit_size;
        j["verdict"] = rep.legal ? "legal" : "illegal";
        os << "emitted system: rank=" << rep.rank << " orbit=" << rep.orbit_size
           << " legal=" << rep.legal << "\n";
    }
    ctx.emit(j, os.str());
    return 0;
}

int cmd_reduce_cone(const Ctx& ctx, const std::string& gpath, const std::string& spath, int v,
                    const std::string& out_graph, const std::string& out_system) {
    GraphFile gf = load_graph(gpath);
    std::optional<MoveSystem> sys;
    std::optional<Bitset> start;
    if (!spath.empty()) {
        SystemFile sf = parse_system(slurp(spath));
        sys = sf.sys;
        start = sf.start;
    }
    ConeReduction red = restrict_cone_system(gf.g, v, sys, start);
    std::string gtext = write_graph(red.g);
    json j{{"n", red.g.n}, {"edges", red.g.edge_count()}, {"graph", gtext}};
    std::ostringstream os;
    if (!out_graph.empty()) {
        spit(out_graph, gtext);
        os << "wrote " << out_graph << "\n";
    } else {
        os << gtext;
    }
    if (red.sys) {
        std::string stext = write_system(*red.sys, red.start);
        j["system"] = stext;
        if (!out_system.empty()) {
            spit(out_system, stext);
            os << "wrote " << out_system << "\n";
        } else {
            os << stext;
        }
    }
    ctx.emit(j, os.str());
    return 0;
}

int cmd_montecarlo(const std::string& model, const std::vector<int>& ns, int n2,
                   const std::vector<double>& ps, int trials, uint64_t seed, int threads) {
    if (model != "gnp" && model != "bip")
        throw std::invalid_argument("--model must be gnp or bip");
    std::cout << experiment_csv_header();
    for (int n : ns)
        for (double p : ps) {
            ExperimentRow row = monte_carlo(model, n, n2 > 0 ? n2 : n, p, trials, seed, threads);
            std::cout << experiment_csv_row(row);
        }
    return 0;
}

// The reproduction targets: each computes the verdict-relevant fields from
// scratch. Golden comparison covers rank, orbit_size, verdict, witness only.
json repro_compute(const std::string& id) {
    auto from_bundle = [](const FamilyBundle& fb) {
        if (!fb.sys || !fb.start) throw std::invalid_argument("family has no bundled system");
        auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
        json j{{"rank", rep.rank},
               {"orbit_size", rep.orbit_size},
               {"verdict", rep.legal ? "legal" : "illegal"}};
        if (rep.witness)
            j["witness"] = {{"state", rep.witness->to_vector()}, {"coeffs", rep.witness_coeffs}};
        return j;
    };
    if (id == "example-2-3") return from_bundle(example_2_3());
    if (id == "cube") return from_bundle(hypercube(3));
    if (id == "wagner") return from_bundle(wagner());
    if (id == "cell24") return from_bundle(cell24());
    if (id == "icosahedron") return from_bundle(icosahedron());
    if (id == "dual-lobell-6") return from_bundle(dual_lobell(6));
    if (id == "lambda-6-5") return from_bundle(bipartite_cone(6, 5));
    if (id == "blowup-3-7") return from_bundle(blowup_cube(3, 7));
    if (id == "tbws") return from_bundle(tbws_example());
    if (id == "lambda-5-3") {
        bool none = certify_no_legal_system(bipartite_cone(5, 3).g);
        return json{{"verdict", none ? "none" : "unknown"}};
    }
    throw std::invalid_argument("unknown repro id '" + id + "'");
}

int cmd_repro(const Ctx& ctx, const std::string& id, const std::string& goldens,
              bool write_golden) {
    json actual = repro_compute(id);
    std::string path = goldens + "/" + id + ".json";
    if (write_golden) {
        spit(path, actual.dump(2) + "\n");
        ctx.emit(json{{"id", id}, {"wrote", path}}, "wrote " + path + "\n");
        return 0;
    }
    json golden = json::parse(slurp(path));
    json diffs = json::array();
    for (const char* f : {"rank", "orbit_size", "verdict", "witness"}) {
        json a = actual.contains(f) ? actual[f] : json();
        json g = golden.contains(f) ? golden[f] : json();
        if (a != g) diffs.push_back({{"field", f}, {"actual", a}, {"golden", g}});
    }
    bool match = diffs.empty();
    json j{{"id", id}, {"match", match}, {"actual", actual}, {"diffs", diffs}};
    std::ostringstream os;
    os << "repro " << id << ": " << (match ? "match" : "MISMATCH") << "\n";
    for (auto& d : diffs)
        os << "  " << d["field"].get<std::string>() << ": actual=" << d["actual"].dump()
           << " golden=" << d["golden"].dump() << "\n";
    ctx.emit(j, os.str());
    return match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"legal systems on finite graphs: construction, verification, search"};
    app.require_subcommand(1);
    Ctx ctx;

    // family
    auto* fam = app.add_subcommand("family", "emit a named graph family");
    std::string fam_name, fam_dir = ".";
    std::vector<int> fam_params;
    fam->add_option("name", fam_name)->required();
    fam->add_option("params", fam_params);
    fam->add_option("-o,--out", fam_dir, "output directory");
    fam->add_flag("--json", ctx.as_json);

    // verify
    auto* ver = app.add_subcommand("verify", "verify a move system's orbit");
    std::string ver_g, ver_s, ver_state, ver_cert;
    bool ver_exh = false, ver_ovr = false;
    int ver_threads = 1, ver_cap = 30;
    ver->add_option("-g,--graph", ver_g)->required();
    ver->add_option("-s,--system", ver_s)->required();
    ver->add_option("--state", ver_state, "override start state (comma list)");
    ver->add_flag("--exhaustive", ver_exh, "scan the whole orbit past the first violation");
    ver->add_option("--threads", ver_threads);
    ver->add_option("--rank-cap", ver_cap);
    ver->add_flag("--override-cap", ver_ovr);
    ver->add_option("-o,--cert", ver_cert, "write certificate JSON here");
    ver->add_flag("--json", ctx.as_json);

    // search-state
    auto* sst = app.add_subcommand("search-state", "legal state or certified none");
    std::string sst_g;
    int sst_threshold = 28;
    bool sst_strong = false;
    sst->add_option("-g,--graph", sst_g)->required();
    sst->add_option("--threshold", sst_threshold, "max n for the exhaustive sweep");
    sst->add_flag("--strong", sst_strong, "search strongly legal states");
    sst->add_flag("--json", ctx.as_json);

    // search-system
    auto* ssy = app.add_subcommand("search-system", "search partition move systems");
    std::string ssy_g;
    bool ssy_exh = false, ssy_col = false;
    int ssy_threshold = 24, ssy_colors = 8;
    uint64_t ssy_budget = 1000000, ssy_seed = 1;
    ssy->add_option("-g,--graph", ssy_g)->required();
    ssy->add_flag("--exhaustive", ssy_exh);
    ssy->add_flag("--colorings", ssy_col);
    ssy->add_option("--threshold", ssy_threshold);
    ssy->add_option("--max-colors", ssy_colors);
    ssy->add_option("--budget", ssy_budget);
    ssy->add_option("--seed", ssy_seed, "seed for legal-state sampling above the threshold");
    ssy->add_flag("--json", ctx.as_json);

    // curvature
    auto* cur = app.add_subcommand("curvature", "exact rational curvature");
    std::string cur_g;
    int cur_n = -1;
    cur->add_option("-g,--graph", cur_g)->required();
    cur->add_option("-n", cur_n, "truncation order (-1 = full)");
    cur->add_flag("--json", ctx.as_json);

    // vf
    auto* vfc = app.add_subcommand("vf", "vertex-face incidence graph of an embedded graph");
    std::string vf_g, vf_out = "vf.graph";
    vfc->add_option("-g,--graph", vf_g)->required();
    vfc->add_option("-o,--out", vf_out);
    vfc->add_flag("--json", ctx.as_json);

    // hamilton
    auto* ham = app.add_subcommand("hamilton", "exact hamiltonicity search");
    std::string ham_g;
    uint64_t ham_budget = 1000000000ull;
    ham->add_option("-g,--graph", ham_g)->required();
    ham->add_option("--budget", ham_budget, "node budget (exceeding it refuses, exit 2)");
    ham->add_flag("--json", ctx.as_json);

    // vf-bridge
    auto* vb = app.add_subcommand("vf-bridge", "hamiltonian cycle <-> strongly legal VF state");
    std::string vb_g, vb_state, vb_cycle;
    vb->add_option("-g,--graph", vb_g)->required();
    vb->add_option("--to-state", vb_state, "cycle as a vertex list");
    vb->add_option("--to-cycle", vb_cycle, "VF state as a vertex list");
    vb->add_flag("--json", ctx.as_json);

    // check
    auto* chk = app.add_subcommand("check", "reflection-group criteria");
    std::string chk_g;
    bool chk_pog = false, chk_cus = false, chk_rel = false;
    std::vector<std::string> chk_tbws;
    chk->add_option("-g,--graph", chk_g)->required();
    chk->add_flag("--pogorelov", chk_pog);
    chk->add_flag("--cusped", chk_cus);
    chk->add_flag("--relhyp", chk_rel);
    chk->add_option("--tbws", chk_tbws, "A1 A2 B1 B2 as vertex lists")->expected(4);
    chk->add_flag("--json", ctx.as_json);

    // reduce-cone
    auto* rc = app.add_subcommand("reduce-cone", "remove a cone vertex over a 4-cycle");
    std::string rc_g, rc_s, rc_og, rc_os;
    int rc_v = -1;
    rc->add_option("-g,--graph", rc_g)->required();
    rc->add_option("-s,--system", rc_s);
    rc->add_option("-v,--vertex", rc_v)->required();
    rc->add_option("--out-graph", rc_og);
    rc->add_option("--out-system", rc_os);
    rc->add_flag("--json", ctx.as_json);

    // montecarlo
    auto* mc = app.add_subcommand("montecarlo", "random-graph pipeline experiments (CSV)");
    std::string mc_model;
    std::vector<int> mc_n;
    std::vector<double> mc_p;
    int mc_n2 = 0, mc_trials = 100, mc_threads = 1;
    uint64_t mc_seed = 0;
    bool mc_has_seed = false;
    mc->add_option("--model", mc_model)->required();
    mc->add_option("--n", mc_n)->required();
    mc->add_option("--n2", mc_n2, "second side size for bip (default: --n)");
    mc->add_option("--p", mc_p)->required();
    mc->add_option("--trials", mc_trials);
    mc->add_option("--seed", mc_seed)->each([&](const std::string&) { mc_has_seed = true; });
    mc->add_option("--threads", mc_threads);

    // repro
    auto* rp = app.add_subcommand("repro", "recompute a named example and diff its golden");
    std::string rp_id, rp_dir = "goldens";
    bool rp_write = false;
    rp->add_option("id", rp_id)->required();
    rp->add_option("--goldens", rp_dir);
    rp->add_flag("--write-golden", rp_write, "regenerate the golden file");
    rp->add_flag("--json", ctx.as_json);

    try {
        app.parse(argc, argv);
        if (fam->parsed()) return cmd_family(ctx, fam_name, fam_params, fam_dir);
        if (ver->parsed())
            return cmd_verify(ctx, ver_g, ver_s, ver_state, ver_exh, ver_threads, ver_cap,
                              ver_ovr, ver_cert);
        if (sst->parsed()) return cmd_search_state(ctx, sst_g, sst_threshold, sst_strong);
        if (ssy->parsed()) {
            if (ssy_exh && ssy_col)
                throw std::invalid_argument("--exhaustive and --colorings are exclusive");
            return cmd_search_system(ctx, ssy_g, ssy_col, ssy_threshold, ssy_colors, ssy_budget,
                                     ssy_seed);
        }
        if (cur->parsed()) return cmd_curvature(ctx, cur_g, cur_n);
        if (vfc->parsed()) return cmd_vf(ctx, vf_g, vf_out);
        if (ham->parsed()) return cmd_hamilton(ctx, ham_g, ham_budget);
        if (vb->parsed()) return cmd_vf_bridge(ctx, vb_g, vb_state, vb_cycle);
        if (chk->parsed()) return cmd_check(ctx, chk_g, chk_pog, chk_cus, chk_rel, chk_tbws);
        if (rc->parsed()) return cmd_reduce_cone(ctx, rc_g, rc_s, rc_v, rc_og, rc_os);
        if (mc->parsed()) {
            if (!mc_has_seed)
                throw std::invalid_argument("montecarlo requires an explicit --seed");
            return cmd_montecarlo(mc_model, mc_n, mc_n2, mc_p, mc_trials, mc_seed, mc_threads);
        }
        if (rp->parsed()) return cmd_repro(ctx, rp_id, rp_dir, rp_write);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1; // normalize usage errors to 1; --help stays 0
    } catch (const std::length_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
