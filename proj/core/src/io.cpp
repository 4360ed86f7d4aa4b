#include "legal/io.hpp"
#include <json.hpp>
#include <sstream>

namespace legal {

namespace {

bool default_labels(const Graph& g) {
    if (g.labels.empty()) return true;
    for (int v = 0; v < g.n; ++v)
        if (g.labels[v] != std::to_string(v)) return false;
    return true;
}

} // namespace

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph " << g.n << "\n";
    if (!default_labels(g))
        for (int v = 0; v < g.n; ++v) os << "label " << v << " " << g.labels[v] << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
    return os.str();
}

std::string write_embedded(const EmbeddedGraph& e) {
    std::ostringstream os;
    os << write_graph(e.g);
    for (int v = 0; v < e.g.n; ++v) {
        os << "rot " << v;
        for (int u : e.rot[v]) os << " " << u;
        os << "\n";
    }
    return os.str();
}

std::string write_system(const MoveSystem& m, const std::optional<Bitset>& start) {
    std::ostringstream os;
    os << "system " << m.n() << "\n";
    for (int v = 0; v < m.n(); ++v) {
        os << "m " << v;
        for (int u : m.moves[v].to_vector()) os << " " << u;
        os << "\n";
    }
    if (start) {
        os << "state";
        for (int u : start->to_vector()) os << " " << u;
        os << "\n";
    }
    return os.str();
}

namespace {

// Tokenized line stream with 1-based line numbers; skips blanks and comments.
struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    explicit Lines(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        int no = 0;
        while (std::getline(is, line)) {
            ++no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::vector<std::string> tok;
            std::string t;
            while (ls >> t) tok.push_back(t);
            if (!tok.empty()) rows.push_back({no, tok});
        }
    }
};

int parse_int(const std::string& s, int line, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer ") + what + ", got '" + s + "'");
    }
}

int parse_vertex(const std::string& s, int n, int line) {
    int v = parse_int(s, line, "vertex id");
    if (v < 0 || v >= n) throw ParseError(line, "vertex id " + s + " out of range");
    return v;
}

} // namespace

GraphFile parse_graph_file(const std::string& text) {
    Lines ls(text);
    if (ls.rows.empty()) throw ParseError(1, "empty file");
    auto& [hl, head] = ls.rows[0];
    if (head[0] != "graph" || head.size() != 2)
        throw ParseError(hl, "expected header 'graph <n>'");
    int n = parse_int(head[1], hl, "vertex count");
    if (n < 0) throw ParseError(hl, "negative vertex count");

    GraphFile out;
    out.g = Graph(n);
    std::vector<std::vector<int>> rot(n);
    std::vector<bool> has_rot(n, false), has_label(n, false);
    bool any_label = false, any_rot = false;

    for (size_t i = 1; i < ls.rows.size(); ++i) {
        auto& [no, tok] = ls.rows[i];
        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(no, "expected 'e <u> <v>'");
            int u = parse_vertex(tok[1], n, no), v = parse_vertex(tok[2], n, no);
            if (u == v) throw ParseError(no, "self loop at vertex " + tok[1]);
            if (out.g.has_edge(u, v)) throw ParseError(no, "duplicate edge");
            out.g.add_edge(u, v);
        } else if (tok[0] == "label") {
            if (tok.size() < 3) throw ParseError(no, "expected 'label <v> <text>'");
            int v = parse_vertex(tok[1], n, no);
            if (has_label[v]) throw ParseError(no, "duplicate label for vertex " + tok[1]);
            has_label[v] = true;
            any_label = true;
            if (out.g.labels.empty())
                for (int w = 0; w < n; ++w) out.g.labels.push_back(std::to_string(w));
            std::string text2 = tok[2];
            for (size_t t = 3; t < tok.size(); ++t) text2 += " " + tok[t];
            out.g.labels[v] = text2;
        } else if (tok[0] == "rot") {
            if (tok.size() < 2) throw ParseError(no, "expected 'rot <v> <u>...'");
            int v = parse_vertex(tok[1], n, no);
            if (has_rot[v]) throw ParseError(no, "duplicate rotation for vertex " + tok[1]);
            has_rot[v] = true;
            any_rot = true;
            for (size_t t = 2; t < tok.size(); ++t)
                rot[v].push_back(parse_vertex(tok[t], n, no));
        } else {
            throw ParseError(no, "unknown directive '" + tok[0] + "'");
        }
    }
    (void)any_label;
    if (any_rot) {
        for (int v = 0; v < n; ++v)
            if (!has_rot[v] && out.g.degree(v) > 0)
                throw ParseError(ls.rows.back().first,
                                 "missing rotation for vertex " + std::to_string(v));
        out.emb = EmbeddedGraph{out.g, rot};
    }
    return out;
}

SystemFile parse_system(const std::string& text) {
    Lines ls(text);
    if (ls.rows.empty()) throw ParseError(1, "empty file");
    auto& [hl, head] = ls.rows[0];
    if (head[0] != "system" || head.size() != 2)
        throw ParseError(hl, "expected header 'system <n>'");
    int n = parse_int(head[1], hl, "vertex count");
    if (n < 0) throw ParseError(hl, "negative vertex count");

    SystemFile out;
    out.sys.moves.assign(n, Bitset(n));
    std::vector<bool> has_move(n, false);
    for (size_t i = 1; i < ls.rows.size(); ++i) {
        auto& [no, tok] = ls.rows[i];
        if (tok[0] == "m") {
            if (tok.size() < 3) throw ParseError(no, "expected 'm <v> <u>...'");
            int v = parse_vertex(tok[1], n, no);
            if (has_move[v]) throw ParseError(no, "duplicate move for vertex " + tok[1]);
            has_move[v] = true;
            for (size_t t = 2; t < tok.size(); ++t)
                out.sys.moves[v].set(parse_vertex(tok[t], n, no));
        } else if (tok[0] == "state") {
            if (out.start) throw ParseError(no, "duplicate state line");
            Bitset s(n);
            for (size_t t = 1; t < tok.size(); ++t) s.set(parse_vertex(tok[t], n, no));
            out.start = s;
        } else {
            throw ParseError(no, "unknown directive '" + tok[0] + "'");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!has_move[v])
            throw ParseError(ls.rows.back().first, "missing move for vertex " + std::to_string(v));
    return out;
}

uint64_t graph_hash(const Graph& g) {
    uint64_t h = 1469598103934665603ull;
    for (char c : write_graph(g)) {
        h ^= (unsigned char)c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string certificate_json(const Graph& g, const MoveSystem& m, const Bitset& state,
                             const OrbitReport& report) {
    nlohmann::json j;
    j["version"] = "1.0.0";
    j["graph"]["n"] = g.n;
    auto& edges = j["graph"]["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    if (!g.labels.empty()) j["graph"]["labels"] = g.labels;
    char hashbuf[19];
    std::snprintf(hashbuf, sizeof hashbuf, "%016llx", (unsigned long long)graph_hash(g));
    j["graph"]["hash"] = hashbuf;
    auto& moves = j["system"]["moves"] = nlohmann::json::array();
    for (int v = 0; v < m.n(); ++v) moves.push_back(m.moves[v].to_vector());
    j["state"] = state.to_vector();
    j["rank"] = report.rank;
    j["orbit_size"] = report.orbit_size;
    j["verdict"] = report.legal ? "legal" : "illegal";
    if (report.witness) {
        j["witness"]["state"] = report.witness->to_vector();
        j["witness"]["coeffs"] = report.witness_coeffs;
    }
    return j.dump(2) + "\n";
}

} // namespace legal
