#ifndef LEGAL_IO_HPP
#define LEGAL_IO_HPP

#include "legal/embedding.hpp"
#include "legal/moves.hpp"

namespace legal {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Canonical text forms; parse(write(x)) == x and write is byte-stable.
std::string write_graph(const Graph& g);
std::string write_embedded(const EmbeddedGraph& e);
std::string write_system(const MoveSystem& m, const std::optional<Bitset>& start);

struct GraphFile {
    Graph g;
    std::optional<EmbeddedGraph> emb; // present iff the file has rot lines
};
GraphFile parse_graph_file(const std::string& text);

struct SystemFile {
    MoveSystem sys;
    std::optional<Bitset> start;
};
SystemFile parse_system(const std::string& text);

// FNV-1a over the canonical graph serialization.
uint64_t graph_hash(const Graph& g);

// Certificate JSON: {graph, system, state, rank, orbit_size, verdict,
// witness?, version}; stable key order, 2-space indent.
std::string certificate_json(const Graph& g, const MoveSystem& m, const Bitset& state,
                             const OrbitReport& report);

} // namespace legal

#endif
