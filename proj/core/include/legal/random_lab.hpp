#ifndef LEGAL_RANDOM_LAB_HPP
#define LEGAL_RANDOM_LAB_HPP

#include "legal/moves.hpp"
#include "legal/rng.hpp"
#include <map>

namespace legal {

Graph sample_gnp(int n, double p, Rng& rng);
// sides: A = 0..n1-1, B = n1..n1+n2-1
Graph sample_bipartite(int n1, int n2, double p, Rng& rng);

struct PipelineResult {
    bool ok = false;
    std::string method;       // "intermediate" | "case1" | "case2" | "bipartite"
    std::string verification; // "exhaustive" | "spot-check" | "probabilistic"
    std::string fail_reason;
    MoveSystem sys;
    Bitset start;
    std::vector<std::array<int, 2>> pairs; // antimatching / matched pairs
    int attempts = 0;                      // split attempts used
};

// Lawful-antimatching construction: split V into two even parts, take perfect
// antimatchings of both induced subgraphs, and accept when both auxiliary
// pair-incidence graphs are connected. Up to 5 re-randomized splits (seeded).
// Verified exhaustively up to 24 pairs, otherwise by a 500-transversal
// spot-check; a spot-check failure fails the run.
PipelineResult intermediate_pipeline(const Graph& g, uint64_t seed);

// Complement-based construction for dense graphs: complement a single edge ->
// pair move + singletons; otherwise greedy maximal complement matching ->
// pair moves + singletons on the leftover clique. Exhaustive transversal
// verification up to 20 pairs, otherwise "probabilistic" with a spot-check.
PipelineResult high_density_pipeline(const Graph& g, uint64_t seed);

// Halve each side and require the four cross-induced subgraphs to satisfy the
// two-by-two split conditions; odd sides park one leftover vertex each, which
// must see both halves of the opposite side.
PipelineResult bipartite_pipeline(const Graph& g, const Bitset& a, const Bitset& b);

struct ExperimentRow {
    std::string model; // "gnp" | "bip"
    int n1 = 0, n2 = 0;
    double p = 0;
    int trials = 0, successes = 0;
    int case1 = 0, case2 = 0, intermediate = 0;
    std::map<std::string, int> fail_reasons;
    uint64_t seed = 0;
    double wall_seconds = 0;
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRow& row);

// One grid point: per trial, sample from the counter-based substream
// (seed, trial) and run the pipelines (gnp: intermediate with high-density
// fallback; bip: bipartite). Deterministic for fixed seed, independent of
// the thread count.
ExperimentRow monte_carlo(const std::string& model, int n1, int n2, double p,
                          int trials, uint64_t seed, int threads = 1);

} // namespace legal

#endif
