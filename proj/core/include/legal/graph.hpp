#ifndef LEGAL_GRAPH_HPP
#define LEGAL_GRAPH_HPP

#include "legal/bitset.hpp"
#include <optional>
#include <stdexcept>
#include <utility>

namespace legal {

// Finite simplicial graph; adjacency as bit rows.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<std::string> labels; // optional, empty or size n

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, Bitset(n_)) {}

    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < n && v < n);
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const { // lexicographic
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u); v >= 0; v = adj[u].next(v))
                es.push_back({u, v});
        return es;
    }
    std::string label(int v) const {
        return labels.empty() ? std::to_string(v) : labels[v];
    }
};

// Reusable scratch for connectivity/legality so orbit loops don't allocate.
class LegalityChecker {
public:
    explicit LegalityChecker(const Graph& g)
        : g_(g), visited_(g.n), frontier_(g.n), next_(g.n), comp_(g.n) {}

    // Connectivity of the subgraph induced by s (s nonempty).
    bool induced_connected(const Bitset& s) {
        int start = s.first();
        assert(start >= 0);
        visited_.clear();
        frontier_.clear();
        visited_.set(start);
        frontier_.set(start);
        int seen = 1, want = s.count();
        while (seen < want) {
            next_.clear();
            for (int v = frontier_.first(); v >= 0; v = frontier_.next(v))
                next_ |= g_.adj[v];
            next_ &= s;
            next_.andnot(visited_);
            if (next_.none()) return false;
            visited_ |= next_;
            seen += next_.count();
            frontier_ = next_;
        }
        return true;
    }

    bool is_legal(const Bitset& s) {
        int c = s.count();
        if (c == 0 || c == g_.n) return false;
        comp_ = ~s;
        return induced_connected(s) && induced_connected(comp_);
    }

    bool is_strongly_legal(const Bitset& s) {
        if (!is_legal(s)) return false;
        Bitset co = ~s;
        for (int v = s.first(); v >= 0; v = s.next(v))
            if (!g_.adj[v].intersects(co)) return false;
        for (int v = co.first(); v >= 0; v = co.next(v))
            if (!g_.adj[v].intersects(s)) return false;
        return true;
    }

private:
    const Graph& g_;
    Bitset visited_, frontier_, next_, comp_;
};

bool induced_connected(const Graph& g, const Bitset& s); // throws on empty s
bool is_legal_state(const Graph& g, const Bitset& s);
bool is_strongly_legal_state(const Graph& g, const Bitset& s);
bool connected(const Graph& g);
bool two_connected(const Graph& g);

// Girth; nullopt = acyclic (infinite).
std::optional<int> girth(const Graph& g);

// counts[k] = number of cliques on k vertices, k = 0..i_max+1
// (so the i-clique count K_i of the curvature formula is counts[i+1];
// K_{-1} = counts[0] = 1, K_0 = n, K_1 = |E|).
struct CliqueCensus {
    std::vector<long long> counts;
    long long K(int i) const {
        int k = i + 1;
        return (k >= 0 && k < (int)counts.size()) ? counts[k] : 0;
    }
};
CliqueCensus clique_census(const Graph& g, int i_max);

// Exact rational p/q, q > 0, reduced.
struct Rat {
    long long num = 0, den = 1;
    Rat() = default;
    Rat(long long p, long long q = 1);
    friend Rat operator+(Rat a, Rat b);
    friend Rat operator-(Rat a, Rat b);
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    std::string to_string() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

// kappa_n: alternating dyadic clique count over cliques on at most n
// vertices, sum_k (-1/2)^k #{k-vertex cliques}; kappa_2 = 1 - V/2 + E/4.
// n < 0 means all clique sizes (kappa_infinity).
Rat curvature(const Graph& g, int n = -1);

// 2-coloring (A = side of vertex 0 per component); nullopt if an odd cycle exists.
std::optional<std::pair<Bitset, Bitset>> bipartition(const Graph& g);

// Exact Hamiltonicity with a node budget.
struct HamiltonResult {
    enum Status { Found, None, Budget } status;
    std::vector<int> cycle;      // when Found
    uint64_t nodes = 0;          // expansions used
};
HamiltonResult find_hamiltonian_cycle(const Graph& g, uint64_t budget = 1000000000ull);

} // namespace legal

#endif
