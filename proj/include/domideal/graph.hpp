#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domideal/vertex_set.hpp"

namespace domideal {

// Finite simple graph with vertices 0..n-1 (displayed as labels X1..Xn).
// Edges are stored as sorted unordered pairs (i < j); adjacency lists are
// derived from them and kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Set of pairwise non-adjacent edges, stored as vertex-index pairs (i < j).
struct Matching {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }

    bool operator==(const Matching& other) const { return pairs == other.pairs; }
};

// --- edge-list text format -------------------------------------------------
//
// First non-comment line: vertex count n. Each further non-empty line: an
// edge "i j" with 1-based endpoints. Lines starting with '#' are ignored.

Graph parse_edge_list(std::string_view text);

// Canonical inverse of parse_edge_list (sorted edges, 1-based labels).
std::string to_edge_list(const Graph& g);

// --- elementary predicates and constructions --------------------------------

// {v} together with the neighbors of v; always contains v.
VertexSet closed_neighborhood(const Graph& g, int v);

// True iff s meets the closed neighborhood of every vertex.
bool is_dominating(const Graph& g, const VertexSet& s);

// True iff every edge has an endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);

bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);

// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

bool is_valid_matching(const Graph& g, const Matching& m);

// Maximum-cardinality matching. Bipartite graphs use Hopcroft-Karp; other
// graphs fall back to exhaustive search, refused above kMaxExhaustiveMatching
// vertices. Vertices and neighbors are explored in index order, so the
// returned representative is deterministic.
inline constexpr int kMaxExhaustiveMatching = 24;
Matching maximum_matching(const Graph& g);

// Canonical 2-coloring (the lowest-index vertex of each component goes to the
// first side), or nothing if some cycle is odd.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// The K1-corona: one pendant "whisker" vertex attached to each vertex.
// Vertex i keeps its index; its whisker is i + n.
Graph corona(const Graph& g);

// If h is the K1-corona of some graph, returns the whisker pairing: a perfect
// matching in which every pair contains a vertex of degree 1. Otherwise empty.
std::optional<Matching> recognize_corona(const Graph& h);

// --- seeded generation -------------------------------------------------------

// splitmix64; the single PRNG used for every seeded corpus.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via rejection sampling; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Labeled tree on n vertices from a decoded Prufer sequence.
Graph decode_prufer(int n, std::span<const int> sequence);

// Uniformly random labeled tree; deterministic for fixed (n, seed).
Graph random_tree(int n, std::uint64_t seed);

// Erdos-Renyi-style random graph with a seed-derived edge probability.
// Corpus plumbing for the verifier sweeps; deterministic for fixed (n, seed).
Graph random_graph(int n, std::uint64_t seed);

// Streams every labeled tree on n vertices exactly once, decoding the n^(n-2)
// Prufer sequences in lexicographic order. Single-consumer.
class TreeEnumerator {
public:
    static constexpr int kDefaultCap = 10;

    explicit TreeEnumerator(int n, int cap = kDefaultCap);

    // Enumerates only the trees with Prufer index in [begin, end); used to
    // partition exhaustive sweeps across workers.
    TreeEnumerator(int n, std::uint64_t begin, std::uint64_t end, int cap = kDefaultCap);

    static std::uint64_t tree_count(int n);

    std::optional<Graph> next();

private:
    int n_ = 0;
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
};

}  // namespace domideal
