#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "domideal/domination.hpp"
#include "domideal/graph.hpp"
#include "domideal/vertex_set.hpp"

// Test-only brute-force oracles. Each one takes the dumbest route available
// and stays independent of the library code paths it is used to check.
namespace oracles {

// Maximum matching cardinality by trying every subset of the edge set.
inline int max_matching_size_by_edge_subsets(const domideal::Graph& g) {
    const auto& edges = g.edges();
    if (edges.size() > 20) throw std::invalid_argument("oracle: too many edges");
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
        bool ok = true;
        int size = 0;
        for (std::size_t e = 0; ok && e < edges.size(); ++e) {
            if (!((mask >> e) & 1)) continue;
            auto [a, b] = edges[e];
            if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) {
                ok = false;
            } else {
                used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
                ++size;
            }
        }
        if (ok && size > best) best = size;
    }
    return best;
}

namespace detail {

inline bool extend_perfect_whisker_matching(const domideal::Graph& g, std::vector<char>& used,
                                            int from) {
    int n = g.vertex_count();
    int v = from;
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v == n) return true;
    for (int u : g.neighbors(v)) {
        if (used[static_cast<std::size_t>(u)]) continue;
        if (g.degree(v) != 1 && g.degree(u) != 1) continue;  // pair must hold a whisker
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(u)] = 1;
        if (extend_perfect_whisker_matching(g, used, v + 1)) return true;
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(u)] = 0;
    }
    return false;
}

}  // namespace detail

// Existence of a perfect matching in which every pair contains a vertex of
// degree 1, by exhaustive extension.
inline bool has_perfect_whisker_matching(const domideal::Graph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    return detail::extend_perfect_whisker_matching(g, used, 0);
}

// Minimal dominating sets by the definition: enumerate all dominating
// subsets, then keep those that properly contain no other dominating subset.
inline std::vector<domideal::VertexSet> minimal_dominating_by_definition(const domideal::Graph& g) {
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle: too many vertices");
    std::vector<std::uint64_t> dominating;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (domideal::is_dominating(g, domideal::VertexSet::from_mask(n, mask))) {
            dominating.push_back(mask);
        }
    }
    std::vector<domideal::VertexSet> minimal;
    for (std::uint64_t s : dominating) {
        bool is_min = true;
        for (std::uint64_t t : dominating) {
            if (t != s && (t & ~s) == 0) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(domideal::VertexSet::from_mask(n, s));
    }
    std::sort(minimal.begin(), minimal.end(), domideal::CanonicalLess{});
    return minimal;
}

// Minimal transversals by the definition: all transversals, then a full
// antichain filter. A third route, independent of both library engines.
inline std::vector<domideal::VertexSet> minimal_transversals_by_definition(
    const domideal::Hypergraph& h) {
    int n = h.universe();
    if (n > 14) throw std::invalid_argument("oracle: universe too large");
    std::vector<std::uint64_t> edges;
    for (const auto& e : h.hyperedges()) edges.push_back(e.to_mask());
    std::vector<std::uint64_t> transversals;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool hits = true;
        for (std::uint64_t e : edges) {
            if (!(e & mask)) {
                hits = false;
                break;
            }
        }
        if (hits) transversals.push_back(mask);
    }
    std::vector<domideal::VertexSet> minimal;
    for (std::uint64_t s : transversals) {
        bool is_min = true;
        for (std::uint64_t t : transversals) {
            if (t != s && (t & ~s) == 0) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(domideal::VertexSet::from_mask(n, s));
    }
    std::sort(minimal.begin(), minimal.end(), domideal::CanonicalLess{});
    return minimal;
}

// Two-colorability by trying all 2^n side assignments.
inline bool is_bipartite_by_colorings(const domideal::Graph& g) {
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle: too many vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& [a, b] : g.edges()) {
            if (((mask >> a) & 1) == ((mask >> b) & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return g.vertex_count() == 0;
}

}  // namespace oracles
