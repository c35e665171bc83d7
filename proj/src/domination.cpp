#include "domideal/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "domideal/errors.hpp"

namespace domideal {

Hypergraph::Hypergraph(int universe, std::vector<VertexSet> hyperedges)
    : n_(universe), hyperedges_(std::move(hyperedges)) {
    if (universe < 0) throw std::invalid_argument("Hypergraph: negative universe");
    for (const VertexSet& e : hyperedges_) {
        if (e.universe() != universe) {
            throw std::invalid_argument("Hypergraph: hyperedge universe mismatch");
        }
        if (e.empty()) throw std::invalid_argument("Hypergraph: empty hyperedge");
    }
}

namespace {

// Drops duplicate hyperedges and hyperedges containing another hyperedge;
// the transversal family is unchanged. Result is sorted by cardinality.
std::vector<VertexSet> pruned_hyperedges(const Hypergraph& h) {
    std::vector<VertexSet> edges = h.hyperedges();
    std::sort(edges.begin(), edges.end(), CanonicalLess{});
    std::vector<VertexSet> kept;
    kept.reserve(edges.size());
    for (const VertexSet& e : edges) {
        bool redundant = false;
        for (const VertexSet& k : kept) {
            if (k.is_subset_of(e)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(e);
    }
    return kept;
}

Antichain brute_force_transversals(const Hypergraph& h, const TransversalLimits& limits) {
    int n = h.universe();
    if (n > limits.brute_max_universe) {
        throw ScaleLimitError("minimal_transversals: brute-force engine refuses universe " +
                              std::to_string(n) + " > " +
                              std::to_string(limits.brute_max_universe));
    }
    std::vector<std::uint64_t> edges;
    edges.reserve(h.size());
    for (const VertexSet& e : h.hyperedges()) edges.push_back(e.to_mask());

    auto hits_all = [&](std::uint64_t mask) {
        for (std::uint64_t e : edges) {
            if (!(e & mask)) return false;
        }
        return true;
    };

    std::vector<VertexSet> out;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!hits_all(mask)) continue;
        // Transversals are upward closed: minimal iff every single-bit
        // deletion misses some hyperedge.
        bool minimal = true;
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (hits_all(mask ^ bit)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(VertexSet::from_mask(n, mask));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return Antichain::from_canonical(n, std::move(out));
}

bool transversal_of(const VertexSet& s, const std::vector<VertexSet>& edges) {
    for (const VertexSet& e : edges) {
        if (!s.intersects(e)) return false;
    }
    return true;
}

// u is a transversal of `processed`; tests whether it is inclusion-minimal
// via single deletions (valid because transversals are upward closed).
bool is_minimal_transversal(const VertexSet& u, const std::vector<VertexSet>& processed) {
    bool minimal = true;
    u.for_each([&](int y) {
        if (!minimal) return;
        if (transversal_of(u.without(y), processed)) minimal = false;
    });
    return minimal;
}

Antichain incremental_transversals(const Hypergraph& h, const TransversalLimits& limits) {
    int n = h.universe();
    std::vector<VertexSet> edges = pruned_hyperedges(h);

    std::vector<VertexSet> current{VertexSet(n)};  // minimal transversals of the empty prefix
    std::vector<VertexSet> processed;
    processed.reserve(edges.size());

    for (const VertexSet& e : edges) {
        processed.push_back(e);
        std::vector<VertexSet> next;
        next.reserve(current.size());
        std::vector<VertexSet> extended;
        for (const VertexSet& t : current) {
            if (t.intersects(e)) {
                // Still a transversal, and still minimal: a proper subset
                // would already have been a transversal of the prefix.
                next.push_back(t);
            } else {
                e.for_each([&](int x) {
                    VertexSet u = t.with(x);
                    if (is_minimal_transversal(u, processed)) extended.push_back(std::move(u));
                });
            }
        }
        std::sort(extended.begin(), extended.end(), CanonicalLess{});
        extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
        next.insert(next.end(), std::make_move_iterator(extended.begin()),
                    std::make_move_iterator(extended.end()));
        if (next.size() > limits.max_antichain_size) {
            throw ScaleLimitError("minimal_transversals: intermediate antichain exceeds " +
                                  std::to_string(limits.max_antichain_size) + " members");
        }
        current = std::move(next);
    }

    std::sort(current.begin(), current.end(), CanonicalLess{});
    return Antichain::from_canonical(n, std::move(current));
}

}  // namespace

Antichain minimal_transversals(const Hypergraph& h, TransversalEngine engine,
                               const TransversalLimits& limits) {
    switch (engine) {
        case TransversalEngine::BruteForce:
            return brute_force_transversals(h, limits);
        case TransversalEngine::Incremental:
            return incremental_transversals(h, limits);
    }
    throw std::logic_error("minimal_transversals: unknown engine");
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
    std::vector<VertexSet> edges;
    edges.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) edges.push_back(closed_neighborhood(g, v));
    return Hypergraph(g.vertex_count(), std::move(edges));
}

Antichain minimal_dominating_sets(const Graph& g, TransversalEngine engine) {
    if (g.vertex_count() == 0) return Antichain(0);
    return minimal_transversals(closed_neighborhood_hypergraph(g), engine);
}

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw std::invalid_argument("is_minimal_dominating: universe size mismatch");
    }
    if (!is_dominating(g, s)) return false;
    bool minimal = true;
    s.for_each([&](int v) {
        if (!minimal) return;
        if (is_dominating(g, s.without(v))) minimal = false;
    });
    return minimal;
}

bool is_domination_unmixed(const Graph& g) {
    return minimal_dominating_sets(g).uniform_cardinality();
}

}  // namespace domideal
