#pragma once

#include <cstddef>
#include <vector>

#include "domideal/antichain.hpp"
#include "domideal/graph.hpp"
#include "domideal/vertex_set.hpp"

namespace domideal {

// Carrier for the families whose minimal transversals we enumerate: closed
// neighborhoods of a graph, or the supports of an ideal's generators.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int universe, std::vector<VertexSet> hyperedges);

    int universe() const { return n_; }
    std::size_t size() const { return hyperedges_.size(); }
    const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }

private:
    int n_ = 0;
    std::vector<VertexSet> hyperedges_;
};

enum class TransversalEngine {
    BruteForce,   // all 2^n subsets, minimality by single-element deletion
    Incremental,  // Berge-style product with antichain pruning
};

struct TransversalLimits {
    int brute_max_universe = 20;
    std::size_t max_antichain_size = 1'000'000;
};

// Exactly the inclusion-minimal sets meeting every hyperedge. The two engines
// are interchangeable; BruteForce is the oracle the Incremental engine is
// checked against.
Antichain minimal_transversals(const Hypergraph& h,
                               TransversalEngine engine = TransversalEngine::Incremental,
                               const TransversalLimits& limits = {});

// The family {N(v) : v in V}.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

Antichain minimal_dominating_sets(const Graph& g,
                                  TransversalEngine engine = TransversalEngine::Incremental);

// Dominating sets form an upward-closed family, so minimality reduces to the
// single-deletion test: no one-element removal may still dominate.
bool is_minimal_dominating(const Graph& g, const VertexSet& s);

// All minimal dominating sets share one cardinality.
bool is_domination_unmixed(const Graph& g);

}  // namespace domideal
