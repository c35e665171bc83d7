#include "domideal/ideal.hpp"

#include <stdexcept>
#include <utility>

namespace domideal {

MonomialIdeal::MonomialIdeal(int nvars, Antichain generators)
    : nvars_(nvars), generators_(std::move(generators)) {}

MonomialIdeal MonomialIdeal::from_supports(int nvars, std::vector<VertexSet> supports) {
    if (nvars < 0) throw std::invalid_argument("MonomialIdeal: negative variable count");
    for (const VertexSet& s : supports) {
        if (s.universe() != nvars) {
            throw std::invalid_argument("MonomialIdeal: support universe mismatch");
        }
        if (s.empty()) {
            throw std::invalid_argument("MonomialIdeal: empty support (unit ideal is out of scope)");
        }
    }
    return MonomialIdeal(nvars, Antichain::minimal_sets(nvars, std::move(supports)));
}

MonomialIdeal minimize_generators(int nvars, std::vector<VertexSet> supports) {
    return MonomialIdeal::from_supports(nvars, std::move(supports));
}

MonomialIdeal closed_neighborhood_ideal(const Graph& g) {
    std::vector<VertexSet> supports;
    supports.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) supports.push_back(closed_neighborhood(g, v));
    return MonomialIdeal::from_supports(g.vertex_count(), std::move(supports));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    if (m.support.universe() != ideal.nvars()) {
        throw std::invalid_argument("contains: variable count mismatch");
    }
    for (const VertexSet& gen : ideal.generators()) {
        if (gen.is_subset_of(m.support)) return true;
    }
    return false;
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
    if (inner.nvars() != outer.nvars()) {
        throw std::invalid_argument("is_subideal: variable count mismatch");
    }
    for (const VertexSet& gen : inner.generators()) {
        if (!contains(outer, Monomial{gen})) return false;
    }
    return true;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("intersect: variable count mismatch");
    // Containment fast path; an intersection with a superideal is a no-op.
    if (is_subideal(a, b)) return a;
    if (is_subideal(b, a)) return b;
    std::vector<VertexSet> unions;
    unions.reserve(a.generators().size() * b.generators().size());
    for (const VertexSet& ga : a.generators()) {
        for (const VertexSet& gb : b.generators()) {
            unions.push_back(ga.united(gb));
        }
    }
    return MonomialIdeal::from_supports(a.nvars(), std::move(unions));
}

MonomialIdeal variable_ideal(int nvars, const VertexSet& vars) {
    if (vars.universe() != nvars) {
        throw std::invalid_argument("variable_ideal: universe size mismatch");
    }
    if (vars.empty()) throw std::invalid_argument("variable_ideal: empty variable set");
    std::vector<VertexSet> singletons;
    singletons.reserve(static_cast<std::size_t>(vars.count()));
    vars.for_each([&](int v) {
        VertexSet s(nvars);
        s.set(v);
        singletons.push_back(std::move(s));
    });
    return MonomialIdeal::from_supports(nvars, std::move(singletons));
}

Decomposition irreducible_decomposition(const MonomialIdeal& ideal, TransversalEngine engine) {
    if (ideal.zero()) {
        throw std::invalid_argument("irreducible_decomposition: zero ideal has no decomposition");
    }
    Hypergraph supports(ideal.nvars(), ideal.generators().members());
    return Decomposition{ideal.nvars(), minimal_transversals(supports, engine)};
}

MonomialIdeal intersect_components(int nvars, const Antichain& components) {
    if (components.empty()) {
        throw std::invalid_argument("intersect_components: no components to intersect");
    }
    MonomialIdeal acc = variable_ideal(nvars, components[0]);
    for (std::size_t i = 1; i < components.size(); ++i) {
        acc = intersect(acc, variable_ideal(nvars, components[i]));
    }
    return acc;
}

int height(const MonomialIdeal& ideal) {
    return irreducible_decomposition(ideal).components.min_cardinality();
}

bool is_unmixed(const MonomialIdeal& ideal) {
    return irreducible_decomposition(ideal).components.uniform_cardinality();
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
    if (ideal.zero()) {
        throw std::invalid_argument("is_complete_intersection: zero ideal");
    }
    const auto& gens = ideal.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i].intersects(gens[j])) return false;
        }
    }
    return true;
}

}  // namespace domideal
