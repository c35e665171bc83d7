#pragma once

#include <vector>

#include "domideal/antichain.hpp"
#include "domideal/domination.hpp"
#include "domideal/graph.hpp"
#include "domideal/vertex_set.hpp"

namespace domideal {

// Square-free monomial over variables X1..Xn, identified with its support.
struct Monomial {
    VertexSet support;
};

// Square-free monomial ideal in canonical form: the unique minimal set of
// square-free generators, stored as an antichain of supports. The ambient
// ring is represented only by its variable count; no field arithmetic exists
// anywhere, so every result here is characteristic-independent by
// construction.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    // Minimizes: a generator whose support contains another's is redundant.
    static MonomialIdeal from_supports(int nvars, std::vector<VertexSet> supports);

    int nvars() const { return nvars_; }
    const Antichain& generators() const { return generators_; }
    bool zero() const { return generators_.empty(); }

    bool operator==(const MonomialIdeal& other) const {
        return nvars_ == other.nvars_ && generators_ == other.generators_;
    }

    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    MonomialIdeal(int nvars, Antichain generators);

    int nvars_ = 0;
    Antichain generators_;
};

// Irredundant irreducible decomposition: each component is the ideal
// generated by the variables of one member set.
struct Decomposition {
    int nvars = 0;
    Antichain components;
};

MonomialIdeal minimize_generators(int nvars, std::vector<VertexSet> supports);

// The ideal generated by all closed neighborhood monomials of g.
MonomialIdeal closed_neighborhood_ideal(const Graph& g);

// Membership: some generator divides m.
bool contains(const MonomialIdeal& ideal, const Monomial& m);

// True iff every generator of `inner` lies in `outer`.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

// lcm of square-free monomials is the union of supports.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// (S)R: the ideal generated by the variables in S.
MonomialIdeal variable_ideal(int nvars, const VertexSet& vars);

// Components are the minimal transversals of the generator supports.
Decomposition irreducible_decomposition(const MonomialIdeal& ideal,
                                        TransversalEngine engine = TransversalEngine::Incremental);

// Fold of variable ideals over an antichain of component sets.
MonomialIdeal intersect_components(int nvars, const Antichain& components);

// Minimum component cardinality of the irreducible decomposition.
int height(const MonomialIdeal& ideal);

// All components of the irreducible decomposition have equal cardinality.
bool is_unmixed(const MonomialIdeal& ideal);

// Pairwise-coprime minimal generators form a regular sequence.
bool is_complete_intersection(const MonomialIdeal& ideal);

}  // namespace domideal
