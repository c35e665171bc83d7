#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domideal/graph.hpp"

namespace domideal {

// Outcome of running one verifier on one instance. Hypothesis failure is kept
// apart from conclusion failure so vacuous truths never count as evidence;
// when hypothesis_met is false, conclusion_holds is not asserted.
struct VerdictReport {
    std::string claim;
    bool hypothesis_met = false;
    bool conclusion_holds = false;
    nlohmann::json witness;  // null unless there is something to replay

    bool vacuous() const { return !hypothesis_met; }
    bool failed() const { return hypothesis_met && !conclusion_holds; }
};

// N_G equals the intersection of (V')R over all dominating sets and over the
// minimal ones, and the minimal intersection is irredundant. The all-sets
// branch brute-forces 2^n subsets (n <= 16); the other branches run to n <= 20.
VerdictReport verify_decomposition(const Graph& g);

// N_G = N_H iff G and H have the same minimal dominating sets.
VerdictReport verify_ideal_equality_corollary(const Graph& g, const Graph& h);

// The corona H of a d-vertex base has exactly 2^d minimal dominating sets,
// all of size d, and N_H is a complete intersection.
VerdictReport verify_corona_proposition(const Graph& base);

// Without isolated vertices, every (minimal) vertex cover dominates.
VerdictReport verify_vertex_cover_lemma(const Graph& g);

// For a bipartite, isolated-vertex-free, domination-unmixed graph, the common
// minimal dominating set size equals the maximum matching cardinality.
VerdictReport verify_matching_lemma(const Graph& g);

// A tree is a K1-corona iff it is domination-unmixed. The one-vertex tree is
// recorded as a flagged edge case (vacuous), not a failure: it is
// domination-unmixed but has odd order.
VerdictReport verify_tree_theorem(const Graph& t);

enum class CMClass {
    CompleteIntersection,
    CohenMacaulay,
    Unmixed,
    Mixed,
    NotApplicable,
};

std::string to_string(CMClass c);

struct CMStatus {
    CMClass status = CMClass::NotApplicable;
    std::string note;
};

// For trees, complete intersection, Cohen-Macaulay, and unmixed coincide and
// hold exactly when the tree is domination-unmixed. Non-trees get
// NotApplicable; the note records the complete-intersection sufficient
// condition when it happens to hold.
CMStatus cm_status_of_tree(const Graph& t);

nlohmann::json verdict_to_json(const VerdictReport& v);

// Aggregate of one verifier over a corpus.
struct SweepReport {
    std::string claim;
    std::uint64_t instances = 0;
    std::uint64_t passes = 0;
    std::uint64_t vacuous = 0;
    std::vector<nlohmann::json> failures;

    void add(const VerdictReport& v);
    void merge(const SweepReport& other);
};

nlohmann::json sweep_to_json(const SweepReport& r);

// Runs fn on every labeled tree on n vertices, partitioned across workers by
// Prufer index range. fn(worker, index, tree) must be safe to call
// concurrently for distinct workers. threads = 0 picks the hardware count.
void for_each_labeled_tree(int n, int threads,
                           const std::function<void(int, std::uint64_t, const Graph&)>& fn);

// Exhaustive sweep of one verifier over all labeled trees on n vertices;
// failures are ordered by tree index, so the result is deterministic.
SweepReport sweep_trees(const std::string& claim, int n,
                        const std::function<VerdictReport(const Graph&)>& verdict,
                        int threads = 0);

}  // namespace domideal
