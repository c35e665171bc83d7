#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domideal/vertex_set.hpp"

namespace domideal {

// Canonically ordered list of pairwise-incomparable vertex sets. Shared by
// minimal generator sets, irreducible decompositions, and families of minimal
// dominating sets. Order: cardinality ascending, then lexicographic.
class Antichain {
public:
    Antichain() = default;

    explicit Antichain(int universe) : n_(universe) {
        if (universe < 0) throw std::invalid_argument("Antichain: negative universe");
    }

    // Keeps exactly the inclusion-minimal sets; dedupes; sorts canonically.
    static Antichain minimal_sets(int universe, std::vector<VertexSet> sets) {
        check_members(universe, sets);
        std::sort(sets.begin(), sets.end(), CanonicalLess{});
        std::vector<VertexSet> kept;
        kept.reserve(sets.size());
        for (const VertexSet& s : sets) {
            bool dominated = false;
            for (const VertexSet& k : kept) {
                if (k.is_subset_of(s)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(s);
        }
        return Antichain(universe, std::move(kept));
    }

    // Validates pairwise incomparability, then sorts canonically.
    static Antichain from_incomparable(int universe, std::vector<VertexSet> sets) {
        check_members(universe, sets);
        std::sort(sets.begin(), sets.end(), CanonicalLess{});
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                if (sets[i].is_subset_of(sets[j])) {
                    throw std::invalid_argument("Antichain: members are comparable");
                }
            }
        }
        return Antichain(universe, std::move(sets));
    }

    // Caller guarantees the members are pairwise incomparable and canonically
    // sorted (used by the enumeration engines, whose output is minimal by
    // construction; validating a large antichain would be quadratic).
    static Antichain from_canonical(int universe, std::vector<VertexSet> sets) {
        return Antichain(universe, std::move(sets));
    }

    int universe() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    const VertexSet& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<VertexSet>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const Antichain& other) const {
        if (n_ != other.n_) throw std::invalid_argument("Antichain: universe size mismatch");
        return members_ == other.members_;
    }

    bool operator!=(const Antichain& other) const { return !(*this == other); }

    // Members are sorted by cardinality, so the extremes sit at the ends.
    int min_cardinality() const {
        if (members_.empty()) throw std::logic_error("Antichain: empty antichain has no cardinality");
        return members_.front().count();
    }

    bool uniform_cardinality() const {
        if (members_.empty()) return true;
        return members_.front().count() == members_.back().count();
    }

    bool is_antichain() const {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = 0; j < members_.size(); ++j) {
                if (i != j && members_[i].is_subset_of(members_[j])) return false;
            }
        }
        return true;
    }

private:
    Antichain(int universe, std::vector<VertexSet> members)
        : n_(universe), members_(std::move(members)) {}

    static void check_members(int universe, const std::vector<VertexSet>& sets) {
        if (universe < 0) throw std::invalid_argument("Antichain: negative universe");
        for (const VertexSet& s : sets) {
            if (s.universe() != universe) {
                throw std::invalid_argument("Antichain: member universe mismatch");
            }
        }
    }

    int n_ = 0;
    std::vector<VertexSet> members_;
};

}  // namespace domideal
