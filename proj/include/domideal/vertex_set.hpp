#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace domideal {

// Subset of {0,...,n-1} stored as a bit vector. Doubles as the support of a
// square-free monomial and as the variable set of an irreducible ideal.
// Universes up to 64 vertices stay inline (no heap allocation), which is the
// hot case for the exhaustive sweeps.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
        n_ = universe;
        words_.resize(static_cast<std::size_t>((universe + 63) / 64), 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    // Bit i of `mask` becomes membership of vertex i; universe must fit one word.
    static VertexSet from_mask(int universe, std::uint64_t mask) {
        if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe > 64");
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::uint64_t to_mask() const {
        if (n_ > 64) throw std::invalid_argument("VertexSet::to_mask: universe > 64");
        return words_.empty() ? 0 : words_[0];
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check_index(v);
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_index(v);
        words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_index(v);
        words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w) return false;
        }
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    VertexSet united(const VertexSet& other) const {
        check_universe(other);
        VertexSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
        return r;
    }

    VertexSet intersected(const VertexSet& other) const {
        check_universe(other);
        VertexSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
        return r;
    }

    VertexSet without(int v) const {
        VertexSet r = *this;
        r.reset(v);
        return r;
    }

    VertexSet with(int v) const {
        VertexSet r = *this;
        r.set(v);
        return r;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Visits members in increasing index order without allocating.
    template <class F>
    void for_each(F&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<int>(i * 64) + bit);
                w &= w - 1;
            }
        }
    }

    bool operator==(const VertexSet& other) const {
        check_universe(other);
        return words_ == other.words_;
    }

    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Canonical order: smaller cardinality first; ties broken so that the set
    // containing the lowest index in the symmetric difference comes first
    // (equivalent to lexicographic comparison of sorted member lists).
    static bool canonical_less(const VertexSet& a, const VertexSet& b) {
        a.check_universe(b);
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t d = a.words_[i] ^ b.words_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

private:
    void check_index(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex index out of range");
    }

    void check_universe(const VertexSet& other) const {
        if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe size mismatch");
    }

    void trim() {
        int rem = n_ & 63;
        if (rem != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << rem) - 1;
        }
    }

    int n_ = 0;
    boost::container::small_vector<std::uint64_t, 1> words_;
};

struct CanonicalLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const {
        return VertexSet::canonical_less(a, b);
    }
};

}  // namespace domideal
