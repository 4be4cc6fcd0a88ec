#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fhtw {

/// Set of dense indices over a fixed universe [0, size). Two sets are only
/// combined when they share a universe size.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int m : members)
            insert(m);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i)
            s.insert(static_cast<int>(i));
        return s;
    }

    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        VertexSet s(universe);
        if (!s.words_.empty())
            s.words_[0] = mask;
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void insert(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k])
                return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    /// Members in increasing order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w) {
                out.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Low 64 members as a mask; meaningful only when universe <= 64.
    std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

  private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic on the sorted member lists.
inline bool lex_less(const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); }

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace fhtw
