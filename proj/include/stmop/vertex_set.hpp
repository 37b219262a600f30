#ifndef STMOP_VERTEX_SET_HPP
#define STMOP_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "error.hpp"

namespace stmop {

/// Subset of {0, ..., n-1} stored as a packed bitmask.
///
/// Binary operators require both operands to share a universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_(word_count(universe), 0)
    {
        if (universe < 0)
            throw Error(Errc::InvalidArgument, "negative universe size");
    }

    VertexSet(int universe, std::span<const int> members) : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }

    VertexSet(int universe, std::initializer_list<int> members)
        : VertexSet(universe, std::span<const int>(members.begin(), members.size()))
    {
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept
    {
        if (v < 0 || v >= universe_)
            return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v)
    {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v)
    {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const noexcept
    {
        int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }

    bool empty() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    /// Smallest member, or -1 when empty.
    int front() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool is_subset_of(const VertexSet& other) const
    {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const
    {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
    VertexSet& operator&=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
    VertexSet& operator-=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const
    {
        return full(universe_) - *this;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic order on the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b)
    {
        auto ma = a.members();
        auto mb = b.members();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    }

private:
    static std::size_t word_count(int universe) { return universe <= 0 ? 0 : (static_cast<std::size_t>(universe) + 63) / 64; }

    void check(int v) const
    {
        if (v < 0 || v >= universe_)
            throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }

    void same_universe(const VertexSet& o) const
    {
        if (o.universe_ != universe_)
            throw Error(Errc::InvalidArgument, "vertex sets over different universes");
    }

    template <class Op>
    VertexSet& combine(const VertexSet& o, Op op)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = op(words_[i], o.words_[i]);
        return *this;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace stmop

#endif // STMOP_VERTEX_SET_HPP
