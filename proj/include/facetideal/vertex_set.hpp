#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace facetideal {

/// Dense subset of a vertex universe, one bit per vertex index.
/// Universes are capped at 64 vertices, far beyond desk scale.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }

    /// Set difference a \ b.
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    /// Index of the least member; undefined on the empty set.
    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr std::uint64_t raw() const { return bits_; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Order by ascending index sequence: the set owning the least element of the
/// symmetric difference comes first ({0,3} < {1,2}).
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t d = a.raw() ^ b.raw();
    if (d == 0)
        return false;
    return (a.raw() >> std::countr_zero(d)) & 1u;
}

/// Canonical facet order: cardinality first, then lex.
inline bool size_lex_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return lex_less(a, b);
}

} // namespace facetideal
