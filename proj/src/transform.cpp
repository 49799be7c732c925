#include "facetideal/transform.hpp"

#include <algorithm>
#include <unordered_map>

#include "facetideal/errors.hpp"
#include "facetideal/tree.hpp"

namespace facetideal {

LocalizationResult localize(const Complex& c, VertexSet kept) {
    if (!kept.subset_of(c.universe().all()))
        throw Error("UnknownVertex", "kept set uses vertices outside the universe");

    LocalizationResult result;
    result.kept_vertices = kept;

    std::vector<VertexSet> restricted;
    restricted.reserve(static_cast<std::size_t>(c.facet_count()));
    for (VertexSet f : c.facets()) {
        VertexSet r = f & kept;
        if (r.empty()) {
            result.kind = LocalizationResult::Kind::UnitIdeal;
            return result; // some generator became a unit
        }
        restricted.push_back(r);
    }

    // Keep only inclusion-minimal restrictions; the rest are redundant
    // generators of the localized ideal.
    std::sort(restricted.begin(), restricted.end(), size_lex_less);
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
    std::vector<VertexSet> minimal;
    for (VertexSet r : restricted) {
        bool redundant = false;
        for (VertexSet m : minimal)
            if (m.proper_subset_of(r) || m == r) {
                redundant = true;
                break;
            }
        if (!redundant)
            minimal.push_back(r);
    }

    std::vector<std::string> names;
    std::vector<int> remap(static_cast<std::size_t>(c.vertex_count()), -1);
    for (int v = 0; v < c.vertex_count(); ++v)
        if (kept.contains(v)) {
            remap[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
            names.push_back(c.universe().name(v));
        }
    std::vector<VertexSet> remapped;
    for (VertexSet f : minimal) {
        VertexSet r;
        for (int v : f.members())
            r = r.with(remap[static_cast<std::size_t>(v)]);
        remapped.push_back(r);
    }

    result.kind = LocalizationResult::Kind::Complex;
    result.complex = Complex(VertexUniverse(std::move(names)), std::move(remapped));
    return result;
}

LocalizationResult localize(const Complex& c, const std::vector<std::string>& kept_labels) {
    return localize(c, c.universe().set_of(kept_labels));
}

namespace {

// Grafting conditions on the subcollection selected by `subset`.  The split is
// forced: the F_i must be exactly the leaves, so only disjointness, vertex
// coverage and the recursion over deck removals need checking.
bool grafted_rec(const std::vector<VertexSet>& facets, FacetMask subset,
                 std::unordered_map<FacetMask, bool>& memo) {
    auto it = memo.find(subset);
    if (it != memo.end())
        return it->second;

    VertexSet leaf_union;
    std::vector<int> deck;
    bool ok = true;
    for (FacetMask b = subset; b != 0; b &= b - 1) {
        int i = std::countr_zero(b);
        if (facet_is_leaf(facets, subset, i)) {
            if (leaf_union.intersects(facets[static_cast<std::size_t>(i)])) {
                ok = false; // leaves must be pairwise disjoint
                break;
            }
            leaf_union = leaf_union | facets[static_cast<std::size_t>(i)];
        } else {
            deck.push_back(i);
        }
    }
    if (ok)
        for (int g : deck)
            if (!facets[static_cast<std::size_t>(g)].subset_of(leaf_union)) {
                ok = false; // deck vertices must live on the leaves
                break;
            }
    if (ok)
        for (int g : deck)
            if (!grafted_rec(facets, subset & ~(FacetMask{1} << g), memo)) {
                ok = false;
                break;
            }

    memo.emplace(subset, ok);
    return ok;
}

} // namespace

std::optional<GraftingDecomposition> is_grafted(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "grafting is undefined on the empty complex");

    FacetMask all = static_cast<FacetMask>((std::uint64_t{1} << c.facet_count()) - 1);
    std::unordered_map<FacetMask, bool> memo;
    if (!grafted_rec(c.facets(), all, memo))
        return std::nullopt;

    GraftingDecomposition d;
    d.universe = c.universe();
    for (int i = 0; i < c.facet_count(); ++i) {
        if (facet_is_leaf(c.facets(), all, i))
            d.leaves.push_back(c.facet(i));
        else
            d.deck.push_back(c.facet(i));
    }
    d.r = static_cast<int>(d.leaves.size());
    d.s = static_cast<int>(d.deck.size());
    return d;
}

namespace {

std::string fresh_label(const std::string& base, const std::vector<std::string>& taken) {
    std::string label = base + "'";
    while (std::find(taken.begin(), taken.end(), label) != taken.end())
        label += "'";
    return label;
}

} // namespace

Complex graft(const Complex& c, const std::vector<std::vector<std::string>>& partition) {
    if (c.empty())
        throw Error("EmptyComplex", "cannot graft the empty complex");

    VertexSet support = c.support();
    std::vector<VertexSet> classes;
    if (partition.empty()) {
        for (int v : support.members())
            classes.push_back(VertexSet::single(v)); // whisker default
    } else {
        VertexSet seen;
        for (const auto& labels : partition) {
            if (labels.empty())
                throw Error("BadPartition", "partition classes must be nonempty");
            VertexSet cls = c.universe().set_of(labels);
            if (cls.intersects(seen))
                throw Error("BadPartition", "partition classes must be disjoint");
            seen = seen | cls;
            classes.push_back(cls);
        }
        if (seen != support)
            throw Error("BadPartition", "partition must cover exactly the vertices of the complex");
    }
    for (VertexSet cls : classes) {
        bool inside = false;
        for (VertexSet f : c.facets())
            if (cls.subset_of(f)) {
                inside = true;
                break;
            }
        if (!inside)
            throw Error("BadPartition", "each class must be contained in some facet");
    }

    // One fresh vertex per class, labeled after the least class member.
    std::vector<std::string> names;
    for (int v : support.members())
        names.push_back(c.universe().name(v));
    std::vector<int> remap(static_cast<std::size_t>(c.vertex_count()), -1);
    {
        int next = 0;
        for (int v : support.members())
            remap[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<VertexSet> facets;
    for (VertexSet f : c.facets()) {
        VertexSet r;
        for (int v : f.members())
            r = r.with(remap[static_cast<std::size_t>(v)]);
        facets.push_back(r);
    }
    for (VertexSet cls : classes) {
        std::string tip = fresh_label(c.universe().name(cls.lowest()), names);
        int tip_index = static_cast<int>(names.size());
        names.push_back(tip);
        VertexSet leaf = VertexSet::single(tip_index);
        for (int v : cls.members())
            leaf = leaf.with(remap[static_cast<std::size_t>(v)]);
        facets.push_back(leaf);
    }

    Complex result(VertexUniverse(std::move(names)), std::move(facets));
    if (!is_grafted(result))
        throw Error("GraftVerificationFailed",
                    "the grafted candidate fails the grafting conditions "
                    "(facets meeting a new leaf do not form a chain)");
    return result;
}

} // namespace facetideal
