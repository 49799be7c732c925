#include "facetideal/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "facetideal/smith.hpp"

namespace facetideal {

int HomologyGroups::betti_at(int degree) const {
    std::size_t i = static_cast<std::size_t>(degree + 1);
    return i < betti.size() ? betti[i] : 0;
}

const std::vector<BigInt>& HomologyGroups::torsion_at(int degree) const {
    static const std::vector<BigInt> none;
    std::size_t i = static_cast<std::size_t>(degree + 1);
    return i < torsion.size() ? torsion[i] : none;
}

int HomologyGroups::dim_over(int degree, int characteristic) const {
    int d = betti_at(degree);
    if (characteristic != 0) {
        BigInt p(characteristic);
        for (const BigInt& t : torsion_at(degree))
            if ((t % p).is_zero())
                ++d;
        // Tor term from one degree below.
        for (const BigInt& t : torsion_at(degree - 1))
            if ((t % p).is_zero())
                ++d;
    }
    return d;
}

std::vector<VertexSet> all_faces(const std::vector<VertexSet>& facets) {
    std::set<std::uint64_t> seen;
    std::vector<VertexSet> stack = facets;
    while (!stack.empty()) {
        VertexSet f = stack.back();
        stack.pop_back();
        if (f.empty() || !seen.insert(f.raw()).second)
            continue;
        for (int v : f.members())
            stack.push_back(f.without(v));
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (std::uint64_t bits : seen)
        out.push_back(VertexSet(bits));
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

HomologyGroups reduced_homology(const std::vector<VertexSet>& faces) {
    HomologyGroups h;
    for (VertexSet f : faces)
        h.dim = std::max(h.dim, f.size() - 1);

    // chains[d + 1] = faces of dimension d; degree -1 holds the empty face.
    std::vector<std::vector<VertexSet>> chains(static_cast<std::size_t>(h.dim) + 2);
    chains[0].push_back(VertexSet{});
    for (VertexSet f : faces)
        chains[static_cast<std::size_t>(f.size())].push_back(f);
    std::vector<std::map<std::uint64_t, int>> index(chains.size());
    for (std::size_t d = 0; d < chains.size(); ++d) {
        std::sort(chains[d].begin(), chains[d].end(), lex_less);
        for (std::size_t i = 0; i < chains[d].size(); ++i)
            index[d][chains[d][i].raw()] = static_cast<int>(i);
    }

    // boundary_rank[d + 1] = rank of the boundary map out of degree d;
    // the map out of degree -1 is zero.
    std::vector<int> boundary_rank(chains.size() + 1, 0);
    std::vector<std::vector<BigInt>> boundary_torsion(chains.size() + 1);
    for (std::size_t d = 1; d < chains.size(); ++d) {
        const auto& dom = chains[d];
        const auto& cod = chains[d - 1];
        if (dom.empty() || cod.empty())
            continue;
        std::vector<std::vector<BigInt>> matrix(cod.size(), std::vector<BigInt>(dom.size()));
        for (std::size_t j = 0; j < dom.size(); ++j) {
            int sign = 1;
            for (int v : dom[j].members()) {
                int row = index[d - 1].at(dom[j].without(v).raw());
                matrix[static_cast<std::size_t>(row)][j] = BigInt(sign);
                sign = -sign;
            }
        }
        SmithResult snf = smith_normal_form(std::move(matrix));
        boundary_rank[d] = snf.rank;
        for (const BigInt& f : snf.invariant_factors)
            if (!(f == BigInt(1)))
                boundary_torsion[d].push_back(f);
    }

    h.betti.assign(chains.size(), 0);
    h.torsion.assign(chains.size(), {});
    for (std::size_t d = 0; d < chains.size(); ++d) {
        h.betti[d] = static_cast<int>(chains[d].size()) - boundary_rank[d] - boundary_rank[d + 1];
        h.torsion[d] = boundary_torsion[d + 1];
    }
    return h;
}

} // namespace facetideal
