#include "homex/nerve.hpp"

#include <stdexcept>

#include "homex/homology.hpp"

namespace homex {

NerveComplex nerve_max(const SimplicialComplex& x) {
    if (x.empty())
        throw PreconditionError("nerve_max requires a nonempty complex");
    NerveComplex n;
    n.source_facets = x.facets();
    std::vector<Face> stars;
    for (vertex_t v : x.vertices()) {
        std::vector<vertex_t> star;
        for (int i = 0; i < static_cast<int>(n.source_facets.size()); ++i)
            if (n.source_facets[i].contains(v)) star.push_back(i);
        stars.push_back(Face(std::move(star)));
    }
    n.complex = from_facets(std::move(stars));
    return n;
}

namespace {

// Enumerates size-s index subsets of {0..n-1} in lexicographic order,
// keeping a stack of partial intersections so each step is one merge.
template <typename Yield>
void for_each_empty_intersection(const std::vector<Face>& facets, int s,
                                 const Yield& yield) {
    const int n = static_cast<int>(facets.size());
    if (s <= 0 || s > n) return;
    std::vector<int> idx(s);
    std::vector<Face> inter(s);
    int level = 0;
    idx[0] = -1;
    while (level >= 0) {
        ++idx[level];
        if (idx[level] > n - s + level) {
            --level;
            continue;
        }
        inter[level] = level == 0
                           ? facets[idx[0]]
                           : inter[level - 1].intersect(facets[idx[level]]);
        if (level == s - 1) {
            if (inter[level].empty() &&
                yield(std::vector<int>(idx.begin(), idx.end())))
                return;
        } else {
            ++level;
            idx[level] = idx[level - 1];
        }
    }
}

} // namespace

std::optional<std::vector<int>> nerve_lemma_witness(const SimplicialComplex& x,
                                                    int k) {
    std::optional<std::vector<int>> witness;
    for_each_empty_intersection(x.facets(), k + 2,
                                [&](std::vector<int> idx) {
                                    witness = std::move(idx);
                                    return true;
                                });
    if (!witness && is_homology_nontrivial(x, k))
        throw std::logic_error(
            "nerve lemma violated: nontrivial H_k without a witness");
    return witness;
}

std::optional<std::vector<int>> nerve_lemma_witness_through(
    const SimplicialComplex& x, int k, int anchor_facet) {
    const auto& facets = x.facets();
    const int n = static_cast<int>(facets.size());
    if (anchor_facet < 0 || anchor_facet >= n)
        throw PreconditionError("anchor facet index out of range");

    std::vector<Face> others;
    std::vector<int> other_idx;
    for (int i = 0; i < n; ++i)
        if (i != anchor_facet) {
            others.push_back(facets[i].intersect(facets[anchor_facet]));
            other_idx.push_back(i);
        }
    std::optional<std::vector<int>> witness;
    for_each_empty_intersection(others, k + 1, [&](std::vector<int> idx) {
        std::vector<int> full{anchor_facet};
        for (int i : idx) full.push_back(other_idx[i]);
        std::sort(full.begin(), full.end());
        witness = std::move(full);
        return true;
    });
    if (!witness && is_homology_nontrivial(x, k))
        throw std::logic_error(
            "nerve lemma violated: no witness through the requested facet");
    return witness;
}

} // namespace homex
