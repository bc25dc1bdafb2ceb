#ifndef HOMEX_NERVE_HPP
#define HOMEX_NERVE_HPP

#include <optional>
#include <vector>

#include "homex/complex.hpp"

namespace homex {

/**
 * Nerve of the cover by maximal faces: vertex i stands for facet i of the
 * source complex (in facet order), and a set of vertices spans a nerve face
 * iff the corresponding facets have a common vertex.
 */
struct NerveComplex {
    SimplicialComplex complex;
    std::vector<Face> source_facets; // index map back to the source
};

// Every nerve face is contained in the star of some source vertex, so the
// nerve's facets are exactly the maximal sets {i : v in facet_i}; no subset
// enumeration is needed and the construction is polynomial.
NerveComplex nerve_max(const SimplicialComplex& x);

/**
 * Searches (k+2)-subsets of facets, in lexicographic index order, for one
 * with empty common intersection. When reduced H_k is nontrivial the nerve
 * lemma guarantees a witness; failing to find one in that case is an
 * internal consistency failure and raises logic_error.
 */
std::optional<std::vector<int>> nerve_lemma_witness(const SimplicialComplex& x,
                                                    int k);

// Second clause of the lemma: witnesses containing a requested facet. The
// result lists the anchor plus k+1 further facets.
std::optional<std::vector<int>> nerve_lemma_witness_through(
    const SimplicialComplex& x, int k, int anchor_facet);

} // namespace homex

#endif
