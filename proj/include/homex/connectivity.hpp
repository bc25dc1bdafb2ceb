#ifndef HOMEX_CONNECTIVITY_HPP
#define HOMEX_CONNECTIVITY_HPP

#include <vector>

#include "homex/complex.hpp"

namespace homex {

/**
 * Graph on the facets of a complex: an edge joins two facets whose
 * intersection contains an (m-1)-face, i.e. has at least m vertices
 * (facet intersections are themselves faces).
 */
struct FacetGraph {
    std::vector<Face> nodes;                  // facets, lexicographic order
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
    int m = 0;

    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& nb : adjacency) deg += nb.size();
        return deg / 2;
    }
};

FacetGraph facet_graph(const SimplicialComplex& x, int m);

/**
 * Partition of the facets into strong-connectivity components w.r.t.
 * dimension m: connected components of the facet graph. Components are
 * ordered by their smallest facet, members ascending. Requires every facet
 * to have dimension >= m.
 */
std::vector<std::vector<int>> strong_components(const SimplicialComplex& x,
                                                int m);

/**
 * True iff the facets form a single component. Cross-checked against the
 * skeleton formulation (components of the m-skeleton under sharing
 * (m-1)-faces); a disagreement would be a library bug and raises.
 */
bool is_strongly_connected(const SimplicialComplex& x, int m);

/**
 * An ordering of the facets such that every prefix generates a strongly
 * connected complex w.r.t. dimension m.
 */
struct GrowthProcess {
    std::vector<Face> order;
    int m = 0;
};

// Breadth-first spanning order of the facet graph starting from the
// lexicographically smallest facet; ties broken by facet order. Throws
// NotStronglyConnectedError (carrying the partition) when disconnected.
GrowthProcess growth_process(const SimplicialComplex& x, int m);

/**
 * Attachment of a new simplex along a subcomplex of its boundary that
 * contains an (m-1)-face.
 */
struct ExpansionOp {
    Face new_face;
    SimplicialComplex attach_region;
};

SimplicialComplex apply_expansion(const SimplicialComplex& x,
                                  const ExpansionOp& op, int m);

enum class CollapseStatus {
    Collapsed,       // reached a complex of dimension <= d
    NotCollapsible,  // exhaustive search completed with no success
    Unknown          // greedy got stuck, or the search budget ran out
};

struct CollapseResult {
    CollapseStatus status = CollapseStatus::Unknown;
    SimplicialComplex remaining;  // final state reached
    long long states_explored = 0;
};

/**
 * Collapses free pairs (a face contained in exactly one facet, with that
 * facet, the facet of dimension > d) until everything left has dimension
 * <= d. Greedy mode removes the lexicographically smallest free pair each
 * step; exhaustive mode backtracks over removal orders up to a state
 * budget. Greedy failure proves nothing and is reported as Unknown.
 */
CollapseResult collapse_to_dimension(const SimplicialComplex& x, int d,
                                     bool exhaustive,
                                     long long state_budget = 1000000);

} // namespace homex

#endif
