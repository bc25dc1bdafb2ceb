#ifndef HOMEX_SEARCH_HPP
#define HOMEX_SEARCH_HPP

#include <functional>
#include <optional>
#include <vector>

#include "homex/complex.hpp"

namespace homex {

/**
 * What to search for: pure d-complexes on exactly n vertices, optionally
 * restricted to complexes strongly connected w.r.t. dimension strong_m,
 * probed for nontrivial reduced H_k.
 */
struct SearchConstraint {
    int d = 0;
    int k = 0;
    int n = 0;
    std::optional<int> strong_m; // nullopt = pure mode
};

/**
 * Certificate of one exhaustive scan at a fixed vertex count. An empty
 * witness list certifies that no complex matching the constraint has
 * nontrivial H_k, over the complete canonical enumeration.
 */
struct SearchReport {
    SearchConstraint constraint;
    long long complexes_examined = 0; // candidate facet-subsets tested
    long long canonical_classes = 0;
    std::vector<SimplicialComplex> witnesses;
    double elapsed_seconds = 0.0;
};

// Enumeration cap on the vertex count: 8 by default, overridable through
// the HOMEX_MAX_N environment variable.
int enumeration_cap();

/**
 * Emits every pure d-dimensional complex using exactly n vertices, once per
 * vertex-relabeling isomorphism class, in canonical order. The canonical
 * form is the lexicographically least sorted facet-bitmask list over all n!
 * permutations, located by full permutation scan. The visitor may return
 * false to stop early.
 */
void enumerate_pure_canonical(
    int n, int d, const std::function<bool(const SimplicialComplex&)>& visit);

std::vector<SimplicialComplex> enumerate_pure_canonical(int n, int d);

// Scans all canonical classes for the constraint and reports every witness
// with nontrivial reduced H_k. Deterministic for any worker count.
SearchReport verify_bound(const SearchConstraint& c, int jobs = 1);

// The closed-form minimum the search is expected to confirm: the pure bound,
// or the relative bound when the strong mode's m exceeds the connectivity
// threshold (below it the MH example already realizes the pure bound).
long long expected_minimal_vertices(int d, int k, std::optional<int> strong_m);

struct MinimalWitnessResult {
    int n_min = -1;
    SimplicialComplex witness;            // first witness in canonical order
    std::vector<SearchReport> reports;    // per-n certificates, n = d+1 ...
    long long expected_bound = -1;
    bool bound_matches = false;
};

/**
 * Increments n from d+1 until a witness appears, then checks n against the
 * applicable closed-form bound. Throws CapacityError if the cap (or max_n)
 * is exhausted without a witness.
 */
MinimalWitnessResult find_minimal_witness(int d, int k,
                                          std::optional<int> strong_m,
                                          int jobs = 1,
                                          std::optional<int> max_n = {});

} // namespace homex

#endif
