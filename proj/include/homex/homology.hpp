#ifndef HOMEX_HOMOLOGY_HPP
#define HOMEX_HOMOLOGY_HPP

#include <vector>

#include "homex/complex.hpp"
#include "homex/integer_matrix.hpp"

namespace homex {

/**
 * Integral homology of a complex: per-dimension Betti number and torsion
 * coefficients (invariant factors > 1, in divisibility order). Indices run
 * 0 .. dim(X); queries outside that range are trivial groups.
 */
struct HomologyProfile {
    bool reduced = false;
    std::vector<long long> betti;
    std::vector<std::vector<long long>> torsion;

    long long betti_at(int i) const {
        return (i >= 0 && i < static_cast<int>(betti.size())) ? betti[i] : 0;
    }
    std::vector<long long> torsion_at(int i) const {
        return (i >= 0 && i < static_cast<int>(torsion.size())) ? torsion[i]
                                                                : std::vector<long long>{};
    }
    bool nontrivial_at(int i) const {
        return betti_at(i) > 0 || !torsion_at(i).empty();
    }
    bool all_trivial() const {
        for (std::size_t i = 0; i < betti.size(); ++i)
            if (betti[i] != 0 || !torsion[i].empty()) return false;
        return true;
    }

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.reduced == b.reduced && a.betti == b.betti &&
               a.torsion == b.torsion;
    }
};

/**
 * Matrix of the boundary map from i-faces to (i-1)-faces. Columns and rows
 * follow the lexicographic face order; the column of (v_0 < ... < v_i) has
 * entry (-1)^j at the row of the face omitting v_j. For i = 0 the unreduced
 * matrix has zero rows; with reduced set it is the augmentation row of ones.
 */
IntegerMatrix boundary_matrix(const SimplicialComplex& x, int i,
                              bool reduced = false);

HomologyProfile homology_profile(const SimplicialComplex& x, bool reduced);

/**
 * True iff reduced H_k(X; Z) is nonzero (free part or torsion). With k = 0
 * this means "disconnected", matching the degenerate case of the vertex
 * bounds.
 */
bool is_homology_nontrivial(const SimplicialComplex& x, int k);

/**
 * Mayer-Vietoris corollary check: with A u B = X, B a single full simplex,
 * and reduced H_n(A) = H_{n-1}(A) = 0, decides whether H_n(X) equals
 * H_{n-1}(A n B) as abelian groups (Betti number and torsion list).
 * Violated preconditions raise PreconditionError rather than returning
 * false. Requires n >= 1.
 */
bool mv_corollary_check(const SimplicialComplex& x, const SimplicialComplex& a,
                        const SimplicialComplex& b, int n);

} // namespace homex

#endif
