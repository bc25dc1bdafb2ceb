#ifndef HOMEX_CONSTRUCTIONS_HPP
#define HOMEX_CONSTRUCTIONS_HPP

#include "homex/complex.hpp"

namespace homex {

// Minimal vertex count of a pure d-dimensional complex with nontrivial
// reduced H_k: ceil((d+1)(k+2)/(k+1)). Requires 0 <= k <= d.
long long bound_pure(int d, int k);

// Minimal vertex count under strong connectivity of the d-skeleton:
// d + 1 + ceil(d/k). Requires 1 <= k <= d.
long long bound_strong(int d, int k);

// Largest m at which the MH construction stays strongly connected:
// d + 1 - ceil((d+1)/(k+1)) = floor((d+1)k/(k+1)). Requires 1 <= k <= d.
int connectivity_threshold(int d, int k);

// Minimal vertex count under strong connectivity w.r.t. dimension m:
// d + 1 + ceil(m/k). Requires threshold < m <= d.
long long bound_rel(int d, int k, int m);

/**
 * The pure-case tight example MH_{d,k}: k+2 blocks s_0..s_{k+1} (exactly
 * (d+1) mod (k+1) of them one vertex larger) plus an optional extra vertex
 * z; facet f_i omits block s_i and carries z exactly when s_i is large.
 * Every facet has d+1 vertices, the total intersection is empty, and the
 * vertex count meets bound_pure(d, k); these are verified on every call.
 * For k = 0 this degenerates to two disjoint d-simplexes.
 */
SimplicialComplex build_mh(int d, int k);

/**
 * Stages of the strongly connected tight example MS_{d,k}. The final
 * attachment (the simplex on V u {w1}) is what creates homology, via
 * Mayer-Vietoris against the contractible ms_double_prime.
 */
struct MsConstruction {
    SimplicialComplex ms_prime;        // V and the W-side faces
    SimplicialComplex ms_double_prime; // + simplex on V u W \ {w1}; contractible
    SimplicialComplex attachment;      // the simplex on V u {w1}
    SimplicialComplex full;            // ms_double_prime u attachment
    SimplicialComplex skeleton;        // sk_d(full); the tight example
    Face v_block;                      // the vertices of V
    Face w_block;                      // the vertices of W
    vertex_t w1;
};

MsConstruction build_ms_parts(int d, int k);

// sk_d(MS_{d,k}); exactly bound_strong(d,k) vertices, strongly connected
// w.r.t. d, with nontrivial reduced H_k (all verified on construction).
SimplicialComplex build_ms(int d, int k);

/**
 * Stages of the relative tight example for connectivity dimension m:
 * c_prime is a cone with apex q1 (hence contractible); attaching the single
 * d-face V u W produces nontrivial H_k.
 */
struct RelConstruction {
    SimplicialComplex c_prime;
    SimplicialComplex attachment; // the simplex on V u W
    SimplicialComplex full;       // the tight example
    Face v_block;
    Face w_block;
    vertex_t q1;
};

RelConstruction build_rel_parts(int d, int k, int m);

SimplicialComplex build_rel(int d, int k, int m);

/**
 * The suspension-style example: cone a vertex over each facet of the
 * vertex-minimal pure (d-1)-complex with nontrivial H_{k-1}, fill in the
 * simplex on the old vertex set, and take the d-skeleton. Achieves
 * bound_strong(d, k) like MS does.
 */
SimplicialComplex build_suspension_example(int d, int k);

} // namespace homex

#endif
