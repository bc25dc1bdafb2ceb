#include <doctest.h>

#include <random>

#include "homex/homology.hpp"
#include "test_support.hpp"

using namespace homex;
using homex::testing::boundary_of_simplex;
using homex::testing::projective_plane_6;
using homex::testing::random_pure_complex;

namespace {

// Sparse check that the composite boundary map vanishes in degree i.
bool boundary_squares_to_zero(const SimplicialComplex& x, int i) {
    IntegerMatrix outer = boundary_matrix(x, i);
    IntegerMatrix inner = boundary_matrix(x, i + 1);
    std::vector<std::map<int, std::int64_t>> cols(inner.cols());
    for (const auto& [rc, v] : inner.entries()) cols[rc.second][rc.first] = v;
    std::vector<std::map<int, std::int64_t>> outer_cols(outer.cols());
    for (const auto& [rc, v] : outer.entries()) outer_cols[rc.second][rc.first] = v;
    for (int c = 0; c < inner.cols(); ++c) {
        std::map<int, std::int64_t> acc;
        for (const auto& [mid, v] : cols[c])
            for (const auto& [row, w] : outer_cols[mid]) acc[row] += v * w;
        for (const auto& [row, v] : acc)
            if (v != 0) return false;
    }
    return true;
}


} // namespace

TEST_CASE("boundary matrix of the hollow triangle") {
    SimplicialComplex x = boundary_of_simplex(3);
    IntegerMatrix d1 = boundary_matrix(x, 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    for (int c = 0; c < 3; ++c) {
        int plus = 0, minus = 0;
        for (int r = 0; r < 3; ++r) {
            if (d1.at(r, c) == 1) ++plus;
            if (d1.at(r, c) == -1) ++minus;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
    }
    CHECK(smith_normal_form(d1).diagonal == std::vector<BigInt>{1, 1});
}

TEST_CASE("boundary composition vanishes") {
    SimplicialComplex tri = from_facets({Face{0, 1, 2}});
    CHECK(boundary_squares_to_zero(tri, 1));
    SimplicialComplex s2 = boundary_of_simplex(4);
    CHECK(boundary_squares_to_zero(s2, 1));
    CHECK(boundary_squares_to_zero(s2, 2));
}

TEST_CASE("rank of the sphere's top boundary map") {
    IntegerMatrix d2 = boundary_matrix(boundary_of_simplex(4), 2);
    CHECK(d2.rows() == 6);
    CHECK(d2.cols() == 4);
    CHECK(smith_normal_form(d2).rank() == 3);
    CHECK(rank_rational(d2) == 3);
}

TEST_CASE("reduced boundary in degree zero is the augmentation row") {
    SimplicialComplex x = from_facets({Face{0}, Face{1}, Face{2}});
    IntegerMatrix aug = boundary_matrix(x, 0, /*reduced=*/true);
    CHECK(aug.rows() == 1);
    CHECK(aug.cols() == 3);
    for (int c = 0; c < 3; ++c) CHECK(aug.at(0, c) == 1);
    CHECK(boundary_matrix(x, 0).rows() == 0);
}

TEST_CASE("homology of spheres") {
    HomologyProfile s2 = homology_profile(boundary_of_simplex(4), false);
    CHECK(s2.betti == std::vector<long long>{1, 0, 1});
    CHECK(s2.torsion_at(0).empty());
    CHECK(s2.torsion_at(1).empty());

    for (int n = 2; n <= 6; ++n) {
        HomologyProfile p = homology_profile(boundary_of_simplex(n), true);
        for (int i = 0; i < n - 1; ++i) {
            CHECK(p.betti_at(i) == (i == n - 2 ? 1 : 0));
            CHECK(p.torsion_at(i).empty());
        }
        CHECK(is_homology_nontrivial(boundary_of_simplex(n), n - 2));
    }
}

TEST_CASE("projective plane has 2-torsion") {
    SimplicialComplex rp2 = projective_plane_6();
    CHECK(rp2.f_vector() == FVector{{6, 15, 10}});
    HomologyProfile p = homology_profile(rp2, false);
    CHECK(p.betti == std::vector<long long>{1, 0, 0});
    CHECK(p.torsion_at(1) == std::vector<long long>{2});
    CHECK(p.torsion_at(0).empty());
    CHECK(p.torsion_at(2).empty());
    CHECK(is_homology_nontrivial(rp2, 1)); // torsion counts as nontrivial
}

TEST_CASE("cones are acyclic") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex x = random_pure_complex(6, 2, 8, rng);
        SimplicialComplex c = x.cone(100);
        HomologyProfile p = homology_profile(c, true);
        CHECK(p.all_trivial());
        for (int k = 0; k <= c.dim(); ++k)
            CHECK_FALSE(is_homology_nontrivial(c, k));
    }
}

TEST_CASE("disconnected complexes have reduced H_0") {
    SimplicialComplex two = from_facets({Face{0}, Face{1}});
    CHECK(is_homology_nontrivial(two, 0));
    HomologyProfile p = homology_profile(two, true);
    CHECK(p.betti_at(0) == 1);
    CHECK_FALSE(is_homology_nontrivial(from_facets({Face{0, 1}}), 0));
}

TEST_CASE("suspension shifts reduced Betti numbers") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex x = random_pure_complex(6, 2, 8, rng);
        HomologyProfile px = homology_profile(x, true);
        HomologyProfile ps = homology_profile(x.suspension(), true);
        for (int k = 1; k <= x.dim() + 1; ++k)
            CHECK(ps.betti_at(k) == px.betti_at(k - 1));
    }

    HomologyProfile s = homology_profile(boundary_of_simplex(3).suspension(), false);
    CHECK(s.betti_at(2) == 1); // suspension of a circle is a 2-sphere
}

TEST_CASE("Euler-Poincare and rational-rank cross-checks") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        SimplicialComplex x = random_pure_complex(7, 2, 12, rng);
        FVector fv = x.f_vector();
        HomologyProfile p = homology_profile(x, false);
        long long alt = 0;
        int sign = 1;
        for (long long b : p.betti) {
            alt += sign * b;
            sign = -sign;
        }
        CHECK(alt == fv.euler_characteristic());

        // torsion-blind check against fraction-free elimination
        for (int i = 0; i <= x.dim(); ++i) {
            int r_lo = i == 0 ? 0 : rank_rational(boundary_matrix(x, i));
            int r_hi =
                i == x.dim() ? 0 : rank_rational(boundary_matrix(x, i + 1));
            CHECK(p.betti_at(i) ==
                  static_cast<long long>(x.faces_of_dim(i).size()) - r_lo - r_hi);
        }

        for (int i = 1; i <= x.dim(); ++i) CHECK(boundary_squares_to_zero(x, i));
    }
}

TEST_CASE("mv corollary on the tetrahedron boundary") {
    SimplicialComplex x = boundary_of_simplex(4);
    SimplicialComplex b = from_facets({Face{1, 2, 3}});
    SimplicialComplex a =
        from_facets({Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3}});
    CHECK(mv_corollary_check(x, a, b, 2));
}

TEST_CASE("mv corollary rejects bad preconditions") {
    SimplicialComplex sphere = boundary_of_simplex(4);
    SimplicialComplex pt = from_facets({Face{4}});
    SimplicialComplex x = union_complexes(sphere, pt).union_complex;
    // A itself has H_2 != 0
    CHECK_THROWS_AS(mv_corollary_check(x, sphere, pt, 2), PreconditionError);

    // A u B != X
    SimplicialComplex a = from_facets({Face{0, 1, 2}});
    CHECK_THROWS_AS(mv_corollary_check(sphere, a, pt, 2), PreconditionError);

    // B not a single simplex
    CHECK_THROWS_AS(
        mv_corollary_check(x, sphere,
                           from_facets({Face{4}, Face{0}}), 2),
        PreconditionError);
}

TEST_CASE("profiles of empty and point complexes") {
    CHECK(homology_profile(SimplicialComplex(), true).betti.empty());
    HomologyProfile pt = homology_profile(from_facets({Face{0}}), true);
    CHECK(pt.betti == std::vector<long long>{0});
    HomologyProfile pt_unreduced = homology_profile(from_facets({Face{0}}), false);
    CHECK(pt_unreduced.betti == std::vector<long long>{1});
}
