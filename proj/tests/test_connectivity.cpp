#include <doctest.h>

#include <random>

#include "homex/connectivity.hpp"
#include "homex/constructions.hpp"
#include "homex/homology.hpp"
#include "test_support.hpp"

using namespace homex;
using homex::testing::boundary_of_simplex;
using homex::testing::random_pure_complex;

TEST_CASE("facet graph of the sphere is complete") {
    FacetGraph g = facet_graph(boundary_of_simplex(4), 2);
    CHECK(g.nodes.size() == 4);
    CHECK(g.edge_count() == 6);
}

TEST_CASE("facet graph of MH(2,1)") {
    SimplicialComplex mh = build_mh(2, 1);
    CHECK(facet_graph(mh, 2).edge_count() == 1);
    CHECK(facet_graph(mh, 1).edge_count() == 3);

    auto comps2 = strong_components(mh, 2);
    REQUIRE(comps2.size() == 2);
    CHECK(comps2[0].size() == 2); // the pair sharing two vertices
    CHECK(comps2[1].size() == 1);
    CHECK(strong_components(mh, 1).size() == 1);
}

TEST_CASE("isolated facets at low m") {
    SimplicialComplex two = from_facets({Face{0, 1}, Face{2, 3}});
    CHECK(facet_graph(two, 1).edge_count() == 0);
    CHECK(strong_components(two, 1).size() == 2);
    CHECK(facet_graph(two, 0).edge_count() == 1); // empty face always shared
}

TEST_CASE("strong_components rejects low-dimensional facets") {
    SimplicialComplex mixed = from_facets({Face{0, 1, 2}, Face{3, 4}});
    CHECK_THROWS_AS(strong_components(mixed, 2), PreconditionError);
    CHECK(strong_components(mixed, 1).size() == 2);
}

TEST_CASE("is_strongly_connected basics") {
    CHECK(is_strongly_connected(boundary_of_simplex(4), 2));
    SimplicialComplex pinch = from_facets({Face{0, 1, 2}, Face{2, 3, 4}});
    CHECK_FALSE(is_strongly_connected(pinch, 2));
    CHECK(is_strongly_connected(pinch, 1));
}

TEST_CASE("monotonicity of strong connectivity") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex x = random_pure_complex(7, 2, 8, rng);
        for (int m = 2; m >= 1; --m)
            if (is_strongly_connected(x, m))
                CHECK(is_strongly_connected(x, m - 1));
    }
}

TEST_CASE("growth process of the tetrahedron boundary") {
    GrowthProcess gp = growth_process(boundary_of_simplex(4), 2);
    REQUIRE(gp.order.size() == 4);
    CHECK(gp.order.front() == Face{0, 1, 2});
    // complete facet graph: breadth-first order is plain facet order
    CHECK(gp.order == boundary_of_simplex(4).facets());
    for (std::size_t i = 1; i <= gp.order.size(); ++i) {
        SimplicialComplex prefix = from_facets(
            std::vector<Face>(gp.order.begin(), gp.order.begin() + i));
        CHECK(is_strongly_connected(prefix, 2));
        CHECK(prefix.facet_count() == i);
    }
}

TEST_CASE("growth process edge cases") {
    SimplicialComplex single = from_facets({Face{0, 1, 2}});
    CHECK(growth_process(single, 2).order.size() == 1);

    SimplicialComplex mh = build_mh(2, 1);
    GrowthProcess gp = growth_process(mh, 1);
    CHECK(gp.order.size() == 3);
    for (std::size_t i = 1; i <= 3; ++i) {
        SimplicialComplex prefix =
            from_facets(std::vector<Face>(gp.order.begin(), gp.order.begin() + i));
        CHECK(is_strongly_connected(prefix, 1));
    }

    SimplicialComplex split = from_facets({Face{0, 1, 2}, Face{3, 4, 5}});
    try {
        growth_process(split, 2);
        FAIL("expected NotStronglyConnectedError");
    } catch (const NotStronglyConnectedError& e) {
        CHECK(e.components.size() == 2);
    }
}

TEST_CASE("expansion operations of the dimension-2 table") {
    // gluing along one edge: no homotopy change
    SimplicialComplex tri = from_facets({Face{0, 1, 2}});
    ExpansionOp along_edge{Face{0, 1, 3}, from_facets({Face{0, 1}})};
    SimplicialComplex glued = apply_expansion(tri, along_edge, 2);
    CHECK(glued.facet_count() == 2);
    CHECK(homology_profile(glued, true).all_trivial());

    // gluing along an edge plus the opposite vertex: adds an H_1 generator
    SimplicialComplex wedge = from_facets({Face{0, 1, 2}, Face{2, 3, 4}});
    CHECK(homology_profile(wedge, true).betti_at(1) == 0);
    ExpansionOp edge_and_vertex{Face{0, 1, 3},
                                from_facets({Face{0, 1}, Face{3}})};
    SimplicialComplex looped = apply_expansion(wedge, edge_and_vertex, 2);
    CHECK(homology_profile(looped, true).betti_at(1) == 1);

    // gluing along two edges: no change
    SimplicialComplex strip = from_facets({Face{0, 1, 2}, Face{1, 2, 3}});
    ExpansionOp two_edges{Face{0, 1, 3}, from_facets({Face{0, 1}, Face{1, 3}})};
    SimplicialComplex fan = apply_expansion(strip, two_edges, 2);
    CHECK(homology_profile(fan, true).all_trivial());

    // gluing along the full boundary: raises H_2
    SimplicialComplex bowl =
        from_facets({Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3}});
    ExpansionOp lid{Face{1, 2, 3},
                    from_facets({Face{1, 2}, Face{1, 3}, Face{2, 3}})};
    SimplicialComplex sphere = apply_expansion(bowl, lid, 2);
    CHECK(sphere == boundary_of_simplex(4));
    CHECK(homology_profile(sphere, true).betti_at(2) == 1);

    // the same shape can instead kill H_1
    SimplicialComplex hollow = boundary_of_simplex(3);
    ExpansionOp fill{Face{0, 1, 2},
                     from_facets({Face{0, 1}, Face{0, 2}, Face{1, 2}})};
    SimplicialComplex disk = apply_expansion(hollow, fill, 2);
    CHECK(homology_profile(disk, true).betti_at(1) == 0);
}

TEST_CASE("expansion operation validation") {
    SimplicialComplex tri = from_facets({Face{0, 1, 2}});
    CHECK_THROWS_AS(
        apply_expansion(tri, ExpansionOp{Face{3}, SimplicialComplex()}, 2),
        PreconditionError); // dimension below m
    CHECK_THROWS_AS(
        apply_expansion(tri,
                        ExpansionOp{Face{0, 1, 3}, from_facets({Face{1, 3}})},
                        2),
        PreconditionError); // attach region not inside the complex
    CHECK_THROWS_AS(
        apply_expansion(tri, ExpansionOp{Face{0, 1, 3}, from_facets({Face{0}})},
                        2),
        PreconditionError); // no 1-face in the attach region
    CHECK_THROWS_AS(
        apply_expansion(
            tri, ExpansionOp{Face{0, 1, 3}, from_facets({Face{0, 1, 3}})}, 2),
        PreconditionError); // region must be in the boundary, not the face
}

TEST_CASE("expansion preserves strong connectivity") {
    SimplicialComplex tri = from_facets({Face{0, 1, 2}});
    ExpansionOp op{Face{1, 2, 3}, from_facets({Face{1, 2}})};
    SimplicialComplex bigger = apply_expansion(tri, op, 2);
    CHECK(is_strongly_connected(bigger, 2));
}

TEST_CASE("greedy collapse of a triangle reaches a point") {
    SimplicialComplex tri = from_facets({Face{0, 1, 2}});
    CollapseResult res = collapse_to_dimension(tri, 0, false);
    CHECK(res.status == CollapseStatus::Collapsed);
    CHECK(res.remaining.facet_count() == 1);
    CHECK(res.remaining.dim() == 0);
}

TEST_CASE("hollow triangle has no free face") {
    CollapseResult greedy = collapse_to_dimension(boundary_of_simplex(3), 0, false);
    CHECK(greedy.status == CollapseStatus::Unknown);
    CollapseResult full = collapse_to_dimension(boundary_of_simplex(3), 0, true);
    CHECK(full.status == CollapseStatus::NotCollapsible);
}

TEST_CASE("cones collapse greedily") {
    SimplicialComplex cone = boundary_of_simplex(3).cone(3);
    CollapseResult res = collapse_to_dimension(cone, 0, false);
    CHECK(res.status == CollapseStatus::Collapsed);

    SimplicialComplex cone2 = boundary_of_simplex(4).cone(4);
    CHECK(collapse_to_dimension(cone2, 0, false).status ==
          CollapseStatus::Collapsed);
}

TEST_CASE("collapse respects the target dimension") {
    SimplicialComplex tet = from_facets({Face{0, 1, 2, 3}});
    CollapseResult res = collapse_to_dimension(tet, 1, false);
    CHECK(res.status == CollapseStatus::Collapsed);
    CHECK(res.remaining.dim() <= 1);

    // a sphere is already at dimension 2: nothing to do
    CollapseResult sphere = collapse_to_dimension(boundary_of_simplex(4), 2, false);
    CHECK(sphere.status == CollapseStatus::Collapsed);
    CHECK(sphere.remaining == boundary_of_simplex(4));
}

TEST_CASE("exhaustive collapse respects the budget") {
    SimplicialComplex cone = boundary_of_simplex(4).cone(4);
    CollapseResult res = collapse_to_dimension(cone, 0, true, 1);
    CHECK(res.status == CollapseStatus::Unknown);
}
