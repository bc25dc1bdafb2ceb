#include "homex/constructions.hpp"

#include <stdexcept>
#include <string>

#include "homex/connectivity.hpp"
#include "homex/homology.hpp"
#include "homex/nerve.hpp"

namespace homex {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("construction postcondition failed: " + what);
}

void check_pure_params(int d, int k) {
    if (k < 0 || k > d)
        throw DomainError("requires 0 <= k <= d, got d=" + std::to_string(d) +
                          " k=" + std::to_string(k));
}

void check_strong_params(int d, int k) {
    if (k < 1 || k > d)
        throw DomainError("requires 1 <= k <= d, got d=" + std::to_string(d) +
                          " k=" + std::to_string(k));
}

// All t-subsets of the given vertices that contain `forced`, as faces.
std::vector<Face> subsets_containing(const std::vector<vertex_t>& verts,
                                     vertex_t forced, int t) {
    std::vector<vertex_t> rest;
    for (vertex_t v : verts)
        if (v != forced) rest.push_back(v);
    std::vector<Face> out;
    const int n = static_cast<int>(rest.size());
    const int c = t - 1;
    if (c < 0 || c > n) return out;
    std::vector<int> idx(c);
    for (int i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        std::vector<vertex_t> pick{forced};
        for (int i = 0; i < c; ++i) pick.push_back(rest[idx[i]]);
        out.push_back(Face(std::move(pick)));
        int j = c - 1;
        while (j >= 0 && idx[j] == n - c + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < c; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

// Splits `total` items into `parts` consecutive blocks, the first
// (total mod parts) of them one longer.
std::vector<int> block_sizes(int total, int parts) {
    std::vector<int> sizes(parts, total / parts);
    for (int i = 0; i < total % parts; ++i) ++sizes[i];
    return sizes;
}

SimplicialComplex boundary_of_simplex(int n_vertices) {
    std::vector<Face> facets;
    for (int omit = 0; omit < n_vertices; ++omit) {
        std::vector<vertex_t> v;
        for (int i = 0; i < n_vertices; ++i)
            if (i != omit) v.push_back(i);
        facets.push_back(Face(std::move(v)));
    }
    return from_facets(std::move(facets));
}

} // namespace

long long bound_pure(int d, int k) {
    check_pure_params(d, k);
    return ceil_div(static_cast<long long>(d + 1) * (k + 2), k + 1);
}

long long bound_strong(int d, int k) {
    check_strong_params(d, k);
    return d + 1 + ceil_div(d, k);
}

int connectivity_threshold(int d, int k) {
    check_strong_params(d, k);
    return d + 1 - static_cast<int>(ceil_div(d + 1, k + 1));
}

long long bound_rel(int d, int k, int m) {
    int threshold = connectivity_threshold(d, k);
    if (m <= threshold)
        throw DomainError("m=" + std::to_string(m) +
                          " is at or below the connectivity threshold " +
                          std::to_string(threshold));
    if (m > d) throw DomainError("m cannot exceed d");
    return d + 1 + ceil_div(m, k);
}

SimplicialComplex build_mh(int d, int k) {
    check_pure_params(d, k);
    const int q = (d + 1) / (k + 1);
    const int r = (d + 1) % (k + 1);

    // Block-major vertex ids: s_0 first, then s_1, ..., z last.
    std::vector<std::vector<vertex_t>> blocks(k + 2);
    std::vector<std::string> labels;
    vertex_t next = 0;
    for (int i = 0; i < k + 2; ++i) {
        int size = q + (i < r ? 1 : 0);
        for (int j = 0; j < size; ++j) {
            blocks[i].push_back(next++);
            labels.push_back("s" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    vertex_t z = -1;
    if (r > 0) {
        z = next++;
        labels.push_back("z");
    }

    std::vector<Face> facets;
    for (int i = 0; i < k + 2; ++i) {
        std::vector<vertex_t> f;
        for (int j = 0; j < k + 2; ++j)
            if (j != i) f.insert(f.end(), blocks[j].begin(), blocks[j].end());
        if (i < r) f.push_back(z); // z rides along exactly when s_i is large
        facets.push_back(Face(std::move(f)));
        require(facets.back().dim() == d, "MH facet has d+1 vertices");
    }

    Face total = facets[0];
    for (const Face& f : facets) total = total.intersect(f);
    require(total.empty(), "MH facets have empty total intersection");

    SimplicialComplex x = from_facets(std::move(facets));
    require(static_cast<long long>(x.vertex_count()) == bound_pure(d, k),
            "MH vertex count equals the pure bound");
    require(x.facet_count() == static_cast<std::size_t>(k + 2),
            "MH has k+2 facets");
    for (vertex_t v = 0; v < static_cast<vertex_t>(labels.size()); ++v)
        x.set_label(v, labels[v]);
    return x;
}

MsConstruction build_ms_parts(int d, int k) {
    check_strong_params(d, k);
    const int wsize = static_cast<int>(ceil_div(d, k)) + 1;

    MsConstruction ms;
    std::vector<vertex_t> V, W;
    for (int i = 0; i < d; ++i) V.push_back(i);
    for (int i = 0; i < wsize; ++i) W.push_back(d + i);
    ms.v_block = Face(V);
    ms.w_block = Face(W);
    ms.w1 = d;

    // Partition V into S_1..S_k, the first (d mod k) blocks one longer.
    std::vector<int> sizes = block_sizes(d, k);
    std::vector<std::vector<vertex_t>> s_blocks(k);
    int at = 0;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < sizes[j]; ++i) s_blocks[j].push_back(at++);

    std::vector<Face> prime_facets{ms.v_block};
    for (int j = 0; j < k; ++j) {
        std::vector<vertex_t> f(W);
        for (int l = 0; l < k; ++l)
            if (l != j)
                f.insert(f.end(), s_blocks[l].begin(), s_blocks[l].end());
        prime_facets.push_back(Face(std::move(f)));
    }
    ms.ms_prime = from_facets(prime_facets);

    std::vector<vertex_t> big(V);
    for (int i = 1; i < wsize; ++i) big.push_back(W[i]); // V u W minus w1
    std::vector<Face> dp_facets = prime_facets;
    dp_facets.push_back(Face(big));
    ms.ms_double_prime = from_facets(dp_facets);

    std::vector<vertex_t> attach(V);
    attach.push_back(ms.w1);
    ms.attachment = full_simplex(Face(attach));

    ms.full = union_complexes(ms.ms_double_prime, ms.attachment).union_complex;
    ms.skeleton = ms.full.skeleton(d);

    for (int i = 0; i < d; ++i)
        ms.skeleton.set_label(i, "v" + std::to_string(i + 1));
    for (int i = 0; i < wsize; ++i)
        ms.skeleton.set_label(d + i, "w" + std::to_string(i + 1));

    // Postconditions from the construction's statement.
    require(static_cast<long long>(ms.skeleton.vertex_count()) ==
                bound_strong(d, k),
            "MS vertex count equals the strong bound");
    require(is_strongly_connected(ms.skeleton, d),
            "MS d-skeleton is strongly connected");
    require(is_homology_nontrivial(ms.skeleton, k),
            "MS d-skeleton has nontrivial H_k");
    std::vector<vertex_t> w1v(V);
    w1v.push_back(ms.w1);
    NerveComplex nv =
        nerve_max(ms.ms_double_prime.induced_subcomplex(Face(w1v)));
    require(nv.complex == boundary_of_simplex(k + 1),
            "induced subcomplex on {w1} u V has nerve bd(Delta^k)");
    return ms;
}

SimplicialComplex build_ms(int d, int k) { return build_ms_parts(d, k).skeleton; }

RelConstruction build_rel_parts(int d, int k, int m) {
    bound_rel(d, k, m); // validates the parameter domain
    const int qsize = static_cast<int>(ceil_div(m, k));

    RelConstruction rel;
    std::vector<vertex_t> V, W, Q;
    for (int i = 0; i < m; ++i) V.push_back(i);
    for (int i = 0; i < d + 1 - m; ++i) W.push_back(m + i);
    for (int i = 0; i < qsize; ++i) Q.push_back(d + 1 + i);
    rel.v_block = Face(V);
    rel.w_block = Face(W);
    rel.q1 = Q[0];

    std::vector<int> sizes = block_sizes(m, k);
    std::vector<std::vector<vertex_t>> v_blocks(k);
    int at = 0;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < sizes[j]; ++i) v_blocks[j].push_back(at++);

    // C': all d-faces of V u Q through q1, and of (V \ V_j) u W u Q through
    // q1 for each j. q1 is a cone point, so C' is contractible.
    std::vector<Face> cp_facets;
    {
        std::vector<vertex_t> vq(V);
        vq.insert(vq.end(), Q.begin(), Q.end());
        for (Face& f : subsets_containing(vq, rel.q1, d + 1))
            cp_facets.push_back(std::move(f));
    }
    for (int j = 0; j < k; ++j) {
        std::vector<vertex_t> rest;
        for (int l = 0; l < k; ++l)
            if (l != j)
                rest.insert(rest.end(), v_blocks[l].begin(), v_blocks[l].end());
        rest.insert(rest.end(), W.begin(), W.end());
        rest.insert(rest.end(), Q.begin(), Q.end());
        for (Face& f : subsets_containing(rest, rel.q1, d + 1))
            cp_facets.push_back(std::move(f));
    }
    rel.c_prime = from_facets(std::move(cp_facets));

    std::vector<vertex_t> vw(V);
    vw.insert(vw.end(), W.begin(), W.end());
    rel.attachment = full_simplex(Face(vw));
    rel.full = union_complexes(rel.c_prime, rel.attachment).union_complex;

    for (int i = 0; i < m; ++i)
        rel.full.set_label(i, "v" + std::to_string(i + 1));
    for (int i = 0; i < d + 1 - m; ++i)
        rel.full.set_label(m + i, "w" + std::to_string(m + 1 + i));
    for (int i = 0; i < qsize; ++i)
        rel.full.set_label(d + 1 + i, "q" + std::to_string(i + 1));

    require(static_cast<long long>(rel.full.vertex_count()) ==
                bound_rel(d, k, m),
            "relative example vertex count equals the relative bound");
    for (const Face& f : rel.c_prime.facets())
        require(f.contains(rel.q1), "q1 is a cone point of C'");
    require(homology_profile(rel.c_prime, /*reduced=*/true).all_trivial(),
            "C' is acyclic");
    require(is_strongly_connected(rel.full, m),
            "relative example is strongly connected w.r.t. m");
    require(is_homology_nontrivial(rel.full, k),
            "relative example has nontrivial H_k");
    return rel;
}

SimplicialComplex build_rel(int d, int k, int m) {
    return build_rel_parts(d, k, m).full;
}

SimplicialComplex build_suspension_example(int d, int k) {
    check_strong_params(d, k);
    SimplicialComplex base = build_mh(d - 1, k - 1);
    const vertex_t apex = static_cast<vertex_t>(base.vertex_count());

    std::vector<Face> facets;
    {
        std::vector<vertex_t> all(base.vertices());
        facets.push_back(Face(std::move(all))); // simplex on the old vertices
    }
    for (const Face& f : base.facets()) facets.push_back(f.with_vertex(apex));

    SimplicialComplex x = from_facets(std::move(facets)).skeleton(d);
    for (const auto& [v, label] : base.labels()) x.set_label(v, label);
    x.set_label(apex, "v");

    require(static_cast<long long>(x.vertex_count()) == bound_strong(d, k),
            "suspension example vertex count equals the strong bound");
    require(is_strongly_connected(x, d),
            "suspension example is strongly connected");
    require(is_homology_nontrivial(x, k),
            "suspension example has nontrivial H_k");
    return x;
}

} // namespace homex
