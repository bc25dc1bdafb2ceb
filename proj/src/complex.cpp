#include "homex/complex.hpp"

#include <set>

namespace homex {

SimplicialComplex from_facets(std::vector<Face> faces) {
    for (const Face& f : faces)
        if (f.empty())
            throw ValidationError("the empty face cannot be a facet");

    // Absorb duplicates and dominated faces: sort by size descending so a
    // face only needs to be checked against already-kept (larger) ones.
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<Face> maximal;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& g : maximal) {
            if (f.is_subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());

    SimplicialComplex x;
    x.facets_ = std::move(maximal);
    std::set<vertex_t> verts;
    for (const Face& f : x.facets_)
        verts.insert(f.vertices().begin(), f.vertices().end());
    x.vertices_.assign(verts.begin(), verts.end());
    return x;
}

SimplicialComplex full_simplex(const Face& vertices) {
    if (vertices.empty()) return SimplicialComplex();
    return from_facets({vertices});
}

namespace {

// All (i+1)-subsets of the facet, in lexicographic order.
void emit_subfaces(const Face& facet, int i, std::set<Face>& out) {
    const auto& v = facet.vertices();
    const int n = static_cast<int>(v.size());
    const int k = i + 1;
    if (k <= 0 || k > n) return;
    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j) idx[j] = j;
    while (true) {
        std::vector<vertex_t> sub(k);
        for (int j = 0; j < k; ++j) sub[j] = v[idx[j]];
        out.insert(Face(std::move(sub)));
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
}

} // namespace

const std::vector<Face>& SimplicialComplex::faces_of_dim(int i) const {
    static const std::vector<Face> kEmpty;
    if (i < 0) return kEmpty;
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_dim.find(i);
    if (it != cache_->by_dim.end()) return *it->second;

    std::set<Face> faces;
    for (const Face& f : facets_)
        if (f.dim() >= i) emit_subfaces(f, i, faces);
    auto stored = std::make_shared<const std::vector<Face>>(faces.begin(),
                                                            faces.end());
    cache_->by_dim.emplace(i, stored);
    return *stored;
}

long long SimplicialComplex::closure_size() const {
    long long total = 0;
    for (int i = 0; i <= dim(); ++i)
        total += static_cast<long long>(faces_of_dim(i).size());
    return total;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    for (int i = 0; i <= dim(); ++i)
        fv.counts.push_back(static_cast<long long>(faces_of_dim(i).size()));
    return fv;
}

bool SimplicialComplex::is_pure(int d) const {
    if (facets_.empty())
        throw PreconditionError("is_pure requires a nonempty complex");
    for (const Face& f : facets_)
        if (f.dim() != d) return false;
    return true;
}

SimplicialComplex SimplicialComplex::induced_subcomplex(
    const Face& vertex_subset) const {
    std::vector<Face> restricted;
    for (const Face& f : facets_) {
        Face g = f.intersect(vertex_subset);
        if (!g.empty()) restricted.push_back(std::move(g));
    }
    return from_facets(std::move(restricted));
}

SimplicialComplex SimplicialComplex::cone(vertex_t apex) const {
    if (has_vertex(apex))
        throw ValidationError("cone apex " + std::to_string(apex) +
                              " already belongs to the complex");
    std::vector<Face> coned;
    coned.reserve(facets_.size());
    for (const Face& f : facets_) coned.push_back(f.with_vertex(apex));
    return from_facets(std::move(coned));
}

SimplicialComplex SimplicialComplex::suspension() const {
    vertex_t fresh = vertices_.empty() ? 0 : vertices_.back() + 1;
    std::vector<Face> out;
    out.reserve(2 * facets_.size());
    for (const Face& f : facets_) {
        out.push_back(f.with_vertex(fresh));
        out.push_back(f.with_vertex(fresh + 1));
    }
    return from_facets(std::move(out));
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    if (i < 0) return SimplicialComplex();
    std::vector<Face> out;
    for (const Face& f : facets_) {
        if (f.dim() <= i) {
            out.push_back(f);
        } else {
            std::set<Face> subs;
            emit_subfaces(f, i, subs);
            out.insert(out.end(), subs.begin(), subs.end());
        }
    }
    return from_facets(std::move(out));
}

UnionResult union_complexes(const SimplicialComplex& a,
                            const SimplicialComplex& b) {
    std::vector<Face> both(a.facets());
    both.insert(both.end(), b.facets().begin(), b.facets().end());

    // A face lies in both complexes iff it is contained in some pairwise
    // facet intersection, so those intersections generate A cap B.
    std::vector<Face> common;
    for (const Face& fa : a.facets())
        for (const Face& fb : b.facets()) {
            Face g = fa.intersect(fb);
            if (!g.empty()) common.push_back(std::move(g));
        }
    return UnionResult{from_facets(std::move(both)),
                       from_facets(std::move(common))};
}

} // namespace homex
