#ifndef HOMEX_COMPLEX_HPP
#define HOMEX_COMPLEX_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "homex/face.hpp"

namespace homex {

// Face counts per dimension, f_0 .. f_dim. Empty complex has no counts.
struct FVector {
    std::vector<long long> counts;

    long long euler_characteristic() const {
        long long chi = 0;
        int sign = 1;
        for (long long c : counts) {
            chi += sign * c;
            sign = -sign;
        }
        return chi;
    }

    friend bool operator==(const FVector& a, const FVector& b) {
        return a.counts == b.counts;
    }
};

/**
 * A finite abstract simplicial complex represented by its maximal faces.
 *
 * Facets form an antichain and are kept in lexicographic order; the vertex
 * set is exactly the union of the facets. Complexes are immutable after
 * construction, so concurrent reads are safe. The downward closure is
 * computed lazily per dimension and memoized; copies share the memo.
 */
class SimplicialComplex {
public:
    SimplicialComplex() : cache_(std::make_shared<ClosureCache>()) {}

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<vertex_t>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t facet_count() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }

    // Dimension of the complex; -1 for the empty complex.
    int dim() const {
        int d = -1;
        for (const Face& f : facets_) d = std::max(d, f.dim());
        return d;
    }

    bool has_vertex(vertex_t v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    // True iff f is a face of the complex (subset of some facet). The empty
    // face is a face of every nonempty complex.
    bool contains_face(const Face& f) const {
        if (facets_.empty()) return false;
        for (const Face& g : facets_)
            if (f.is_subset_of(g)) return true;
        return false;
    }

    // All i-dimensional faces of the downward closure, lexicographically
    // ordered. Memoized.
    const std::vector<Face>& faces_of_dim(int i) const;

    // Total number of faces over all dimensions (closure size).
    long long closure_size() const;

    FVector f_vector() const;

    bool is_pure(int d) const;

    SimplicialComplex induced_subcomplex(const Face& vertex_subset) const;
    SimplicialComplex cone(vertex_t apex) const;
    SimplicialComplex suspension() const;
    SimplicialComplex skeleton(int i) const;

    // Optional vertex labels (used by the construction generators and by
    // file I/O, which maps arbitrary tokens to dense ids).
    const std::map<vertex_t, std::string>& labels() const { return labels_; }
    void set_label(vertex_t v, std::string label) {
        labels_[v] = std::move(label);
    }
    std::string label_or_id(vertex_t v) const {
        auto it = labels_.find(v);
        return it != labels_.end() ? it->second : std::to_string(v);
    }

    // Equality is on facet sets; labels are presentation only.
    friend bool operator==(const SimplicialComplex& a,
                           const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }
    friend bool operator!=(const SimplicialComplex& a,
                           const SimplicialComplex& b) {
        return !(a == b);
    }

    friend SimplicialComplex from_facets(std::vector<Face> faces);

private:
    struct ClosureCache {
        std::mutex mu;
        std::map<int, std::shared_ptr<const std::vector<Face>>> by_dim;
    };

    std::vector<Face> facets_;     // lex-sorted antichain
    std::vector<vertex_t> vertices_;
    std::map<vertex_t, std::string> labels_;
    std::shared_ptr<ClosureCache> cache_;
};

/**
 * Builds the complex generated by the given faces: inclusion-maximal members
 * become the facets, duplicates and dominated faces are absorbed. The empty
 * input yields the empty complex; empty faces are rejected.
 */
SimplicialComplex from_facets(std::vector<Face> faces);

// Convenience: the full simplex on the given vertices.
SimplicialComplex full_simplex(const Face& vertices);

struct UnionResult {
    SimplicialComplex union_complex;
    SimplicialComplex intersection; // faces common to both inputs
};

// Union of two complexes, with their intersection complex for
// Mayer-Vietoris use.
UnionResult union_complexes(const SimplicialComplex& a,
                            const SimplicialComplex& b);

} // namespace homex

#endif
