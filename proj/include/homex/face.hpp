#ifndef HOMEX_FACE_HPP
#define HOMEX_FACE_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "homex/errors.hpp"

namespace homex {

using vertex_t = int;

/**
 * A single simplex, stored as its strictly increasing vertex list.
 *
 * The ascending order doubles as the orientation convention: boundary signs
 * are taken with respect to it. The empty face is representable (dimension
 * -1) so that intersections can be computed uniformly, but complexes never
 * admit it as a facet.
 */
class Face {
public:
    Face() = default;

    explicit Face(std::vector<vertex_t> vertices) {
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0)
                throw ValidationError("face vertex ids must be non-negative");
            if (i > 0 && vertices[i] == vertices[i - 1])
                throw ValidationError("face has a duplicate vertex: " +
                                      std::to_string(vertices[i]));
        }
        verts_ = std::move(vertices);
    }

    Face(std::initializer_list<vertex_t> vertices)
        : Face(std::vector<vertex_t>(vertices)) {}

    const std::vector<vertex_t>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }

    bool contains(vertex_t v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool is_subset_of(const Face& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    Face intersect(const Face& other) const {
        std::vector<vertex_t> out;
        std::set_intersection(verts_.begin(), verts_.end(),
                              other.verts_.begin(), other.verts_.end(),
                              std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    std::size_t intersection_size(const Face& other) const {
        std::size_t n = 0, i = 0, j = 0;
        while (i < verts_.size() && j < other.verts_.size()) {
            if (verts_[i] < other.verts_[j]) ++i;
            else if (verts_[i] > other.verts_[j]) ++j;
            else { ++n; ++i; ++j; }
        }
        return n;
    }

    Face unite(const Face& other) const {
        std::vector<vertex_t> out;
        std::set_union(verts_.begin(), verts_.end(),
                       other.verts_.begin(), other.verts_.end(),
                       std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    // Face with one extra vertex; v must not already be present.
    Face with_vertex(vertex_t v) const {
        if (contains(v))
            throw ValidationError("vertex already present in face");
        std::vector<vertex_t> out(verts_);
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    // Face with the i-th vertex (ascending order) removed.
    Face without_index(std::size_t i) const {
        std::vector<vertex_t> out(verts_);
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    // Lexicographic order on vertex sequences; the library-wide deterministic
    // face order.
    friend bool operator<(const Face& a, const Face& b) {
        return a.verts_ < b.verts_;
    }
    friend bool operator==(const Face& a, const Face& b) {
        return a.verts_ == b.verts_;
    }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Face& f) {
        os << '{';
        for (std::size_t i = 0; i < f.verts_.size(); ++i) {
            if (i) os << ',';
            os << f.verts_[i];
        }
        return os << '}';
    }

private:
    std::vector<vertex_t> verts_;
};

} // namespace homex

#endif
