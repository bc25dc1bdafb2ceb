#include "homex/homology.hpp"

#include <algorithm>
#include <limits>

namespace homex {

namespace {

long long narrow_factor(const BigInt& d) {
    if (d > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error("torsion coefficient exceeds int64");
    return d.convert_to<long long>();
}

std::vector<long long> torsion_of(const SmithNormalForm& snf) {
    std::vector<long long> out;
    for (const BigInt& d : snf.nonunit_factors()) out.push_back(narrow_factor(d));
    return out;
}

// rank of the boundary map in degree i, with the reduced convention for i=0
int boundary_rank(const SimplicialComplex& x, int i, bool reduced) {
    if (i <= 0)
        return (reduced && i == 0 && !x.vertices().empty()) ? 1 : 0;
    if (i > x.dim()) return 0;
    return smith_normal_form(boundary_matrix(x, i)).rank();
}

} // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& x, int i, bool reduced) {
    if (i < 0) throw PreconditionError("boundary_matrix requires i >= 0");
    const auto& cols = x.faces_of_dim(i);
    if (i == 0) {
        IntegerMatrix m(reduced ? 1 : 0, static_cast<int>(cols.size()));
        if (reduced)
            for (int c = 0; c < m.cols(); ++c) m.set(0, c, 1);
        return m;
    }
    const auto& rows = x.faces_of_dim(i - 1);
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const Face& f = cols[c];
        int sign = 1;
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face sub = f.without_index(j);
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            m.set(static_cast<int>(it - rows.begin()), c, sign);
            sign = -sign;
        }
    }
    return m;
}

HomologyProfile homology_profile(const SimplicialComplex& x, bool reduced) {
    HomologyProfile p;
    p.reduced = reduced;
    const int d = x.dim();
    if (d < 0) return p;

    // betti_i = f_i - rank d_i - rank d_{i+1}; torsion_i comes from the
    // invariant factors of d_{i+1}.
    std::vector<int> rank(d + 2, 0);
    std::vector<std::vector<long long>> tors(d + 2);
    rank[0] = boundary_rank(x, 0, reduced);
    for (int i = 1; i <= d; ++i) {
        SmithNormalForm snf = smith_normal_form(boundary_matrix(x, i));
        rank[i] = snf.rank();
        tors[i] = torsion_of(snf);
    }
    for (int i = 0; i <= d; ++i) {
        long long fi = static_cast<long long>(x.faces_of_dim(i).size());
        p.betti.push_back(fi - rank[i] - rank[i + 1]);
        p.torsion.push_back(tors[i + 1]);
    }
    return p;
}

bool is_homology_nontrivial(const SimplicialComplex& x, int k) {
    if (k < 0 || x.empty() || k > x.dim()) return false;
    long long fk = static_cast<long long>(x.faces_of_dim(k).size());
    long long betti = fk - boundary_rank(x, k, /*reduced=*/true);
    if (k < x.dim()) {
        SmithNormalForm snf = smith_normal_form(boundary_matrix(x, k + 1));
        betti -= snf.rank();
        if (!snf.nonunit_factors().empty()) return true;
    }
    return betti > 0;
}

bool mv_corollary_check(const SimplicialComplex& x, const SimplicialComplex& a,
                        const SimplicialComplex& b, int n) {
    if (n < 1) throw PreconditionError("mv_corollary_check requires n >= 1");
    UnionResult u = union_complexes(a, b);
    if (!(u.union_complex == x))
        throw PreconditionError("mv_corollary_check: A u B is not X");
    if (b.facet_count() != 1)
        throw PreconditionError(
            "mv_corollary_check: B must be a single full simplex");
    HomologyProfile pa = homology_profile(a, /*reduced=*/true);
    if (pa.nontrivial_at(n) || pa.nontrivial_at(n - 1))
        throw PreconditionError(
            "mv_corollary_check: A must have trivial reduced H_n and H_{n-1}");

    HomologyProfile px = homology_profile(x, /*reduced=*/true);
    HomologyProfile pi = homology_profile(u.intersection, /*reduced=*/true);
    return px.betti_at(n) == pi.betti_at(n - 1) &&
           px.torsion_at(n) == pi.torsion_at(n - 1);
}

} // namespace homex
