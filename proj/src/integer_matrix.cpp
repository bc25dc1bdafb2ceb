#include "homex/integer_matrix.hpp"

#include <cassert>

namespace homex {

namespace {

template <typename T>
std::vector<std::vector<T>> dense_copy(const IntegerMatrix& m) {
    std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols(), T(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = T(v);
    return a;
}

// Finds the position of a nonzero entry of minimal absolute value in the
// trailing submatrix starting at (t, t); returns false if it is all zero.
template <typename T>
bool find_min_pivot(const std::vector<std::vector<T>>& a, int t, int& pi,
                    int& pj) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    bool found = false;
    T best(0);
    for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
            if (is_zero(a[i][j])) continue;
            T mag = abs_value(a[i][j]);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

template <typename T>
std::vector<T> snf_diagonal(std::vector<std::vector<T>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<T> diag;
    if (rows == 0 || cols == 0) return diag;

    int t = 0;
    while (t < rows && t < cols) {
        int pi, pj;
        if (!find_min_pivot(a, t, pi, pj)) break;
        std::swap(a[t], a[pi]);
        if (pj != t)
            for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        // Clear row t and column t. A nonzero remainder after reduction
        // becomes the new (strictly smaller) pivot, so this terminates.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (is_zero(a[i][t])) continue;
                T q = a[i][t] / a[t][t];
                if (!is_zero(q))
                    for (int j = t; j < cols; ++j)
                        a[i][j] -= q * a[t][j];
                if (!is_zero(a[i][t])) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (is_zero(a[t][j])) continue;
                T q = a[t][j] / a[t][t];
                if (!is_zero(q))
                    for (int i = t; i < rows; ++i)
                        a[i][j] -= q * a[i][t];
                if (!is_zero(a[t][j])) {
                    for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Divisibility fix: the pivot must divide the whole trailing
            // submatrix for the invariant-factor chain. Folding an offending
            // row into row t dirties it, so re-enter the cleaning loop.
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!is_zero(a[i][j] % a[t][t])) {
                        for (int l = t; l < cols; ++l) a[t][l] += a[i][l];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs_value(a[t][t]));
        ++t;
    }
    return diag;
}

template <typename T>
int bareiss_rank(std::vector<std::vector<T>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (rows == 0 || cols == 0) return 0;

    T prev(1);
    int r = 0;
    while (r < rows && r < cols) {
        int pi, pj;
        if (!find_min_pivot(a, r, pi, pj)) break;
        std::swap(a[r], a[pi]);
        if (pj != r)
            for (int i = r; i < rows; ++i) std::swap(a[i][r], a[i][pj]);

        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                T num = a[i][j] * a[r][r] - a[i][r] * a[r][j];
                assert(is_zero(num % prev)); // Bareiss division is exact
                a[i][j] = num / prev;
            }
            a[i][r] = T(0);
        }
        prev = a[r][r];
        ++r;
    }
    return r;
}

} // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
    try {
        std::vector<Checked64> diag = snf_diagonal(dense_copy<Checked64>(m));
        SmithNormalForm out;
        for (Checked64 d : diag) out.diagonal.emplace_back(d.v);
        return out;
    } catch (const Int64Overflow&) {
        SmithNormalForm out;
        out.diagonal = snf_diagonal(dense_copy<BigInt>(m));
        return out;
    }
}

int rank_rational(const IntegerMatrix& m) {
    try {
        return bareiss_rank(dense_copy<Checked64>(m));
    } catch (const Int64Overflow&) {
        return bareiss_rank(dense_copy<BigInt>(m));
    }
}

} // namespace homex
