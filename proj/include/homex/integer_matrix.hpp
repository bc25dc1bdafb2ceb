#ifndef HOMEX_INTEGER_MATRIX_HPP
#define HOMEX_INTEGER_MATRIX_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "homex/errors.hpp"
#include "homex/exact.hpp"

namespace homex {

/**
 * Sparse integer matrix with exact entries; carries boundary maps and other
 * small exact matrices. Only nonzero entries are stored.
 */
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw ValidationError("matrix dimensions must be non-negative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, std::int64_t value) {
        check_index(r, c);
        if (value == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = value;
    }

    std::int64_t at(int r, int c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, std::int64_t>& entries() const {
        return entries_;
    }

    std::size_t nonzero_count() const { return entries_.size(); }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw ValidationError("matrix index out of range");
    }

    int rows_, cols_;
    std::map<std::pair<int, int>, std::int64_t> entries_;
};

/**
 * Smith normal form of an integer matrix: the invariant factors
 * d_1 | d_2 | ... | d_r, all positive, with r the rank.
 */
struct SmithNormalForm {
    std::vector<BigInt> diagonal;

    int rank() const { return static_cast<int>(diagonal.size()); }

    // Invariant factors strictly greater than one (the torsion part).
    std::vector<BigInt> nonunit_factors() const {
        std::vector<BigInt> out;
        for (const BigInt& d : diagonal)
            if (d > 1) out.push_back(d);
        return out;
    }
};

/**
 * Computes the Smith normal form by elementary row/column operations with
 * minimal-absolute-value pivoting. Runs over checked 64-bit integers and
 * restarts over arbitrary-precision integers if any intermediate overflows.
 */
SmithNormalForm smith_normal_form(const IntegerMatrix& m);

/**
 * Rank over the rationals via fraction-free (Bareiss) elimination. An
 * algebraically independent route from smith_normal_form; the two ranks are
 * cross-checked in the test suite.
 */
int rank_rational(const IntegerMatrix& m);

} // namespace homex

#endif
