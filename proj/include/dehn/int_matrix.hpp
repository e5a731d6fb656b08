#pragma once

#include "dehn/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dehn {

// Dense integer matrix over arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& rhs) const;

    // Removes one row and one column.
    IntMatrix minor_matrix(std::size_t row, std::size_t col) const;

    // Leading principal submatrix of size k.
    IntMatrix leading(std::size_t k) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    // row_i += c * row_j, col_i += c * col_j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);

    // Exact determinant, fraction-free (Bareiss).
    Int det() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

}  // namespace dehn
