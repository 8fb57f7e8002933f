#pragma once

#include "logmin/monoid/integer.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace logmin::monoid {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    Vec apply(const Vec& x) const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[a] += k * row[b]
    void add_row(std::size_t a, std::size_t b, const Integer& k);
    void add_col(std::size_t a, std::size_t b, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool is_zero() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

Integer determinant(const IntMatrix& a);

// U * A * V = D with D diagonal, d_1 | d_2 | ..., nonzero entries positive.
struct SmithForm {
    IntMatrix U, U_inv, D, V, V_inv;
    std::size_t rank = 0;
    Integer diag(std::size_t i) const { return i < D.rows() && i < D.cols() ? D(i, i) : Integer(0); }
};

SmithForm smith_normal_form(const IntMatrix& a);

// integer basis of {x : A x = 0}
std::vector<Vec> integer_kernel(const IntMatrix& a);
std::vector<Vec> integer_kernel(const SmithForm& snf);

// some integer x with A x = b, if one exists
std::optional<Vec> solve_integer(const SmithForm& snf, const Vec& b);

}  // namespace logmin::monoid
