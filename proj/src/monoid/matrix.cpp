#include "logmin/monoid/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace logmin::monoid {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("IntMatrix::from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vec IntMatrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec IntMatrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vec IntMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer s = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Integer& a = (*this)(r, c);
            if (a != 0 && x[c] != 0) s += a * x[c];
        }
        y[r] = std::move(s);
    }
    return y;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(b, c) != 0) (*this)(a, c) += k * (*this)(b, c);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, b) != 0) (*this)(r, a) += k * (*this)(r, b);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// fraction-free Gaussian elimination
Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& a)
        : f_{IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()),
             IntMatrix::identity(a.cols()), 0} {}

    SmithForm run() {
        IntMatrix& d = f_.D;
        const std::size_t limit = std::min(d.rows(), d.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!move_min_to(t, t, t)) break;
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < d.rows(); ++i) {
                    if (d(i, t) == 0) continue;
                    row_add(i, t, -floor_div(d(i, t), d(t, t)));
                    if (d(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < d.cols(); ++j) {
                    if (d(t, j) == 0) continue;
                    col_add(j, t, -floor_div(d(t, j), d(t, t)));
                    if (d(t, j) != 0) clean = false;
                }
                if (!clean) {
                    move_min_in_cross(t);
                    continue;
                }
                std::size_t bad = find_indivisible(t);
                if (bad == d.rows()) break;
                row_add(t, bad, 1);
            }
            if (d(t, t) < 0) row_negate(t);
        }
        f_.rank = t;
        return std::move(f_);
    }

private:
    // smallest nonzero |entry| of the trailing block moved to (t, t)
    bool move_min_to(std::size_t t, std::size_t r0, std::size_t c0) {
        IntMatrix& d = f_.D;
        std::size_t br = d.rows(), bc = d.cols();
        Integer best;
        for (std::size_t r = r0; r < d.rows(); ++r)
            for (std::size_t c = c0; c < d.cols(); ++c) {
                if (d(r, c) == 0) continue;
                Integer v = abs(d(r, c));
                if (br == d.rows() || v < best) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        if (br == d.rows()) return false;
        row_swap(t, br);
        col_swap(t, bc);
        return true;
    }

    void move_min_in_cross(std::size_t t) {
        IntMatrix& d = f_.D;
        Integer best = abs(d(t, t));
        std::size_t br = t, bc = t;
        for (std::size_t i = t; i < d.rows(); ++i)
            if (d(i, t) != 0 && (best == 0 || abs(d(i, t)) < best)) {
                best = abs(d(i, t));
                br = i;
                bc = t;
            }
        for (std::size_t j = t; j < d.cols(); ++j)
            if (d(t, j) != 0 && (best == 0 || abs(d(t, j)) < best)) {
                best = abs(d(t, j));
                br = t;
                bc = j;
            }
        row_swap(t, br);
        col_swap(t, bc);
    }

    std::size_t find_indivisible(std::size_t t) const {
        const IntMatrix& d = f_.D;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
            for (std::size_t j = t + 1; j < d.cols(); ++j)
                if (d(i, j) % d(t, t) != 0) return i;
        return d.rows();
    }

    void row_swap(std::size_t a, std::size_t b) {
        f_.D.swap_rows(a, b);
        f_.U.swap_rows(a, b);
        f_.U_inv.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        f_.D.swap_cols(a, b);
        f_.V.swap_cols(a, b);
        f_.V_inv.swap_rows(a, b);
    }
    void row_add(std::size_t a, std::size_t b, const Integer& k) {
        f_.D.add_row(a, b, k);
        f_.U.add_row(a, b, k);
        f_.U_inv.add_col(b, a, -k);
    }
    void col_add(std::size_t a, std::size_t b, const Integer& k) {
        f_.D.add_col(a, b, k);
        f_.V.add_col(a, b, k);
        f_.V_inv.add_row(b, a, -k);
    }
    void row_negate(std::size_t r) {
        f_.D.negate_row(r);
        f_.U.negate_row(r);
        f_.U_inv.negate_col(r);
    }

    SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

std::vector<Vec> integer_kernel(const SmithForm& snf) {
    std::vector<Vec> basis;
    for (std::size_t j = snf.rank; j < snf.V.cols(); ++j) basis.push_back(snf.V.column(j));
    return basis;
}

std::vector<Vec> integer_kernel(const IntMatrix& a) { return integer_kernel(smith_normal_form(a)); }

std::optional<Vec> solve_integer(const SmithForm& snf, const Vec& b) {
    if (b.size() != snf.U.cols()) throw std::invalid_argument("solve_integer: dimension mismatch");
    Vec w = snf.U.apply(b);
    Vec y(snf.V.cols());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < snf.rank) {
            const Integer& d = snf.D(i, i);
            if (w[i] % d != 0) return std::nullopt;
            y[i] = w[i] / d;
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V.apply(y);
}

}  // namespace logmin::monoid
