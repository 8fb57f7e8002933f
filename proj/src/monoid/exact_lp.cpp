#include "logmin/monoid/exact_lp.hpp"

#include <stdexcept>

namespace logmin::monoid::lp {

namespace {

class PhaseOne {
public:
    PhaseOne(const std::vector<RatVec>& A, const RatVec& b) : m_(A.size()), n_(m_ ? A[0].size() : 0) {
        width_ = n_ + m_ + 1;
        t_.assign(m_, RatVec(width_));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (A[i].size() != n_) throw std::invalid_argument("feasible_point: ragged constraint matrix");
            bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
            t_[i][n_ + i] = 1;
            t_[i][width_ - 1] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
        cost_.assign(width_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) cost_[j] -= t_[i][j];
            cost_[width_ - 1] -= t_[i][width_ - 1];
        }
    }

    std::optional<RatVec> solve() {
        for (;;) {
            std::size_t enter = width_;
            for (std::size_t j = 0; j + 1 < width_; ++j)
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == width_) break;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][width_ - 1] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m_) break;  // unbounded cannot happen in phase one
            pivot(leave, enter);
        }
        if (cost_[width_ - 1] != 0) return std::nullopt;
        RatVec x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][width_ - 1];
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        Rational p = t_[r][c];
        for (auto& v : t_[r]) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rational k = t_[i][c];
            for (std::size_t j = 0; j < width_; ++j)
                if (t_[r][j] != 0) t_[i][j] -= k * t_[r][j];
        }
        if (cost_[c] != 0) {
            Rational k = cost_[c];
            for (std::size_t j = 0; j < width_; ++j)
                if (t_[r][j] != 0) cost_[j] -= k * t_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t m_, n_, width_;
    std::vector<RatVec> t_;
    RatVec cost_;  // reduced costs; last entry is minus the objective
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RatVec> feasible_point(const std::vector<RatVec>& A, const RatVec& b) {
    if (A.size() != b.size()) throw std::invalid_argument("feasible_point: row count mismatch");
    if (A.empty()) return RatVec{};
    return PhaseOne(A, b).solve();
}

bool in_cone(std::span<const Vec> gens, const Vec& target) {
    const std::size_t d = target.size();
    std::vector<RatVec> A(d, RatVec(gens.size()));
    RatVec b(d);
    for (std::size_t i = 0; i < d; ++i) {
        b[i] = target[i];
        for (std::size_t j = 0; j < gens.size(); ++j) A[i][j] = gens[j][i];
    }
    if (d == 0) return true;
    if (gens.empty()) {
        for (const auto& x : target)
            if (x != 0) return false;
        return true;
    }
    return feasible_point(A, b).has_value();
}

std::optional<Vec> strictly_positive_functional(std::span<const Vec> vecs, std::size_t dim) {
    Vec ones(dim, Integer(1));
    bool ok = true;
    for (const auto& v : vecs)
        if (dot(ones, v) < 1) {
            ok = false;
            break;
        }
    if (ok) return ones;
    // v.(w+ - w-) - s = 1
    const std::size_t k = vecs.size();
    std::vector<RatVec> A(k, RatVec(2 * dim + k));
    RatVec b(k, Rational(1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < dim; ++t) {
            A[i][t] = vecs[i][t];
            A[i][dim + t] = -vecs[i][t];
        }
        A[i][2 * dim + i] = -1;
    }
    auto x = feasible_point(A, b);
    if (!x) return std::nullopt;
    Integer den = 1;
    for (std::size_t t = 0; t < 2 * dim; ++t) den = lcm(den, denominator((*x)[t]));
    Vec w(dim);
    for (std::size_t t = 0; t < dim; ++t) {
        Rational wt = ((*x)[t] - (*x)[dim + t]) * den;
        w[t] = numerator(wt);
    }
    Integer g = 0;
    for (const auto& c : w) g = gcd(g, c);
    // keep w.v >= 1 after dividing by the content
    Integer minval = -1;
    for (const auto& v : vecs) {
        Integer val = dot(w, v);
        if (minval < 0 || val < minval) minval = val;
    }
    if (g > 1 && minval >= g)
        for (auto& c : w) c /= g;
    return w;
}

bool in_face_of(std::span<const Vec> gens, const Vec& point, const Vec& x) {
    const std::size_t d = x.size();
    if (d == 0) return true;
    std::vector<RatVec> A(d, RatVec(gens.size() + 1));
    RatVec b(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) A[i][j] = gens[j][i];
        A[i][gens.size()] = -point[i];
        b[i] = -x[i];
    }
    return feasible_point(A, b).has_value();
}

}  // namespace logmin::monoid::lp
