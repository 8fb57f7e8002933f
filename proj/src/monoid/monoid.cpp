#include "logmin/monoid/monoid.hpp"

#include "logmin/monoid/exact_lp.hpp"
#include "logmin/monoid/graver.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace logmin::monoid {

struct FgMonoid::Data {
    FgAbelianGroup ambient;
    std::vector<GroupElement> gens;
    std::vector<bool> unit_gen;
    bool sharp = true;
    // Membership runs in a sharp frame: the ambient itself, or ambient / units.
    std::optional<QuotientMap> to_frame;
    FgAbelianGroup frame;
    std::vector<GroupElement> frame_gens;
    Vec grading;
    std::vector<Integer> weights;
    // Search order over frame_gens: the enumerated ones first, then a linearly independent tail that is
    // solved directly through `tail_inverse` on the rows `tail_rows` of the free part.
    std::vector<std::size_t> order;
    std::size_t tail = 0;
    std::vector<std::size_t> tail_rows;
    std::vector<std::vector<Rational>> tail_inverse;
};

namespace {

std::vector<GroupElement> canonical_generators(const FgAbelianGroup& ambient, std::vector<GroupElement> gens) {
    std::vector<GroupElement> out;
    for (auto& g : gens) {
        GroupElement r = ambient.make(g.coords());
        if (!r.is_zero()) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_unit_by_lp(const std::vector<Vec>& free_parts, std::size_t i, std::size_t rank) {
    // sum l_j v_j = 0, l_i - s = 1, l >= 0, s >= 0
    const std::size_t m = free_parts.size();
    std::vector<lp::RatVec> A(rank + 1, lp::RatVec(m + 1));
    lp::RatVec b(rank + 1);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t j = 0; j < m; ++j) A[r][j] = free_parts[j][r];
    A[rank][i] = 1;
    A[rank][m] = -1;
    b[rank] = 1;
    return lp::feasible_point(A, b).has_value();
}

// columns of `cols` (indices into it) that are linearly independent, scanned in the given order,
// with rows making the square submatrix invertible and its inverse
struct IndependentTail {
    std::vector<std::size_t> columns, rows;
    std::vector<std::vector<Rational>> inverse;
};

IndependentTail independent_tail(const std::vector<Vec>& cols, const std::vector<std::size_t>& scan, std::size_t dim) {
    IndependentTail t;
    std::vector<std::vector<Rational>> basis;  // reduced vectors with their pivot rows
    std::vector<std::size_t> pivots;
    for (std::size_t c : scan) {
        std::vector<Rational> v(cols[c].begin(), cols[c].end());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (v[pivots[b]] == 0) continue;
            Rational f = v[pivots[b]] / basis[b][pivots[b]];
            for (std::size_t r = 0; r < dim; ++r) v[r] -= f * basis[b][r];
        }
        std::size_t piv = dim;
        for (std::size_t r = 0; r < dim && piv == dim; ++r)
            if (v[r] != 0) piv = r;
        if (piv == dim) continue;
        basis.push_back(std::move(v));
        pivots.push_back(piv);
        t.columns.push_back(c);
    }
    t.rows = pivots;
    const std::size_t s = t.columns.size();
    // invert the s x s submatrix on the pivot rows by Gauss-Jordan
    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(2 * s));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) a[i][j] = Rational(cols[t.columns[j]][t.rows[i]]);
        a[i][s + i] = 1;
    }
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t p = col;
        while (a[p][col] == 0) ++p;
        std::swap(a[p], a[col]);
        Rational d = a[col][col];
        for (auto& x : a[col]) x /= d;
        for (std::size_t i = 0; i < s; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < 2 * s; ++j) a[i][j] -= f * a[col][j];
        }
    }
    t.inverse.assign(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) t.inverse[i][j] = a[i][s + j];
    return t;
}

class MembershipSearch {
public:
    explicit MembershipSearch(const FgMonoid::Data& d) : d_(d), failed_(d.order.size()), coeffs_(d.order.size()) {}

    bool run(const GroupElement& target, const Integer& weight) {
        if (weight < 0) return false;
        return dfs(0, target, weight);
    }
    // coefficients on frame_gens (not in search order)
    Vec coefficients() const {
        Vec out(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) out[d_.order[k]] = coeffs_[k];
        return out;
    }

private:
    const GroupElement& gen(std::size_t k) const { return d_.frame_gens[d_.order[k]]; }
    const Integer& weight(std::size_t k) const { return d_.weights[d_.order[k]]; }

    bool solve_tail(std::size_t i, const GroupElement& r) {
        const std::size_t s = d_.tail;
        Vec fp = d_.frame.free_part(r);
        GroupElement sum = d_.frame.zero();
        for (std::size_t a = 0; a < s; ++a) {
            Rational c = 0;
            for (std::size_t b = 0; b < s; ++b) c += d_.tail_inverse[a][b] * fp[d_.tail_rows[b]];
            if (c < 0 || denominator(c) != 1) return false;
            coeffs_[i + a] = numerator(c);
            sum = d_.frame.add(sum, d_.frame.scale(coeffs_[i + a], gen(i + a)));
        }
        return sum == r;
    }

    bool dfs(std::size_t i, const GroupElement& r, const Integer& budget) {
        if (r.is_zero()) {
            for (std::size_t j = i; j < coeffs_.size(); ++j) coeffs_[j] = 0;
            return true;
        }
        if (budget <= 0 || i == coeffs_.size()) return false;
        if (i + d_.tail == coeffs_.size()) return solve_tail(i, r);
        if (failed_[i].count(r.coords())) return false;
        Integer maxk = budget / weight(i);
        GroupElement rest = d_.frame.sub(r, d_.frame.scale(maxk, gen(i)));
        for (Integer k = maxk; k >= 0; --k) {
            if (dfs(i + 1, rest, budget - k * weight(i))) {
                coeffs_[i] = k;
                return true;
            }
            rest = d_.frame.add(rest, gen(i));
        }
        failed_[i].insert(r.coords());
        return false;
    }

    const FgMonoid::Data& d_;
    std::vector<std::unordered_set<Vec, VecHash>> failed_;
    Vec coeffs_;
};

}  // namespace

FgMonoid::FgMonoid() : FgMonoid(FgAbelianGroup{}, {}) {}

FgMonoid::FgMonoid(FgAbelianGroup ambient, std::vector<GroupElement> generators) {
    auto d = std::make_shared<Data>();
    d->ambient = std::move(ambient);
    d->gens = canonical_generators(d->ambient, std::move(generators));
    const std::size_t m = d->gens.size();
    const std::size_t rank = d->ambient.rank();
    std::vector<Vec> free_parts;
    for (const auto& g : d->gens) free_parts.push_back(d->ambient.free_part(g));

    d->unit_gen.assign(m, false);
    bool torsion_gen = false;
    for (std::size_t i = 0; i < m; ++i)
        if (std::all_of(free_parts[i].begin(), free_parts[i].end(), [](const Integer& x) { return x == 0; })) {
            d->unit_gen[i] = true;
            torsion_gen = true;
        }
    std::optional<Vec> w;
    if (!torsion_gen) w = lp::strictly_positive_functional(free_parts, rank);
    if (w) {
        d->sharp = true;
        d->frame = d->ambient;
        d->frame_gens = d->gens;
        d->grading = std::move(*w);
    } else {
        for (std::size_t i = 0; i < m; ++i)
            if (!d->unit_gen[i]) d->unit_gen[i] = is_unit_by_lp(free_parts, i, rank);
        std::vector<GroupElement> unit_gens, rest;
        for (std::size_t i = 0; i < m; ++i) (d->unit_gen[i] ? unit_gens : rest).push_back(d->gens[i]);
        d->sharp = unit_gens.empty();
        QuotientMap q(d->ambient, unit_gens);
        d->frame = q.target();
        for (const auto& g : rest) d->frame_gens.push_back(q.project(g));
        d->frame_gens = canonical_generators(d->frame, d->frame_gens);
        std::vector<Vec> frame_free;
        for (const auto& g : d->frame_gens) frame_free.push_back(d->frame.free_part(g));
        auto wf = lp::strictly_positive_functional(frame_free, d->frame.rank());
        if (!wf) throw Error(ErrorKind::ConstructionFailure, "sharp quotient has no positive grading");
        d->grading = std::move(*wf);
        d->to_frame = std::move(q);
    }
    for (const auto& g : d->frame_gens) d->weights.push_back(dot(d->grading, d->frame.free_part(g)));
    {
        // light generators go to the solved tail, heavy ones are enumerated (fewer multiples fit the budget)
        const std::size_t n = d->frame_gens.size();
        std::vector<std::size_t> scan(n);
        for (std::size_t i = 0; i < n; ++i) scan[i] = i;
        std::stable_sort(scan.begin(), scan.end(), [&](std::size_t a, std::size_t b) { return d->weights[a] < d->weights[b]; });
        std::vector<Vec> cols;
        for (const auto& g : d->frame_gens) cols.push_back(d->frame.free_part(g));
        IndependentTail t = independent_tail(cols, scan, d->frame.rank());
        std::vector<bool> in_tail(n, false);
        for (auto c : t.columns) in_tail[c] = true;
        for (std::size_t i = 0; i < n; ++i)
            if (!in_tail[i]) d->order.push_back(i);
        for (auto c : t.columns) d->order.push_back(c);
        d->tail = t.columns.size();
        d->tail_rows = std::move(t.rows);
        d->tail_inverse = std::move(t.inverse);
    }
    data_ = std::move(d);
}

FgMonoid FgMonoid::free(std::size_t rank) {
    FgAbelianGroup g = FgAbelianGroup::free(rank);
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < rank; ++i) gens.push_back(g.basis(i));
    return FgMonoid(g, gens);
}

FgMonoid FgMonoid::trivial(const FgAbelianGroup& ambient) { return FgMonoid(ambient, {}); }

const FgAbelianGroup& FgMonoid::ambient() const { return data_->ambient; }
const std::vector<GroupElement>& FgMonoid::generators() const { return data_->gens; }
bool FgMonoid::is_sharp() const { return data_->sharp; }
bool FgMonoid::is_unit_generator(std::size_t i) const { return data_->unit_gen.at(i); }

const Vec& FgMonoid::grading() const {
    if (!data_->sharp) throw Error(ErrorKind::NotSharp, "grading requested on " + to_string(*this));
    return data_->grading;
}

Integer FgMonoid::weight(const GroupElement& x) const { return dot(grading(), data_->ambient.free_part(x)); }

bool FgMonoid::contains(const GroupElement& x) const {
    data_->ambient.require_member(x, "contains");
    GroupElement y = data_->to_frame ? data_->to_frame->project(x) : data_->ambient.make(x.coords());
    MembershipSearch s(*data_);
    return s.run(y, dot(data_->grading, data_->frame.free_part(y)));
}

std::optional<Vec> FgMonoid::decompose(const GroupElement& x) const {
    if (!data_->sharp) throw Error(ErrorKind::NotSharp, "decompose on " + to_string(*this));
    data_->ambient.require_member(x, "decompose");
    GroupElement y = data_->ambient.make(x.coords());
    MembershipSearch s(*data_);
    if (!s.run(y, dot(data_->grading, data_->frame.free_part(y)))) return std::nullopt;
    return s.coefficients();
}

bool operator==(const FgMonoid& a, const FgMonoid& b) {
    return a.ambient() == b.ambient() && a.generators() == b.generators();
}

std::string to_string(const FgMonoid& m) {
    std::string s = "<";
    for (std::size_t i = 0; i < m.generators().size(); ++i) {
        if (i) s += ", ";
        s += to_string(m.generators()[i]);
    }
    return s + "> in " + to_string(m.ambient());
}

bool contains(const FgMonoid& m, const GroupElement& x) { return m.contains(x); }
bool is_sharp(const FgMonoid& m) { return m.is_sharp(); }

FgMonoid units(const FgMonoid& m) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < m.generators().size(); ++i)
        if (m.is_unit_generator(i)) {
            gens.push_back(m.generators()[i]);
            gens.push_back(m.ambient().negate(m.generators()[i]));
        }
    return FgMonoid(m.ambient(), gens);
}

Subgroup groupify(const FgMonoid& m) {
    Subgroup h(m.ambient(), m.generators());
    h.orient(m.generators());
    return h;
}

std::vector<GroupElement> atoms(const FgMonoid& m) {
    if (!m.is_sharp()) throw Error(ErrorKind::NotSharp, "atoms of " + to_string(m));
    const auto& gens = m.generators();
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool reducible = false;
        for (std::size_t j = 0; j < gens.size() && !reducible; ++j) {
            if (j == i || m.weight(gens[j]) >= m.weight(gens[i])) continue;
            reducible = m.contains(m.ambient().sub(gens[i], gens[j]));
        }
        if (!reducible) out.push_back(gens[i]);
    }
    return out;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// inward facet normals of a full-dimensional pointed cone in Q^k
std::vector<Vec> facet_normals(const std::vector<Vec>& gens, std::size_t k) {
    std::vector<Vec> normals;
    auto consider = [&](Vec n) {
        bool pos = true, neg = true;
        for (const auto& g : gens) {
            Integer v = dot(n, g);
            if (v < 0) pos = false;
            if (v > 0) neg = false;
        }
        if (!pos && !neg) return;
        if (!pos)
            for (auto& x : n) x = -x;
        if (std::find(normals.begin(), normals.end(), n) == normals.end()) normals.push_back(std::move(n));
    };
    for_each_subset(gens.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> rows;
        for (auto i : idx) rows.push_back(gens[i]);
        auto ker = integer_kernel(IntMatrix::from_rows(rows, k));
        if (ker.size() == 1) consider(ker[0]);
    });
    std::sort(normals.begin(), normals.end());
    return normals;
}

}  // namespace

std::vector<GroupElement> hilbert_basis(const std::vector<GroupElement>& cone_generators,
                                        const FgAbelianGroup& lattice, std::size_t graver_cap) {
    if (!lattice.is_torsion_free())
        throw Error(ErrorKind::InvalidArgument, "hilbert_basis expects a torsion-free lattice");
    const std::size_t r = lattice.rank();
    std::vector<Vec> v;
    for (const auto& g : cone_generators) {
        lattice.require_member(g, "hilbert_basis");
        if (!g.is_zero()) v.push_back(g.coords());
    }
    if (v.empty()) return {};
    if (!lp::strictly_positive_functional(v, r))
        throw Error(ErrorKind::NotPointed, "cone contains a line");

    // coordinates in a basis of span(v) intersected with Z^r
    SmithForm snf = smith_normal_form(IntMatrix::from_columns(v, r));
    const std::size_t k = snf.rank;
    std::vector<Vec> y;
    for (const auto& x : v) {
        Vec ux = snf.U.apply(x);
        y.emplace_back(ux.begin(), ux.begin() + static_cast<std::ptrdiff_t>(k));
    }
    std::vector<Vec> normals = facet_normals(y, k);
    const std::size_t f = normals.size();
    IntMatrix facets = IntMatrix::from_rows(normals, k);
    std::vector<Vec> lattice_gens;
    for (std::size_t t = 0; t < k; ++t) lattice_gens.push_back(facets.column(t));

    SmithForm fsnf = smith_normal_form(facets);
    std::vector<GroupElement> out;
    for (const auto& s : graver_basis(lattice_gens, f, graver_cap)) {
        if (std::any_of(s.begin(), s.end(), [](const Integer& x) { return x < 0; })) continue;
        auto x = solve_integer(fsnf, s);
        if (!x) throw Error(ErrorKind::ConstructionFailure, "facet image not in lattice");
        Vec amb(r);
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t i = 0; i < r; ++i) amb[i] += snf.U_inv(i, t) * (*x)[t];
        out.emplace_back(std::move(amb));
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

FgMonoid saturate(const FgMonoid& m, std::size_t graver_cap) {
    if (!m.is_sharp()) throw Error(ErrorKind::NotSharp, "saturate requires a sharp monoid: " + to_string(m));
    Subgroup h = groupify(m);
    const FgAbelianGroup& g = h.group();
    FgAbelianGroup free = FgAbelianGroup::free(g.rank());
    std::vector<GroupElement> cone;
    for (const auto& x : m.generators()) cone.emplace_back(g.free_part(h.coords(x)));
    std::vector<GroupElement> gens;
    for (const auto& b : hilbert_basis(cone, free, graver_cap)) {
        Vec c = b.coords();
        c.resize(g.dim());
        gens.push_back(h.embed(GroupElement(std::move(c))));
    }
    for (std::size_t j = 0; j < g.torsion().size(); ++j) gens.push_back(h.embed(g.basis(g.rank() + j)));
    return FgMonoid(m.ambient(), gens);
}

bool is_saturated(const FgMonoid& m, std::size_t graver_cap) {
    FgMonoid s = saturate(m, graver_cap);
    return std::all_of(s.generators().begin(), s.generators().end(),
                       [&](const GroupElement& x) { return m.contains(x); });
}

std::vector<GroupElement> elements_up_to_degree(const FgMonoid& m, std::size_t degree) {
    const auto& amb = m.ambient();
    std::unordered_set<GroupElement, GroupElementHash> seen{amb.zero()};
    std::vector<GroupElement> frontier{amb.zero()};
    for (std::size_t d = 0; d < degree && !frontier.empty(); ++d) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : m.generators()) {
                GroupElement y = amb.add(x, g);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

std::vector<GroupElement> elements_up_to_weight(const FgMonoid& m, const Integer& bound) {
    const auto& amb = m.ambient();
    std::unordered_set<GroupElement, GroupElementHash> seen{amb.zero()};
    std::vector<GroupElement> frontier{amb.zero()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : m.generators()) {
                GroupElement y = amb.add(x, g);
                if (m.weight(y) > bound) continue;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

}  // namespace logmin::monoid
