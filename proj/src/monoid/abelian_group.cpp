#include "logmin/monoid/abelian_group.hpp"

#include <algorithm>

namespace logmin::monoid {

GroupElement::GroupElement(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
}

bool GroupElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

std::string to_string(const GroupElement& g) { return to_string(g.coords()); }

bool graded_lex_less(const GroupElement& a, const GroupElement& b) {
    Integer da = 0, db = 0;
    for (const auto& x : a.coords()) da += x;
    for (const auto& x : b.coords()) db += x;
    if (da != db) return da < db;
    return b.coords() < a.coords();
}

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw Error(ErrorKind::InvalidArgument, "torsion modulus must be at least 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw Error(ErrorKind::InvalidArgument, "torsion moduli must form a divisibility chain");
    }
}

GroupElement FgAbelianGroup::basis(std::size_t i) const {
    Vec v(dim());
    v.at(i) = 1;
    return GroupElement(std::move(v));
}

GroupElement FgAbelianGroup::make(Vec coords) const {
    if (coords.size() != dim())
        throw Error(ErrorKind::AmbientMismatch,
                    "element of length " + std::to_string(coords.size()) + " in group " + to_string(*this));
    for (std::size_t j = 0; j < torsion_.size(); ++j) coords[rank_ + j] = floor_mod(coords[rank_ + j], torsion_[j]);
    return GroupElement(std::move(coords));
}

void FgAbelianGroup::require_member(const GroupElement& a, const char* where) const {
    if (a.size() != dim())
        throw Error(ErrorKind::AmbientMismatch, std::string(where) + ": element " + to_string(a) +
                                                    " does not live in " + to_string(*this));
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    require_member(a, "add");
    require_member(b, "add");
    Vec v(dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return make(std::move(v));
}

GroupElement FgAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    require_member(a, "sub");
    require_member(b, "sub");
    Vec v(dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return make(std::move(v));
}

GroupElement FgAbelianGroup::negate(const GroupElement& a) const {
    require_member(a, "negate");
    Vec v(dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a[i];
    return make(std::move(v));
}

GroupElement FgAbelianGroup::scale(const Integer& k, const GroupElement& a) const {
    require_member(a, "scale");
    Vec v(dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k * a[i];
    return make(std::move(v));
}

GroupElement FgAbelianGroup::combination(std::span<const GroupElement> gens, const Vec& coeffs) const {
    if (gens.size() != coeffs.size()) throw Error(ErrorKind::InvalidArgument, "combination: length mismatch");
    Vec v(dim());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (coeffs[g] == 0) continue;
        require_member(gens[g], "combination");
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeffs[g] * gens[g][i];
    }
    return make(std::move(v));
}

Vec FgAbelianGroup::free_part(const GroupElement& a) const {
    require_member(a, "free_part");
    return Vec(a.coords().begin(), a.coords().begin() + static_cast<std::ptrdiff_t>(rank_));
}

std::vector<Vec> FgAbelianGroup::torsion_relations() const {
    std::vector<Vec> rel;
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        Vec v(dim());
        v[rank_ + j] = torsion_[j];
        rel.push_back(std::move(v));
    }
    return rel;
}

std::string to_string(const FgAbelianGroup& g) {
    std::string s = "Z^" + std::to_string(g.rank());
    for (const auto& t : g.torsion()) s += " + Z/" + t.str();
    return s;
}

QuotientMap::QuotientMap(const FgAbelianGroup& source, std::span<const GroupElement> relations) : source_(source) {
    const std::size_t n = source.dim();
    std::vector<Vec> cols = source.torsion_relations();
    bool trivial = true;
    for (const auto& r : relations) {
        GroupElement red = source.make(r.coords());
        if (!red.is_zero()) trivial = false;
        cols.push_back(red.coords());
    }
    if (trivial) {
        target_ = source;
        projection_ = IntMatrix::identity(n);
        section_ = IntMatrix::identity(n);
        return;
    }
    SmithForm snf = smith_normal_form(IntMatrix::from_columns(cols, n));
    std::vector<std::size_t> free_rows, torsion_rows;
    std::vector<Integer> moduli;
    for (std::size_t i = snf.rank; i < n; ++i) free_rows.push_back(i);
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.D(i, i) > 1) {
            torsion_rows.push_back(i);
            moduli.push_back(snf.D(i, i));
        }
    target_ = FgAbelianGroup(free_rows.size(), moduli);
    projection_ = IntMatrix(target_.dim(), n);
    section_ = IntMatrix(n, target_.dim());
    std::size_t out = 0;
    auto take = [&](std::size_t i, const Integer* modulus) {
        for (std::size_t c = 0; c < n; ++c)
            projection_(out, c) = modulus ? floor_mod(snf.U(i, c), *modulus) : snf.U(i, c);
        for (std::size_t r = 0; r < n; ++r) section_(r, out) = snf.U_inv(r, i);
        ++out;
    };
    for (std::size_t i : free_rows) take(i, nullptr);
    for (std::size_t k = 0; k < torsion_rows.size(); ++k) take(torsion_rows[k], &moduli[k]);
}

GroupElement QuotientMap::project(const GroupElement& x) const {
    source_.require_member(x, "QuotientMap::project");
    return target_.make(projection_.apply(x.coords()));
}

GroupElement QuotientMap::lift(const GroupElement& y) const {
    target_.require_member(y, "QuotientMap::lift");
    return source_.make(section_.apply(y.coords()));
}

void QuotientMap::orient(std::span<const GroupElement> samples) {
    for (std::size_t r = 0; r < target_.rank(); ++r) {
        for (const auto& s : samples) {
            Integer v = dot(projection_.row(r), s.coords());
            if (v == 0) continue;
            if (v < 0) {
                projection_.negate_row(r);
                section_.negate_col(r);
            }
            break;
        }
    }
}

namespace {

SmithForm subgroup_solver(const FgAbelianGroup& ambient, const std::vector<GroupElement>& gens) {
    std::vector<Vec> cols;
    for (const auto& g : gens) {
        ambient.require_member(g, "Subgroup");
        cols.push_back(g.coords());
    }
    for (auto& t : ambient.torsion_relations()) cols.push_back(std::move(t));
    return smith_normal_form(IntMatrix::from_columns(cols, ambient.dim()));
}

QuotientMap coefficient_quotient(const SmithForm& solver, std::size_t m) {
    std::vector<GroupElement> rel;
    for (const auto& k : integer_kernel(solver)) rel.emplace_back(Vec(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m)));
    return QuotientMap(FgAbelianGroup::free(m), rel);
}

}  // namespace

Subgroup::Subgroup(const FgAbelianGroup& ambient, std::vector<GroupElement> gens)
    : ambient_(ambient),
      gens_(std::move(gens)),
      solver_(subgroup_solver(ambient_, gens_)),
      quotient_(coefficient_quotient(solver_, gens_.size())) {}

std::optional<Vec> Subgroup::coefficients(const GroupElement& x) const {
    ambient_.require_member(x, "Subgroup::coefficients");
    auto sol = solve_integer(solver_, x.coords());
    if (!sol) return std::nullopt;
    sol->resize(gens_.size());
    return sol;
}

bool Subgroup::contains(const GroupElement& x) const { return coefficients(x).has_value(); }

GroupElement Subgroup::coords(const GroupElement& x) const {
    auto c = coefficients(x);
    if (!c) throw Error(ErrorKind::NotMember, to_string(x) + " is not in the subgroup");
    return quotient_.project(GroupElement(std::move(*c)));
}

GroupElement Subgroup::embed(const GroupElement& y) const {
    return ambient_.combination(gens_, quotient_.lift(y).coords());
}

void Subgroup::orient(std::span<const GroupElement> samples_in_ambient) {
    std::vector<GroupElement> coeffs;
    for (const auto& s : samples_in_ambient)
        if (auto c = coefficients(s)) coeffs.emplace_back(std::move(*c));
    quotient_.orient(coeffs);
}

}  // namespace logmin::monoid
