#pragma once

#include "logmin/errors.hpp"
#include "logmin/monoid/integer.hpp"
#include "logmin/monoid/matrix.hpp"

#include <compare>
#include <span>
#include <vector>

namespace logmin::monoid {

class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(Vec coords) : coords_(std::move(coords)) {}
    GroupElement(std::initializer_list<long long> coords);

    const Vec& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    Vec coords_;
};

std::string to_string(const GroupElement& g);

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept { return VecHash{}(g.coords()); }
};

// Sum of coordinates first, then lexicographically larger first: (1,0) precedes (0,1).
bool graded_lex_less(const GroupElement& a, const GroupElement& b);

struct GradedLexLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const { return graded_lex_less(a, b); }
};

class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    FgAbelianGroup(std::size_t rank, std::vector<Integer> torsion);

    static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

    std::size_t rank() const { return rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    std::size_t dim() const { return rank_ + torsion_.size(); }
    bool is_torsion_free() const { return torsion_.empty(); }
    bool is_trivial() const { return dim() == 0; }

    GroupElement zero() const { return GroupElement(Vec(dim())); }
    GroupElement basis(std::size_t i) const;
    GroupElement make(Vec coords) const;  // reduces torsion coordinates
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(const Integer& k, const GroupElement& a) const;
    GroupElement combination(std::span<const GroupElement> gens, const Vec& coeffs) const;

    // projection to the free coordinates
    Vec free_part(const GroupElement& a) const;

    void require_member(const GroupElement& a, const char* where) const;

    // columns t_j e_{rank+j}: generators of the relations of the coordinate presentation
    std::vector<Vec> torsion_relations() const;

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<Integer> torsion_;
};

std::string to_string(const FgAbelianGroup& g);

// G -> G / <N> in invariant-factor coordinates.
class QuotientMap {
public:
    QuotientMap(const FgAbelianGroup& source, std::span<const GroupElement> relations);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    // target.dim x source.dim; torsion rows reduced on application
    const IntMatrix& projection() const { return projection_; }
    // source.dim x target.dim; project(section * y) == y
    const IntMatrix& section() const { return section_; }

    GroupElement project(const GroupElement& x) const;
    GroupElement lift(const GroupElement& y) const;

    // flip free target coordinates so the first sample with a nonzero value there is positive
    void orient(std::span<const GroupElement> samples);

private:
    FgAbelianGroup source_;
    FgAbelianGroup target_;
    IntMatrix projection_;
    IntMatrix section_;
};

// The subgroup H = <gens> of an ambient group, with its own invariant-factor coordinates.
class Subgroup {
public:
    Subgroup(const FgAbelianGroup& ambient, std::vector<GroupElement> gens);

    const FgAbelianGroup& ambient() const { return ambient_; }
    const FgAbelianGroup& group() const { return quotient_.target(); }
    const std::vector<GroupElement>& generators() const { return gens_; }

    bool contains(const GroupElement& x) const;
    // integer coefficients c with sum c_i g_i = x
    std::optional<Vec> coefficients(const GroupElement& x) const;
    // H-coordinates of x; throws std::domain_error when x is not in H
    GroupElement coords(const GroupElement& x) const;
    GroupElement embed(const GroupElement& y) const;

    void orient(std::span<const GroupElement> samples_in_ambient);

private:
    FgAbelianGroup ambient_;
    std::vector<GroupElement> gens_;
    SmithForm solver_;  // of [gens | torsion relations]
    QuotientMap quotient_;
};

}  // namespace logmin::monoid
