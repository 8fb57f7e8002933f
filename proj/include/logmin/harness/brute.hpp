#pragma once

// Enumeration oracles used by the property suites. They rely only on group arithmetic and
// explicit enumeration, never on the cone or lattice machinery of the monoid kernel.

#include "logmin/monoid/hom.hpp"

#include <unordered_map>
#include <unordered_set>

namespace logmin::harness::brute {

using monoid::FgMonoid;
using monoid::GroupElement;
using monoid::Integer;
using monoid::MonoidHom;
using monoid::Vec;

// small functional on the free coordinates, positive on every generator; nullopt if none in the search box
std::optional<Vec> positive_functional(const FgMonoid& m);

// Memoised "is x a nonnegative combination of the generators" by downward search.
class Membership {
public:
    explicit Membership(FgMonoid m);
    const FgMonoid& monoid() const { return m_; }
    Integer weight(const GroupElement& x) const;
    bool contains(const GroupElement& x);

private:
    FgMonoid m_;
    Vec functional_;
    std::vector<Integer> gen_weight_;
    std::unordered_map<GroupElement, bool, monoid::GroupElementHash> memo_;
};

// elements of weight <= bound, sorted graded-lex; stops early once more than `cap` are found
std::vector<GroupElement> enumerate(const Membership& m, const Integer& bound, std::size_t cap = SIZE_MAX);

// every split p = r + h(q) with r in P Q-primitive and q in Q
struct Split {
    GroupElement r, q;
};
std::vector<Split> all_primitive_splits(const MonoidHom& h, Membership& P, const GroupElement& p);

// Classes of the congruence generated by x ~ x + f (f in the face), closed inside the weight window.
// Returns class ids for `elements`.
std::vector<std::size_t> congruence_classes(const Membership& m, const FgMonoid& face,
                                            const std::vector<GroupElement>& elements, const Integer& window);

struct IntegralityViolation {
    GroupElement a1, a2, b1, b2;
};
// Searches a1, a2 in Q and b1 in P from the given windows for h(a1)+b1 = h(a2)+b2 without witnesses.
std::optional<IntegralityViolation> find_integrality_violation(const MonoidHom& h,
                                                               const std::vector<GroupElement>& q_window,
                                                               const std::vector<GroupElement>& p_window);

}  // namespace logmin::harness::brute

namespace logmin::harness::brute {

// f is injective on the domain elements whose images weigh at most `bound`, and those images cover
// every codomain element of weight at most `bound`. Generators sent to weight <= 0 make this false.
bool window_bijective(const MonoidHom& f, const Integer& bound);

// largest weight bound (at most `limit`) whose enumeration stays within `cap` elements; 0 if none
Integer window_for(const Membership& m, std::size_t cap, const Integer& limit = 12);

}  // namespace logmin::harness::brute
