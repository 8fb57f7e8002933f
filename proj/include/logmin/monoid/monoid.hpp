#pragma once

#include "logmin/monoid/abelian_group.hpp"

#include <memory>
#include <optional>
#include <cstdint>
#include <vector>

namespace logmin::monoid {

// Finitely generated submonoid of an FgAbelianGroup. Generators are reduced, deduplicated, stripped of
// zero and sorted graded-lex. Immutable; copies share the precomputed membership data.
class FgMonoid {
public:
    FgMonoid();
    FgMonoid(FgAbelianGroup ambient, std::vector<GroupElement> generators);

    static FgMonoid free(std::size_t rank);  // N^rank in Z^rank
    static FgMonoid trivial(const FgAbelianGroup& ambient = {});

    const FgAbelianGroup& ambient() const;
    const std::vector<GroupElement>& generators() const;

    bool is_sharp() const;
    bool contains(const GroupElement& x) const;
    // nonnegative coefficients on generators() summing to x; requires a sharp monoid
    std::optional<Vec> decompose(const GroupElement& x) const;

    // integer functional on free coordinates, >= 1 on every generator; requires a sharp monoid
    const Vec& grading() const;
    Integer weight(const GroupElement& x) const;

    // true iff the generator at index i is a unit
    bool is_unit_generator(std::size_t i) const;

    friend bool operator==(const FgMonoid& a, const FgMonoid& b);

    struct Data;  // defined in monoid.cpp

private:
    std::shared_ptr<const Data> data_;
};

std::string to_string(const FgMonoid& m);

FgMonoid units(const FgMonoid& m);
bool is_sharp(const FgMonoid& m);
bool contains(const FgMonoid& m, const GroupElement& x);

// M^gp inside the ambient, oriented so the first generator touching each free coordinate is positive
Subgroup groupify(const FgMonoid& m);

// minimal generators (irreducible elements) of a sharp monoid
std::vector<GroupElement> atoms(const FgMonoid& m);

// graver_cap bounds the intermediate Graver basis; passing it throws BoundExceeded
std::vector<GroupElement> hilbert_basis(const std::vector<GroupElement>& cone_generators,
                                        const FgAbelianGroup& lattice, std::size_t graver_cap = SIZE_MAX);

FgMonoid saturate(const FgMonoid& m, std::size_t graver_cap = SIZE_MAX);
bool is_saturated(const FgMonoid& m, std::size_t graver_cap = SIZE_MAX);

// All elements reachable with at most `degree` generator steps, sorted graded-lex.
std::vector<GroupElement> elements_up_to_degree(const FgMonoid& m, std::size_t degree);
// All elements of a sharp monoid with grading weight <= bound, sorted graded-lex.
std::vector<GroupElement> elements_up_to_weight(const FgMonoid& m, const Integer& bound);

}  // namespace logmin::monoid
