#pragma once

#include "logmin/category/functor.hpp"

#include <optional>

namespace logmin::category {

// f : c' -> c is cartesian when, for every u : c'' -> c, h |-> Fh bijects {h : f h = u} with {g : Ff g = Fu}.
bool is_cartesian_morphism(const Functor& F, MorId f);
std::vector<bool> cartesian_morphisms(const Functor& F);

// A target morphism d and an object c' over its codomain that admit no cartesian lift.
struct LiftFailure {
    MorId d;
    ObjId c;
};
std::optional<LiftFailure> find_missing_lift(const Functor& F, const std::vector<bool>& cartesian);

bool is_fibered(const Functor& F);
bool is_groupoid_fibration(const Functor& F);

// Restriction of F to the cartesian morphisms, with the inclusion into F's source.
struct AssociatedFibration {
    Subcategory sub;
    Functor restricted;
};
AssociatedFibration associated_groupoid_fibration(const Functor& F);

// morphisms over id_d; throws UnknownObject
Subcategory fiber_category(const Functor& F, ObjId d);
Subcategory fiber_category(const Functor& F, const std::string& d);

bool is_pseudo_terminal(const FiniteCategory& c, ObjId d);
bool is_weakly_terminal_set(const FiniteCategory& c, const std::vector<ObjId>& w);

}  // namespace logmin::category
