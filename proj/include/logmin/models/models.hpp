#pragma once

#include "logmin/category/functor.hpp"
#include "logmin/monoid/hom.hpp"

#include <variant>

namespace logmin::models {

using monoid::FgMonoid;
using monoid::GroupElement;
using monoid::MonoidHom;

struct Smooth {};
struct Marked {
    GroupElement p;
};
struct Node {
    GroupElement q0, p1, pm1;
};
using CurveStructure = std::variant<Smooth, Marked, Node>;
std::string to_string(const CurveStructure& s);

// Stalk map of a log curve at a point: an integral monomorphism without nilpotents.
struct CurvePointDatum {
    explicit CurvePointDatum(MonoidHom point_map);
    monoid::IntegralMono point_map;
};

// throws NotACurveDatum when the cokernel is neither 0, N nor Z
CurveStructure structure_classify(const CurvePointDatum& d);

// Nodes of a fiber with their smoothing elements in the sharp base monoid.
struct CurveFiberDatum {
    CurveFiberDatum(FgMonoid base, std::vector<std::string> nodes, std::vector<GroupElement> smoothing);
    FgMonoid base;
    std::vector<std::string> nodes;
    std::vector<GroupElement> smoothing;
};

// N^nodes -> base, e_i |-> smoothing_i
MonoidHom comparison(const CurveFiberDatum& d);
bool is_basic_curve(const CurveFiberDatum& d);

struct Basified {
    FgMonoid free;
    MonoidHom comparison;
    CurveFiberDatum datum;  // the same nodes over the free monoid
};
Basified basify_curve(const CurveFiberDatum& d);

// Characteristic-level data of a log point: f = (a, h) : MX -> MY (+) P.
struct CharLogPointDatum {
    CharLogPointDatum(MonoidHom a, MonoidHom h);
    MonoidHom a, h;
    const FgMonoid& MX() const { return a.domain(); }
    const FgMonoid& MY() const { return a.codomain(); }
    const FgMonoid& P() const { return h.codomain(); }
};

struct BasicLogPoint {
    FgMonoid NY;
    MonoidHom z;  // NY -> MY
    bool basic;
};
BasicLogPoint char_log_point_basic(const CharLogPointDatum& d);

// Arrow X -> Y of a finite characteristic LogSch; carries the hom M_Y -> M_X given by generator images.
struct CharArrow {
    std::size_t from, to;
    std::vector<GroupElement> images;  // of generators of chars[to], in chars[from]
};

struct FiniteLogSch {
    std::vector<FgMonoid> chars;
    std::vector<std::string> names;
    std::vector<CharArrow> arrows;  // indexed by morphism id
    category::CatPtr logsch;
    category::CatPtr sch;
    category::Functor forget;
};

struct LogSchOptions {
    long long hom_bound = 1;  // grading weight bound on generator images
    bool prune = false;       // drop arrows whose composites or inverses leave the bound instead of failing
};

// throws NotSharp, or BoundExceeded when the bounded homs are not closed (unless pruning)
FiniteLogSch build_finite_logsch(const std::vector<FgMonoid>& chars, const LogSchOptions& options = {},
                                 std::vector<std::string> names = {});

// images of the generators of `from` define a monoid hom into `to`
bool is_hom_assignment(const FgMonoid& from, const FgMonoid& to, const std::vector<GroupElement>& images);
// such a hom is an isomorphism (both monoids sharp)
bool is_iso_assignment(const FgMonoid& from, const FgMonoid& to, const std::vector<GroupElement>& images);

}  // namespace logmin::models
