#pragma once

#include "logmin/category/fibration.hpp"

namespace logmin::category {

// Z --F--> LogSch --forget--> Sch with forget a fibered category.
class Tower {
public:
    Tower(Functor F, Functor forget);

    const Functor& F() const { return F_; }
    const Functor& forget() const { return forget_; }
    // forget o F
    const Functor& underlying() const { return underlying_; }
    const CatPtr& Z() const { return F_.source(); }
    const CatPtr& LogSch() const { return forget_.source(); }
    const CatPtr& Sch() const { return forget_.target(); }

    // cartesian arrows of LogSch relative to forget
    const std::vector<bool>& strict() const { return strict_; }
    bool over_identity(MorId z_morphism) const;

private:
    Functor F_, forget_, underlying_;
    std::vector<bool> strict_;
};

std::vector<bool> minimal_objects(const Tower& t);
bool is_minimal(const Tower& t, ObjId z);

struct B1Report {
    bool holds = true;
    std::vector<ObjId> failures;  // objects with no identity-underlying map to a minimal object
};
struct B2Report {
    bool holds = true;
    std::vector<MorId> failures;  // i : w -> z, z minimal, with cartesian(Fi) != minimal(w)
};
// both throw NotGroupoidFibration unless F is a groupoid fibration
B1Report check_B1(const Tower& t);
B2Report check_B2(const Tower& t);
B1Report check_B1(const Tower& t, const std::vector<bool>& minimal);
B2Report check_B2(const Tower& t, const std::vector<bool>& minimal);

// M : X -> LogSch landing in the strict arrows, with forget o M a groupoid fibration.
class LogCfg {
public:
    LogCfg(Functor M, Functor forget);

    const Functor& M() const { return M_; }
    const Functor& forget() const { return forget_; }
    const CatPtr& X() const { return M_.source(); }

private:
    Functor M_, forget_;
};

// (X, M) over LogSch; objects are pairs (x, f : X -> M x) with f over an identity.
struct PhiResult {
    Tower tower;
    std::vector<std::pair<ObjId, MorId>> objects;    // (x, f)
    std::vector<std::pair<MorId, MorId>> morphisms;  // (a, b)
    std::optional<ObjId> find(ObjId x, MorId f) const;
};
PhiResult phi(const LogCfg& l);

struct MinimalSubfibration {
    Subcategory Zm;
    LogCfg cfg;
};
// throws ConditionsNotSatisfied when B1 or B2 fails
MinimalSubfibration minimal_subfibration(const Tower& t);

struct DescentResult {
    MinimalSubfibration minimal;
    PhiResult target;              // (Zm, M)
    Functor psi;                   // (Zm, M) -> Z
    Functor phi;                   // Z -> (Zm, M)
    NaturalTransformation eta;     // phi psi -> Id
    NaturalTransformation theta;   // psi phi -> Id
};
// throws ConditionsNotSatisfied, or ConstructionFailure naming the offending diagram
DescentResult descent_construct(const Tower& t);

struct LiftingReport {
    bool checked = false;
    std::string skipped_reason;
    std::size_t lemma1_diagrams = 0, lemma1_failures = 0;
    std::size_t lemma2_diagrams = 0, lemma2_failures = 0;
    std::vector<std::string> failures;  // first few, described
};
LiftingReport check_lifting_lemmas(const Tower& t);

// Properties of minimal objects in their Sch-fibers: pseudo-terminal, retracts, maps between minimals
// invertible, and (under B1) minimal objects weakly terminal. Returns descriptions of failures.
std::vector<std::string> check_minimality_properties(const Tower& t);

}  // namespace logmin::category
