#include "logmin/category/fibration.hpp"

#include <algorithm>
#include <unordered_map>

namespace logmin::category {

namespace {

bool cartesian_with(const Functor& F, MorId f, std::vector<MorId>& scratch) {
    const FiniteCategory& C = *F.source();
    const FiniteCategory& D = *F.target();
    const ObjId c1 = C.source(f), c = C.target(f);
    const MorId Ff = F.mor(f);
    std::unordered_map<MorId, std::vector<MorId>> upstairs;
    std::unordered_map<MorId, std::size_t> downstairs;
    for (ObjId c2 = 0; c2 < C.object_count(); ++c2) {
        upstairs.clear();
        downstairs.clear();
        for (MorId h : C.hom(c2, c1)) upstairs[C.compose(f, h)].push_back(h);
        for (MorId g : D.hom(F.obj(c2), F.obj(c1))) ++downstairs[D.compose(Ff, g)];
        for (MorId u : C.hom(c2, c)) {
            auto it = upstairs.find(u);
            std::size_t nh = it == upstairs.end() ? 0 : it->second.size();
            auto jt = downstairs.find(F.mor(u));
            std::size_t ng = jt == downstairs.end() ? 0 : jt->second;
            if (nh != ng) return false;
            if (nh < 2) continue;
            scratch.clear();
            for (MorId h : it->second) scratch.push_back(F.mor(h));
            std::sort(scratch.begin(), scratch.end());
            if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_cartesian_morphism(const Functor& F, MorId f) {
    std::vector<MorId> scratch;
    return cartesian_with(F, f, scratch);
}

std::vector<bool> cartesian_morphisms(const Functor& F) {
    require_within_bounds(*F.source(), "cartesian scan");
    std::vector<bool> out(F.source()->morphism_count());
    std::vector<MorId> scratch;
    for (MorId f = 0; f < out.size(); ++f) out[f] = cartesian_with(F, f, scratch);
    return out;
}

std::optional<LiftFailure> find_missing_lift(const Functor& F, const std::vector<bool>& cartesian) {
    const FiniteCategory& C = *F.source();
    const FiniteCategory& D = *F.target();
    for (ObjId c = 0; c < C.object_count(); ++c) {
        for (MorId d : D.into(F.obj(c))) {
            bool found = false;
            for (MorId f : C.into(c))
                if (cartesian[f] && F.mor(f) == d) {
                    found = true;
                    break;
                }
            if (!found) return LiftFailure{d, c};
        }
    }
    return std::nullopt;
}

bool is_fibered(const Functor& F) { return !find_missing_lift(F, cartesian_morphisms(F)); }

bool is_groupoid_fibration(const Functor& F) {
    auto cart = cartesian_morphisms(F);
    if (std::find(cart.begin(), cart.end(), false) != cart.end()) return false;
    return !find_missing_lift(F, cart);
}

AssociatedFibration associated_groupoid_fibration(const Functor& F) {
    const FiniteCategory& C = *F.source();
    Subcategory sub = subcategory(C, std::vector<bool>(C.object_count(), true), cartesian_morphisms(F));
    Functor restricted = compose(F, inclusion(sub, F.source()));
    return {std::move(sub), std::move(restricted)};
}

Subcategory fiber_category(const Functor& F, ObjId d) {
    const FiniteCategory& C = *F.source();
    const FiniteCategory& D = *F.target();
    if (d >= D.object_count()) throw Error(ErrorKind::UnknownObject, "no object with id " + std::to_string(d));
    std::vector<bool> objs(C.object_count()), mors(C.morphism_count());
    for (ObjId c = 0; c < C.object_count(); ++c) objs[c] = F.obj(c) == d;
    for (MorId m = 0; m < C.morphism_count(); ++m) mors[m] = F.mor(m) == D.identity(d);
    return subcategory(C, objs, mors);
}

Subcategory fiber_category(const Functor& F, const std::string& d) { return fiber_category(F, F.target()->object(d)); }

bool is_pseudo_terminal(const FiniteCategory& c, ObjId d) {
    const auto aut = c.automorphisms(d);
    std::vector<MorId> orbit;
    for (ObjId x = 0; x < c.object_count(); ++x) {
        const auto& hom = c.hom(x, d);
        if (hom.empty()) continue;
        if (hom.size() != aut.size()) return false;
        orbit.clear();
        for (MorId a : aut) orbit.push_back(c.compose(a, hom.front()));
        std::sort(orbit.begin(), orbit.end());
        if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end()) return false;
    }
    return true;
}

bool is_weakly_terminal_set(const FiniteCategory& c, const std::vector<ObjId>& w) {
    for (ObjId x = 0; x < c.object_count(); ++x)
        if (std::none_of(w.begin(), w.end(), [&](ObjId d) { return !c.hom(x, d).empty(); })) return false;
    for (ObjId x = 0; x < c.object_count(); ++x)
        for (ObjId d1 : w)
            for (MorId u : c.hom(x, d1))
                for (ObjId d2 : w)
                    for (MorId v : c.hom(x, d2)) {
                        std::size_t n = 0;
                        for (MorId f : c.hom(d1, d2))
                            if (c.compose(f, u) == v) ++n;
                        if (n != 1) return false;
                    }
    return true;
}

}  // namespace logmin::category
