#include "logmin/category/functor.hpp"

namespace logmin::category {

Functor::Functor(CatPtr source, CatPtr target, std::vector<ObjId> objects, std::vector<MorId> morphisms)
    : source_(std::move(source)), target_(std::move(target)), objects_(std::move(objects)),
      morphisms_(std::move(morphisms)) {
    const FiniteCategory& s = *source_;
    const FiniteCategory& t = *target_;
    if (objects_.size() != s.object_count() || morphisms_.size() != s.morphism_count())
        throw Error(ErrorKind::FunctorLawViolation, "functor maps do not cover the source category");
    for (ObjId o = 0; o < s.object_count(); ++o)
        if (objects_[o] >= t.object_count())
            throw Error(ErrorKind::FunctorLawViolation, "object " + s.object_name(o) + " maps outside the target");
    for (MorId m = 0; m < s.morphism_count(); ++m) {
        if (morphisms_[m] >= t.morphism_count())
            throw Error(ErrorKind::FunctorLawViolation, "morphism " + s.morphism_name(m) + " maps outside the target");
        if (t.source(morphisms_[m]) != objects_[s.source(m)] || t.target(morphisms_[m]) != objects_[s.target(m)])
            throw Error(ErrorKind::FunctorLawViolation, "image of " + s.morphism_name(m) + " has the wrong endpoints");
    }
    for (ObjId o = 0; o < s.object_count(); ++o)
        if (morphisms_[s.identity(o)] != t.identity(objects_[o]))
            throw Error(ErrorKind::FunctorLawViolation, "identity of " + s.object_name(o) + " not preserved");
    for (MorId f = 0; f < s.morphism_count(); ++f)
        for (MorId g : s.out_of(s.target(f)))
            if (morphisms_[s.compose(g, f)] != t.compose(morphisms_[g], morphisms_[f]))
                throw Error(ErrorKind::FunctorLawViolation,
                            "composite " + s.morphism_name(g) + " o " + s.morphism_name(f) + " not preserved");
}

Functor Functor::identity(const CatPtr& c) {
    std::vector<ObjId> o(c->object_count());
    std::vector<MorId> m(c->morphism_count());
    for (ObjId i = 0; i < o.size(); ++i) o[i] = i;
    for (MorId i = 0; i < m.size(); ++i) m[i] = i;
    return Functor(c, c, std::move(o), std::move(m));
}

Functor Functor::from_names(CatPtr source, CatPtr target, const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& morphisms) {
    std::vector<ObjId> o(source->object_count(), UINT32_MAX);
    std::vector<MorId> m(source->morphism_count(), kNoMorphism);
    for (const auto& [a, b] : objects) o[source->object(a)] = target->object(b);
    for (const auto& [a, b] : morphisms) m[source->morphism_id(a)] = target->morphism_id(b);
    for (ObjId i = 0; i < o.size(); ++i)
        if (o[i] == UINT32_MAX)
            throw Error(ErrorKind::FunctorLawViolation, "object " + source->object_name(i) + " is not mapped");
    // identities may be left implicit
    for (MorId i = 0; i < m.size(); ++i) {
        if (m[i] != kNoMorphism) continue;
        if (!source->is_identity(i))
            throw Error(ErrorKind::FunctorLawViolation, "morphism " + source->morphism_name(i) + " is not mapped");
        m[i] = target->identity(o[source->source(i)]);
    }
    return Functor(std::move(source), std::move(target), std::move(o), std::move(m));
}

bool operator==(const Functor& a, const Functor& b) {
    return same_category(a.source_, b.source_) && same_category(a.target_, b.target_) && a.objects_ == b.objects_ &&
           a.morphisms_ == b.morphisms_;
}

Functor compose(const Functor& g, const Functor& f) {
    if (!same_category(f.target(), g.source()))
        throw Error(ErrorKind::FunctorLawViolation, "functors are not composable");
    std::vector<ObjId> o(f.source()->object_count());
    std::vector<MorId> m(f.source()->morphism_count());
    for (ObjId i = 0; i < o.size(); ++i) o[i] = g.obj(f.obj(i));
    for (MorId i = 0; i < m.size(); ++i) m[i] = g.mor(f.mor(i));
    return Functor(f.source(), g.target(), std::move(o), std::move(m));
}

Functor inclusion(const Subcategory& sub, const CatPtr& parent) {
    return Functor(sub.category, parent, sub.object_in_parent, sub.morphism_in_parent);
}

NaturalTransformation::NaturalTransformation(Functor from, Functor to, std::vector<MorId> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
    if (!same_category(from_.source(), to_.source()) || !same_category(from_.target(), to_.target()))
        throw Error(ErrorKind::NaturalityViolation, "functors have different source or target");
    const FiniteCategory& s = *from_.source();
    const FiniteCategory& t = *from_.target();
    if (components_.size() != s.object_count())
        throw Error(ErrorKind::NaturalityViolation, "wrong number of components");
    for (ObjId x = 0; x < s.object_count(); ++x) {
        MorId a = components_[x];
        if (a >= t.morphism_count() || t.source(a) != from_.obj(x) || t.target(a) != to_.obj(x))
            throw Error(ErrorKind::NaturalityViolation, "component at " + s.object_name(x) + " has the wrong endpoints");
    }
    for (MorId f = 0; f < s.morphism_count(); ++f) {
        MorId lhs = t.compose(to_.mor(f), components_[s.source(f)]);
        MorId rhs = t.compose(components_[s.target(f)], from_.mor(f));
        if (lhs != rhs)
            throw Error(ErrorKind::NaturalityViolation, "square at " + s.morphism_name(f) + " does not commute");
    }
}

bool NaturalTransformation::is_invertible() const {
    const FiniteCategory& t = *from_.target();
    for (MorId a : components_)
        if (!t.is_isomorphism(a)) return false;
    return true;
}

}  // namespace logmin::category
