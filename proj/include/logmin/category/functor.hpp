#pragma once

#include "logmin/category/category.hpp"

#include <map>

namespace logmin::category {

// Functor between finite categories, validated on construction (FunctorLawViolation).
class Functor {
public:
    Functor(CatPtr source, CatPtr target, std::vector<ObjId> objects, std::vector<MorId> morphisms);

    static Functor identity(const CatPtr& c);
    static Functor from_names(CatPtr source, CatPtr target, const std::map<std::string, std::string>& objects,
                              const std::map<std::string, std::string>& morphisms);

    const CatPtr& source() const { return source_; }
    const CatPtr& target() const { return target_; }
    ObjId obj(ObjId o) const { return objects_[o]; }
    MorId mor(MorId m) const { return morphisms_[m]; }
    const std::vector<ObjId>& object_map() const { return objects_; }
    const std::vector<MorId>& morphism_map() const { return morphisms_; }

    // on-the-nose equality
    friend bool operator==(const Functor& a, const Functor& b);

private:
    CatPtr source_, target_;
    std::vector<ObjId> objects_;
    std::vector<MorId> morphisms_;
};

// g after f
Functor compose(const Functor& g, const Functor& f);

// inclusion of a subcategory into its parent
Functor inclusion(const Subcategory& sub, const CatPtr& parent);

// Components alpha_x : F x -> G x, checked natural (NaturalityViolation).
class NaturalTransformation {
public:
    NaturalTransformation(Functor from, Functor to, std::vector<MorId> components);

    const Functor& from() const { return from_; }
    const Functor& to() const { return to_; }
    MorId operator[](ObjId x) const { return components_[x]; }
    const std::vector<MorId>& components() const { return components_; }

    bool is_invertible() const;

private:
    Functor from_, to_;
    std::vector<MorId> components_;
};

}  // namespace logmin::category
