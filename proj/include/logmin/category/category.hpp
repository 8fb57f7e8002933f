#pragma once

#include "logmin/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace logmin::category {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr MorId kNoMorphism = UINT32_MAX;

// Caps for exhaustive checks. Defaults may be overridden by LOGMIN_BOUNDS="objects=N,morphisms=M".
struct SizeBounds {
    std::size_t objects = 40;
    std::size_t morphisms = 400;
};

SizeBounds size_bounds();
void set_size_bounds(SizeBounds b);
SizeBounds parse_size_bounds(const std::string& text);

class FiniteCategory;
using CatPtr = std::shared_ptr<const FiniteCategory>;

struct Morphism {
    std::string name;
    ObjId source = 0;
    ObjId target = 0;
};

// Finite category with a dense composition table. Built and validated through CategoryBuilder.
class FiniteCategory {
public:
    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }

    const std::string& object_name(ObjId o) const { return objects_[o]; }
    const Morphism& morphism(MorId m) const { return morphisms_[m]; }
    const std::string& morphism_name(MorId m) const { return morphisms_[m].name; }
    ObjId source(MorId m) const { return morphisms_[m].source; }
    ObjId target(MorId m) const { return morphisms_[m].target; }

    std::optional<ObjId> find_object(const std::string& name) const;
    std::optional<MorId> find_morphism(const std::string& name) const;
    // throw UnknownObject
    ObjId object(const std::string& name) const;
    MorId morphism_id(const std::string& name) const;

    MorId identity(ObjId o) const { return identities_[o]; }
    bool is_identity(MorId m) const { return identities_[source(m)] == m; }

    // g after f; requires target(f) == source(g)
    MorId compose(MorId g, MorId f) const { return table_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }
    bool composable(MorId g, MorId f) const { return target(f) == source(g); }

    const std::vector<MorId>& hom(ObjId a, ObjId b) const { return homs_[a * objects_.size() + b]; }
    const std::vector<MorId>& out_of(ObjId a) const { return out_[a]; }
    const std::vector<MorId>& into(ObjId b) const { return in_[b]; }

    std::optional<MorId> inverse(MorId m) const;
    bool is_isomorphism(MorId m) const { return inverse(m).has_value(); }
    std::vector<MorId> automorphisms(ObjId o) const;

    friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

private:
    friend class CategoryBuilder;
    FiniteCategory() = default;

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identities_;
    std::vector<MorId> table_;
    std::vector<std::vector<MorId>> homs_, out_, in_;
    std::unordered_map<std::string, ObjId> object_index_;
    std::unordered_map<std::string, MorId> morphism_index_;
};

bool same_category(const CatPtr& a, const CatPtr& b);

// Collects objects, morphisms and composites. Missing identities are created as "id_<object>";
// composites with an identity are filled in; every other composable pair must be given.
class CategoryBuilder {
public:
    ObjId add_object(std::string name);
    MorId add_morphism(std::string name, ObjId source, ObjId target);
    void set_identity(ObjId o, MorId m);
    void set_composite(MorId g, MorId f, MorId gf);

    ObjId object(const std::string& name) const;
    MorId morphism(const std::string& name) const;

    // validates size bounds, identity laws and associativity
    CatPtr build() &&;

private:
    FiniteCategory cat_;
    std::vector<std::optional<MorId>> explicit_ids_;
    std::unordered_map<std::uint64_t, MorId> composites_;
};

// one object, one morphism
CatPtr terminal_category(const std::string& object = "*");
CatPtr empty_category();

// Subcategory on the given objects and morphisms (assumed closed under identities and composition).
struct Subcategory {
    CatPtr category;
    std::vector<ObjId> object_in_parent;
    std::vector<MorId> morphism_in_parent;
};
Subcategory subcategory(const FiniteCategory& c, const std::vector<bool>& keep_objects,
                        const std::vector<bool>& keep_morphisms);
Subcategory full_subcategory(const FiniteCategory& c, const std::vector<bool>& keep_objects);

void require_within_bounds(const FiniteCategory& c, const char* what);

}  // namespace logmin::category
