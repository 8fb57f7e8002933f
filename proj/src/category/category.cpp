#include "logmin/category/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace logmin::category {

namespace {

std::mutex bounds_mutex;
std::optional<SizeBounds> bounds_override;

std::uint64_t pair_key(MorId g, MorId f) { return (static_cast<std::uint64_t>(g) << 32) | f; }

}  // namespace

SizeBounds parse_size_bounds(const std::string& text) {
    SizeBounds b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bounds entry '" + item + "' lacks '='");
        std::string key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoul(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bounds entry '" + item + "' is not a number");
        }
        if (key == "objects")
            b.objects = value;
        else if (key == "morphisms")
            b.morphisms = value;
        else
            throw Error(ErrorKind::InvalidArgument, "unknown bounds key '" + key + "'");
    }
    return b;
}

SizeBounds size_bounds() {
    std::lock_guard lock(bounds_mutex);
    if (bounds_override) return *bounds_override;
    if (const char* env = std::getenv("LOGMIN_BOUNDS")) bounds_override = parse_size_bounds(env);
    else bounds_override = SizeBounds{};
    return *bounds_override;
}

void set_size_bounds(SizeBounds b) {
    std::lock_guard lock(bounds_mutex);
    bounds_override = b;
}

void require_within_bounds(const FiniteCategory& c, const char* what) {
    SizeBounds b = size_bounds();
    if (c.object_count() > b.objects || c.morphism_count() > b.morphisms)
        throw Error(ErrorKind::BoundExceeded, std::string(what) + ": category has " +
                                                  std::to_string(c.object_count()) + " objects and " +
                                                  std::to_string(c.morphism_count()) + " morphisms, bounds are " +
                                                  std::to_string(b.objects) + "/" + std::to_string(b.morphisms));
}

std::optional<ObjId> FiniteCategory::find_object(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<MorId> FiniteCategory::find_morphism(const std::string& name) const {
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
}

ObjId FiniteCategory::object(const std::string& name) const {
    if (auto o = find_object(name)) return *o;
    throw Error(ErrorKind::UnknownObject, "no object '" + name + "'");
}

MorId FiniteCategory::morphism_id(const std::string& name) const {
    if (auto m = find_morphism(name)) return *m;
    throw Error(ErrorKind::UnknownObject, "no morphism '" + name + "'");
}

std::optional<MorId> FiniteCategory::inverse(MorId m) const {
    for (MorId n : hom(target(m), source(m)))
        if (compose(n, m) == identity(source(m)) && compose(m, n) == identity(target(m))) return n;
    return std::nullopt;
}

std::vector<MorId> FiniteCategory::automorphisms(ObjId o) const {
    std::vector<MorId> out;
    for (MorId m : hom(o, o))
        if (is_isomorphism(m)) out.push_back(m);
    return out;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    if (a.objects_ != b.objects_ || a.identities_ != b.identities_ || a.table_ != b.table_) return false;
    if (a.morphisms_.size() != b.morphisms_.size()) return false;
    for (std::size_t i = 0; i < a.morphisms_.size(); ++i) {
        const auto &x = a.morphisms_[i], &y = b.morphisms_[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || *a == *b; }

ObjId CategoryBuilder::add_object(std::string name) {
    if (cat_.object_index_.count(name)) throw Error(ErrorKind::MalformedFixture, "duplicate object '" + name + "'");
    ObjId id = static_cast<ObjId>(cat_.objects_.size());
    cat_.object_index_.emplace(name, id);
    cat_.objects_.push_back(std::move(name));
    explicit_ids_.emplace_back();
    return id;
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId source, ObjId target) {
    if (source >= cat_.objects_.size() || target >= cat_.objects_.size())
        throw Error(ErrorKind::UnknownObject, "morphism '" + name + "' has an unknown endpoint");
    if (cat_.morphism_index_.count(name))
        throw Error(ErrorKind::MalformedFixture, "duplicate morphism '" + name + "'");
    MorId id = static_cast<MorId>(cat_.morphisms_.size());
    cat_.morphism_index_.emplace(name, id);
    cat_.morphisms_.push_back({std::move(name), source, target});
    return id;
}

void CategoryBuilder::set_identity(ObjId o, MorId m) {
    const Morphism& mm = cat_.morphisms_.at(m);
    if (mm.source != o || mm.target != o)
        throw Error(ErrorKind::IdentityViolation, "identity '" + mm.name + "' of '" + cat_.objects_[o] +
                                                      "' is not an endomorphism");
    explicit_ids_.at(o) = m;
}

void CategoryBuilder::set_composite(MorId g, MorId f, MorId gf) {
    const auto& ms = cat_.morphisms_;
    if (ms.at(f).target != ms.at(g).source)
        throw Error(ErrorKind::MalformedFixture, "composite " + ms[g].name + " o " + ms[f].name + " is not composable");
    if (ms.at(gf).source != ms[f].source || ms[gf].target != ms[g].target)
        throw Error(ErrorKind::ValidationFailure, "composite " + ms[g].name + " o " + ms[f].name + " = " +
                                                      ms[gf].name + " has the wrong endpoints");
    auto [it, fresh] = composites_.emplace(pair_key(g, f), gf);
    if (!fresh && it->second != gf)
        throw Error(ErrorKind::MalformedFixture, "composite " + ms[g].name + " o " + ms[f].name + " given twice");
}

ObjId CategoryBuilder::object(const std::string& name) const { return cat_.object(name); }
MorId CategoryBuilder::morphism(const std::string& name) const { return cat_.morphism_id(name); }

CatPtr CategoryBuilder::build() && {
    FiniteCategory& c = cat_;
    for (ObjId o = 0; o < c.objects_.size(); ++o) {
        if (!explicit_ids_[o]) explicit_ids_[o] = add_morphism("id_" + c.objects_[o], o, o);
    }
    require_within_bounds(c, "category");
    const std::size_t n = c.morphisms_.size();
    const std::size_t k = c.objects_.size();
    for (ObjId o = 0; o < k; ++o) c.identities_.push_back(*explicit_ids_[o]);

    c.homs_.assign(k * k, {});
    c.out_.assign(k, {});
    c.in_.assign(k, {});
    for (MorId m = 0; m < n; ++m) {
        c.homs_[c.morphisms_[m].source * k + c.morphisms_[m].target].push_back(m);
        c.out_[c.morphisms_[m].source].push_back(m);
        c.in_[c.morphisms_[m].target].push_back(m);
    }

    auto name = [&](MorId m) { return c.morphisms_[m].name; };
    c.table_.assign(n * n, kNoMorphism);
    for (MorId f = 0; f < n; ++f) {
        for (MorId g : c.out_[c.morphisms_[f].target]) {
            auto it = composites_.find(pair_key(g, f));
            MorId gf = kNoMorphism;
            if (it != composites_.end()) gf = it->second;
            const bool g_id = c.identities_[c.morphisms_[g].source] == g;
            const bool f_id = c.identities_[c.morphisms_[f].source] == f;
            if (g_id || f_id) {
                MorId expect = g_id ? f : g;
                if (gf != kNoMorphism && gf != expect)
                    throw Error(ErrorKind::IdentityViolation,
                                name(g) + " o " + name(f) + " = " + name(gf) + ", expected " + name(expect));
                gf = expect;
            }
            if (gf == kNoMorphism)
                throw Error(ErrorKind::MalformedFixture, "missing composite " + name(g) + " o " + name(f));
            c.table_[static_cast<std::size_t>(g) * n + f] = gf;
        }
    }
    for (MorId f = 0; f < n; ++f) {
        for (MorId g : c.out_[c.morphisms_[f].target]) {
            const MorId gf = c.compose(g, f);
            for (MorId h : c.out_[c.morphisms_[g].target]) {
                if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
                    throw Error(ErrorKind::AssociativityViolation,
                                "(" + name(h) + ", " + name(g) + ", " + name(f) + "): " + name(h) + " o (" + name(g) +
                                    " o " + name(f) + ") != (" + name(h) + " o " + name(g) + ") o " + name(f));
            }
        }
    }
    return CatPtr(new FiniteCategory(std::move(c)));
}

CatPtr terminal_category(const std::string& object) {
    CategoryBuilder b;
    b.add_object(object);
    return std::move(b).build();
}

CatPtr empty_category() { return CategoryBuilder().build(); }

Subcategory subcategory(const FiniteCategory& c, const std::vector<bool>& keep_objects,
                        const std::vector<bool>& keep_morphisms) {
    CategoryBuilder b;
    Subcategory out;
    std::vector<ObjId> obj_new(c.object_count(), UINT32_MAX);
    std::vector<MorId> mor_new(c.morphism_count(), kNoMorphism);
    for (ObjId o = 0; o < c.object_count(); ++o) {
        if (!keep_objects[o]) continue;
        obj_new[o] = b.add_object(c.object_name(o));
        out.object_in_parent.push_back(o);
    }
    for (MorId m = 0; m < c.morphism_count(); ++m) {
        if (!keep_morphisms[m] || !keep_objects[c.source(m)] || !keep_objects[c.target(m)]) continue;
        mor_new[m] = b.add_morphism(c.morphism_name(m), obj_new[c.source(m)], obj_new[c.target(m)]);
        out.morphism_in_parent.push_back(m);
    }
    for (ObjId o : out.object_in_parent) {
        MorId id = c.identity(o);
        if (mor_new[id] == kNoMorphism)
            throw Error(ErrorKind::ValidationFailure, "subcategory drops the identity of " + c.object_name(o));
        b.set_identity(obj_new[o], mor_new[id]);
    }
    for (MorId f : out.morphism_in_parent) {
        for (MorId g : c.out_of(c.target(f))) {
            if (mor_new[g] == kNoMorphism) continue;
            MorId gf = c.compose(g, f);
            if (mor_new[gf] == kNoMorphism)
                throw Error(ErrorKind::ValidationFailure, "subcategory is not closed under " + c.morphism_name(g) +
                                                              " o " + c.morphism_name(f));
            b.set_composite(mor_new[g], mor_new[f], mor_new[gf]);
        }
    }
    out.category = std::move(b).build();
    return out;
}

Subcategory full_subcategory(const FiniteCategory& c, const std::vector<bool>& keep_objects) {
    return subcategory(c, keep_objects, std::vector<bool>(c.morphism_count(), true));
}

}  // namespace logmin::category
