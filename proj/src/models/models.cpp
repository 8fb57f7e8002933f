#include "logmin/models/models.hpp"

#include <map>
#include <set>

namespace logmin::models {

using monoid::FgAbelianGroup;
using monoid::IntMatrix;
using monoid::Integer;
using monoid::Vec;

std::string to_string(const CurveStructure& s) {
    if (std::holds_alternative<Smooth>(s)) return "Smooth";
    if (auto m = std::get_if<Marked>(&s)) return "Marked(" + monoid::to_string(m->p) + ")";
    const Node& n = std::get<Node>(s);
    return "Node(" + monoid::to_string(n.q0) + ", " + monoid::to_string(n.p1) + ", " + monoid::to_string(n.pm1) + ")";
}

CurvePointDatum::CurvePointDatum(MonoidHom h) : point_map(monoid::IntegralMono::certify(h)) {
    auto r = monoid::has_nilpotents(point_map);
    if (r.status != monoid::NilpotenceStatus::Absent)
        throw Error(ErrorKind::NilpotentsPresent, "stalk map has the nilpotent " + monoid::to_string(*r.element));
}

CurveStructure structure_classify(const CurvePointDatum& d) {
    monoid::Cokernel c(d.point_map);
    switch (c.cls().kind) {
        case monoid::CokernelKind::Zero: return Smooth{};
        case monoid::CokernelKind::FreeRankOne: return Marked{monoid::split_N(d.point_map)};
        case monoid::CokernelKind::GroupZ: {
            auto n = monoid::pushout_Z_presentation(d.point_map);
            return Node{n.q0, n.p1, n.pm1};
        }
        case monoid::CokernelKind::Other: break;
    }
    throw Error(ErrorKind::NotACurveDatum, "cokernel is not 0, N or Z: " + c.cls().explanation);
}

CurveFiberDatum::CurveFiberDatum(FgMonoid base_, std::vector<std::string> nodes_, std::vector<GroupElement> smoothing_)
    : base(std::move(base_)), nodes(std::move(nodes_)), smoothing(std::move(smoothing_)) {
    if (!base.is_sharp()) throw Error(ErrorKind::NotSharp, "base monoid " + monoid::to_string(base) + " is not sharp");
    if (nodes.size() != smoothing.size())
        throw Error(ErrorKind::InvalidArgument, "every node needs exactly one smoothing element");
    if (std::set<std::string>(nodes.begin(), nodes.end()).size() != nodes.size())
        throw Error(ErrorKind::InvalidArgument, "node names repeat");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        smoothing[i] = base.ambient().make(smoothing[i].coords());
        if (smoothing[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "node " + nodes[i] + " has zero smoothing");
        if (!base.contains(smoothing[i]))
            throw Error(ErrorKind::NotMember, "smoothing of " + nodes[i] + " is not in the base monoid");
    }
}

MonoidHom comparison(const CurveFiberDatum& d) {
    std::vector<Vec> cols;
    for (const auto& s : d.smoothing) cols.push_back(s.coords());
    return MonoidHom(FgMonoid::free(d.nodes.size()), d.base, IntMatrix::from_columns(cols, d.base.ambient().dim()));
}

bool is_basic_curve(const CurveFiberDatum& d) { return monoid::is_isomorphism(comparison(d)); }

Basified basify_curve(const CurveFiberDatum& d) {
    FgMonoid free = FgMonoid::free(d.nodes.size());
    std::vector<GroupElement> basis;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) basis.push_back(free.ambient().basis(i));
    return {free, comparison(d), CurveFiberDatum(free, d.nodes, std::move(basis))};
}

CharLogPointDatum::CharLogPointDatum(MonoidHom a_, MonoidHom h_) : a(std::move(a_)), h(std::move(h_)) {
    if (!(a.domain() == h.domain())) throw Error(ErrorKind::AmbientMismatch, "a and h have different domains");
    for (const FgMonoid* m : {&MX(), &MY(), &P()})
        if (!m->is_sharp()) throw Error(ErrorKind::NotSharp, monoid::to_string(*m) + " is not sharp");
}

BasicLogPoint char_log_point_basic(const CharLogPointDatum& d) {
    // MY is sharp, so a^{-1}(0) is generated by the generators killed by a
    std::vector<GroupElement> kernel;
    for (const auto& g : d.MX().generators())
        if (d.a(g).is_zero()) kernel.push_back(g);
    FgMonoid face(d.MX().ambient(), kernel);
    monoid::FaceQuotient fq = monoid::quotient_by_face(d.MX(), face);
    MonoidHom z(fq.quotient, d.MY(), d.a.matrix() * fq.section);
    for (const auto& g : d.MX().generators())
        if (z(fq.projection(g)) != d.a(g))
            throw Error(ErrorKind::ConstructionFailure, "induced map disagrees with a on " + monoid::to_string(g));
    bool basic = monoid::is_isomorphism(z);
    return {fq.quotient, std::move(z), basic};
}

namespace {

std::vector<Vec> relations(const FgAbelianGroup& g, const std::vector<GroupElement>& v) {
    std::vector<Vec> cols;
    for (const auto& x : v) cols.push_back(x.coords());
    for (auto& t : g.torsion_relations()) cols.push_back(std::move(t));
    std::vector<Vec> out;
    for (auto& k : monoid::integer_kernel(IntMatrix::from_columns(cols, g.dim()))) {
        k.resize(v.size());
        out.push_back(std::move(k));
    }
    return out;
}

// value of the hom given by images on an element of `from`
GroupElement evaluate(const FgMonoid& from, const FgMonoid& to, const std::vector<GroupElement>& images,
                      const GroupElement& x) {
    auto c = from.decompose(x);
    if (!c) throw Error(ErrorKind::NotMember, monoid::to_string(x) + " is not in " + monoid::to_string(from));
    return to.ambient().combination(images, *c);
}

}  // namespace

bool is_hom_assignment(const FgMonoid& from, const FgMonoid& to, const std::vector<GroupElement>& images) {
    if (images.size() != from.generators().size()) return false;
    for (const auto& y : images)
        if (y.size() != to.ambient().dim() || !to.contains(y)) return false;
    for (const auto& c : relations(from.ambient(), from.generators()))
        if (!to.ambient().combination(images, c).is_zero()) return false;
    return true;
}

bool is_iso_assignment(const FgMonoid& from, const FgMonoid& to, const std::vector<GroupElement>& images) {
    for (const auto& c : relations(to.ambient(), images))
        if (!from.ambient().combination(from.generators(), c).is_zero()) return false;
    FgMonoid image(to.ambient(), images);
    for (const auto& g : to.generators())
        if (!image.contains(g)) return false;
    return true;
}

FiniteLogSch build_finite_logsch(const std::vector<FgMonoid>& chars, const LogSchOptions& options,
                                 std::vector<std::string> names) {
    const std::size_t n = chars.size();
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("M" + std::to_string(i));
    if (names.size() != n) throw Error(ErrorKind::InvalidArgument, "one name per characteristic monoid");
    for (const auto& m : chars)
        if (!m.is_sharp()) throw Error(ErrorKind::NotSharp, monoid::to_string(m) + " is not sharp");

    const std::size_t cap = category::size_bounds().morphisms;
    std::vector<CharArrow> cand;
    using Key = std::tuple<std::size_t, std::size_t, std::vector<Vec>>;
    auto key_of = [](std::size_t x, std::size_t y, const std::vector<GroupElement>& img) {
        std::vector<Vec> v;
        for (const auto& g : img) v.push_back(g.coords());
        return Key{x, y, std::move(v)};
    };
    std::map<Key, std::size_t> index;
    auto add = [&](std::size_t x, std::size_t y, std::vector<GroupElement> img) {
        Key key = key_of(x, y, img);
        if (index.count(key)) return;
        index.emplace(std::move(key), cand.size());
        cand.push_back({x, y, std::move(img)});
        if (cand.size() > 20 * cap) throw Error(ErrorKind::BoundExceeded, "too many bounded homs");
    };
    for (std::size_t x = 0; x < n; ++x) {
        auto pool = monoid::elements_up_to_weight(chars[x], options.hom_bound);
        for (std::size_t y = 0; y < n; ++y) {
            const auto& gens = chars[y].generators();
            if (x == y) add(x, y, gens);
            std::vector<std::size_t> pick(gens.size());
            for (;;) {
                std::vector<GroupElement> img;
                for (auto p : pick) img.push_back(pool[p]);
                if (is_hom_assignment(chars[y], chars[x], img)) add(x, y, std::move(img));
                std::size_t k = 0;
                while (k < pick.size() && ++pick[k] == pool.size()) pick[k++] = 0;
                if (k == pick.size()) break;
            }
        }
    }

    // g o f for f : X -> Y, g : Y -> Z carries (g o f)^dagger = f^dagger o g^dagger
    auto composite = [&](const CharArrow& g, const CharArrow& f) {
        std::vector<GroupElement> img;
        for (const auto& v : g.images) img.push_back(evaluate(chars[f.to], chars[f.from], f.images, v));
        return key_of(f.from, g.to, img);
    };
    auto weight = [&](const CharArrow& a) {
        Integer w = 0;
        for (const auto& v : a.images) w = std::max(w, chars[a.from].weight(v));
        return w;
    };
    auto is_identity = [&](const CharArrow& a) { return a.from == a.to && a.images == chars[a.to].generators(); };

    std::vector<bool> alive(cand.size(), true);
    auto refuse = [&](const std::string& why) {
        if (!options.prune) throw Error(ErrorKind::BoundExceeded, why + " (raise the hom bound or prune)");
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t f = 0; f < cand.size(); ++f) {
            for (std::size_t g = 0; g < cand.size() && alive[f]; ++g) {
                if (!alive[g] || cand[g].from != cand[f].to) continue;
                auto it = index.find(composite(cand[g], cand[f]));
                if (it != index.end() && alive[it->second]) continue;
                refuse("a composite of bounded homs leaves the bound");
                std::size_t drop = f;
                if (is_identity(cand[f]) || (!is_identity(cand[g]) && weight(cand[g]) > weight(cand[f]))) drop = g;
                alive[drop] = false;
                changed = true;
            }
        }
        for (std::size_t f = 0; f < cand.size(); ++f) {
            if (!alive[f] || !is_iso_assignment(chars[cand[f].to], chars[cand[f].from], cand[f].images)) continue;
            bool inverse = false;
            for (std::size_t g = 0; g < cand.size() && !inverse; ++g) {
                if (!alive[g] || cand[g].from != cand[f].to || cand[g].to != cand[f].from) continue;
                inverse = is_identity(cand[index.at(composite(cand[g], cand[f]))]) &&
                          is_identity(cand[index.at(composite(cand[f], cand[g]))]);
            }
            if (inverse) continue;
            refuse("an isomorphism lacks its inverse within the bound");
            alive[f] = false;
            changed = true;
        }
    }

    category::CategoryBuilder b;
    for (const auto& name : names) b.add_object(name);
    std::vector<category::MorId> id_of(cand.size(), category::kNoMorphism);
    FiniteLogSch out{chars, names, {}, nullptr, nullptr, category::Functor::identity(category::terminal_category())};
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counter;
    for (std::size_t f = 0; f < cand.size(); ++f) {
        if (!alive[f]) continue;
        const auto& a = cand[f];
        std::string name = is_identity(a) ? "id_" + names[a.from]
                                          : names[a.from] + "->" + names[a.to] + "#" +
                                                std::to_string(counter[{a.from, a.to}]++);
        id_of[f] = b.add_morphism(name, static_cast<category::ObjId>(a.from), static_cast<category::ObjId>(a.to));
        if (is_identity(a)) b.set_identity(static_cast<category::ObjId>(a.from), id_of[f]);
        out.arrows.push_back(a);
    }
    for (std::size_t f = 0; f < cand.size(); ++f) {
        if (!alive[f]) continue;
        for (std::size_t g = 0; g < cand.size(); ++g) {
            if (!alive[g] || cand[g].from != cand[f].to) continue;
            b.set_composite(id_of[g], id_of[f], id_of[index.at(composite(cand[g], cand[f]))]);
        }
    }
    out.logsch = std::move(b).build();
    out.sch = category::terminal_category("pt");
    out.forget = category::Functor(out.logsch, out.sch, std::vector<category::ObjId>(n, 0),
                                   std::vector<category::MorId>(out.logsch->morphism_count(), 0));
    return out;
}

}  // namespace logmin::models
