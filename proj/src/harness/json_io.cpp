#include "logmin/harness/json_io.hpp"

#include <fstream>

namespace logmin::harness {

namespace {

[[noreturn]] void malformed(const std::string& at, const std::string& what) {
    throw Error(ErrorKind::MalformedFixture, at + ": " + what);
}

}  // namespace

json to_json(const monoid::Integer& x) {
    if (auto v = monoid::to_int64(x)) return *v;
    return x.str();
}

json to_json(const monoid::Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const GroupElement& g) { return to_json(g.coords()); }

json to_json(const FgAbelianGroup& g) {
    json t = json::array();
    for (const auto& x : g.torsion()) t.push_back(to_json(x));
    return {{"rank", g.rank()}, {"torsion", t}};
}

json to_json(const FgMonoid& m) {
    json gens = json::array();
    for (const auto& g : m.generators()) gens.push_back(to_json(g));
    return {{"ambient", to_json(m.ambient())}, {"generators", gens}};
}

json to_json(const MonoidHom& h) {
    json rows = json::array();
    for (std::size_t i = 0; i < h.matrix().rows(); ++i) rows.push_back(to_json(h.matrix().row(i)));
    return {{"domain", to_json(h.domain())}, {"codomain", to_json(h.codomain())}, {"matrix", rows}};
}

json to_json(const category::FiniteCategory& c) {
    json objects = json::array(), morphisms = json::array(), identities = json::object(), comp = json::array();
    for (category::ObjId o = 0; o < c.object_count(); ++o) {
        objects.push_back(c.object_name(o));
        identities[c.object_name(o)] = c.morphism_name(c.identity(o));
    }
    for (category::MorId m = 0; m < c.morphism_count(); ++m) {
        morphisms.push_back({{"name", c.morphism_name(m)},
                             {"source", c.object_name(c.source(m))},
                             {"target", c.object_name(c.target(m))}});
    }
    for (category::MorId f = 0; f < c.morphism_count(); ++f)
        for (category::MorId g : c.out_of(c.target(f))) {
            if (c.is_identity(f) || c.is_identity(g)) continue;
            comp.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
        }
    return {{"objects", objects}, {"morphisms", morphisms}, {"identities", identities}, {"composition", comp}};
}

json functor_maps(const category::Functor& f) {
    const auto& s = *f.source();
    const auto& t = *f.target();
    json objects = json::object(), morphisms = json::object();
    for (category::ObjId o = 0; o < s.object_count(); ++o) objects[s.object_name(o)] = t.object_name(f.obj(o));
    for (category::MorId m = 0; m < s.morphism_count(); ++m)
        morphisms[s.morphism_name(m)] = t.morphism_name(f.mor(m));
    return {{"objects", objects}, {"morphisms", morphisms}};
}

json to_json(const category::Tower& t) {
    return {{"kind", "tower"},
            {"Z", to_json(*t.Z())},
            {"LogSch", to_json(*t.LogSch())},
            {"Sch", to_json(*t.Sch())},
            {"F", functor_maps(t.F())},
            {"forget", functor_maps(t.forget())}};
}

json to_json(const category::LogCfg& l) {
    return {{"kind", "logcfg"},
            {"X", to_json(*l.X())},
            {"LogSch", to_json(*l.forget().source())},
            {"Sch", to_json(*l.forget().target())},
            {"M", functor_maps(l.M())},
            {"forget", functor_maps(l.forget())}};
}

json to_json(const models::FiniteLogSch& l) {
    json chars = json::object(), arrows = json::object();
    for (std::size_t i = 0; i < l.chars.size(); ++i) chars[l.names[i]] = to_json(l.chars[i]);
    for (category::MorId m = 0; m < l.logsch->morphism_count(); ++m) {
        json img = json::array();
        for (const auto& g : l.arrows[m].images) img.push_back(to_json(g));
        arrows[l.logsch->morphism_name(m)] = img;
    }
    return {{"kind", "logsch"},
            {"convention", "an arrow X -> Y lists the images in M_X of the generators of M_Y"},
            {"characteristic", chars},
            {"arrows", arrows},
            {"LogSch", to_json(*l.logsch)},
            {"Sch", to_json(*l.sch)},
            {"forget", functor_maps(l.forget)}};
}

json to_json(const models::CurveStructure& s) {
    if (std::holds_alternative<models::Smooth>(s)) return {{"type", "Smooth"}};
    if (auto m = std::get_if<models::Marked>(&s)) return {{"type", "Marked"}, {"p", to_json(m->p)}};
    const auto& n = std::get<models::Node>(s);
    return {{"type", "Node"}, {"q0", to_json(n.q0)}, {"p1", to_json(n.p1)}, {"pm1", to_json(n.pm1)}};
}

const json& Reader::field(const json& j, const char* key, const std::string& at) const {
    if (!j.is_object()) malformed(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) malformed(at, std::string("missing field '") + key + "'");
    return *it;
}

monoid::Integer Reader::integer(const json& j, const std::string& at) const {
    if (j.is_number_integer()) return monoid::Integer(j.get<long long>());
    if (j.is_number_unsigned()) return monoid::Integer(j.get<unsigned long long>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
            return monoid::Integer(s);
    }
    malformed(at, "expected an integer");
}

monoid::Vec Reader::vec(const json& j, const std::string& at) const {
    if (!j.is_array()) malformed(at, "expected an array of integers");
    monoid::Vec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], at + "[" + std::to_string(i) + "]"));
    return out;
}

FgAbelianGroup Reader::group(const json& j, const std::string& at) const {
    const json& r = field(j, "rank", at);
    if (!r.is_number_unsigned() && !(r.is_number_integer() && r.get<long long>() >= 0))
        malformed(at + ".rank", "expected a nonnegative integer");
    monoid::Vec t = j.contains("torsion") ? vec(j["torsion"], at + ".torsion") : monoid::Vec{};
    try {
        return FgAbelianGroup(r.get<std::size_t>(), t);
    } catch (const Error& e) {
        malformed(at, e.what());
    }
}

GroupElement Reader::element(const json& j, const FgAbelianGroup& g, const std::string& at) const {
    monoid::Vec v = vec(j, at);
    if (v.size() != g.dim()) malformed(at, "element has " + std::to_string(v.size()) + " coordinates, expected " +
                                               std::to_string(g.dim()));
    return g.make(std::move(v));
}

FgMonoid Reader::monoid(const json& j, const std::string& at) const {
    FgAbelianGroup g = group(field(j, "ambient", at), at + ".ambient");
    const json& gens = field(j, "generators", at);
    if (!gens.is_array()) malformed(at + ".generators", "expected an array");
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        out.push_back(element(gens[i], g, at + ".generators[" + std::to_string(i) + "]"));
    return FgMonoid(g, std::move(out));
}

MonoidHom Reader::hom(const json& j, const std::string& at) const {
    FgMonoid d = monoid(field(j, "domain", at), at + ".domain");
    FgMonoid c = monoid(field(j, "codomain", at), at + ".codomain");
    const json& rows = field(j, "matrix", at);
    if (!rows.is_array()) malformed(at + ".matrix", "expected an array of rows");
    if (rows.size() != c.ambient().dim())
        malformed(at + ".matrix", "expected " + std::to_string(c.ambient().dim()) + " rows");
    monoid::IntMatrix m(c.ambient().dim(), d.ambient().dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        monoid::Vec r = vec(rows[i], at + ".matrix[" + std::to_string(i) + "]");
        if (r.size() != d.ambient().dim())
            malformed(at + ".matrix[" + std::to_string(i) + "]", "expected " + std::to_string(d.ambient().dim()) +
                                                                     " columns");
        for (std::size_t k = 0; k < r.size(); ++k) m(i, k) = r[k];
    }
    return MonoidHom(std::move(d), std::move(c), std::move(m));
}

category::CatPtr Reader::category(const json& j, const std::string& at) const {
    if (j.is_string()) {
        auto path = base_ / j.get<std::string>();
        Reader nested(path.parent_path());
        return nested.category(read_json_file(path), path.string());
    }
    category::CategoryBuilder b;
    const json& objects = field(j, "objects", at);
    if (!objects.is_array()) malformed(at + ".objects", "expected an array");
    for (const auto& o : objects) {
        if (!o.is_string()) malformed(at + ".objects", "object names must be strings");
        b.add_object(o.get<std::string>());
    }
    const json& morphisms = field(j, "morphisms", at);
    if (!morphisms.is_array()) malformed(at + ".morphisms", "expected an array");
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        std::string here = at + ".morphisms[" + std::to_string(i) + "]";
        const json& m = morphisms[i];
        auto str = [&](const char* k) {
            const json& v = field(m, k, here);
            if (!v.is_string()) malformed(here + "." + k, "expected a string");
            return v.get<std::string>();
        };
        b.add_morphism(str("name"), b.object(str("source")), b.object(str("target")));
    }
    if (j.contains("identities")) {
        for (const auto& [o, m] : j["identities"].items()) {
            if (!m.is_string()) malformed(at + ".identities." + o, "expected a morphism name");
            b.set_identity(b.object(o), b.morphism(m.get<std::string>()));
        }
    }
    if (j.contains("composition")) {
        const json& comp = j["composition"];
        if (!comp.is_array()) malformed(at + ".composition", "expected an array of [g, f, g o f]");
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const json& t = comp[i];
            if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
                malformed(at + ".composition[" + std::to_string(i) + "]", "expected [g, f, g o f]");
            b.set_composite(b.morphism(t[0]), b.morphism(t[1]), b.morphism(t[2]));
        }
    }
    return std::move(b).build();
}

category::Functor Reader::functor(const json& j, category::CatPtr source, category::CatPtr target,
                                  const std::string& at) const {
    std::map<std::string, std::string> objects, morphisms;
    for (const auto& [k, v] : field(j, "objects", at).items()) {
        if (!v.is_string()) malformed(at + ".objects." + k, "expected an object name");
        objects[k] = v.get<std::string>();
    }
    if (j.contains("morphisms"))
        for (const auto& [k, v] : j["morphisms"].items()) {
            if (!v.is_string()) malformed(at + ".morphisms." + k, "expected a morphism name");
            morphisms[k] = v.get<std::string>();
        }
    return category::Functor::from_names(std::move(source), std::move(target), objects, morphisms);
}

category::Tower Reader::tower(const json& j, const std::string& at) const {
    auto Z = category(field(j, "Z", at), at + ".Z");
    auto L = category(field(j, "LogSch", at), at + ".LogSch");
    auto S = category(field(j, "Sch", at), at + ".Sch");
    auto F = functor(field(j, "F", at), Z, L, at + ".F");
    auto forget = functor(field(j, "forget", at), L, S, at + ".forget");
    return category::Tower(std::move(F), std::move(forget));
}

category::LogCfg Reader::logcfg(const json& j, const std::string& at) const {
    auto X = category(field(j, "X", at), at + ".X");
    auto L = category(field(j, "LogSch", at), at + ".LogSch");
    auto S = category(field(j, "Sch", at), at + ".Sch");
    auto M = functor(field(j, "M", at), X, L, at + ".M");
    auto forget = functor(field(j, "forget", at), L, S, at + ".forget");
    return category::LogCfg(std::move(M), std::move(forget));
}

models::CurveFiberDatum Reader::curve_fiber(const json& j, const std::string& at) const {
    FgMonoid base = monoid(field(j, "base", at), at + ".base");
    std::vector<std::string> nodes;
    std::vector<GroupElement> smoothing;
    const json& s = field(j, "smoothing", at);
    if (!s.is_object()) malformed(at + ".smoothing", "expected an object node -> element");
    for (const auto& [k, v] : s.items()) {
        nodes.push_back(k);
        smoothing.push_back(element(v, base.ambient(), at + ".smoothing." + k));
    }
    return models::CurveFiberDatum(std::move(base), std::move(nodes), std::move(smoothing));
}

models::CharLogPointDatum Reader::point(const json& j, const std::string& at) const {
    return models::CharLogPointDatum(hom(field(j, "a", at), at + ".a"), hom(field(j, "h", at), at + ".h"));
}

json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorKind::MalformedFixture, p.string() + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedFixture, p.string() + ": " + e.what());
    }
}

}  // namespace logmin::harness
