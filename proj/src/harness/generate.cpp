#include "logmin/harness/generate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace logmin::harness {

using monoid::IntMatrix;
using monoid::Integer;
using monoid::Vec;

std::string to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::IntegralMono: return "integral-mono";
        case InstanceKind::LogcfgTower: return "logcfg-tower";
        case InstanceKind::CurveDatum: return "curve-datum";
        case InstanceKind::PointDatum: return "point-datum";
    }
    return "?";
}

InstanceKind parse_instance_kind(const std::string& s) {
    for (auto k : {InstanceKind::IntegralMono, InstanceKind::LogcfgTower, InstanceKind::CurveDatum,
                   InstanceKind::PointDatum})
        if (to_string(k) == s) return k;
    throw Error(ErrorKind::InvalidArgument, "unknown instance kind '" + s + "'");
}

GeneratorBounds parse_generator_bounds(const std::string& text, GeneratorBounds b) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bound '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        long long v;
        try {
            std::size_t used;
            v = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bound '" + item + "' needs an integer value");
        }
        if (v <= 0) throw Error(ErrorKind::InvalidArgument, "bound '" + item + "' must be positive");
        if (key == "rank") b.rank = v;
        else if (key == "entry") b.entry = v;
        else if (key == "extra") b.extra = v;
        else if (key == "degree") b.degree = static_cast<unsigned>(v);
        else if (key == "objects") b.objects = v;
        else if (key == "morphisms") b.morphisms = v;
        else if (key == "retries") b.retries = v;
        else throw Error(ErrorKind::InvalidArgument, "unknown bound '" + key + "'");
    }
    return b;
}

json to_json(const GeneratorBounds& b) {
    return {{"rank", b.rank},           {"entry", b.entry},         {"extra", b.extra},
            {"degree", b.degree},       {"objects", b.objects},     {"morphisms", b.morphisms},
            {"retries", b.retries}};
}

std::uint64_t instance_seed(std::uint64_t seed, InstanceKind kind, std::uint64_t index) {
    // splitmix64 over the triple
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(kind) + 1));
    x += 0x9e3779b97f4a7c15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

using monoid::FgAbelianGroup;

GroupElement elem(const Vec& v) { return GroupElement(v); }

// sharp monoid: nonzero generators in N^r, plus optional torsion coordinates
FgMonoid random_monoid(Rng& rng, std::size_t r, std::size_t gens, long long entry, bool torsion) {
    std::vector<Integer> tors;
    if (torsion) tors.push_back(rng.range(2, 3));
    FgAbelianGroup G(r, tors);
    std::vector<GroupElement> out;
    while (out.size() < gens) {
        Vec v(G.dim());
        bool nonzero = false;
        for (std::size_t i = 0; i < r; ++i) {
            v[i] = rng.range(0, entry);
            nonzero = nonzero || v[i] != 0;
        }
        if (!nonzero) continue;
        for (std::size_t j = 0; j < tors.size(); ++j) v[r + j] = rng.range(0, static_cast<long long>(tors[j]) - 1);
        out.push_back(G.make(std::move(v)));
    }
    return FgMonoid(G, std::move(out));
}

GroupElement random_sum(Rng& rng, const FgMonoid& m, int max_terms) {
    GroupElement x = m.ambient().zero();
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t)
        x = m.ambient().add(x, m.generators()[rng.below(m.generators().size())]);
    return x;
}

// hom N^s -> P with the given images
MonoidHom from_free(const FgMonoid& P, const std::vector<GroupElement>& images) {
    std::vector<Vec> cols;
    for (const auto& g : images) cols.push_back(g.coords());
    return MonoidHom(FgMonoid::free(images.size()), P, IntMatrix::from_columns(cols, P.ambient().dim()));
}

FgMonoid random_saturated(Rng& rng, std::size_t r, const GeneratorBounds& b, long long entry) {
    for (;;) {
        FgMonoid m = random_monoid(rng, r, r + rng.below(b.extra + 1), entry, false);
        if (monoid::groupify(m).group().rank() != r) continue;
        return monoid::saturate(m);
    }
}

FgMonoid extend_by(const FgMonoid& Q, const std::vector<Vec>& extra_gens) {
    const std::size_t q = Q.ambient().dim();
    FgAbelianGroup G = FgAbelianGroup::free(q + 1);
    std::vector<GroupElement> gens;
    for (const auto& g : Q.generators()) {
        Vec v = g.coords();
        v.push_back(0);
        gens.push_back(elem(v));
    }
    for (const auto& v : extra_gens) gens.push_back(elem(v));
    return FgMonoid(G, std::move(gens));
}

MonoidHom inclusion_hom(const FgMonoid& Q, const FgMonoid& P) {
    IntMatrix m(P.ambient().dim(), Q.ambient().dim());
    for (std::size_t i = 0; i < Q.ambient().dim(); ++i) m(i, i) = 1;
    return MonoidHom(Q, P, std::move(m));
}

// Smooth, Marked or Node stalk over a random saturated Q
std::pair<MonoidHom, std::string> structured_point(Rng& rng, const GeneratorBounds& b) {
    std::size_t r = 1 + rng.below(std::clamp<std::size_t>(b.rank - 1, 1, 2));
    FgMonoid Q = random_saturated(rng, r, b, 2);
    switch (rng.below(3)) {
        case 0: return {MonoidHom::identity(Q), "Smooth"};
        case 1: {
            Vec e(r + 1);
            e[r] = 1;
            FgMonoid P = extend_by(Q, {e});
            return {inclusion_hom(Q, P), "Marked"};
        }
        default: {
            GroupElement q0 = random_sum(rng, Q, 2);
            Vec x(r + 1), y = q0.coords();
            x[r] = 1;
            y.push_back(-1);
            FgMonoid P = extend_by(Q, {x, y});
            return {inclusion_hom(Q, P), "Node"};
        }
    }
}

// candidates whose relation Graver basis passes this size are rejected rather than certified
constexpr std::size_t kGraverCap = 400;

bool certified_integral_mono(const MonoidHom& h) {
    if (!h.domain().is_sharp() || !h.codomain().is_sharp() || !monoid::is_monomorphism(h)) return false;
    try {
        return monoid::is_integral_morphism(h, kGraverCap);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BoundExceeded) return false;
        throw;
    }
}

json integral_mono_fixture(const MonoidHom& h, const std::string& recipe) {
    auto im = monoid::IntegralMono::certify(h);
    auto nil = monoid::has_nilpotents(im);
    std::string n = nil.status == monoid::NilpotenceStatus::Absent    ? "absent"
                    : nil.status == monoid::NilpotenceStatus::Present ? "present"
                                                                      : "inconclusive";
    json saturated = "unknown";
    try {
        saturated = monoid::is_saturated(h.codomain(), kGraverCap);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundExceeded) throw;
    }
    return {{"kind", "integral-mono"},
            {"recipe", recipe},
            {"hom", to_json(h)},
            {"tags", {{"saturated", saturated}, {"nilpotents", n}}}};
}

json gen_integral_mono(Rng& rng, const GeneratorBounds& b, const std::string& flavor) {
    const bool trichotomy = flavor == "trichotomy";
    if (!trichotomy && flavor != "any")
        throw Error(ErrorKind::InvalidArgument, "unknown integral-mono flavor '" + flavor + "'");
    for (std::size_t attempt = 0; attempt < b.retries; ++attempt) {
        std::optional<MonoidHom> h;
        std::string recipe;
        const auto pick = rng.below(trichotomy ? 2 : 4);
        if (pick == 0) {
            auto [hom, name] = structured_point(rng, b);
            h = hom;
            recipe = "stalk-" + name;
        } else if (trichotomy) {
            std::size_t r = 1 + rng.below(std::min<std::size_t>(b.rank, 3));
            FgMonoid P = random_saturated(rng, r, b, 2);
            std::size_t s = r == 1 ? 1 : r - rng.below(2);
            std::vector<GroupElement> img;
            for (std::size_t i = 0; i < s; ++i) img.push_back(random_sum(rng, P, 2));
            h = from_free(P, img);
            recipe = "saturated-random";
        } else {
            std::size_t r = 1 + rng.below(b.rank);
            FgMonoid P = pick == 1 ? FgMonoid::free(r)
                                   : random_monoid(rng, r, r + rng.below(b.extra + 1), b.entry, rng.chance(1, 5));
            std::size_t s = 1 + rng.below(std::min<std::size_t>(r, 2));
            std::vector<GroupElement> img;
            for (std::size_t i = 0; i < s; ++i) {
                GroupElement g = random_sum(rng, P, 2);
                if (rng.chance(1, 6)) g = P.ambient().scale(2, g);
                img.push_back(g);
            }
            h = from_free(P, img);
            recipe = pick == 1 ? "free-codomain" : "random";
        }
        if (!certified_integral_mono(*h)) continue;
        if (trichotomy) {
            if (!monoid::is_saturated(h->codomain())) continue;
            auto im = monoid::IntegralMono::certify(*h);
            if (monoid::has_nilpotents(im).status != monoid::NilpotenceStatus::Absent) continue;
        }
        return integral_mono_fixture(*h, recipe);
    }
    throw Error(ErrorKind::BoundsTooTight, "integral-mono: retry cap of " + std::to_string(b.retries) + " exhausted");
}

json gen_logcfg(Rng& rng, const GeneratorBounds& b) {
    const std::vector<FgMonoid> pool = {FgMonoid::free(0), FgMonoid::free(1), FgMonoid::free(2)};
    const std::vector<std::string> pool_names = {"0", "N", "N2"};
    for (std::size_t attempt = 0; attempt < b.retries; ++attempt) {
        std::vector<FgMonoid> chars;
        std::vector<std::string> names;
        std::size_t n = 1 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            auto k = rng.below(pool.size());
            chars.push_back(pool[k]);
            names.push_back(pool_names[k] + "_" + std::to_string(i));
        }
        std::optional<models::FiniteLogSch> L;
        try {
            L = models::build_finite_logsch(chars, {1, true}, names);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BoundExceeded) continue;
            throw;
        }
        const auto& C = *L->logsch;
        if (C.object_count() > b.objects || C.morphism_count() > b.morphisms) continue;

        // X: components, each an indiscrete groupoid times Z/n mapped through sigma_j alpha^h sigma_i^-1
        category::CategoryBuilder xb;
        struct Arrow {
            std::size_t comp, i, j, h;
        };
        std::vector<Arrow> arrows;
        std::vector<category::ObjId> obj_image;
        std::vector<category::MorId> mor_image;
        std::size_t comps = 1 + rng.below(3);
        std::vector<std::vector<category::ObjId>> comp_objects(comps);
        for (std::size_t c = 0; c < comps; ++c) {
            category::ObjId target = static_cast<category::ObjId>(rng.below(C.object_count()));
            auto autos = C.automorphisms(target);
            std::size_t order = 1 + rng.below(2);
            std::vector<category::MorId> alphas;
            for (auto a : autos) {
                auto p = C.identity(target);
                for (std::size_t k = 0; k < order; ++k) p = C.compose(a, p);
                if (p == C.identity(target)) alphas.push_back(a);
            }
            category::MorId alpha = alphas[rng.below(alphas.size())];
            std::size_t m = 1 + rng.below(2);
            std::vector<category::MorId> sigma(m, C.identity(target));
            for (std::size_t i = 1; i < m; ++i) sigma[i] = autos[rng.below(autos.size())];
            std::string prefix = "x" + std::to_string(c);
            for (std::size_t i = 0; i < m; ++i) {
                comp_objects[c].push_back(xb.add_object(prefix + "_" + std::to_string(i)));
                obj_image.push_back(target);
            }
            auto power = [&](std::size_t h) {
                auto p = C.identity(target);
                for (std::size_t k = 0; k < h; ++k) p = C.compose(alpha, p);
                return p;
            };
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t h = 0; h < order; ++h) {
                        std::string name = prefix + ":" + std::to_string(i) + ">" + std::to_string(j) + "^" +
                                           std::to_string(h);
                        auto id = xb.add_morphism(name, comp_objects[c][i], comp_objects[c][j]);
                        if (i == j && h == 0) xb.set_identity(comp_objects[c][i], id);
                        arrows.push_back({c, i, j, h});
                        mor_image.push_back(C.compose(sigma[j], C.compose(power(h), *C.inverse(sigma[i]))));
                    }
        }
        // (j -> k, h2) o (i -> j, h1) = (i -> k, h1 + h2)
        auto find_arrow = [&](std::size_t c, std::size_t i, std::size_t j, std::size_t h) {
            for (std::size_t a = 0; a < arrows.size(); ++a)
                if (arrows[a].comp == c && arrows[a].i == i && arrows[a].j == j && arrows[a].h == h)
                    return static_cast<category::MorId>(a);
            throw Error(ErrorKind::ConstructionFailure, "missing groupoid arrow");
        };
        std::vector<std::size_t> orders(comps, 1);
        for (const auto& a : arrows) orders[a.comp] = std::max(orders[a.comp], a.h + 1);
        for (const auto& f : arrows)
            for (const auto& g : arrows)
                if (g.comp == f.comp && g.i == f.j)
                    xb.set_composite(find_arrow(g.comp, g.i, g.j, g.h), find_arrow(f.comp, f.i, f.j, f.h),
                                     find_arrow(f.comp, f.i, g.j, (f.h + g.h) % orders[f.comp]));
        auto X = std::move(xb).build();
        if (X->object_count() > b.objects || X->morphism_count() > b.morphisms) continue;
        category::Functor M(X, L->logsch, obj_image, mor_image);
        category::LogCfg cfg(std::move(M), L->forget);
        try {
            auto p = category::phi(cfg);
            const auto& Z = *p.tower.Z();
            if (Z.object_count() > b.objects || Z.morphism_count() > b.morphisms) continue;
            // the descent target is built again from the minimal objects and must fit the global caps too
            category::descent_construct(p.tower);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BoundExceeded) continue;
            throw;
        }
        json chars_json = json::object();
        for (std::size_t i = 0; i < chars.size(); ++i) chars_json[names[i]] = to_json(chars[i]);
        return {{"kind", "logcfg-tower"}, {"characteristic", chars_json}, {"logcfg", to_json(cfg)}};
    }
    throw Error(ErrorKind::BoundsTooTight, "logcfg-tower: retry cap of " + std::to_string(b.retries) + " exhausted");
}

json gen_curve(Rng& rng, const GeneratorBounds& b) {
    for (std::size_t attempt = 0; attempt < b.retries; ++attempt) {
        FgMonoid base;
        std::size_t nodes = rng.below(4);
        const bool free = rng.chance(1, 2);
        if (free) {
            base = FgMonoid::free(rng.below(4));
        } else {
            std::size_t r = 1 + rng.below(3);
            base = random_monoid(rng, r, r + rng.below(b.extra + 1), 2, false);
        }
        if (base.generators().empty()) nodes = 0;
        json smoothing = json::object();
        if (free && rng.chance(1, 3)) {
            // the basic shape: smoothings are the basis in some order
            std::size_t k = base.ambient().dim();
            std::vector<std::size_t> perm(k);
            for (std::size_t i = 0; i < k; ++i) perm[i] = i;
            for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
            for (std::size_t i = 0; i < k; ++i) smoothing["n" + std::to_string(i)] = to_json(base.ambient().basis(perm[i]));
        } else {
            for (std::size_t i = 0; i < nodes; ++i) {
                GroupElement s = rng.chance(1, 2) ? base.generators()[rng.below(base.generators().size())]
                                                  : random_sum(rng, base, 2);
                smoothing["n" + std::to_string(i)] = to_json(s);
            }
        }
        auto [stalk, expected] = structured_point(rng, b);
        if (!certified_integral_mono(stalk)) continue;
        if (monoid::has_nilpotents(monoid::IntegralMono::certify(stalk)).status != monoid::NilpotenceStatus::Absent)
            continue;
        return {{"kind", "curve-datum"},
                {"fiber", {{"base", to_json(base)}, {"smoothing", smoothing}}},
                {"stalk", to_json(stalk)},
                {"expected", expected}};
    }
    throw Error(ErrorKind::BoundsTooTight, "curve-datum: retry cap of " + std::to_string(b.retries) + " exhausted");
}

MonoidHom random_hom_into_free(Rng& rng, const FgMonoid& MX, std::size_t k, long long entry) {
    IntMatrix m(k, MX.ambient().dim());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < MX.ambient().dim(); ++j) m(i, j) = rng.chance(1, 2) ? 0 : rng.range(0, entry);
    return MonoidHom(MX, FgMonoid::free(k), std::move(m));
}

json gen_point(Rng& rng, const GeneratorBounds& b) {
    for (std::size_t attempt = 0; attempt < b.retries; ++attempt) {
        std::size_t r = 1 + rng.below(3);
        FgMonoid MX = rng.chance(1, 3) ? FgMonoid::free(r) : random_monoid(rng, r, r + rng.below(b.extra + 1), 2, false);
        std::optional<MonoidHom> a;
        if (rng.chance(1, 3)) {
            // projection onto a quotient by a face: the basic shape
            std::vector<FgMonoid> faces;
            const auto& gens = MX.generators();
            for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
                std::vector<GroupElement> sub;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (mask >> i & 1) sub.push_back(gens[i]);
                FgMonoid F(MX.ambient(), sub);
                if (monoid::is_face(MX, F)) faces.push_back(F);
            }
            auto fq = monoid::quotient_by_face(MX, faces[rng.below(faces.size())]);
            if (!fq.quotient.is_sharp()) continue;
            a = fq.projection;
        } else {
            a = random_hom_into_free(rng, MX, rng.below(3), 1);
        }
        MonoidHom h = random_hom_into_free(rng, MX, rng.below(3), 1);
        return {{"kind", "point-datum"}, {"datum", {{"a", to_json(*a)}, {"h", to_json(h)}}}};
    }
    throw Error(ErrorKind::BoundsTooTight, "point-datum: retry cap of " + std::to_string(b.retries) + " exhausted");
}

}  // namespace

json generate_instance(InstanceKind kind, std::uint64_t seed, std::uint64_t index, const GeneratorBounds& bounds,
                       const std::string& flavor) {
    Rng rng(instance_seed(seed, kind, index));
    json out;
    switch (kind) {
        case InstanceKind::IntegralMono: out = gen_integral_mono(rng, bounds, flavor); break;
        case InstanceKind::LogcfgTower: out = gen_logcfg(rng, bounds); break;
        case InstanceKind::CurveDatum: out = gen_curve(rng, bounds); break;
        case InstanceKind::PointDatum: out = gen_point(rng, bounds); break;
    }
    out["id"] = index;
    out["seed"] = seed;
    return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = SIZE_MAX;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<json> generate_instances(InstanceKind kind, std::uint64_t seed, std::size_t count,
                                     const GeneratorBounds& bounds, const std::string& flavor, unsigned threads) {
    std::vector<json> out(count);
    parallel_for(count, threads, [&](std::size_t i) { out[i] = generate_instance(kind, seed, i, bounds, flavor); });
    return out;
}

}  // namespace logmin::harness
