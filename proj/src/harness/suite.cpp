#include "logmin/harness/suite.hpp"

#include "logmin/harness/brute.hpp"

#include <chrono>
#include <sstream>

namespace logmin::harness {

using monoid::IntMatrix;
using monoid::Integer;
using monoid::Vec;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

Status worst(Status a, Status b) {
    if (a == Status::Fail || b == Status::Fail) return Status::Fail;
    if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
    return Status::Pass;
}

void CheckOutcome::record(const std::string& name, Status s, const std::string& detail) {
    // a check recorded twice keeps its worst status
    Status prev = Status::Pass;
    if (checks.contains(name)) {
        const std::string& old = checks[name].get_ref<const std::string&>();
        prev = old == "fail" ? Status::Fail : old == "inconclusive" ? Status::Inconclusive : Status::Pass;
    }
    checks[name] = to_string(worst(prev, s));
    status = worst(status, s);
    if (s != Status::Pass && !detail.empty() && details.size() < 8) details.push_back(name + ": " + detail);
}

namespace {

std::string str(const GroupElement& g) { return monoid::to_string(g); }

// coordinate permutation of the free part, as an isomorphism m -> m'
MonoidHom permute_free(const FgMonoid& m, const std::vector<std::size_t>& perm) {
    const auto& G = m.ambient();
    IntMatrix p(G.dim(), G.dim());
    for (std::size_t i = 0; i < G.dim(); ++i) p(i < perm.size() ? perm[i] : i, i) = 1;
    std::vector<GroupElement> gens;
    for (const auto& g : m.generators()) {
        Vec v(G.dim());
        for (std::size_t i = 0; i < G.dim(); ++i) v[i < perm.size() ? perm[i] : i] = g[i];
        gens.push_back(G.make(std::move(v)));
    }
    return MonoidHom(m, FgMonoid(G, std::move(gens)), std::move(p));
}

std::vector<std::size_t> reversal(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

MonoidHom compose_matrix(const MonoidHom& g, const MonoidHom& f) {
    // g o f with g's codomain kept; f's codomain must be g's domain
    return monoid::compose(g, f);
}

CheckOutcome check_splitting(const json& fx, const GeneratorBounds& b) {
    CheckOutcome out;
    Reader rd;
    MonoidHom h = rd.hom(fx.at("hom"), "hom");
    auto im = monoid::IntegralMono::certify(h);
    brute::Membership P(h.codomain());
    auto elements = monoid::elements_up_to_degree(h.codomain(), b.degree);
    std::size_t checked = 0;
    for (const auto& p : elements) {
        auto lib = monoid::primitive_decompose(im, p);
        auto splits = brute::all_primitive_splits(h, P, p);
        ++checked;
        if (splits.size() != 1) {
            out.record("unique_split", false,
                       "p = " + str(p) + " has " + std::to_string(splits.size()) + " primitive splits by enumeration");
            continue;
        }
        const auto& GP = h.codomain().ambient();
        const auto& GQ = h.domain().ambient();
        bool same = GP.make(lib.primitive.coords()) == GP.make(splits[0].r.coords()) &&
                    GQ.make(lib.q.coords()) == GQ.make(splits[0].q.coords());
        out.record("unique_split", true);
        out.record("matches_oracle", same,
                   "p = " + str(p) + ": library " + str(lib.primitive) + " + h(" + str(lib.q) + "), oracle " +
                       str(splits[0].r) + " + h(" + str(splits[0].q) + ")");
    }
    out.stats["elements"] = checked;
    return out;
}

CheckOutcome check_trichotomy(const json& fx, const GeneratorBounds&) {
    CheckOutcome out;
    Reader rd;
    MonoidHom h = rd.hom(fx.at("hom"), "hom");
    auto im = monoid::IntegralMono::certify(h);
    out.record("saturated_codomain", monoid::is_saturated(h.codomain()));
    auto exact = monoid::has_nilpotents(im);
    out.record("nilpotent_free", exact.status == monoid::NilpotenceStatus::Absent,
               exact.element ? "nilpotent " + str(*exact.element) : "");
    monoid::NilpotenceOptions bounded;
    bounded.method = monoid::NilpotenceOptions::Method::Bounded;
    auto cross = monoid::has_nilpotents(im, bounded);
    out.record("bounded_search_agrees", cross.status != monoid::NilpotenceStatus::Present);
    monoid::Cokernel c(im);
    const auto kind = c.cls().kind;
    out.record("class_in_trichotomy", kind != monoid::CokernelKind::Other, c.cls().explanation);
    out.record("torsion_free", c.torsion_free(), "cokernel group " + monoid::to_string(c.group()));
    const std::size_t rank_diff = monoid::groupify(h.codomain()).group().rank() -
                                  monoid::groupify(h.domain()).group().rank();
    out.record("class_matches_rank", (kind == monoid::CokernelKind::Zero) == (rank_diff == 0),
               "rank difference " + std::to_string(rank_diff) + " with class " + monoid::to_string(kind));
    out.stats["class"] = monoid::to_string(kind);
    return out;
}

// window bound for bijectivity checks: a few generator weights
Integer window_bound(const FgMonoid& m) {
    brute::Membership w(m);
    Integer top = 1;
    for (const auto& g : m.generators()) top = std::max(top, w.weight(g));
    return 3 * top;
}

CheckOutcome check_constructions(const json& fx, const GeneratorBounds&) {
    CheckOutcome out;
    Reader rd;
    MonoidHom h = rd.hom(fx.at("hom"), "hom");
    auto im = monoid::IntegralMono::certify(h);
    const auto& Q = h.domain();
    const auto& P = h.codomain();
    const std::size_t q = Q.ambient().dim();
    monoid::Cokernel c(im);
    switch (c.cls().kind) {
        case monoid::CokernelKind::Zero:
            out.record("iso_when_zero", monoid::is_isomorphism(h));
            out.record("window_bijective", brute::window_bijective(h, window_bound(P)));
            break;
        case monoid::CokernelKind::FreeRankOne: {
            GroupElement p = monoid::split_N(im);
            // Q (+) N -> P, (x, n) |-> h(x) + n p
            std::vector<GroupElement> gens;
            monoid::FgAbelianGroup G(Q.ambient().rank() + 1, Q.ambient().torsion());
            auto lift = [&](const GroupElement& x, long long n) {
                Vec v(G.dim());
                const auto& r = Q.ambient().rank();
                for (std::size_t i = 0; i < r; ++i) v[i] = x[i];
                v[r] = n;
                for (std::size_t i = r; i < q; ++i) v[i + 1] = x[i];
                return G.make(std::move(v));
            };
            for (const auto& g : Q.generators()) gens.push_back(lift(g, 0));
            gens.push_back(lift(Q.ambient().zero(), 1));
            FgMonoid D(G, gens);
            IntMatrix m(P.ambient().dim(), G.dim());
            const auto r = Q.ambient().rank();
            for (std::size_t i = 0; i < P.ambient().dim(); ++i) {
                for (std::size_t j = 0; j < q; ++j) m(i, j < r ? j : j + 1) = h.matrix()(i, j);
                m(i, r) = p[i];
            }
            MonoidHom phi(D, P, std::move(m));
            out.record("split_iso", monoid::is_isomorphism(phi), "split element " + str(p));
            out.record("window_bijective", brute::window_bijective(phi, window_bound(P)), "split element " + str(p));
            out.record("split_primitive", monoid::is_primitive(im, p));
            break;
        }
        case monoid::CokernelKind::GroupZ: {
            auto n = monoid::pushout_Z_presentation(im);
            const auto& GP = P.ambient();
            out.record("sum_is_q0", GP.add(n.p1, n.pm1) == h(n.q0),
                       str(n.p1) + " + " + str(n.pm1) + " vs h(" + str(n.q0) + ")");
            out.record("p1_graded_lex_min", monoid::graded_lex_less(n.p1, n.pm1) || n.p1 == n.pm1);
            // Q (+)_N N^2 along 1 |-> q0 presented in Q^gp (+) Z with x = (0, 1), y = (q0, -1)
            if (!Q.ambient().is_torsion_free()) {
                out.record("cocartesian", Status::Inconclusive, "torsion in Q^gp");
                break;
            }
            monoid::FgAbelianGroup G = monoid::FgAbelianGroup::free(q + 1);
            std::vector<GroupElement> gens;
            for (const auto& g : Q.generators()) {
                Vec v = g.coords();
                v.push_back(0);
                gens.push_back(GroupElement(v));
            }
            Vec x(q + 1), y = n.q0.coords();
            x[q] = 1;
            y.push_back(-1);
            gens.push_back(GroupElement(x));
            gens.push_back(GroupElement(y));
            FgMonoid S(G, gens);
            IntMatrix m(GP.dim(), q + 1);
            for (std::size_t i = 0; i < GP.dim(); ++i) {
                for (std::size_t j = 0; j < q; ++j) m(i, j) = h.matrix()(i, j);
                m(i, q) = n.p1[i];
            }
            MonoidHom u(S, P, std::move(m));
            out.record("cocartesian", monoid::is_isomorphism(u), "presentation " + str(n.q0) + ", " + str(n.p1) +
                                                                     ", " + str(n.pm1));
            out.record("window_bijective", brute::window_bijective(u, window_bound(P)));
            break;
        }
        case monoid::CokernelKind::Other:
            out.record("applicable", Status::Inconclusive, c.cls().explanation);
            break;
    }
    out.stats["class"] = monoid::to_string(c.cls().kind);
    return out;
}

bool natural_by_hand(const category::NaturalTransformation& t) {
    const auto& F = t.from();
    const auto& G = t.to();
    const auto& C = *F.source();
    const auto& D = *F.target();
    for (category::MorId m = 0; m < C.morphism_count(); ++m) {
        auto x = C.source(m), y = C.target(m);
        if (D.compose(G.mor(m), t[x]) != D.compose(t[y], F.mor(m))) return false;
    }
    return true;
}

CheckOutcome check_descent(const json& fx, const GeneratorBounds&) {
    CheckOutcome out;
    Reader rd;
    auto cfg = rd.logcfg(fx.at("logcfg"), "logcfg");
    auto p = category::phi(cfg);
    const auto& t = p.tower;
    const auto& L = *t.LogSch();
    out.record("groupoid_fibration", category::is_groupoid_fibration(t.F()));
    auto minimal = category::minimal_objects(t);
    auto b1 = category::check_B1(t, minimal);
    auto b2 = category::check_B2(t, minimal);
    out.record("B1", b1.holds, std::to_string(b1.failures.size()) + " objects without a minimal target");
    out.record("B2", b2.holds, std::to_string(b2.failures.size()) + " arrows break strict-minimal compatibility");
    for (category::ObjId z = 0; z < minimal.size(); ++z) {
        bool inv = L.is_isomorphism(p.objects[z].second);
        out.record("minimal_iff_invertible", minimal[z] == inv, t.Z()->object_name(z));
    }
    try {
        auto d = category::descent_construct(t);
        bool inv = d.eta.is_invertible() && d.theta.is_invertible();
        out.record("equivalence_invertible", inv);
        out.record("naturality", natural_by_hand(d.eta) && natural_by_hand(d.theta));
        out.stats["minimal_objects"] = d.minimal.Zm.category->object_count();
    } catch (const Error& e) {
        out.record("equivalence_invertible", false, e.what());
    }
    auto lift = category::check_lifting_lemmas(t);
    if (!lift.checked) {
        out.record("lifting", Status::Inconclusive, lift.skipped_reason);
    } else {
        std::string first = lift.failures.empty() ? "" : lift.failures.front();
        out.record("lifting", lift.lemma1_failures == 0 && lift.lemma2_failures == 0, first);
        out.stats["lifting_diagrams"] = lift.lemma1_diagrams + lift.lemma2_diagrams;
    }
    auto props = category::check_minimality_properties(t);
    out.record("minimality_properties", props.empty(), props.empty() ? "" : props.front());
    out.stats["objects"] = t.Z()->object_count();
    out.stats["morphisms"] = t.Z()->morphism_count();
    return out;
}

CheckOutcome check_curves(const json& fx, const GeneratorBounds&) {
    CheckOutcome out;
    Reader rd;
    auto d = rd.curve_fiber(fx.at("fiber"), "fiber");
    const bool basic = models::is_basic_curve(d);
    const auto cmp = models::comparison(d);
    Integer bound = 1;
    {
        brute::Membership w(d.base);
        Integer total = 0;
        for (const auto& s : d.smoothing) total += w.weight(s);
        for (const auto& g : d.base.generators()) bound = std::max(bound, w.weight(g));
        bound = 3 * std::max(bound, total);
    }
    bool oracle = d.base.generators().empty() ? d.nodes.empty() : brute::window_bijective(cmp, bound);
    if (d.nodes.empty() && !d.base.generators().empty()) oracle = false;
    out.record("basic_matches_oracle", basic == oracle,
               std::string("library ") + (basic ? "basic" : "not basic") + ", window " + (oracle ? "bijective" : "not"));
    auto bas = models::basify_curve(d);
    out.record("basified_is_basic", models::is_basic_curve(bas.datum));
    // base change along a coordinate permutation keeps basicness
    auto sigma = permute_free(d.base, reversal(d.base.ambient().rank()));
    std::vector<GroupElement> moved;
    for (const auto& s : d.smoothing) moved.push_back(sigma(s));
    models::CurveFiberDatum changed(sigma.codomain(), d.nodes, moved);
    out.record("base_change_invariant", models::is_basic_curve(changed) == basic);

    MonoidHom stalk = rd.hom(fx.at("stalk"), "stalk");
    const std::string expected = fx.at("expected").get<std::string>();
    auto s = models::structure_classify(models::CurvePointDatum(stalk));
    std::string got = std::holds_alternative<models::Smooth>(s)   ? "Smooth"
                      : std::holds_alternative<models::Marked>(s) ? "Marked"
                                                                  : "Node";
    out.record("structure", got == expected, "expected " + expected + ", got " + models::to_string(s));
    if (auto n = std::get_if<models::Node>(&s))
        out.record("node_sum", stalk.codomain().ambient().add(n->p1, n->pm1) == stalk(n->q0));
    out.stats["basic"] = basic;
    return out;
}

CheckOutcome check_points(const json& fx, const GeneratorBounds&) {
    CheckOutcome out;
    Reader rd;
    auto d = rd.point(fx.at("datum"), "datum");
    auto res = models::char_log_point_basic(d);
    const auto& MX = d.MX();
    const auto& GX = MX.ambient();
    std::vector<GroupElement> kernel, live;
    for (const auto& g : MX.generators()) (d.a(g).is_zero() ? kernel : live).push_back(g);
    FgMonoid face(GX, kernel);
    auto fq = monoid::quotient_by_face(MX, face);
    bool factors = true;
    for (const auto& g : MX.generators()) factors = factors && res.z(fq.projection(g)) == d.a(g);
    out.record("z_factors_a", factors);
    out.record("basic_is_iso", res.basic == monoid::is_isomorphism(res.z));

    // oracle: a is onto MY on a window and its fibres there are the face congruence classes
    bool oracle = true;
    if (!d.MY().generators().empty()) {
        brute::Membership Y(d.MY());
        brute::Membership X(MX);
        Integer wy = 0;
        for (const auto& g : d.MY().generators()) wy = std::max(wy, Y.weight(g));
        for (const auto& g : live) wy = std::max(wy, Y.weight(d.a(g)));
        wy *= 2;
        std::vector<GroupElement> window{GX.zero()};
        std::unordered_set<GroupElement, monoid::GroupElementHash> seen{GX.zero()};
        for (std::size_t i = 0; i < window.size(); ++i)
            for (const auto& g : live) {
                GroupElement y = GX.add(window[i], g);
                if (Y.weight(d.a(y)) > wy || !seen.insert(y).second) continue;
                window.push_back(y);
            }
        std::unordered_set<GroupElement, monoid::GroupElementHash> hit;
        for (const auto& x : window) hit.insert(d.a(x));
        for (const auto& y : brute::enumerate(Y, wy))
            if (!hit.count(y)) oracle = false;
        if (oracle) {
            Integer wx = 0;
            for (const auto& x : window) wx = std::max(wx, X.weight(x));
            Integer face_w = 0;
            for (const auto& f : kernel) face_w += X.weight(f);
            auto cls = brute::congruence_classes(X, face, window, 2 * wx + 2 * face_w);
            for (std::size_t i = 0; i < window.size() && oracle; ++i)
                for (std::size_t j = i + 1; j < window.size(); ++j)
                    if (d.a(window[i]) == d.a(window[j]) && cls[i] != cls[j]) {
                        oracle = false;
                        break;
                    }
        }
    }
    out.record("basic_matches_oracle", res.basic == oracle,
               std::string("library ") + (res.basic ? "basic" : "not basic"));

    // strict base change MY -> MY' by a coordinate permutation
    auto sigma = permute_free(d.MY(), reversal(d.MY().ambient().rank()));
    models::CharLogPointDatum moved(compose_matrix(sigma, d.a), d.h);
    auto res2 = models::char_log_point_basic(moved);
    out.record("base_change_invariant", res2.basic == res.basic && res2.NY == res.NY);
    out.stats["basic"] = res.basic;
    return out;
}

// agreement of quotient_by_face and is_integral_morphism with enumeration on small windows
CheckOutcome check_oracles(const json& fx, const GeneratorBounds&) {
    CheckOutcome out;
    Reader rd;
    auto d = rd.point(fx.at("datum"), "datum");
    const auto& MX = d.MX();
    const auto& GX = MX.ambient();
    brute::Membership X(MX);
    const Integer w = brute::window_for(X, 50);
    auto window = brute::enumerate(X, w);
    std::size_t faces = 0;
    const auto& gens = MX.generators();
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
        std::vector<GroupElement> sub;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1) sub.push_back(gens[i]);
        FgMonoid F(GX, sub);
        if (!monoid::is_face(MX, F)) continue;
        ++faces;
        auto fq = monoid::quotient_by_face(MX, F);
        Integer face_w = 0;
        for (const auto& f : F.generators()) face_w += X.weight(f);
        auto cls = brute::congruence_classes(X, F, window, 2 * w + 2 * face_w);
        for (std::size_t i = 0; i < window.size(); ++i)
            for (std::size_t j = i + 1; j < window.size(); ++j) {
                bool lib = fq.projection(window[i]) == fq.projection(window[j]);
                out.record("face_quotient", lib == (cls[i] == cls[j]),
                           str(window[i]) + " vs " + str(window[j]) + " modulo " + monoid::to_string(F));
            }
        out.record("quotient_sharp", fq.quotient.is_sharp(), monoid::to_string(fq.quotient));
    }
    for (const MonoidHom* f : {&d.a, &d.h}) {
        if (f->codomain().generators().empty()) continue;
        brute::Membership P(f->codomain());
        auto qw = brute::enumerate(X, brute::window_for(X, 50, 4));
        auto pw = brute::enumerate(P, brute::window_for(P, 50, 4));
        bool lib = monoid::is_integral_morphism(*f);
        auto v = brute::find_integrality_violation(*f, qw, pw);
        std::string detail = v ? "violation at a1 = " + str(v->a1) + ", a2 = " + str(v->a2) + ", b1 = " + str(v->b1)
                               : "no violation in window";
        out.record("integrality", lib == !v.has_value(),
                   std::string("library ") + (lib ? "integral" : "not integral") + ", " + detail);
    }
    out.stats["faces"] = faces;
    out.stats["window"] = window.size();
    return out;
}

}  // namespace

const std::vector<SuiteSpec>& all_suites() {
    static const std::vector<SuiteSpec> suites = {
        {"splitting", InstanceKind::IntegralMono, "any", check_splitting},
        {"trichotomy", InstanceKind::IntegralMono, "trichotomy", check_trichotomy},
        {"constructions", InstanceKind::IntegralMono, "trichotomy", check_constructions},
        {"descent", InstanceKind::LogcfgTower, "any", check_descent},
        {"curves", InstanceKind::CurveDatum, "any", check_curves},
        {"points", InstanceKind::PointDatum, "any", check_points},
        {"oracles", InstanceKind::PointDatum, "any", check_oracles},
    };
    return suites;
}

const SuiteSpec& find_suite(const std::string& name) {
    for (const auto& s : all_suites())
        if (s.name == name) return s;
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

json to_json(const SuiteConfig& c) {
    json names = json::array();
    for (const auto& s : c.suites) names.push_back(s);
    return {{"seed", c.seed}, {"count", c.count}, {"bounds", to_json(c.bounds)}, {"suites", names}};
}

namespace {

json finish(const SuiteSpec& suite, const json& fixture, CheckOutcome out) {
    json r = {{"status", to_string(out.status)}, {"checks", out.checks}};
    if (!out.stats.empty()) r["stats"] = out.stats;
    if (!out.details.empty()) r["details"] = out.details;
    if (out.status != Status::Pass) r["counterexample"] = {{"suite", suite.name}, {"fixture", fixture}};
    return r;
}

CheckOutcome guarded(const SuiteSpec& suite, const json& fixture, const GeneratorBounds& b) {
    try {
        return suite.check(fixture, b);
    } catch (const Error& e) {
        CheckOutcome out;
        out.record("no_error", false, e.what());
        return out;
    }
}

}  // namespace

json run_instance(const SuiteSpec& suite, const SuiteConfig& config, std::size_t index) {
    json fixture;
    try {
        fixture = generate_instance(suite.kind, config.seed, index, config.bounds, suite.flavor);
    } catch (const Error& e) {
        return {{"id", index},
                {"status", "fail"},
                {"checks", {{"generated", "fail"}}},
                {"details", {e.what()}},
                {"counterexample",
                 {{"suite", suite.name}, {"seed", config.seed}, {"id", index}, {"bounds", to_json(config.bounds)}}}};
    }
    json r = finish(suite, fixture, guarded(suite, fixture, config.bounds));
    r["id"] = index;
    if (fixture.contains("recipe")) r["recipe"] = fixture["recipe"];
    if (fixture.contains("tags")) r["tags"] = fixture["tags"];
    return r;
}

json run_suites(const SuiteConfig& config, std::vector<SuiteTiming>* timing) {
    std::vector<const SuiteSpec*> chosen;
    if (config.suites.empty())
        for (const auto& s : all_suites()) chosen.push_back(&s);
    else
        for (const auto& n : config.suites) chosen.push_back(&find_suite(n));

    json suites = json::array();
    Status overall = Status::Pass;
    for (const SuiteSpec* s : chosen) {
        auto start = std::chrono::steady_clock::now();
        std::vector<json> results(config.count);
        parallel_for(config.count, config.threads, [&](std::size_t i) { results[i] = run_instance(*s, config, i); });
        std::size_t counts[3] = {0, 0, 0};
        Status st = Status::Pass;
        for (const auto& r : results) {
            const std::string& v = r["status"].get_ref<const std::string&>();
            Status x = v == "pass" ? Status::Pass : v == "fail" ? Status::Fail : Status::Inconclusive;
            ++counts[static_cast<int>(x)];
            st = worst(st, x);
        }
        overall = worst(overall, st);
        suites.push_back({{"name", s->name},
                          {"kind", to_string(s->kind)},
                          {"flavor", s->flavor},
                          {"status", to_string(st)},
                          {"counts", {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}}},
                          {"instances", results}});
        if (timing)
            timing->push_back(
                {s->name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    }
    return {{"config", to_json(config)}, {"suites", suites}, {"status", to_string(overall)}};
}

Status report_status(const json& report) {
    const std::string& s = report.at("status").get_ref<const std::string&>();
    return s == "pass" ? Status::Pass : s == "fail" ? Status::Fail : Status::Inconclusive;
}

json replay(const json& cx, const GeneratorBounds& bounds) {
    if (!cx.is_object() || !cx.contains("suite") || !cx["suite"].is_string())
        throw Error(ErrorKind::MalformedFixture, "counterexample: missing field 'suite'");
    const SuiteSpec& s = find_suite(cx["suite"]);
    if (cx.contains("fixture")) return finish(s, cx["fixture"], guarded(s, cx["fixture"], bounds));
    // generation failures replay by regenerating
    SuiteConfig c;
    c.seed = cx.at("seed").get<std::uint64_t>();
    c.bounds = bounds;
    return run_instance(s, c, cx.at("id").get<std::size_t>());
}

std::string summarize(const json& report) {
    std::ostringstream out;
    for (const auto& s : report.at("suites")) {
        const auto& c = s["counts"];
        out << s["name"].get<std::string>() << ": " << s["status"].get<std::string>() << " (" << c["pass"] << " pass, "
            << c["fail"] << " fail, " << c["inconclusive"] << " inconclusive)\n";
    }
    out << "overall: " << report.at("status").get<std::string>() << "\n";
    return out.str();
}

}  // namespace logmin::harness
