#include "doctest.h"

#include "logmin/category/fibration.hpp"
#include "logmin/harness/suite.hpp"

using namespace logmin;
using namespace logmin::harness;

namespace {

json mono_json(std::size_t rank, std::vector<std::vector<long long>> gens) {
    return {{"ambient", {{"rank", rank}, {"torsion", json::array()}}}, {"generators", gens}};
}

}  // namespace

TEST_CASE("json round trip of monoids and homs") {
    FgMonoid p(FgAbelianGroup(1, {3}), {GroupElement{1, 0}, GroupElement{1, 1}});
    Reader rd;
    CHECK(rd.monoid(to_json(p), "p") == p);

    monoid::IntMatrix m(2, 1);
    m(0, 0) = 1;
    m(1, 0) = 1;
    MonoidHom delta(FgMonoid::free(1), FgMonoid::free(2), m);
    MonoidHom back = rd.hom(to_json(delta), "h");
    CHECK(back.matrix() == delta.matrix());
    CHECK(back.codomain() == delta.codomain());

    monoid::Integer big = monoid::Integer(1) << 80;
    CHECK(to_json(big).is_string());
    CHECK(rd.integer(to_json(big), "x") == big);
}

TEST_CASE("malformed fixtures name the location") {
    Reader rd;
    json bad = mono_json(1, {{2}});
    bad["generators"].push_back({1, 2});
    try {
        rd.monoid(bad, "input");
        FAIL("expected MalformedFixture");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedFixture);
        CHECK(std::string(e.what()).find("input.generators[1]") != std::string::npos);
    }
}

TEST_CASE("bounds parsing") {
    auto b = parse_generator_bounds("entry=2,objects=10");
    CHECK(b.entry == 2);
    CHECK(b.objects == 10);
    CHECK(b.rank == GeneratorBounds{}.rank);
    CHECK_THROWS_AS(parse_generator_bounds("depth=3"), Error);
    CHECK_THROWS_AS(parse_generator_bounds("entry"), Error);
}

TEST_CASE("generated integral monos satisfy the contract") {
    auto fx = generate_instances(InstanceKind::IntegralMono, 0, 40, {});
    Reader rd;
    bool saw_nilpotent = false, saw_free = false, saw_unsaturated = false;
    for (const auto& f : fx) {
        MonoidHom h = rd.hom(f.at("hom"), "hom");
        CHECK(monoid::is_monomorphism(h));
        CHECK(monoid::is_integral_morphism(h));
        saw_nilpotent |= f["tags"]["nilpotents"] == "present";
        saw_free |= f["tags"]["nilpotents"] == "absent";
        saw_unsaturated |= f["tags"]["saturated"] == false;
    }
    CHECK(saw_nilpotent);
    CHECK(saw_free);
    CHECK(saw_unsaturated);
}

TEST_CASE("generated towers pass phi validity") {
    auto fx = generate_instances(InstanceKind::LogcfgTower, 0, 10, {});
    Reader rd;
    for (const auto& f : fx) {
        auto l = rd.logcfg(f.at("logcfg"), "logcfg");
        auto p = category::phi(l);
        CHECK(category::is_groupoid_fibration(p.tower.F()));
        CHECK(p.tower.Z()->object_count() <= GeneratorBounds{}.objects);
    }
}

TEST_CASE("generation is reproducible and thread independent") {
    for (auto kind : {InstanceKind::IntegralMono, InstanceKind::LogcfgTower, InstanceKind::CurveDatum,
                      InstanceKind::PointDatum}) {
        auto a = generate_instances(kind, 3, 12, {}, "any", 1);
        auto b = generate_instances(kind, 3, 12, {}, "any", 4);
        CHECK(json(a).dump() == json(b).dump());
    }
}

TEST_CASE("exhausted retry cap") {
    GeneratorBounds b;
    b.retries = 0;
    try {
        generate_instance(InstanceKind::IntegralMono, 0, 0, b);
        FAIL("expected BoundsTooTight");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundsTooTight);
    }
}

TEST_CASE("replay reproduces a failure") {
    // trichotomy fixture with the unsaturated codomain <2,3>
    json hom = {{"domain", mono_json(1, {{2}})}, {"codomain", mono_json(1, {{2}, {3}})}, {"matrix", {{1}}}};
    json cx = {{"suite", "trichotomy"}, {"fixture", {{"kind", "integral-mono"}, {"hom", hom}}}};
    json r = replay(cx);
    CHECK(r["status"] == "fail");
    CHECK(r["checks"]["saturated_codomain"] == "fail");
    CHECK(r["counterexample"] == cx);
    CHECK_THROWS_AS(replay(json{{"fixture", 1}}), Error);
}

TEST_CASE("small suite run is deterministic") {
    SuiteConfig c;
    c.seed = 5;
    c.count = 4;
    json a = run_suites(c);
    c.threads = 3;
    json b = run_suites(c);
    CHECK(a.dump() == b.dump());
    CHECK(report_status(a) == Status::Pass);
    CHECK(a["suites"].size() == all_suites().size());
}
