#include "doctest.h"

#include "logmin/category/descent.hpp"

using namespace logmin;
using namespace logmin::category;

namespace {

// Characteristic LogSch on A (monoid 0) and B (monoid N) over a one-object Sch.
// Hom(B,B) = {id, e} (multiplication by 1 or 0), AB from N -> 0, BA from 0 -> N.
struct Cusp {
    CatPtr logsch, sch;
    Functor forget;
};

Cusp two_point_logsch() {
    CategoryBuilder b;
    ObjId A = b.add_object("A"), B = b.add_object("B");
    MorId e = b.add_morphism("e", B, B);
    MorId ab = b.add_morphism("AB", A, B);
    MorId ba = b.add_morphism("BA", B, A);
    MorId idA = b.add_morphism("idA", A, A);
    MorId idB = b.add_morphism("idB", B, B);
    b.set_identity(A, idA);
    b.set_identity(B, idB);
    b.set_composite(e, e, e);
    b.set_composite(ab, ba, e);
    b.set_composite(ba, ab, idA);
    b.set_composite(e, ab, ab);
    b.set_composite(ba, e, ba);
    CatPtr L = std::move(b).build();
    CatPtr S = terminal_category("pt");
    Functor forget(L, S, {0, 0}, std::vector<MorId>(L->morphism_count(), 0));
    return {L, S, forget};
}

}  // namespace

TEST_CASE("terminal category and identity functor") {
    CatPtr t = terminal_category();
    CHECK(t->object_count() == 1);
    CHECK(t->morphism_count() == 1);
    Functor id = Functor::identity(t);
    CHECK(is_groupoid_fibration(id));
    CHECK(is_pseudo_terminal(*t, 0));
    CHECK(is_weakly_terminal_set(*t, {0}));
    CHECK(fiber_category(id, 0).category->object_count() == 1);
}

TEST_CASE("law violations are reported") {
    {
        CategoryBuilder b;
        ObjId x = b.add_object("x");
        MorId f = b.add_morphism("f", x, x);
        MorId g = b.add_morphism("g", x, x);
        // (f o f) o f = g o f = f but f o (f o f) = f o g = g
        b.set_composite(f, f, g);
        b.set_composite(g, f, f);
        b.set_composite(f, g, g);
        b.set_composite(g, g, g);
        CHECK_THROWS_WITH_AS(std::move(b).build(), doctest::Contains("AssociativityViolation"), Error);
    }
    {
        CategoryBuilder b;
        ObjId x = b.add_object("x");
        MorId f = b.add_morphism("f", x, x);
        MorId id = b.add_morphism("id", x, x);
        b.set_identity(x, id);
        b.set_composite(id, f, id);
        b.set_composite(f, f, f);
        CHECK_THROWS_AS(std::move(b).build(), Error);
    }
    {
        CategoryBuilder b;
        ObjId x = b.add_object("x");
        b.add_morphism("f", x, x);
        CHECK_THROWS_WITH_AS(std::move(b).build(), doctest::Contains("missing composite"), Error);
    }
}

TEST_CASE("functor laws") {
    Cusp c = two_point_logsch();
    CHECK_NOTHROW(Functor::identity(c.logsch));
    // sending e to the identity breaks AB o BA = e
    std::vector<MorId> m(c.logsch->morphism_count());
    for (MorId i = 0; i < m.size(); ++i) m[i] = i;
    m[c.logsch->morphism_id("e")] = c.logsch->morphism_id("idB");
    CHECK_THROWS_AS(Functor(c.logsch, c.logsch, {0, 1}, m), Error);
}

TEST_CASE("cartesian arrows of the two point LogSch") {
    Cusp c = two_point_logsch();
    const FiniteCategory& L = *c.logsch;
    auto cart = cartesian_morphisms(c.forget);
    CHECK(cart[L.morphism_id("idA")]);
    CHECK(cart[L.morphism_id("idB")]);
    CHECK_FALSE(cart[L.morphism_id("AB")]);
    CHECK_FALSE(cart[L.morphism_id("BA")]);
    CHECK_FALSE(cart[L.morphism_id("e")]);
    CHECK(is_fibered(c.forget));
    CHECK_FALSE(is_groupoid_fibration(c.forget));
    auto assoc = associated_groupoid_fibration(c.forget);
    CHECK(assoc.sub.category->morphism_count() == 2);
    CHECK(is_groupoid_fibration(assoc.restricted));
}

TEST_CASE("two out of three") {
    Cusp c = two_point_logsch();
    const FiniteCategory& L = *c.logsch;
    auto cart = cartesian_morphisms(c.forget);
    for (MorId f = 0; f < L.morphism_count(); ++f)
        for (MorId g : L.out_of(L.target(f)))
            if (cart[g]) CHECK(cart[f] == cart[L.compose(g, f)]);
}

TEST_CASE("pseudo terminal violation") {
    CategoryBuilder b;
    ObjId c = b.add_object("c"), d = b.add_object("d");
    b.add_morphism("u", c, d);
    b.add_morphism("v", c, d);
    CatPtr cat = std::move(b).build();
    CHECK_FALSE(is_pseudo_terminal(*cat, d));
    CHECK_FALSE(is_weakly_terminal_set(*cat, {d}));
}

TEST_CASE("phi over the two point LogSch") {
    Cusp c = two_point_logsch();
    const FiniteCategory& L = *c.logsch;
    CatPtr X = terminal_category("x");
    Functor M(X, c.logsch, {L.object("B")}, {L.identity(L.object("B"))});
    LogCfg cfg(M, c.forget);
    PhiResult p = phi(cfg);
    // arrows into B: idB, e, AB
    CHECK(p.objects.size() == 3);
    CHECK(is_groupoid_fibration(p.tower.F()));
    auto minimal = minimal_objects(p.tower);
    for (ObjId o = 0; o < p.objects.size(); ++o)
        CHECK(minimal[o] == L.is_isomorphism(p.objects[o].second));
    CHECK(check_B1(p.tower).holds);
    CHECK(check_B2(p.tower).holds);
    CHECK(check_minimality_properties(p.tower).empty());

    auto lift = check_lifting_lemmas(p.tower);
    CHECK(lift.checked);
    CHECK(lift.lemma1_failures == 0);
    CHECK(lift.lemma2_failures == 0);
    CHECK(lift.lemma1_diagrams > 0);

    DescentResult d = descent_construct(p.tower);
    CHECK(d.eta.is_invertible());
    CHECK(d.theta.is_invertible());
    CHECK(d.minimal.Zm.category->object_count() == 1);
}

TEST_CASE("trivial tower") {
    CatPtr t = terminal_category();
    Tower tw(Functor::identity(t), Functor::identity(t));
    CHECK(is_minimal(tw, 0));
    CHECK(check_B1(tw).holds);
    CHECK(check_B2(tw).holds);
    DescentResult d = descent_construct(tw);
    CHECK(d.psi.object_map() == std::vector<ObjId>{0});
    CHECK(d.eta[0] == d.target.tower.Z()->identity(0));
    CHECK(d.theta[0] == t->identity(0));
    auto lift = check_lifting_lemmas(tw);
    CHECK(lift.lemma1_failures + lift.lemma2_failures == 0);
}

TEST_CASE("tower without minimal objects fails B1") {
    // two objects swapped by nothing, each with a non-invertible idempotent over the identity
    CategoryBuilder b;
    ObjId w = b.add_object("w"), z = b.add_object("z");
    MorId f = b.add_morphism("f", w, z);
    MorId g = b.add_morphism("g", z, w);
    MorId p = b.add_morphism("p", w, w);
    MorId q = b.add_morphism("q", z, z);
    b.set_composite(g, f, p);
    b.set_composite(f, g, q);
    b.set_composite(p, p, p);
    b.set_composite(q, q, q);
    b.set_composite(f, p, f);
    b.set_composite(p, g, g);
    b.set_composite(q, f, f);
    b.set_composite(g, q, g);
    CatPtr Z = std::move(b).build();
    CatPtr t = terminal_category();
    // F to a terminal LogSch is a groupoid fibration only for groupoids, so use the identity of Z as F
    Functor F = Functor::identity(Z);
    Functor forget(Z, t, {0, 0}, std::vector<MorId>(Z->morphism_count(), 0));
    Tower tw(F, forget);
    auto minimal = minimal_objects(tw);
    CHECK_FALSE(minimal[w]);
    CHECK_FALSE(minimal[z]);
    auto b1 = check_B1(tw, minimal);
    CHECK_FALSE(b1.holds);
    CHECK(b1.failures.size() == 2);
    CHECK_THROWS_AS(minimal_subfibration(tw), Error);
}
