#include "doctest.h"

#include "logmin/monoid/hom.hpp"

using namespace logmin;
using namespace logmin::monoid;

namespace {

FgMonoid mono(std::size_t rank, std::vector<GroupElement> gens, std::vector<Integer> torsion = {}) {
    return FgMonoid(FgAbelianGroup(rank, std::move(torsion)), std::move(gens));
}

IntMatrix mat(std::vector<std::vector<long long>> rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    IntMatrix a = mat({{2, 0}, {0, 3}});
    SmithForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.D == mat({{1, 0}, {0, 6}}));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(2));
    CHECK(s.V * s.V_inv == IntMatrix::identity(2));
}

TEST_CASE("smith normal form edge cases") {
    CHECK(smith_normal_form(IntMatrix::identity(2)).D == IntMatrix::identity(2));
    CHECK(smith_normal_form(IntMatrix(1, 1)).D == IntMatrix(1, 1));
}

TEST_CASE("membership in <2,3>") {
    FgMonoid m = mono(1, {{2}, {3}});
    CHECK_FALSE(m.contains(GroupElement{1}));
    CHECK(m.contains(GroupElement{5}));
    CHECK(m.contains(GroupElement{0}));
    CHECK_FALSE(m.contains(GroupElement{-2}));
    CHECK_THROWS_AS(m.contains(GroupElement{1, 2}), Error);
}

TEST_CASE("units") {
    CHECK(is_sharp(FgMonoid::free(1)));
    FgMonoid z = mono(1, {{1}, {-1}});
    CHECK_FALSE(is_sharp(z));
    FgMonoid m = mono(2, {{1, 0}, {-1, 0}, {0, 1}});
    FgMonoid u = units(m);
    CHECK(u.contains(GroupElement{-1, 0}));
    CHECK(u.contains(GroupElement{3, 0}));
    CHECK_FALSE(u.contains(GroupElement{0, 1}));
}

TEST_CASE("groupify") {
    CHECK(groupify(mono(1, {{2}, {3}})).group() == FgAbelianGroup::free(1));
    for (long long n : {2, 3, 4}) {
        FgMonoid p = mono(1, {{1, 0}, {1, 1}}, {n});
        CHECK(groupify(p).group() == FgAbelianGroup(1, {n}));
    }
}

TEST_CASE("saturation") {
    FgMonoid cusp = mono(1, {{2}, {3}});
    CHECK_FALSE(is_saturated(cusp));
    CHECK(saturate(cusp) == FgMonoid::free(1));
    CHECK(is_saturated(FgMonoid::free(2)));
    CHECK(is_saturated(mono(2, {{2, 0}, {1, 1}, {0, 2}})));
    CHECK_THROWS_AS(saturate(mono(1, {{1}, {-1}})), Error);
}

TEST_CASE("hilbert basis") {
    auto z2 = FgAbelianGroup::free(2);
    CHECK(hilbert_basis({{1, 0}, {0, 1}}, z2) == std::vector<GroupElement>{{1, 0}, {0, 1}});
    CHECK(hilbert_basis({{1, 0}, {1, 2}}, z2) == std::vector<GroupElement>{{1, 0}, {1, 1}, {1, 2}});
    CHECK(hilbert_basis({{2}}, FgAbelianGroup::free(1)) == std::vector<GroupElement>{{1}});
    CHECK_THROWS_AS(hilbert_basis({{1}, {-1}}, FgAbelianGroup::free(1)), Error);
}

TEST_CASE("monomorphism and integrality") {
    FgMonoid n1 = FgMonoid::free(1), n2 = FgMonoid::free(2);
    MonoidHom delta(n1, n2, mat({{1}, {1}}));
    MonoidHom sum(n2, n1, mat({{1, 1}}));
    MonoidHom twice(n1, n1, mat({{2}}));
    CHECK(is_monomorphism(delta));
    CHECK_FALSE(is_monomorphism(sum));
    CHECK(is_monomorphism(twice));
    CHECK(is_integral_morphism(delta));
    CHECK_FALSE(is_integral_morphism(sum));
    CHECK(is_integral_morphism(MonoidHom::identity(n1)));
    CHECK_THROWS_AS(MonoidHom(n1, n1, mat({{-1}})), Error);
}

TEST_CASE("primitive decomposition along the diagonal") {
    IntegralMono delta = IntegralMono::certify(MonoidHom(FgMonoid::free(1), FgMonoid::free(2), mat({{1}, {1}})));
    auto s = primitive_decompose(delta, GroupElement{3, 1});
    CHECK(s.primitive == GroupElement{2, 0});
    CHECK(s.q == GroupElement{1});
    s = primitive_decompose(delta, GroupElement{2, 2});
    CHECK(s.primitive == GroupElement{0, 0});
    CHECK(s.q == GroupElement{2});
    CHECK(primitive_decompose(delta, GroupElement{0, 0}).q == GroupElement{0});
    CHECK_THROWS_AS(primitive_decompose(delta, GroupElement{-1, 0}), Error);
}

TEST_CASE("nilpotents") {
    FgMonoid n1 = FgMonoid::free(1);
    auto twice = IntegralMono::certify(MonoidHom(n1, n1, mat({{2}})));
    auto r = has_nilpotents(twice);
    CHECK(r.status == NilpotenceStatus::Present);
    CHECK(*r.element == GroupElement{1});
    CHECK(*r.multiplier == 2);
    auto bounded = has_nilpotents(twice, {NilpotenceOptions::Method::Bounded, 4});
    CHECK(bounded.status == NilpotenceStatus::Present);
    auto delta = IntegralMono::certify(MonoidHom(n1, FgMonoid::free(2), mat({{1}, {1}})));
    CHECK(has_nilpotents(delta).status == NilpotenceStatus::Absent);
    CHECK(has_nilpotents(IntegralMono::certify(MonoidHom::identity(n1))).status == NilpotenceStatus::Absent);
}

TEST_CASE("cokernel classes") {
    FgMonoid n1 = FgMonoid::free(1), n2 = FgMonoid::free(2);
    auto delta = IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {1}})));
    Cokernel c(delta);
    CHECK(c.cls().kind == CokernelKind::GroupZ);
    CHECK(c.cls().witness == std::vector<GroupElement>{{1, 0}, {0, 1}});
    auto first = IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {0}})));
    CHECK(Cokernel(first).cls().kind == CokernelKind::FreeRankOne);
    CHECK(Cokernel(first).cls().witness[0] == GroupElement{0, 1});
    CHECK(Cokernel(IntegralMono::certify(MonoidHom::identity(n1))).cls().kind == CokernelKind::Zero);
}

TEST_CASE("split_N") {
    FgMonoid n1 = FgMonoid::free(1), n2 = FgMonoid::free(2);
    CHECK(split_N(IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {0}})))) == GroupElement{0, 1});
    FgMonoid q = mono(2, {{1, 1}});
    FgMonoid p = mono(2, {{1, 1}, {0, 1}});
    CHECK(split_N(IntegralMono::certify(MonoidHom(q, p, IntMatrix::identity(2)))) == GroupElement{0, 1});
    auto delta = IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {1}})));
    CHECK_THROWS_AS(split_N(delta), Error);
}

TEST_CASE("pushout presentation") {
    FgMonoid n1 = FgMonoid::free(1), n2 = FgMonoid::free(2);
    auto node = pushout_Z_presentation(IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {1}}))));
    CHECK(node.q0 == GroupElement{1});
    CHECK(node.p1 == GroupElement{1, 0});
    CHECK(node.pm1 == GroupElement{0, 1});
    FgMonoid q = mono(2, {{2, 1}});
    FgMonoid p = mono(2, {{1, 0}, {1, 1}});
    auto other = pushout_Z_presentation(IntegralMono::certify(MonoidHom(q, p, IntMatrix::identity(2))));
    CHECK(other.q0 == GroupElement{2, 1});
    CHECK(other.p1 == GroupElement{1, 0});
    CHECK(other.pm1 == GroupElement{1, 1});
    CHECK_THROWS_AS(pushout_Z_presentation(IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {0}})))), Error);
}

TEST_CASE("monoid pushout") {
    FgMonoid n1 = FgMonoid::free(1), n2 = FgMonoid::free(2);
    auto delta = IntegralMono::certify(MonoidHom(n1, n2, mat({{1}, {1}})));
    MonoidPushout po(delta, MonoidHom(n1, n1, mat({{2}})));
    auto a = po.normal_form(GroupElement{1, 1}, GroupElement{0});
    auto b = po.normal_form(GroupElement{0, 0}, GroupElement{2});
    CHECK(a == b);
    CHECK(po.element(a) == po.element(b));
    CHECK(is_integral_morphism(po.in_R()));
}

TEST_CASE("face quotients") {
    FgMonoid n2 = FgMonoid::free(2);
    FgMonoid face = mono(2, {{1, 0}});
    auto fq = quotient_by_face(n2, face);
    CHECK(fq.quotient == FgMonoid::free(1));
    CHECK(quotient_by_face(n2, FgMonoid::trivial(n2.ambient())).quotient == n2);
    CHECK_THROWS_AS(quotient_by_face(n2, mono(2, {{1, 1}})), Error);
}
