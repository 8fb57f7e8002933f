#include "logmin/category/descent.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace logmin::category {

namespace {

std::string mor_name(const FiniteCategory& c, MorId m) {
    return c.morphism_name(m) + ":" + c.object_name(c.source(m)) + "->" + c.object_name(c.target(m));
}

void require_groupoid_fibration(const Tower& t) {
    if (!is_groupoid_fibration(t.F())) throw Error(ErrorKind::NotGroupoidFibration, "F is not a groupoid fibration");
}

[[noreturn]] void construction_failure(const std::string& what) { throw Error(ErrorKind::ConstructionFailure, what); }

// the unique m in hom(a, b) satisfying pred
template <class Pred>
MorId unique_completion(const FiniteCategory& c, ObjId a, ObjId b, Pred pred, const std::string& diagram) {
    MorId found = kNoMorphism;
    for (MorId m : c.hom(a, b)) {
        if (!pred(m)) continue;
        if (found != kNoMorphism) construction_failure("two completions of " + diagram);
        found = m;
    }
    if (found == kNoMorphism) construction_failure("no completion of " + diagram);
    return found;
}

}  // namespace

Tower::Tower(Functor F, Functor forget)
    : F_(std::move(F)), forget_(std::move(forget)), underlying_(compose(forget_, F_)),
      strict_(cartesian_morphisms(forget_)) {
    if (auto miss = find_missing_lift(forget_, strict_))
        throw Error(ErrorKind::ValidationFailure,
                    "LogSch -> Sch is not fibered: " + mor_name(*forget_.target(), miss->d) + " has no cartesian lift to " +
                        forget_.source()->object_name(miss->c));
}

bool Tower::over_identity(MorId m) const { return Sch()->is_identity(underlying_.mor(m)); }

bool is_minimal(const Tower& t, ObjId z) {
    const FiniteCategory& Z = *t.Z();
    for (ObjId w1 = 0; w1 < Z.object_count(); ++w1) {
        for (MorId j : Z.hom(w1, z)) {
            if (!t.over_identity(j)) continue;
            for (MorId i : Z.out_of(w1)) {
                if (!t.over_identity(i)) continue;
                std::size_t n = 0;
                for (MorId k : Z.hom(Z.target(i), z))
                    if (Z.compose(k, i) == j && ++n > 1) break;
                if (n != 1) return false;
            }
        }
    }
    return true;
}

std::vector<bool> minimal_objects(const Tower& t) {
    require_within_bounds(*t.Z(), "minimality scan");
    std::vector<bool> out(t.Z()->object_count());
    for (ObjId z = 0; z < out.size(); ++z) out[z] = is_minimal(t, z);
    return out;
}

B1Report check_B1(const Tower& t, const std::vector<bool>& minimal) {
    const FiniteCategory& Z = *t.Z();
    B1Report r;
    for (ObjId w = 0; w < Z.object_count(); ++w) {
        const auto& out = Z.out_of(w);
        bool ok = std::any_of(out.begin(), out.end(), [&](MorId i) { return minimal[Z.target(i)] && t.over_identity(i); });
        if (!ok) {
            r.holds = false;
            r.failures.push_back(w);
        }
    }
    return r;
}

B2Report check_B2(const Tower& t, const std::vector<bool>& minimal) {
    const FiniteCategory& Z = *t.Z();
    B2Report r;
    for (MorId i = 0; i < Z.morphism_count(); ++i) {
        if (!minimal[Z.target(i)]) continue;
        if (t.strict()[t.F().mor(i)] != minimal[Z.source(i)]) {
            r.holds = false;
            r.failures.push_back(i);
        }
    }
    return r;
}

B1Report check_B1(const Tower& t) {
    require_groupoid_fibration(t);
    return check_B1(t, minimal_objects(t));
}

B2Report check_B2(const Tower& t) {
    require_groupoid_fibration(t);
    return check_B2(t, minimal_objects(t));
}

LogCfg::LogCfg(Functor M, Functor forget) : M_(std::move(M)), forget_(std::move(forget)) {
    if (!same_category(M_.target(), forget_.source()))
        throw Error(ErrorKind::ValidationFailure, "M does not land in the LogSch of forget");
    auto strict = cartesian_morphisms(forget_);
    if (auto miss = find_missing_lift(forget_, strict))
        throw Error(ErrorKind::ValidationFailure, "LogSch -> Sch is not fibered at " +
                                                      mor_name(*forget_.target(), miss->d));
    const FiniteCategory& X = *M_.source();
    for (MorId a = 0; a < X.morphism_count(); ++a)
        if (!strict[M_.mor(a)])
            throw Error(ErrorKind::ValidationFailure, "M " + mor_name(X, a) + " is not a strict arrow");
    if (!is_groupoid_fibration(compose(forget_, M_)))
        throw Error(ErrorKind::ValidationFailure, "forget o M is not a groupoid fibration");
}

std::optional<ObjId> PhiResult::find(ObjId x, MorId f) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), std::make_pair(x, f));
    if (it == objects.end() || *it != std::make_pair(x, f)) return std::nullopt;
    return static_cast<ObjId>(it - objects.begin());
}

PhiResult phi(const LogCfg& l) {
    const FiniteCategory& X = *l.X();
    const FiniteCategory& L = *l.forget().source();
    const FiniteCategory& S = *l.forget().target();
    const Functor& M = l.M();
    const Functor& forget = l.forget();

    CategoryBuilder b;
    std::vector<std::pair<ObjId, MorId>> objects;
    for (ObjId x = 0; x < X.object_count(); ++x)
        for (MorId f : L.into(M.obj(x)))
            if (S.is_identity(forget.mor(f))) {
                b.add_object("(" + X.object_name(x) + "," + L.morphism_name(f) + ")");
                objects.emplace_back(x, f);
            }
    require_within_bounds(*l.X(), "phi");
    if (objects.size() > size_bounds().objects)
        throw Error(ErrorKind::BoundExceeded, "phi: " + std::to_string(objects.size()) + " objects");

    std::vector<std::pair<MorId, MorId>> morphisms;
    std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> index;
    for (ObjId s = 0; s < objects.size(); ++s) {
        const auto [x, f] = objects[s];
        for (ObjId t = 0; t < objects.size(); ++t) {
            const auto [y, g] = objects[t];
            for (MorId a : X.hom(x, y))
                for (MorId bb : L.hom(L.source(f), L.source(g))) {
                    if (L.compose(M.mor(a), f) != L.compose(g, bb)) continue;
                    bool id = a == X.identity(x) && bb == L.identity(L.source(f));
                    MorId m = b.add_morphism("[" + X.morphism_name(a) + "," + L.morphism_name(bb) + "]" +
                                                 std::to_string(s) + ">" + std::to_string(t),
                                             s, t);
                    if (id) b.set_identity(s, m);
                    morphisms.emplace_back(a, bb);
                    index.emplace(std::make_tuple(s, t, a, bb), m);
                    if (morphisms.size() > size_bounds().morphisms)
                        throw Error(ErrorKind::BoundExceeded, "phi: more than " +
                                                                  std::to_string(size_bounds().morphisms) + " morphisms");
                }
        }
    }
    std::vector<ObjId> src(morphisms.size()), tgt(morphisms.size());
    for (const auto& [key, m] : index) {
        src[m] = std::get<0>(key);
        tgt[m] = std::get<1>(key);
    }
    for (MorId m1 = 0; m1 < morphisms.size(); ++m1)
        for (MorId m2 = 0; m2 < morphisms.size(); ++m2) {
            if (src[m2] != tgt[m1]) continue;
            auto key = std::make_tuple(src[m1], tgt[m2], X.compose(morphisms[m2].first, morphisms[m1].first),
                                       L.compose(morphisms[m2].second, morphisms[m1].second));
            b.set_composite(m2, m1, index.at(key));
        }
    CatPtr Z = std::move(b).build();

    std::vector<ObjId> fo(objects.size());
    std::vector<MorId> fm(morphisms.size());
    for (ObjId o = 0; o < objects.size(); ++o) fo[o] = L.source(objects[o].second);
    for (MorId m = 0; m < morphisms.size(); ++m) fm[m] = morphisms[m].second;
    Functor F(Z, forget.source(), std::move(fo), std::move(fm));
    return {Tower(std::move(F), forget), std::move(objects), std::move(morphisms)};
}

MinimalSubfibration minimal_subfibration(const Tower& t) {
    require_groupoid_fibration(t);
    auto minimal = minimal_objects(t);
    auto b1 = check_B1(t, minimal);
    auto b2 = check_B2(t, minimal);
    const FiniteCategory& Z = *t.Z();
    if (!b1.holds)
        throw Error(ErrorKind::ConditionsNotSatisfied, "B1 fails at " + Z.object_name(b1.failures.front()));
    if (!b2.holds)
        throw Error(ErrorKind::ConditionsNotSatisfied, "B2 fails at " + mor_name(Z, b2.failures.front()));
    Subcategory zm = full_subcategory(Z, minimal);
    Functor M = compose(t.F(), inclusion(zm, t.Z()));
    LogCfg cfg(std::move(M), t.forget());
    return {std::move(zm), std::move(cfg)};
}

DescentResult descent_construct(const Tower& t) {
    MinimalSubfibration ms = minimal_subfibration(t);
    PhiResult target = phi(ms.cfg);
    const FiniteCategory& Z = *t.Z();
    const FiniteCategory& L = *t.LogSch();
    const FiniteCategory& P = *target.tower.Z();
    const Functor& F = t.F();
    const auto& up = ms.Zm.object_in_parent;
    const auto& upm = ms.Zm.morphism_in_parent;
    std::vector<ObjId> down(Z.object_count(), UINT32_MAX);
    for (ObjId i = 0; i < up.size(); ++i) down[up[i]] = i;
    std::vector<MorId> downm(Z.morphism_count(), kNoMorphism);
    for (MorId i = 0; i < upm.size(); ++i) downm[upm[i]] = i;

    auto phi_morphism = [&](ObjId s, ObjId tg, MorId a, MorId b) -> MorId {
        for (MorId m : P.hom(s, tg))
            if (target.morphisms[m] == std::make_pair(a, b)) return m;
        construction_failure("no morphism [" + ms.Zm.category->morphism_name(a) + "," + L.morphism_name(b) +
                             "] from " + P.object_name(s) + " to " + P.object_name(tg));
    };

    // Step 2: cleavage f_x : z_x -> x with F f_x = f, smallest id
    std::vector<MorId> cleave(P.object_count());
    for (ObjId o = 0; o < P.object_count(); ++o) {
        const auto [x, f] = target.objects[o];
        MorId c = kNoMorphism;
        for (MorId m : Z.into(up[x]))
            if (F.mor(m) == f) {
                c = m;
                break;
            }
        if (c == kNoMorphism) construction_failure("no cleavage arrow over " + mor_name(L, f));
        cleave[o] = c;
    }
    std::vector<ObjId> psi_obj(P.object_count());
    for (ObjId o = 0; o < P.object_count(); ++o) psi_obj[o] = Z.source(cleave[o]);
    std::vector<MorId> psi_mor(P.morphism_count());
    for (MorId m = 0; m < P.morphism_count(); ++m) {
        const ObjId s = P.source(m), tg = P.target(m);
        const auto [a, b] = target.morphisms[m];
        const MorId rhs = Z.compose(upm[a], cleave[s]);
        psi_mor[m] = unique_completion(
            Z, psi_obj[s], psi_obj[tg], [&](MorId k) { return F.mor(k) == b && Z.compose(cleave[tg], k) == rhs; },
            "psi square at " + P.morphism_name(m));
    }
    Functor psi(target.tower.Z(), t.Z(), psi_obj, psi_mor);

    // Step 3: f^m_z : z -> x_z, x_z minimal, over an identity; smallest id
    std::vector<MorId> fm(Z.object_count());
    for (ObjId z = 0; z < Z.object_count(); ++z) {
        MorId c = kNoMorphism;
        for (MorId m : Z.out_of(z))
            if (down[Z.target(m)] != UINT32_MAX && t.over_identity(m)) {
                c = m;
                break;
            }
        if (c == kNoMorphism) construction_failure("no minimal target for " + Z.object_name(z));
        fm[z] = c;
    }
    std::vector<ObjId> phi_obj(Z.object_count());
    for (ObjId z = 0; z < Z.object_count(); ++z) {
        auto o = target.find(down[Z.target(fm[z])], F.mor(fm[z]));
        if (!o) construction_failure("phi(" + Z.object_name(z) + ") is not an object");
        phi_obj[z] = *o;
    }
    std::vector<MorId> phi_mor(Z.morphism_count());
    for (MorId h = 0; h < Z.morphism_count(); ++h) {
        const ObjId z = Z.source(h), w = Z.target(h);
        const MorId rhs = Z.compose(fm[w], h);
        MorId k = unique_completion(
            Z, Z.target(fm[z]), Z.target(fm[w]), [&](MorId c) { return Z.compose(c, fm[z]) == rhs; },
            "phi square at " + Z.morphism_name(h));
        phi_mor[h] = phi_morphism(phi_obj[z], phi_obj[w], downm[k], F.mor(h));
    }
    Functor phi_f(t.Z(), target.tower.Z(), phi_obj, phi_mor);

    if (!(compose(F, psi) == target.tower.F())) construction_failure("F psi differs from the forgetful functor");
    if (!(compose(target.tower.F(), phi_f) == F)) construction_failure("forget phi differs from F");

    // Step 4: eta(x, f) = (k, Id) with k f^m_{z_x} = f_x
    std::vector<MorId> eta(P.object_count());
    for (ObjId o = 0; o < P.object_count(); ++o) {
        const auto [x, f] = target.objects[o];
        const ObjId zx = psi_obj[o];
        MorId k = unique_completion(
            Z, Z.target(fm[zx]), up[x], [&](MorId c) { return Z.compose(c, fm[zx]) == cleave[o]; },
            "eta square at " + P.object_name(o));
        eta[o] = phi_morphism(phi_obj[zx], o, downm[k], L.identity(L.source(f)));
    }
    Functor phipsi = compose(phi_f, psi);
    NaturalTransformation eta_t(phipsi, Functor::identity(target.tower.Z()), std::move(eta));

    // Step 5: theta(z) over Id with f^m_z theta(z) = f_{x_z}
    std::vector<MorId> theta(Z.object_count());
    for (ObjId z = 0; z < Z.object_count(); ++z) {
        const ObjId o = phi_obj[z];
        theta[z] = unique_completion(
            Z, psi_obj[o], z,
            [&](MorId c) { return F.mor(c) == L.identity(F.obj(z)) && Z.compose(fm[z], c) == cleave[o]; },
            "theta triangle at " + Z.object_name(z));
    }
    NaturalTransformation theta_t(compose(psi, phi_f), Functor::identity(t.Z()), std::move(theta));

    if (!eta_t.is_invertible()) construction_failure("eta has a non-invertible component");
    if (!theta_t.is_invertible()) construction_failure("theta has a non-invertible component");
    for (ObjId o = 0; o < P.object_count(); ++o)
        if (!L.is_identity(target.tower.F().mor(eta_t[o])))
            construction_failure("eta at " + P.object_name(o) + " is not over an identity of LogSch");
    for (ObjId z = 0; z < Z.object_count(); ++z)
        if (!L.is_identity(F.mor(theta_t[z])))
            construction_failure("theta at " + Z.object_name(z) + " is not over an identity of LogSch");

    return {std::move(ms), std::move(target), std::move(psi), std::move(phi_f), std::move(eta_t), std::move(theta_t)};
}

LiftingReport check_lifting_lemmas(const Tower& t) {
    require_groupoid_fibration(t);
    const FiniteCategory& Z = *t.Z();
    const FiniteCategory& S = *t.Sch();
    auto minimal = minimal_objects(t);
    LiftingReport r;
    if (!check_B2(t, minimal).holds) {
        r.skipped_reason = "B2 does not hold";
        return r;
    }
    r.checked = true;
    auto fail = [&](std::string what) {
        if (r.failures.size() < 8) r.failures.push_back(std::move(what));
    };
    for (ObjId z = 0; z < Z.object_count(); ++z) {
        if (!minimal[z]) continue;
        for (ObjId w1 = 0; w1 < Z.object_count(); ++w1)
            for (MorId j : Z.hom(w1, z))
                for (MorId i : Z.out_of(w1)) {
                    if (!t.over_identity(i)) continue;
                    ++r.lemma1_diagrams;
                    std::size_t n = 0;
                    for (MorId k : Z.hom(Z.target(i), z))
                        if (Z.compose(k, i) == j) ++n;
                    if (n != 1) {
                        ++r.lemma1_failures;
                        fail("first lemma: i=" + mor_name(Z, i) + " j=" + mor_name(Z, j) + " has " +
                             std::to_string(n) + " completions");
                    }
                }
    }
    const Functor& uF = t.underlying();
    for (ObjId w = 0; w < Z.object_count(); ++w) {
        if (!minimal[w]) continue;
        for (ObjId z = 0; z < Z.object_count(); ++z) {
            if (!minimal[z]) continue;
            for (MorId j : Z.hom(z, w))
                for (MorId i : Z.into(w)) {
                    if (uF.mor(i) != uF.mor(j)) continue;
                    ++r.lemma2_diagrams;
                    std::size_t n = 0;
                    for (MorId k : Z.hom(Z.source(i), z))
                        if (Z.compose(j, k) == i && S.is_identity(uF.mor(k))) ++n;
                    if (n != 1) {
                        ++r.lemma2_failures;
                        fail("second lemma: i=" + mor_name(Z, i) + " j=" + mor_name(Z, j) + " has " +
                             std::to_string(n) + " completions");
                    }
                }
        }
    }
    return r;
}

std::vector<std::string> check_minimality_properties(const Tower& t) {
    const FiniteCategory& S = *t.Sch();
    auto minimal = minimal_objects(t);
    const bool b1 = check_B1(t, minimal).holds;
    std::vector<std::string> failures;
    for (ObjId s = 0; s < S.object_count(); ++s) {
        Subcategory fib = fiber_category(t.underlying(), s);
        const FiniteCategory& C = *fib.category;
        std::vector<ObjId> mins;
        for (ObjId i = 0; i < C.object_count(); ++i) {
            if (!minimal[fib.object_in_parent[i]]) continue;
            mins.push_back(i);
            if (!is_pseudo_terminal(C, i)) failures.push_back(C.object_name(i) + " is not pseudo-terminal in its fiber");
            for (MorId f : C.out_of(i)) {
                const ObjId w = C.target(f);
                const auto& back = C.hom(w, i);
                if (std::none_of(back.begin(), back.end(), [&](MorId r) { return C.compose(r, f) == C.identity(i); }))
                    failures.push_back(C.morphism_name(f) + " out of a minimal object has no retract");
                if (minimal[fib.object_in_parent[w]] && !C.is_isomorphism(f))
                    failures.push_back(C.morphism_name(f) + " between minimal objects is not invertible");
            }
        }
        if (b1 && C.object_count() > 0 && !is_weakly_terminal_set(C, mins))
            failures.push_back("minimal objects over " + S.object_name(s) + " are not weakly terminal");
    }
    return failures;
}

}  // namespace logmin::category
