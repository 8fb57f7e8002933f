#include "logmin/monoid/hom.hpp"

#include "logmin/monoid/exact_lp.hpp"
#include "logmin/monoid/graver.hpp"

#include <algorithm>
#include <unordered_set>

namespace logmin::monoid {

MonoidHom::MonoidHom(FgMonoid domain, FgMonoid codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    const auto& da = domain_.ambient();
    const auto& ca = codomain_.ambient();
    if (matrix_.rows() != ca.dim() || matrix_.cols() != da.dim())
        throw Error(ErrorKind::AmbientMismatch, "hom matrix is " + std::to_string(matrix_.rows()) + "x" +
                                                    std::to_string(matrix_.cols()) + ", expected " +
                                                    std::to_string(ca.dim()) + "x" + std::to_string(da.dim()));
    for (std::size_t j = 0; j < da.torsion().size(); ++j) {
        const std::size_t c = da.rank() + j;
        Vec col = matrix_.column(c);
        for (auto& x : col) x *= da.torsion()[j];
        if (!ca.make(col).is_zero())
            throw Error(ErrorKind::InvalidArgument, "hom matrix does not kill torsion coordinate " + std::to_string(c));
    }
    for (const auto& g : domain_.generators()) {
        GroupElement img = (*this)(g);
        if (!codomain_.contains(img))
            throw Error(ErrorKind::NotMember, "image " + to_string(img) + " of generator " + to_string(g) +
                                                  " is not in " + to_string(codomain_));
    }
}

MonoidHom MonoidHom::identity(const FgMonoid& m) { return MonoidHom(m, m, IntMatrix::identity(m.ambient().dim())); }

GroupElement MonoidHom::operator()(const GroupElement& x) const {
    domain_.ambient().require_member(x, "MonoidHom");
    return codomain_.ambient().make(matrix_.apply(x.coords()));
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
    if (!(f.codomain() == g.domain())) throw Error(ErrorKind::AmbientMismatch, "compose: codomain/domain differ");
    return MonoidHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

namespace {

std::vector<GroupElement> images(const MonoidHom& h) {
    std::vector<GroupElement> out;
    for (const auto& q : h.domain().generators()) out.push_back(h(q));
    return out;
}

// integer relations c with sum c_i v_i = 0 in the group
std::vector<Vec> relation_lattice(const FgAbelianGroup& g, const std::vector<GroupElement>& v) {
    std::vector<Vec> cols;
    for (const auto& x : v) cols.push_back(x.coords());
    for (auto& t : g.torsion_relations()) cols.push_back(std::move(t));
    std::vector<Vec> out;
    for (auto& k : integer_kernel(IntMatrix::from_columns(cols, g.dim()))) {
        k.resize(v.size());
        if (std::any_of(k.begin(), k.end(), [](const Integer& x) { return x != 0; })) out.push_back(std::move(k));
    }
    return out;
}

// Elements h(q) for q in Q over the generators with nonzero image, of P-weight at most budget.
class ImageWalk {
public:
    ImageWalk(const MonoidHom& h, const std::vector<std::size_t>& active)
        : h_(h), active_(active) {
        for (auto i : active_) weights_.push_back(h_.codomain().weight(h_(h_.domain().generators()[i])));
    }

    template <class Fn>
    bool any(const Integer& budget, Fn&& fn) {
        seen_.clear();
        return walk(0, h_.domain().ambient().zero(), budget, fn);
    }

private:
    template <class Fn>
    bool walk(std::size_t k, const GroupElement& q, const Integer& budget, Fn& fn) {
        if (k == active_.size()) {
            if (!seen_.insert(q).second) return false;
            return fn(q);
        }
        const auto& amb = h_.domain().ambient();
        const GroupElement& g = h_.domain().generators()[active_[k]];
        GroupElement cur = q;
        for (Integer used = 0; used <= budget; used += weights_[k]) {
            if (walk(k + 1, cur, budget - used, fn)) return true;
            cur = amb.add(cur, g);
        }
        return false;
    }

    const MonoidHom& h_;
    std::vector<std::size_t> active_;
    std::vector<Integer> weights_;
    std::unordered_set<GroupElement, GroupElementHash> seen_;
};

}  // namespace

bool is_monomorphism(const MonoidHom& h) {
    const auto& q = h.domain();
    for (const auto& c : relation_lattice(h.codomain().ambient(), images(h)))
        if (!q.ambient().combination(q.generators(), c).is_zero()) return false;
    return true;
}

bool is_integral_morphism(const MonoidHom& h) { return is_integral_morphism(h, SIZE_MAX); }

bool is_integral_morphism(const MonoidHom& h, std::size_t graver_cap) {
    const FgMonoid& q = h.domain();
    const FgMonoid& p = h.codomain();
    if (!q.is_sharp() || !p.is_sharp()) throw Error(ErrorKind::NotSharp, "is_integral_morphism needs sharp monoids");
    const std::size_t k = q.generators().size();
    const std::size_t l = p.generators().size();
    // Q = 0 or N is valuative: from h(q1) + p1 = h(q2) + p2 with q1 = q2 + c take q3 = 0, q4 = c, p = p1
    if (k <= 1) return true;
    std::vector<GroupElement> cols = images(h);
    cols.insert(cols.end(), p.generators().begin(), p.generators().end());
    std::vector<Vec> lattice = relation_lattice(p.ambient(), cols);

    // generators killed by h are inverted in the witness condition q1 + q3 - q2 in Q
    std::vector<std::size_t> active;
    std::vector<GroupElement> loc = q.generators();
    for (std::size_t i = 0; i < k; ++i) {
        if (cols[i].is_zero())
            loc.push_back(q.ambient().negate(q.generators()[i]));
        else
            active.push_back(i);
    }
    FgMonoid q_loc(q.ambient(), loc);
    ImageWalk walk(h, active);

    for (const auto& g : graver_basis(lattice, k + l, graver_cap)) {
        Vec a(k), b(k), c(l);
        for (std::size_t i = 0; i < k; ++i) (g[i] > 0 ? a[i] : b[i]) = abs(g[i]);
        for (std::size_t j = 0; j < l; ++j)
            if (g[k + j] > 0) c[j] = g[k + j];
        GroupElement q1 = q.ambient().combination(q.generators(), a);
        GroupElement q2 = q.ambient().combination(q.generators(), b);
        GroupElement p1 = p.ambient().combination(p.generators(), c);
        GroupElement diff = q.ambient().sub(q1, q2);
        bool ok = walk.any(p.weight(p1), [&](const GroupElement& q3) {
            return p.contains(p.ambient().sub(p1, h(q3))) && q_loc.contains(q.ambient().add(diff, q3));
        });
        if (!ok) return false;
    }
    return true;
}

bool is_isomorphism(const MonoidHom& h) {
    if (!h.domain().is_sharp() || !h.codomain().is_sharp())
        throw Error(ErrorKind::NotSharp, "is_isomorphism needs sharp monoids");
    if (!is_monomorphism(h)) return false;
    std::vector<GroupElement> src;
    for (const auto& a : atoms(h.domain())) src.push_back(h(a));
    std::vector<GroupElement> dst = atoms(h.codomain());
    std::sort(src.begin(), src.end(), graded_lex_less);
    std::sort(dst.begin(), dst.end(), graded_lex_less);
    return src == dst;
}

IntegralMono::IntegralMono(MonoidHom h) : h_(std::move(h)), images_(images(h_)) {}

IntegralMono IntegralMono::certify(const MonoidHom& h) {
    if (!h.domain().is_sharp() || !h.codomain().is_sharp())
        throw Error(ErrorKind::NotSharp, "integral monomorphism needs sharp monoids");
    if (!is_monomorphism(h)) throw Error(ErrorKind::NotIntegralMono, "hom is not injective");
    if (!is_integral_morphism(h)) throw Error(ErrorKind::NotIntegralMono, "hom is not integral");
    return IntegralMono(h);
}

PrimitiveSplit primitive_decompose(const IntegralMono& h, const GroupElement& p) {
    const FgMonoid& P = h.P();
    const FgMonoid& Q = h.Q();
    if (!P.contains(p)) throw Error(ErrorKind::NotMember, to_string(p) + " is not in " + to_string(P));
    GroupElement cur = P.ambient().make(p.coords());
    Vec counts(Q.generators().size());
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            for (;;) {
                GroupElement next = P.ambient().sub(cur, h.generator_images()[i]);
                if (!P.contains(next)) break;
                cur = std::move(next);
                ++counts[i];
                progress = true;
            }
        }
    }
    return {cur, Q.ambient().combination(Q.generators(), counts)};
}

bool in_IQ(const IntegralMono& h, const GroupElement& p) {
    if (!h.P().contains(p)) throw Error(ErrorKind::NotMember, to_string(p) + " is not in " + to_string(h.P()));
    for (const auto& img : h.generator_images())
        if (h.P().contains(h.P().ambient().sub(p, img))) return true;
    return false;
}

bool is_primitive(const IntegralMono& h, const GroupElement& p) { return !in_IQ(h, p); }

NilpotenceReport has_nilpotents(const IntegralMono& h, const NilpotenceOptions& options) {
    // A nilpotent exists iff some sum of distinct P-generators is one: shrinking the support of a
    // nilpotent keeps its face and stays primitive.
    const FgMonoid& P = h.P();
    const auto& amb = P.ambient();
    const auto& gens = P.generators();
    const std::size_t l = gens.size();
    if (l > 20) throw Error(ErrorKind::BoundExceeded, "too many generators for the nilpotence scan");
    std::vector<Vec> cone;
    for (const auto& g : gens) cone.push_back(amb.free_part(g));

    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << l); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::vector<std::uint32_t> in_ideal;
    bool unresolved = false;
    for (std::uint32_t m : masks) {
        if (std::any_of(in_ideal.begin(), in_ideal.end(), [m](std::uint32_t s) { return (s & m) == s; })) continue;
        Vec coeff(l);
        for (std::size_t j = 0; j < l; ++j) coeff[j] = (m >> j) & 1u;
        GroupElement p = amb.combination(gens, coeff);
        if (in_IQ(h, p)) {
            in_ideal.push_back(m);
            continue;
        }
        if (options.method == NilpotenceOptions::Method::Exact) {
            Vec fp = amb.free_part(p);
            bool radical = std::any_of(h.generator_images().begin(), h.generator_images().end(),
                                       [&](const GroupElement& img) { return lp::in_face_of(cone, fp, amb.free_part(img)); });
            if (!radical) continue;
        }
        GroupElement np = p;
        const unsigned cap = options.method == NilpotenceOptions::Method::Exact ? 1u << 16 : options.n_max;
        for (unsigned n = 2; n <= cap; ++n) {
            np = amb.add(np, p);
            if (in_IQ(h, np)) return {NilpotenceStatus::Present, p, n};
        }
        if (options.method == NilpotenceOptions::Method::Exact)
            throw Error(ErrorKind::BoundExceeded, "radical element " + to_string(p) + " without multiplier witness");
        unresolved = true;
    }
    if (options.method == NilpotenceOptions::Method::Bounded && (unresolved || !masks.empty()))
        return {NilpotenceStatus::Inconclusive, std::nullopt, std::nullopt};
    return {};
}

std::string to_string(CokernelKind k) {
    switch (k) {
        case CokernelKind::Zero: return "Zero";
        case CokernelKind::FreeRankOne: return "FreeRankOne";
        case CokernelKind::GroupZ: return "GroupZ";
        case CokernelKind::Other: return "Other";
    }
    return "Other";
}

namespace {

QuotientMap cokernel_quotient(const IntegralMono& h, const Subgroup& pgp) {
    std::vector<GroupElement> rel;
    for (const auto& img : h.generator_images()) rel.push_back(pgp.coords(img));
    QuotientMap q(pgp.group(), rel);
    std::vector<GroupElement> samples;
    for (const auto& g : h.P().generators()) samples.push_back(pgp.coords(g));
    q.orient(samples);
    return q;
}

}  // namespace

Cokernel::Cokernel(IntegralMono h)
    : h_(std::move(h)), pgp_(groupify(h_.P())), quotient_(cokernel_quotient(h_, pgp_)) {
    for (const auto& g : h_.P().generators()) generator_classes_.push_back(class_of(g));
    image_ = FgMonoid(group(), generator_classes_);
    const FgAbelianGroup& k = group();
    if (k.is_trivial()) {
        cls_ = {CokernelKind::Zero, {}, "P^gp/Q^gp is trivial"};
        return;
    }
    if (k.rank() != 1 || !k.is_torsion_free()) {
        cls_ = {CokernelKind::Other, {}, "P^gp/Q^gp = " + to_string(k)};
        return;
    }
    bool neg = false, unit = false;
    for (const auto& c : generator_classes_) {
        if (c[0] < 0) neg = true;
        if (c[0] == 1) unit = true;
    }
    if (neg) {
        auto plus = representative(GroupElement{1});
        auto minus = representative(GroupElement{-1});
        if (!plus || !minus) throw Error(ErrorKind::ConstructionFailure, "no primitive representative of +-1");
        if (graded_lex_less(*minus, *plus)) std::swap(plus, minus);
        cls_ = {CokernelKind::GroupZ, {*plus, *minus}, "image is all of Z"};
    } else if (unit) {
        cls_ = {CokernelKind::FreeRankOne, {*representative(GroupElement{1})}, "image is N"};
    } else {
        cls_ = {CokernelKind::Other, {}, "rank one image is a proper numerical monoid"};
    }
}

GroupElement Cokernel::class_of(const GroupElement& p) const { return quotient_.project(pgp_.coords(p)); }

GroupElement Cokernel::add(const GroupElement& p1, const GroupElement& p2) const {
    return primitive_decompose(h_, h_.P().ambient().add(p1, p2)).primitive;
}

std::optional<GroupElement> Cokernel::preimage(const GroupElement& c) const {
    const auto& gens = h_.P().generators();
    const auto& amb = h_.P().ambient();
    if (image_.is_sharp()) {
        auto coeff = image_.decompose(c);
        if (!coeff) return std::nullopt;
        GroupElement p = amb.zero();
        for (std::size_t i = 0; i < coeff->size(); ++i) {
            if ((*coeff)[i] == 0) continue;
            auto it = std::find(generator_classes_.begin(), generator_classes_.end(), image_.generators()[i]);
            p = amb.add(p, amb.scale((*coeff)[i], gens[static_cast<std::size_t>(it - generator_classes_.begin())]));
        }
        return p;
    }
    const FgAbelianGroup& k = group();
    if (k.rank() != 1 || !k.is_torsion_free()) return std::nullopt;
    // image is Z: Bezout coefficients, then add zero-sum positive pairs to clear negative ones
    const std::size_t l = gens.size();
    Vec x(l);
    Integer g = 0;
    std::size_t pos = l, neg = l;
    for (std::size_t j = 0; j < l; ++j) {
        const Integer& v = generator_classes_[j][0];
        if (v == 0) continue;
        if (v > 0 && pos == l) pos = j;
        if (v < 0 && neg == l) neg = j;
        Bezout b = extended_gcd(g, v);
        for (std::size_t i = 0; i < j; ++i) x[i] *= b.x;
        x[j] = b.y;
        g = b.g;
    }
    if (g != 1 || pos == l || neg == l) return std::nullopt;
    for (auto& xi : x) xi *= c[0];
    const Integer a = generator_classes_[pos][0];
    const Integer b = -generator_classes_[neg][0];
    for (std::size_t j = 0; j < l; ++j) {
        if (x[j] >= 0) continue;
        const Integer& v = generator_classes_[j][0];
        if (v > 0) {
            Integer t = (-x[j] + b - 1) / b;
            x[j] += t * b;
            x[neg] += t * v;
        } else {
            Integer t = (-x[j] + a - 1) / a;
            x[j] += t * a;
            x[pos] += t * -v;
        }
    }
    return amb.combination(gens, x);
}

std::optional<GroupElement> Cokernel::representative(const GroupElement& c) const {
    auto p = preimage(group().make(c.coords()));
    if (!p) return std::nullopt;
    return primitive_decompose(h_, *p).primitive;
}

Cokernel cokernel(const IntegralMono& h) { return Cokernel(h); }

namespace {

void require_nilpotent_free(const IntegralMono& h) {
    auto r = has_nilpotents(h);
    if (r.status != NilpotenceStatus::Absent)
        throw Error(ErrorKind::NilpotentsPresent, "nilpotent " + to_string(*r.element) + " with multiplier " +
                                                      std::to_string(r.multiplier.value_or(0)));
}

}  // namespace

GroupElement split_N(const IntegralMono& h) {
    Cokernel c(h);
    if (c.cls().kind != CokernelKind::FreeRankOne)
        throw Error(ErrorKind::WrongCokernelClass, "cokernel is " + to_string(c.cls().kind));
    require_nilpotent_free(h);
    const GroupElement& p = c.cls().witness[0];
    const auto& amb = h.P().ambient();
    for (const auto& g : h.P().generators()) {
        Integer n = c.class_of(g)[0];
        if (primitive_decompose(h, g).primitive != amb.scale(n, p))
            throw Error(ErrorKind::ConstructionFailure, "generator " + to_string(g) + " is not h(q) + n p");
    }
    return p;
}

NodePresentation pushout_Z_presentation(const IntegralMono& h) {
    Cokernel c(h);
    if (c.cls().kind != CokernelKind::GroupZ)
        throw Error(ErrorKind::WrongCokernelClass, "cokernel is " + to_string(c.cls().kind));
    require_nilpotent_free(h);
    const auto& amb = h.P().ambient();
    NodePresentation out{{}, c.cls().witness[0], c.cls().witness[1]};
    PrimitiveSplit s = primitive_decompose(h, amb.add(out.p1, out.pm1));
    if (!s.primitive.is_zero()) throw Error(ErrorKind::ConstructionFailure, "p1 + pm1 is not in Q");
    out.q0 = s.q;

    // compare with N^2 (+)_N Q along the diagonal and 1 -> q0
    const bool p1_positive = c.class_of(out.p1)[0] > 0;
    FgMonoid n1 = FgMonoid::free(1);
    IntMatrix diag(2, 1);
    diag(0, 0) = 1;
    diag(1, 0) = 1;
    IntegralMono delta = IntegralMono::certify(MonoidHom(n1, FgMonoid::free(2), diag));
    IntMatrix fq(h.Q().ambient().dim(), 1);
    for (std::size_t i = 0; i < fq.rows(); ++i) fq(i, 0) = out.q0[i];
    MonoidPushout po(delta, MonoidHom(n1, h.Q(), fq));
    auto compare = [&](const MonoidPushout::NormalForm& x) {
        return amb.add(amb.add(amb.scale(x.p[0], out.p1), amb.scale(x.p[1], out.pm1)), h.hom()(x.r));
    };
    for (const auto& g : h.P().generators()) {
        Integer n = c.class_of(g)[0];
        PrimitiveSplit gs = primitive_decompose(h, g);
        bool along_p1 = (n > 0) == p1_positive;
        GroupElement e = along_p1 ? GroupElement{abs(n).convert_to<long long>(), 0}
                                  : GroupElement{0, abs(n).convert_to<long long>()};
        MonoidPushout::NormalForm nf = po.normal_form(e, gs.q);
        if (compare(nf) != g) throw Error(ErrorKind::ConstructionFailure, "generator " + to_string(g) + " not hit");
    }
    MonoidPushout::NormalForm a = po.normal_form(GroupElement{1, 1}, h.Q().ambient().zero());
    if (a != po.normal_form(GroupElement{0, 0}, out.q0) || compare(a) != amb.add(out.p1, out.pm1))
        throw Error(ErrorKind::ConstructionFailure, "diagonal relation not respected");
    return out;
}

namespace {

struct PushoutParts {
    FgMonoid s;
    MonoidHom in_p, in_r;
};

PushoutParts build_pushout(const IntegralMono& h, const MonoidHom& f) {
    if (!(f.domain() == h.Q())) throw Error(ErrorKind::AmbientMismatch, "pushout legs have different domains");
    if (!f.codomain().is_sharp()) throw Error(ErrorKind::NotSharp, "pushout target R must be sharp");
    const FgAbelianGroup& pa = h.P().ambient();
    const FgAbelianGroup& ra = f.codomain().ambient();
    const std::size_t dp = pa.dim(), dr = ra.dim();
    FgAbelianGroup sum = FgAbelianGroup::free(dp + dr);
    auto embed = [&](const Vec& x, const Vec& y) {
        Vec v(dp + dr);
        for (std::size_t i = 0; i < dp; ++i) v[i] = x[i];
        for (std::size_t i = 0; i < dr; ++i) v[dp + i] = y[i];
        return GroupElement(std::move(v));
    };
    std::vector<GroupElement> rel;
    for (const auto& t : pa.torsion_relations()) rel.push_back(embed(t, Vec(dr)));
    for (const auto& t : ra.torsion_relations()) rel.push_back(embed(Vec(dp), t));
    for (const auto& q : h.Q().generators()) {
        Vec fr = f(q).coords();
        for (auto& x : fr) x = -x;
        rel.push_back(embed(h.hom()(q).coords(), fr));
    }
    QuotientMap quo(sum, rel);
    std::vector<GroupElement> samples, gens;
    for (const auto& g : h.P().generators()) samples.push_back(embed(g.coords(), Vec(dr)));
    for (const auto& g : f.codomain().generators()) samples.push_back(embed(Vec(dp), g.coords()));
    quo.orient(samples);
    for (const auto& s : samples) gens.push_back(quo.project(s));
    FgMonoid s(quo.target(), gens);
    if (!s.is_sharp()) throw Error(ErrorKind::ConstructionFailure, "pushout is not sharp");
    IntMatrix mp(quo.target().dim(), dp), mr(quo.target().dim(), dr);
    for (std::size_t i = 0; i < quo.target().dim(); ++i) {
        for (std::size_t j = 0; j < dp; ++j) mp(i, j) = quo.projection()(i, j);
        for (std::size_t j = 0; j < dr; ++j) mr(i, j) = quo.projection()(i, dp + j);
    }
    return {s, MonoidHom(h.P(), s, mp), MonoidHom(f.codomain(), s, mr)};
}

}  // namespace

MonoidPushout::MonoidPushout(IntegralMono h, MonoidHom f)
    : h_(std::move(h)), f_(std::move(f)), s_(), in_p_(MonoidHom::identity(FgMonoid())),
      in_r_(MonoidHom::identity(FgMonoid())) {
    PushoutParts parts = build_pushout(h_, f_);
    s_ = std::move(parts.s);
    in_p_ = std::move(parts.in_p);
    in_r_ = std::move(parts.in_r);
}

MonoidPushout::NormalForm MonoidPushout::normal_form(const GroupElement& p, const GroupElement& r) const {
    if (!f_.codomain().contains(r)) throw Error(ErrorKind::NotMember, to_string(r) + " is not in R");
    PrimitiveSplit s = primitive_decompose(h_, p);
    return {s.primitive, f_.codomain().ambient().add(r, f_(s.q))};
}

MonoidPushout::NormalForm MonoidPushout::add(const NormalForm& a, const NormalForm& b) const {
    return normal_form(h_.P().ambient().add(a.p, b.p), f_.codomain().ambient().add(a.r, b.r));
}

GroupElement MonoidPushout::element(const NormalForm& x) const {
    return s_.ambient().add(in_p_(x.p), in_r_(x.r));
}

MonoidPushout monoid_pushout(const IntegralMono& h, const MonoidHom& f) { return MonoidPushout(h, f); }

bool is_face(const FgMonoid& m, const FgMonoid& f) {
    if (!(m.ambient() == f.ambient())) throw Error(ErrorKind::AmbientMismatch, "face in a different ambient");
    const auto& amb = m.ambient();
    for (const auto& g : f.generators())
        if (!m.contains(g)) return false;
    Vec point(amb.rank());
    for (const auto& g : f.generators()) {
        Vec fp = amb.free_part(g);
        for (std::size_t i = 0; i < point.size(); ++i) point[i] += fp[i];
    }
    std::vector<Vec> cone;
    for (const auto& g : m.generators()) cone.push_back(amb.free_part(g));
    for (const auto& g : m.generators())
        if (lp::in_face_of(cone, point, amb.free_part(g)) && !f.contains(g)) return false;
    return true;
}

FaceQuotient quotient_by_face(const FgMonoid& m, const FgMonoid& face) {
    if (!is_face(m, face)) throw Error(ErrorKind::NotAFace, to_string(face) + " is not a face of " + to_string(m));
    QuotientMap q(m.ambient(), face.generators());
    q.orient(m.generators());
    std::vector<GroupElement> gens;
    for (const auto& g : m.generators()) gens.push_back(q.project(g));
    FgMonoid c(q.target(), gens);
    return {c, MonoidHom(m, c, q.projection()), q.section()};
}

}  // namespace logmin::monoid
