#pragma once

#include "logmin/monoid/monoid.hpp"

#include <optional>
#include <string>

namespace logmin::monoid {

// Ambient group homomorphism (codomain.dim x domain.dim matrix) carrying generators into the codomain.
class MonoidHom {
public:
    MonoidHom(FgMonoid domain, FgMonoid codomain, IntMatrix matrix);

    static MonoidHom identity(const FgMonoid& m);

    const FgMonoid& domain() const { return domain_; }
    const FgMonoid& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    GroupElement operator()(const GroupElement& x) const;

    friend bool operator==(const MonoidHom&, const MonoidHom&) = default;

private:
    FgMonoid domain_;
    FgMonoid codomain_;
    IntMatrix matrix_;
};

// g after f
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

bool is_monomorphism(const MonoidHom& h);
bool is_integral_morphism(const MonoidHom& h);
// same, throwing BoundExceeded when the relation Graver basis passes graver_cap elements
bool is_integral_morphism(const MonoidHom& h, std::size_t graver_cap);
// both monoids sharp; decided by injectivity plus a bijection of atoms
bool is_isomorphism(const MonoidHom& h);

struct PrimitiveSplit {
    GroupElement primitive;  // in P
    GroupElement q;          // in Q
};

// A monoid hom certified to be an integral monomorphism of sharp monoids.
class IntegralMono {
public:
    // throws NotSharp or NotIntegralMono
    static IntegralMono certify(const MonoidHom& h);

    const MonoidHom& hom() const { return h_; }
    const FgMonoid& Q() const { return h_.domain(); }
    const FgMonoid& P() const { return h_.codomain(); }
    const std::vector<GroupElement>& generator_images() const { return images_; }

private:
    explicit IntegralMono(MonoidHom h);
    MonoidHom h_;
    std::vector<GroupElement> images_;
};

PrimitiveSplit primitive_decompose(const IntegralMono& h, const GroupElement& p);
bool in_IQ(const IntegralMono& h, const GroupElement& p);
bool is_primitive(const IntegralMono& h, const GroupElement& p);

enum class NilpotenceStatus { Absent, Present, Inconclusive };

struct NilpotenceOptions {
    enum class Method { Exact, Bounded };
    Method method = Method::Exact;
    unsigned n_max = 16;  // multiplier cap of the bounded search
};

struct NilpotenceReport {
    NilpotenceStatus status = NilpotenceStatus::Absent;
    std::optional<GroupElement> element;
    std::optional<unsigned> multiplier;
};

NilpotenceReport has_nilpotents(const IntegralMono& h, const NilpotenceOptions& options = {});

enum class CokernelKind { Zero, FreeRankOne, GroupZ, Other };
std::string to_string(CokernelKind k);

struct CokernelClass {
    CokernelKind kind = CokernelKind::Zero;
    std::vector<GroupElement> witness;  // p for FreeRankOne, (p1, pm1) for GroupZ
    std::string explanation;
};

// P/Q realised on Q-primitive representatives inside P^gp/Q^gp.
class Cokernel {
public:
    explicit Cokernel(IntegralMono h);

    const IntegralMono& source() const { return h_; }
    const FgAbelianGroup& group() const { return quotient_.target(); }
    const FgMonoid& monoid() const { return image_; }
    const CokernelClass& cls() const { return cls_; }
    bool torsion_free() const { return group().is_torsion_free(); }

    GroupElement class_of(const GroupElement& p) const;
    // primitive part of p1 + p2
    GroupElement add(const GroupElement& p1, const GroupElement& p2) const;
    // the Q-primitive element of the given class, when one can be produced
    std::optional<GroupElement> representative(const GroupElement& c) const;

private:
    std::optional<GroupElement> preimage(const GroupElement& c) const;

    IntegralMono h_;
    Subgroup pgp_;
    QuotientMap quotient_;
    FgMonoid image_;
    std::vector<GroupElement> generator_classes_;
    CokernelClass cls_;
};

Cokernel cokernel(const IntegralMono& h);

GroupElement split_N(const IntegralMono& h);

struct NodePresentation {
    GroupElement q0, p1, pm1;
};
NodePresentation pushout_Z_presentation(const IntegralMono& h);

// P (+)_Q R with normal forms [p, r], p Q-primitive.
class MonoidPushout {
public:
    struct NormalForm {
        GroupElement p, r;
        friend bool operator==(const NormalForm&, const NormalForm&) = default;
    };

    MonoidPushout(IntegralMono h, MonoidHom f);

    const FgMonoid& monoid() const { return s_; }
    const MonoidHom& in_P() const { return in_p_; }
    const MonoidHom& in_R() const { return in_r_; }

    NormalForm normal_form(const GroupElement& p, const GroupElement& r) const;
    NormalForm add(const NormalForm& a, const NormalForm& b) const;
    GroupElement element(const NormalForm& x) const;

private:
    IntegralMono h_;
    MonoidHom f_;
    FgMonoid s_;
    MonoidHom in_p_, in_r_;
};

MonoidPushout monoid_pushout(const IntegralMono& h, const MonoidHom& f);

bool is_face(const FgMonoid& m, const FgMonoid& f);

struct FaceQuotient {
    FgMonoid quotient;
    MonoidHom projection;
    IntMatrix section;  // projection(section y) == y
};

FaceQuotient quotient_by_face(const FgMonoid& m, const FgMonoid& face);

}  // namespace logmin::monoid
