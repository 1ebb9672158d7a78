#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tubealg/cochain.hpp"
#include "tubealg/cohomology.hpp"
#include "tubealg/group.hpp"
#include "tubealg/monomial.hpp"

namespace tubealg {

// Algebras whose objects carry a group value v(o) and whose basis element
// from object o1 to o2 is labeled by s with v(o1) s = s v(o2). Both the
// diagonal tube algebra (v(g) = g) and the annular algebra
// (v(h,g) = hg) have this form, and share the block isomorphism below.
class TubeLikeAlgebra : public MonomialAlgebra {
public:
    virtual Elem object_value(std::size_t object) const = 0;
    virtual Elem arrow(std::size_t i) const = 0;
    virtual const GroupTable& group() const = 0;
    virtual const Cocycle3& cocycle() const = 0;
    // The object standing for g_C: v(o) = g_C, with the trivial H-part.
    virtual std::size_t base_object(Elem g) const = 0;
};

// a(g1, s, g2) with g1 s = s g2.
struct TubeLabel {
    Elem g1, s, g2;
    friend bool operator==(const TubeLabel&, const TubeLabel&) = default;
};

class TubeAlgebra final : public TubeLikeAlgebra {
public:
    TubeAlgebra(const GroupTable& group, Cocycle3 omega);

    std::size_t dimension() const override { return n_ * n_; }
    std::size_t object_count() const override { return n_; }
    std::size_t source(std::size_t i) const override { return i / n_; }
    std::size_t target(std::size_t i) const override { return label_of(i).g2; }
    // a(g2,t,g3) a(g1,s,g2) = w(g1,s,t) conj w(s,g2,t) w(s,t,g3) a(g1,st,g3)
    Term compose(std::size_t left, std::size_t right) const override;
    // a(g1,s,g2)^# = conj w(g1,s,s^-1) w(s,g2,s^-1) conj w(s,s^-1,g1) a(g2,s^-1,g1)
    Term star(std::size_t i) const override;
    bool trace_one(std::size_t i) const override { return i % n_ == 0; }
    std::size_t identity(std::size_t object) const override { return object * n_; }
    std::string label(std::size_t i) const override;

    Elem object_value(std::size_t object) const override { return static_cast<Elem>(object); }
    Elem arrow(std::size_t i) const override { return static_cast<Elem>(i % n_); }
    const GroupTable& group() const override { return group_; }
    const Cocycle3& cocycle() const override { return omega_; }
    std::size_t base_object(Elem g) const override { return g; }

    TubeLabel label_of(std::size_t i) const;
    // Throws InputError when g1 s != s g2.
    std::size_t index_of(const TubeLabel& l) const;

private:
    GroupTable group_;
    Cocycle3 omega_;
    std::size_t n_;
};

// Label-level structure constants.
struct TubeProduct {
    Phase scalar;
    TubeLabel result;
};
// b * a; nullopt when the middle labels differ. Throws on malformed labels.
std::optional<TubeProduct> tube_mult(const GroupTable& g, const Cocycle3& omega, const TubeLabel& b,
                                     const TubeLabel& a);
TubeProduct tube_star(const GroupTable& g, const Cocycle3& omega, const TubeLabel& a);
// Omega(a) = delta_{g1=g2} delta_{s=e}
bool tube_trace(const TubeLabel& a);

enum class TwistConvention {
    Opposite,   // phi_C(s,t) = conj phi_{g_C}(t^-1, s^-1)
    Conjugate,  // phi_C = conj phi_{g_C}
};
std::string to_string(TwistConvention c);

// The block sum over conjugacy classes and the monomial map onto it:
// basis element o1 -> o2 along s goes to
//   conj gamma_{g_C, w1, w2}(w1^-1 s w2) E_{o2,o1} (x) [w2^-1 s^-1 w1]
// where w1 = w_{v(o1)}, w2 = w_{v(o2)}.
struct BlockPresentation {
    ClassData classes;
    TwistConvention convention = TwistConvention::Opposite;
    std::shared_ptr<BlockAlgebra> blocks;
    MonomialMap phi;
    MonomialMap phi_inverse;
    // Per class: the algebra object of g_C and the projection onto it.
    std::vector<std::size_t> base_object;
    std::vector<std::size_t> base_projection;

    // Block index of a class and position of an algebra object inside it.
    std::size_t block_of_object(std::size_t object) const { return object_block.at(object); }
    std::size_t position_of_object(std::size_t object) const { return object_position.at(object); }

    std::vector<std::size_t> object_block, object_position;
};

BlockPresentation block_presentation(const TubeLikeAlgebra& alg,
                                     TwistConvention convention = TwistConvention::Opposite);

// Image of one basis element under Phi.
struct PhiImage {
    std::size_t cls;
    Phase scalar;
    std::size_t row_object, col_object;  // E_{row,col}
    Elem element;
};
PhiImage phi_image(const TubeLikeAlgebra& alg, const ClassData& cd, std::size_t i);

// Inverse on a block basis element E_{row,col} (x) [x] of a class.
Term phi_inverse_image(const TubeLikeAlgebra& alg, const ClassData& cd, std::size_t row_object,
                       std::size_t col_object, Elem x);

// Runs the exhaustive verification under both twist conventions.
struct IsoReport {
    CheckResult opposite;
    CheckResult conjugate;
    std::optional<TwistConvention> selected;  // first passing, Opposite preferred
    bool passed() const { return selected.has_value(); }
};
IsoReport verify_block_isomorphism(const TubeLikeAlgebra& alg);

// Irreducible counts per class: center dimension of [C G_C]_{phi_C}.
struct SimpleCount {
    std::vector<std::size_t> per_class;
    std::size_t total = 0;
};
SimpleCount simple_count(const TubeLikeAlgebra& alg, TwistConvention convention = TwistConvention::Opposite);

// Twist of the block for class c under the given convention.
Cocycle2 class_twist(const GroupTable& g, const Cocycle3& omega, const ClassData& cd, std::size_t c,
                     TwistConvention convention);

}  // namespace tubealg
