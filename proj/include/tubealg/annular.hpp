#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubealg/cohomology.hpp"
#include "tubealg/monomial.hpp"
#include "tubealg/tube.hpp"

namespace tubealg {

// A(h1, g1, s, h2, g2) with h1 g1 s = s h2 g2, h1, h2 in H.
struct ALabel {
    Elem h1, g1, s, h2, g2;
    friend bool operator==(const ALabel&, const ALabel&) = default;
};

// Objects are pairs (h, g) in H x G with value hg; object id = pos(h) * |G| + g.
// Basis index = ((pos(h1) * n + g1) * n + s) * |H| + pos(h2); g2 is determined.
// Stored elements are the A-normalized ones.
class AnnularAlgebra final : public TubeLikeAlgebra {
public:
    // Throws InputError if H is not a subgroup or omega has the wrong size.
    explicit AnnularAlgebra(const BHSetup& setup);

    std::size_t dimension() const override { return m_ * m_ * n_ * n_; }
    std::size_t object_count() const override { return m_ * n_; }
    std::size_t source(std::size_t i) const override { return i / (n_ * m_); }
    std::size_t target(std::size_t i) const override;
    // A(h2,g2,t,h3,g3) A(h1,g1,s,h2,g2)
    //   = w(s,t,h3g3) conj w(s,h2g2,t) w(h1g1,s,t) A(h1,g1,st,h3,g3)
    Term compose(std::size_t left, std::size_t right) const override;
    // A(h1,g1,s,h2,g2)^# = conj w(h1g1,s,s^-1) w(s,h2g2,s^-1) conj w(s,s^-1,h1g1) A(h2,g2,s^-1,h1,g1)
    Term star(std::size_t i) const override;
    bool trace_one(std::size_t i) const override;
    std::size_t identity(std::size_t object) const override;
    std::string label(std::size_t i) const override;

    Elem object_value(std::size_t object) const override;
    Elem arrow(std::size_t i) const override { return static_cast<Elem>((i / m_) % n_); }
    const GroupTable& group() const override { return setup_.group; }
    const Cocycle3& cocycle() const override { return setup_.omega; }
    std::size_t base_object(Elem g) const override { return g; }

    const BHSetup& setup() const { return setup_; }
    std::size_t object_of(Elem h, Elem g) const;
    std::pair<Elem, Elem> object_pair(std::size_t object) const;
    ALabel label_of(std::size_t i) const;
    // Throws InputError on a label violating its constraint.
    std::size_t index_of(const ALabel& l) const;

private:
    BHSetup setup_;
    std::size_t n_, m_;
    std::vector<std::int64_t> hpos_;  // element -> position in H or -1
};

struct AProduct {
    Phase scalar;
    ALabel result;
};
// B * A; nullopt unless the (h2, g2) labels match. Throws on malformed labels.
std::optional<AProduct> a_mult(const BHSetup& s, const ALabel& b, const ALabel& a);
AProduct a_star(const BHSetup& s, const ALabel& a);
// delta_{h1=h2} delta_{s=e}
bool a_trace(const BHSetup& s, const ALabel& a);
// w(h1,g1,s) w(s,h2,g2): A = factor * a.
Phase a_normalization(const BHSetup& s, const ALabel& a);

// (h1, g1, g2, h2) with h1 g1 = g2 h2: a morphism from grading g1 to g2.
struct BoxLabel {
    Elem h1, g1, g2, h2;
    friend bool operator==(const BoxLabel&, const BoxLabel&) = default;
};

struct BoxProduct {
    Phase scalar;
    BoxLabel result;
};
// b2 o b1 with b1 : g1 -> g2 and b2 : g2 -> g3. Throws on grading mismatch.
BoxProduct box_compose(const BHSetup& s, const BoxLabel& b2, const BoxLabel& b1);
BoxProduct box_star(const BHSetup& s, const BoxLabel& b);
// All (h1, g1, g2, h2) with h1 g1 = g2 h2; empty unless H g1 H = H g2 H.
std::vector<BoxLabel> box_basis(const GroupTable& g, std::span<const Elem> h, Elem g1, Elem g2);

// Boxes as a monomial algebra; objects are the gradings g in G.
class BoxAlgebra final : public MonomialAlgebra {
public:
    explicit BoxAlgebra(const BHSetup& setup);

    std::size_t dimension() const override { return boxes_.size(); }
    std::size_t object_count() const override { return setup_.group.order(); }
    std::size_t source(std::size_t i) const override { return boxes_[i].g1; }
    std::size_t target(std::size_t i) const override { return boxes_[i].g2; }
    Term compose(std::size_t left, std::size_t right) const override;
    Term star(std::size_t i) const override;
    // identity boxes (e, g, g, e)
    bool trace_one(std::size_t i) const override;
    std::size_t identity(std::size_t object) const override;
    std::string label(std::size_t i) const override;

    const BoxLabel& box(std::size_t i) const { return boxes_[i]; }
    std::size_t index_of(const BoxLabel& b) const;

private:
    BHSetup setup_;
    std::vector<BoxLabel> boxes_;
    std::vector<std::int64_t> index_;  // (pos(h1) * n + g1) * n + g2 -> box or -1
};

// star(b) o b == identity box with scalar 1, for every box.
CheckResult check_box_unitarity(const BoxAlgebra& alg);

// H^g = {h in H : g h g^-1 in H}, sorted.
std::vector<Elem> stabilizer_subgroup(const BHSetup& s, Elem g);
// psi(h1,h2) = conj w(gh1g^-1, gh2g^-1, g) w(gh1g^-1, g, h2) conj w(g, h1, h2) on H^g.
Cocycle2 end_xg_twist(const BHSetup& s, Elem g);
// The twisted group algebra End(X_g); throws InputError if the twist is not a 2-cocycle.
TwistedGroupAlgebra end_xg_algebra(const BHSetup& s, Elem g);

// Minimum element of each double coset H g H, sorted.
std::vector<Elem> double_coset_representatives(const GroupTable& g, std::span<const Elem> h);

}  // namespace tubealg
