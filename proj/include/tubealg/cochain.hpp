#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tubealg/check.hpp"
#include "tubealg/group.hpp"
#include "tubealg/phase.hpp"

namespace tubealg {

// Dense S^1-valued cochains on a finite group, stored row-major.

struct Cochain1 {
    std::vector<Phase> values;  // |G|

    static Cochain1 trivial(std::size_t n) { return {std::vector<Phase>(n)}; }
    Phase operator()(Elem g) const { return values[g]; }
    Phase& operator()(Elem g) { return values[g]; }
};

struct Cochain2 {
    std::size_t n = 0;
    std::vector<Phase> values;  // n^2

    static Cochain2 trivial(std::size_t n) { return {n, std::vector<Phase>(n * n)}; }
    Phase operator()(Elem a, Elem b) const { return values[static_cast<std::size_t>(a) * n + b]; }
    Phase& operator()(Elem a, Elem b) { return values[static_cast<std::size_t>(a) * n + b]; }
    bool is_trivial() const;
    friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

// omega on G^3. The 3-cocycle law is not enforced by the type; run
// cocycle3_check before relying on it.
struct Cocycle3 {
    std::size_t n = 0;
    std::vector<Phase> values;  // n^3

    static Cocycle3 trivial(std::size_t n) { return {n, std::vector<Phase>(n * n * n)}; }
    Phase operator()(Elem a, Elem b, Elem c) const {
        return values[(static_cast<std::size_t>(a) * n + b) * n + c];
    }
    Phase& operator()(Elem a, Elem b, Elem c) {
        return values[(static_cast<std::size_t>(a) * n + b) * n + c];
    }
    bool is_trivial() const;
    // Least common denominator of all values.
    std::int64_t modulus() const;
    friend bool operator==(const Cocycle3&, const Cocycle3&) = default;
};

// A 2-cochain on a subgroup S <= G, indexed by positions within `elements`.
class Cocycle2 {
public:
    Cocycle2() = default;
    Cocycle2(std::size_t group_order, std::vector<Elem> elements);

    static Cocycle2 trivial(std::size_t group_order, std::vector<Elem> elements) {
        return Cocycle2(group_order, std::move(elements));
    }

    const std::vector<Elem>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(Elem g) const { return g < position_.size() && position_[g] >= 0; }
    std::size_t position(Elem g) const { return static_cast<std::size_t>(position_.at(g)); }

    Phase operator()(Elem g, Elem h) const { return values_[position(g) * size() + position(h)]; }
    Phase& operator()(Elem g, Elem h) { return values_[position(g) * size() + position(h)]; }

    const std::vector<Phase>& values() const { return values_; }
    bool is_trivial() const;
    std::int64_t modulus() const;
    friend bool operator==(const Cocycle2&, const Cocycle2&) = default;

private:
    std::vector<Elem> elements_;
    std::vector<std::int64_t> position_;
    std::vector<Phase> values_;
};

// w(1,2,3) w(1,23,4) w(2,3,4) = w(12,3,4) w(1,2,34) over all quadruples.
CheckResult cocycle3_check(const GroupTable& g, const Cocycle3& omega);

// phi(h2,h3) phi(h1h2,h3)^-1 phi(h1,h2h3) phi(h1,h2)^-1 = 1 on the subgroup.
CheckResult cocycle2_check(const GroupTable& g, const Cocycle2& phi);

// (d gamma)(g,h) = gamma(g) gamma(h) gamma(gh)^-1
Cochain2 coboundary1(const GroupTable& g, const Cochain1& gamma);

// (d phi)(g1,g2,g3) = phi(g2,g3) phi(g1g2,g3)^-1 phi(g1,g2g3) phi(g1,g2)^-1
Cocycle3 coboundary2(const GroupTable& g, const Cochain2& phi);

Cocycle3 pointwise_product(const Cocycle3& a, const Cocycle3& b);
Cocycle3 pointwise_quotient(const Cocycle3& a, const Cocycle3& b);

bool is_normalized(const GroupTable& g, const Cocycle3& omega);

// The 2-cochain whose coboundary normalizes omega:
// phi(g1,g2) = omega(g1,e,e) conj(omega(e,e,g2)).
Cochain2 normalizing_cochain(const GroupTable& g, const Cocycle3& omega);

// (d phi) * omega with phi from normalizing_cochain. Throws InputError when
// omega is not a 3-cocycle.
Cocycle3 normalize3(const GroupTable& g, const Cocycle3& omega);

// Restriction of omega to a subset (used for the H^3 and K^3 conditions).
CheckResult check_trivial_on(const GroupTable& g, const Cocycle3& omega,
                             std::span<const Elem> subset);

// Fixture generators.
// omega(a,b,c) = k a floor((b+c)/n) / n on Z/n.
Cocycle3 standard_cyclic_cocycle(std::size_t n, std::int64_t k);
// On Z/2 x Z/2 (direct_product ordering): omega = a1 b2 c2 / 2.
Cocycle3 product_type_cocycle();
// Pullback of omega on Q along a surjective homomorphism G -> Q.
Cocycle3 inflate_cocycle(const GroupTable& g, const GroupTable& q, const Cocycle3& omega,
                         std::span<const Elem> surjection);

}  // namespace tubealg
