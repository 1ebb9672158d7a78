#pragma once

#include <cstdint>
#include <vector>

#include "tubealg/check.hpp"
#include "tubealg/cochain.hpp"
#include "tubealg/group.hpp"

namespace tubealg {

// The derived 2-cocycle on the centralizer G_a:
//   phi_a(g,h) = conj w(a,g,h) * w(g,a,h) * conj w(g,h,a).
Cocycle2 phi_a(const GroupTable& g, const Cocycle3& omega, Elem a);

// Twist of the block attached to class C:
//   phi_C(s,t) = conj phi_{g_C}(t^-1, s^-1).
Cocycle2 phi_C(const GroupTable& g, const Cocycle3& omega, const ClassData& cd, std::size_t c);

// Same block, read with the other convention: phi_C = conj phi_{g_C}.
Cocycle2 phi_C_conjugate(const GroupTable& g, const Cocycle3& omega, const ClassData& cd,
                         std::size_t c);

// gamma_{a,x,y}(g), defined for g in G_a. Throws InputError otherwise.
Phase gamma(const GroupTable& g, const Cocycle3& omega, Elem a, Elem x, Elem y, Elem el);

struct GammaCheckOptions {
    std::size_t exhaustive_max_order = 8;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
};

// conj w(xax^-1, xgy^-1, yhz^-1) w(xgy^-1, yay^-1, yhz^-1) conj w(xgy^-1, yhz^-1, zaz^-1)
//   = gamma_{a,x,y}(g) gamma_{a,y,z}(h) conj gamma_{a,x,z}(gh) phi_a(g,h)
// for g, h in G_a. Exhaustive for small groups, seeded sampling above.
CheckResult gamma_identity_check(const GroupTable& g, const Cocycle3& omega,
                                 const GammaCheckOptions& opts = {});

// d(gamma_{a,x,x}) * phi_a == phi_{xax^-1} o (Ad_x x Ad_x) on G_a, all a, x.
CheckResult gamma_coboundary_check(const GroupTable& g, const Cocycle3& omega);

// Bisch-Haagerup data: H, K <= G generating G, omega normalized and trivial
// on H^3 and K^3.
struct BHSetup {
    GroupTable group;
    std::vector<Elem> h;  // sorted
    std::vector<Elem> k;  // sorted
    Cocycle3 omega;
};

// Each failed invariant is reported with a witness.
CheckResult validate_bh_setup(const BHSetup& s);

struct GaugeFix {
    Cocycle3 omega;                 // omega' = d(phi) * omega
    Cochain2 phi;
    std::vector<std::pair<Elem, Elem>> a_reps;  // chosen representatives A
    std::vector<std::pair<Elem, Elem>> v_reps;  // chosen representatives V
    bool reps_disjoint = true;      // A and V share no pair
};

// Gauge fixing onto a cohomologous cocycle satisfying relations (i)-(iv)
// below. Requires validate_bh_setup to pass (throws InputError otherwise).
GaugeFix gauge_fix_bh(const BHSetup& s);

// For all g1, g2 in G and l in H u K:
//   (i)   w(g1,l,l^-1) = 1
//   (ii)  w(g1,g2,l)   = conj w(g1, g2 l, l^-1)
//   (iii) w(g1,l,g2)   = conj w(g1 l, l^-1, l g2)
//   (iv)  w(l,g1,g2)   = conj w(l^-1, l g1, g2)
// The failing relation is named "GL(i)" .. "GL(iv)".
CheckResult gl_relations_check(const GroupTable& g, const std::vector<Elem>& h,
                               const std::vector<Elem>& k, const Cocycle3& omega);

}  // namespace tubealg
