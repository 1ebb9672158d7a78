#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tubealg/cochain.hpp"
#include "tubealg/cohomology.hpp"
#include "tubealg/group.hpp"

// Shared fixture groups and cocycles for the test binaries.
namespace fx {

using namespace tubealg;

inline GroupTable z(std::size_t n) { return cyclic_group(n); }

// S3 from (01) and (012); BFS order puts (01) at index 1.
inline GroupTable s3() { return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }
inline GroupTable s4() { return group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }
inline GroupTable v4() { return direct_product(z(2), z(2)); }

inline Cocycle3 semion() { return standard_cyclic_cocycle(2, 1); }

inline Cocycle3 inflate_parity(const GroupTable& g) {
    const auto par = parity_map(g);
    return inflate_cocycle(g, z(2), semion(), par);
}

inline std::vector<Elem> generated(const GroupTable& g, std::vector<Elem> gens) {
    return subgroup_closure(g, gens);
}

inline Elem find_perm(const GroupTable& g, const Permutation& p) {
    const auto& ps = *g.permutations();
    for (Elem i = 0; i < ps.size(); ++i)
        if (ps[i] == p) return i;
    return static_cast<Elem>(-1);
}

// (S3, H = <(01)>, K = <(012)>, omega)
inline BHSetup s3_setup(const Cocycle3& omega) {
    const auto g = s3();
    return {g, generated(g, {find_perm(g, {1, 0, 2})}), generated(g, {find_perm(g, {1, 2, 0})}), omega};
}
inline BHSetup s3_trivial_setup() { return s3_setup(Cocycle3::trivial(6)); }

// (Z2 x Z2, H = Z2 x 0, K = 0 x Z2, product type)
inline BHSetup v4_setup() { return {v4(), {0, 2}, {0, 1}, product_type_cocycle()}; }

// base twisted by d(p), p random on G x G but trivial at e and on H x H, K x K,
// so the setup stays valid while the gauge relations usually break.
inline BHSetup twisted_setup(const BHSetup& base, std::mt19937_64& rng, std::int64_t den = 6) {
    const auto& g = base.group;
    auto in = [](const std::vector<Elem>& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); };
    auto p = Cochain2::trivial(g.order());
    for (Elem a = 1; a < g.order(); ++a)
        for (Elem b = 1; b < g.order(); ++b) {
            if ((in(base.h, a) && in(base.h, b)) || (in(base.k, a) && in(base.k, b))) continue;
            p(a, b) = Phase(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den)), den);
        }
    BHSetup s = base;
    s.omega = pointwise_product(coboundary2(g, p), base.omega);
    return s;
}

struct Fixture {
    const char* name;
    GroupTable group;
    Cocycle3 omega;
};

// Every group/cocycle pair used by the property sweeps, |G| <= 24.
inline std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out;
    out.push_back({"Z1", z(1), Cocycle3::trivial(1)});
    out.push_back({"Z2 semion", z(2), semion()});
    out.push_back({"Z3 trivial", z(3), Cocycle3::trivial(3)});
    out.push_back({"Z3 standard", z(3), standard_cyclic_cocycle(3, 1)});
    out.push_back({"Z4 standard", z(4), standard_cyclic_cocycle(4, 1)});
    out.push_back({"V4 product", v4(), product_type_cocycle()});
    out.push_back({"S3 trivial", s3(), Cocycle3::trivial(6)});
    out.push_back({"S3 inflated", s3(), inflate_parity(s3())});
    auto d4 = dihedral_group(4);
    out.push_back({"D4 inflated", d4, inflate_parity(d4)});
    out.push_back({"Z6 standard", z(6), standard_cyclic_cocycle(6, 1)});
    out.push_back({"Z12 standard", z(12), standard_cyclic_cocycle(12, 5)});
    out.push_back({"S4 inflated", s4(), inflate_parity(s4())});
    return out;
}

}  // namespace fx
