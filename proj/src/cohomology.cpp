#include "tubealg/cohomology.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tubealg {

namespace {

bool contains(const std::vector<Elem>& sorted, Elem x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

Cocycle2 phi_a(const GroupTable& g, const Cocycle3& omega, Elem a) {
    Cocycle2 out(g.order(), centralizer(g, a));
    for (Elem x : out.elements())
        for (Elem y : out.elements())
            out(x, y) = omega(a, x, y).conj() * omega(x, a, y) * omega(x, y, a).conj();
    return out;
}

Cocycle2 phi_C(const GroupTable& g, const Cocycle3& omega, const ClassData& cd, std::size_t c) {
    const Cocycle2 base = phi_a(g, omega, cd.rep[c]);
    Cocycle2 out(g.order(), cd.centralizers[c]);
    for (Elem s : out.elements())
        for (Elem t : out.elements()) out(s, t) = base(g.inv(t), g.inv(s)).conj();
    return out;
}

Cocycle2 phi_C_conjugate(const GroupTable& g, const Cocycle3& omega, const ClassData& cd,
                         std::size_t c) {
    const Cocycle2 base = phi_a(g, omega, cd.rep[c]);
    Cocycle2 out(g.order(), cd.centralizers[c]);
    for (Elem s : out.elements())
        for (Elem t : out.elements()) out(s, t) = base(s, t).conj();
    return out;
}

Phase gamma(const GroupTable& g, const Cocycle3& w3, Elem a, Elem x, Elem y, Elem el) {
    if (g.mul(a, el) != g.mul(el, a))
        throw InputError("gamma argument is not in the centralizer", {a, el});
    const Elem xi = g.inv(x), yi = g.inv(y);
    const Elem axi = g.mul(a, xi);
    const Elem gyi = g.mul(el, yi);
    const Elem xgyi = g.mul(x, gyi);
    const Elem ayi = g.mul(a, yi);
    const Elem yayi = g.mul(y, ayi);
    return w3(x, axi, xgyi).conj() * w3(a, xi, xgyi).conj() * w3(a, el, yi) * w3(el, a, yi).conj() *
           w3(gyi, y, ayi).conj() * w3(el, yi, y) * w3(x, gyi, yayi) * w3(xi, x, gyi);
}

namespace {

// Both sides of the six-variable identity for one admissible tuple.
bool gamma_identity_holds(const GroupTable& g, const Cocycle3& w3, const Cocycle2& phi, Elem a,
                          Elem x, Elem y, Elem z, Elem el, Elem h) {
    const Elem xax = g.conj(x, a), yay = g.conj(y, a), zaz = g.conj(z, a);
    const Elem xgy = g.mul(x, el, g.inv(y));
    const Elem yhz = g.mul(y, h, g.inv(z));
    const Phase lhs = w3(xax, xgy, yhz).conj() * w3(xgy, yay, yhz) * w3(xgy, yhz, zaz).conj();
    const Phase rhs = gamma(g, w3, a, x, y, el) * gamma(g, w3, a, y, z, h) *
                      gamma(g, w3, a, x, z, g.mul(el, h)).conj() * phi(el, h);
    return lhs == rhs;
}

}  // namespace

CheckResult gamma_identity_check(const GroupTable& g, const Cocycle3& omega,
                                 const GammaCheckOptions& opts) {
    const std::size_t n = g.order();
    std::vector<Cocycle2> phis;
    for (Elem a = 0; a < n; ++a) phis.push_back(phi_a(g, omega, a));

    if (n <= opts.exhaustive_max_order) {
        std::size_t cases = 0;
        for (Elem a = 0; a < n; ++a) {
            const auto& cent = phis[a].elements();
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    for (Elem z = 0; z < n; ++z)
                        for (Elem el : cent)
                            for (Elem h : cent) {
                                ++cases;
                                if (!gamma_identity_holds(g, omega, phis[a], a, x, y, z, el, h))
                                    return CheckResult::fail("gamma-identity", {a, x, y, z, el, h});
                            }
        }
        return CheckResult::pass(cases);
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < opts.samples; ++i) {
        const Elem a = pick(rng), x = pick(rng), y = pick(rng), z = pick(rng);
        const auto& cent = phis[a].elements();
        std::uniform_int_distribution<std::size_t> pc(0, cent.size() - 1);
        const Elem el = cent[pc(rng)], h = cent[pc(rng)];
        if (!gamma_identity_holds(g, omega, phis[a], a, x, y, z, el, h))
            return CheckResult::fail("gamma-identity", {a, x, y, z, el, h});
    }
    return CheckResult::pass(opts.samples);
}

CheckResult gamma_coboundary_check(const GroupTable& g, const Cocycle3& omega) {
    const std::size_t n = g.order();
    std::vector<Cocycle2> phis;
    for (Elem a = 0; a < n; ++a) phis.push_back(phi_a(g, omega, a));
    std::size_t cases = 0;
    for (Elem a = 0; a < n; ++a)
        for (Elem x = 0; x < n; ++x) {
            const Elem b = g.conj(x, a);
            for (Elem s : phis[a].elements())
                for (Elem t : phis[a].elements()) {
                    ++cases;
                    const Phase dgamma = gamma(g, omega, a, x, x, s) * gamma(g, omega, a, x, x, t) *
                                         gamma(g, omega, a, x, x, g.mul(s, t)).conj();
                    if (dgamma * phis[a](s, t) != phis[b](g.conj(x, s), g.conj(x, t)))
                        return CheckResult::fail("gamma-coboundary", {a, x, s, t});
                }
        }
    return CheckResult::pass(cases);
}

CheckResult validate_bh_setup(const BHSetup& s) {
    const auto& g = s.group;
    if (s.omega.n != g.order()) return CheckResult::fail("shape", {}, "cocycle table size mismatch");
    if (!is_subgroup(g, s.h)) return CheckResult::fail("H-subgroup", {}, "H is not a subgroup");
    if (!is_subgroup(g, s.k)) return CheckResult::fail("K-subgroup", {}, "K is not a subgroup");
    std::vector<Elem> both = s.h;
    both.insert(both.end(), s.k.begin(), s.k.end());
    if (subgroup_closure(g, both).size() != g.order())
        return CheckResult::fail("generation", {}, "H and K do not generate G");
    if (auto r = cocycle3_check(g, s.omega); !r) return r;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) {
            if (!s.omega(0, a, b).is_one()) return CheckResult::fail("normalized", {0, a, b});
            if (!s.omega(a, 0, b).is_one()) return CheckResult::fail("normalized", {a, 0, b});
            if (!s.omega(a, b, 0).is_one()) return CheckResult::fail("normalized", {a, b, 0});
        }
    if (auto r = check_trivial_on(g, s.omega, s.h); !r) {
        r.relation = "omegaHK1(H)";
        return r;
    }
    if (auto r = check_trivial_on(g, s.omega, s.k); !r) {
        r.relation = "omegaHK1(K)";
        return r;
    }
    return CheckResult::pass();
}

GaugeFix gauge_fix_bh(const BHSetup& s) {
    if (auto r = validate_bh_setup(s); !r)
        throw InputError("BH setup precondition failed: " + r.relation + (r.detail.empty() ? "" : " (" + r.detail + ")"),
                         r.witness);
    const auto& g = s.group;
    const std::size_t n = g.order();
    auto in_h = [&](Elem x) { return contains(s.h, x); };
    auto in_k = [&](Elem x) { return contains(s.k, x); };
    using Pair = std::pair<Elem, Elem>;

    // A_H = H^c x H^x, A_K = K^c x K^x, V_H = H^x x H^c, V_K = K^x x K^c.
    auto in_a = [&](Pair p) {
        return (!in_h(p.first) && in_h(p.second) && p.second != 0) ||
               (!in_k(p.first) && in_k(p.second) && p.second != 0);
    };
    auto in_v = [&](Pair p) {
        return (in_h(p.first) && p.first != 0 && !in_h(p.second)) ||
               (in_k(p.first) && p.first != 0 && !in_k(p.second));
    };
    // (k,h) in A_H n V_K, or (h,k) in A_K n V_H.
    auto special = [&](Pair p) {
        const bool kh = in_k(p.first) && !in_h(p.first) && in_h(p.second) && !in_k(p.second);
        const bool hk = in_h(p.first) && !in_k(p.first) && in_k(p.second) && !in_h(p.second);
        return kh || hk;
    };
    auto hat = [&](Pair p) { return Pair{g.mul(p.first, p.second), g.inv(p.second)}; };
    auto check = [&](Pair p) { return Pair{g.inv(p.first), g.mul(p.first, p.second)}; };

    auto choose = [&](auto&& in_set, auto&& flip) {
        std::set<Pair> reps;
        std::set<Pair> seen;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                const Pair p{a, b};
                if (!in_set(p) || seen.contains(p)) continue;
                const Pair q = flip(p);
                seen.insert(p);
                seen.insert(q);
                if (special(p)) reps.insert(flip(p));
                else if (special(q)) reps.insert(flip(q));
                else reps.insert(std::min(p, q));
            }
        return reps;
    };
    const std::set<Pair> a_reps = choose(in_a, hat);
    const std::set<Pair> v_reps = choose(in_v, check);

    GaugeFix out;
    out.phi = Cochain2::trivial(n);
    for (const Pair& p : a_reps) {
        out.phi(p.first, p.second) = s.omega(p.first, p.second, g.inv(p.second));
        out.a_reps.push_back(p);
    }
    for (const Pair& p : v_reps) {
        if (a_reps.contains(p)) out.reps_disjoint = false;
        // enters d(phi)(l^-1,l,g) unconjugated, unlike the A clause
        out.phi(p.first, p.second) = s.omega(g.inv(p.first), p.first, p.second).conj();
        out.v_reps.push_back(p);
    }
    out.omega = pointwise_product(coboundary2(g, out.phi), s.omega);
    return out;
}

CheckResult gl_relations_check(const GroupTable& g, const std::vector<Elem>& h,
                               const std::vector<Elem>& k, const Cocycle3& omega) {
    std::set<Elem> ls(h.begin(), h.end());
    ls.insert(k.begin(), k.end());
    const std::size_t n = g.order();
    std::size_t cases = 0;
    for (Elem l : ls) {
        const Elem li = g.inv(l);
        for (Elem g1 = 0; g1 < n; ++g1) {
            if (!omega(g1, l, li).is_one()) return CheckResult::fail("GL(i)", {g1, l});
            for (Elem g2 = 0; g2 < n; ++g2) {
                ++cases;
                if (omega(g1, g2, l) != omega(g1, g.mul(g2, l), li).conj())
                    return CheckResult::fail("GL(ii)", {g1, g2, l});
                if (omega(g1, l, g2) != omega(g.mul(g1, l), li, g.mul(l, g2)).conj())
                    return CheckResult::fail("GL(iii)", {g1, g2, l});
                if (omega(l, g1, g2) != omega(li, g.mul(l, g1), g2).conj())
                    return CheckResult::fail("GL(iv)", {g1, g2, l});
            }
        }
    }
    return CheckResult::pass(cases);
}

}  // namespace tubealg
