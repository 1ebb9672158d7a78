#include "tubealg/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

std::int64_t lcm_of(const std::vector<Phase>& values) {
    std::int64_t m = 1;
    for (const auto& p : values) m = std::lcm(m, p.den());
    return m;
}

}  // namespace

bool Cochain2::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](Phase p) { return p.is_one(); });
}

bool Cocycle3::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](Phase p) { return p.is_one(); });
}

std::int64_t Cocycle3::modulus() const { return lcm_of(values); }

Cocycle2::Cocycle2(std::size_t group_order, std::vector<Elem> elements)
    : elements_(std::move(elements)), position_(group_order, -1) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] >= group_order) throw InputError("subgroup element out of range", {w(elements_[i])});
        position_[elements_[i]] = static_cast<std::int64_t>(i);
    }
    values_.assign(elements_.size() * elements_.size(), Phase{});
}

bool Cocycle2::is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [](Phase p) { return p.is_one(); });
}

std::int64_t Cocycle2::modulus() const { return lcm_of(values_); }

CheckResult cocycle3_check(const GroupTable& g, const Cocycle3& omega) {
    const std::size_t n = g.order();
    if (omega.n != n || omega.values.size() != n * n * n)
        return CheckResult::fail("shape", {w(omega.values.size())}, "table is not |G|^3");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                const Phase abc = omega(a, b, c);
                const Elem bc = g.mul(b, c);
                const Elem ab = g.mul(a, b);
                for (Elem d = 0; d < n; ++d) {
                    const Phase lhs = abc * omega(a, bc, d) * omega(b, c, d);
                    const Phase rhs = omega(ab, c, d) * omega(a, b, g.mul(c, d));
                    if (lhs != rhs) return CheckResult::fail("3-cocycle", {a, b, c, d});
                }
            }
    return CheckResult::pass(n * n * n * n);
}

CheckResult cocycle2_check(const GroupTable& g, const Cocycle2& phi) {
    const auto& el = phi.elements();
    for (Elem a : el)
        for (Elem b : el) {
            if (!phi.contains(g.mul(a, b)))
                return CheckResult::fail("closure", {a, b}, "support is not a subgroup");
        }
    for (Elem h1 : el)
        for (Elem h2 : el)
            for (Elem h3 : el) {
                const Phase v = phi(h2, h3) * phi(g.mul(h1, h2), h3).conj() *
                                phi(h1, g.mul(h2, h3)) * phi(h1, h2).conj();
                if (!v.is_one()) return CheckResult::fail("2-cocycle", {h1, h2, h3});
            }
    return CheckResult::pass(el.size() * el.size() * el.size());
}

Cochain2 coboundary1(const GroupTable& g, const Cochain1& gamma) {
    const std::size_t n = g.order();
    Cochain2 out = Cochain2::trivial(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) out(a, b) = gamma(a) * gamma(b) * gamma(g.mul(a, b)).conj();
    return out;
}

Cocycle3 coboundary2(const GroupTable& g, const Cochain2& phi) {
    const std::size_t n = g.order();
    Cocycle3 out = Cocycle3::trivial(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                out(a, b, c) = phi(b, c) * phi(g.mul(a, b), c).conj() * phi(a, g.mul(b, c)) *
                               phi(a, b).conj();
    return out;
}

Cocycle3 pointwise_product(const Cocycle3& a, const Cocycle3& b) {
    Cocycle3 out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

Cocycle3 pointwise_quotient(const Cocycle3& a, const Cocycle3& b) {
    Cocycle3 out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] / b.values[i];
    return out;
}

bool is_normalized(const GroupTable& g, const Cocycle3& omega) {
    const std::size_t n = g.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (!omega(0, a, b).is_one() || !omega(a, 0, b).is_one() || !omega(a, b, 0).is_one())
                return false;
    return true;
}

Cochain2 normalizing_cochain(const GroupTable& g, const Cocycle3& omega) {
    const std::size_t n = g.order();
    Cochain2 phi = Cochain2::trivial(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) phi(a, b) = omega(a, 0, 0) * omega(0, 0, b).conj();
    return phi;
}

Cocycle3 normalize3(const GroupTable& g, const Cocycle3& omega) {
    if (auto r = cocycle3_check(g, omega); !r) throw InputError("input is not a 3-cocycle", r.witness);
    return pointwise_product(coboundary2(g, normalizing_cochain(g, omega)), omega);
}

CheckResult check_trivial_on(const GroupTable& g, const Cocycle3& omega,
                             std::span<const Elem> subset) {
    (void)g;
    for (Elem a : subset)
        for (Elem b : subset)
            for (Elem c : subset)
                if (!omega(a, b, c).is_one()) return CheckResult::fail("trivial-restriction", {a, b, c});
    return CheckResult::pass(subset.size() * subset.size() * subset.size());
}

Cocycle3 standard_cyclic_cocycle(std::size_t n, std::int64_t k) {
    Cocycle3 omega = Cocycle3::trivial(n);
    const auto N = static_cast<std::int64_t>(n);
    for (std::int64_t a = 0; a < N; ++a)
        for (std::int64_t b = 0; b < N; ++b)
            for (std::int64_t c = 0; c < N; ++c)
                omega(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)) =
                    Phase(k * a * ((b + c) / N), N);
    return omega;
}

Cocycle3 product_type_cocycle() {
    Cocycle3 omega = Cocycle3::trivial(4);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
            for (Elem c = 0; c < 4; ++c) {
                const std::int64_t a1 = a / 2, b2 = b % 2, c2 = c % 2;
                omega(a, b, c) = Phase(a1 * b2 * c2, 2);
            }
    return omega;
}

Cocycle3 inflate_cocycle(const GroupTable& g, const GroupTable& q, const Cocycle3& omega,
                         std::span<const Elem> surjection) {
    if (auto r = check_homomorphism(g, q, surjection); !r)
        throw InputError("inflation map is not a homomorphism", r.witness);
    std::vector<bool> hit(q.order(), false);
    for (Elem v : surjection) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw InputError("inflation map is not surjective");
    const std::size_t n = g.order();
    Cocycle3 out = Cocycle3::trivial(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) out(a, b, c) = omega(surjection[a], surjection[b], surjection[c]);
    return out;
}

}  // namespace tubealg
