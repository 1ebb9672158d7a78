#include "tubealg/annular.hpp"

#include <algorithm>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

std::vector<std::int64_t> positions(std::size_t n, std::span<const Elem> h) {
    std::vector<std::int64_t> pos(n, -1);
    for (std::size_t i = 0; i < h.size(); ++i) pos.at(h[i]) = w(i);
    return pos;
}

void require_setup_shape(const BHSetup& s) {
    const std::size_t n = s.group.order();
    if (s.omega.n != n) throw InputError("cocycle does not match the group order", {w(s.omega.n), w(n)});
    if (!is_subgroup(s.group, s.h)) throw InputError("H is not a subgroup");
    if (!std::is_sorted(s.h.begin(), s.h.end())) throw InputError("H must be sorted");
}

bool in_h(const BHSetup& s, Elem x) { return std::binary_search(s.h.begin(), s.h.end(), x); }

void require_label(const BHSetup& s, const ALabel& l) {
    const auto& g = s.group;
    const std::size_t n = g.order();
    if (l.h1 >= n || l.g1 >= n || l.s >= n || l.h2 >= n || l.g2 >= n)
        throw InputError("annular label out of range", {l.h1, l.g1, l.s, l.h2, l.g2});
    if (!in_h(s, l.h1) || !in_h(s, l.h2))
        throw InputError("annular label has an H-part outside H", {l.h1, l.g1, l.s, l.h2, l.g2});
    if (g.mul(l.h1, l.g1, l.s) != g.mul(l.s, l.h2, l.g2))
        throw InputError("annular label violates h1 g1 s = s h2 g2", {l.h1, l.g1, l.s, l.h2, l.g2});
}

void require_box(const BHSetup& s, const BoxLabel& b) {
    const std::size_t n = s.group.order();
    if (b.h1 >= n || b.g1 >= n || b.g2 >= n || b.h2 >= n)
        throw InputError("box label out of range", {b.h1, b.g1, b.g2, b.h2});
    if (!in_h(s, b.h1) || !in_h(s, b.h2))
        throw InputError("box label has an H-part outside H", {b.h1, b.g1, b.g2, b.h2});
    if (s.group.mul(b.h1, b.g1) != s.group.mul(b.g2, b.h2))
        throw InputError("box label violates h1 g1 = g2 h2", {b.h1, b.g1, b.g2, b.h2});
}

}  // namespace

AnnularAlgebra::AnnularAlgebra(const BHSetup& setup)
    : setup_(setup), n_(setup.group.order()), m_(setup.h.size()) {
    require_setup_shape(setup_);
    hpos_ = positions(n_, setup_.h);
}

std::size_t AnnularAlgebra::object_of(Elem h, Elem g) const {
    if (h >= n_ || hpos_[h] < 0 || g >= n_) throw InputError("not an annular object", {h, g});
    return static_cast<std::size_t>(hpos_[h]) * n_ + g;
}

std::pair<Elem, Elem> AnnularAlgebra::object_pair(std::size_t object) const {
    return {setup_.h[object / n_], static_cast<Elem>(object % n_)};
}

Elem AnnularAlgebra::object_value(std::size_t object) const {
    const auto [h, g] = object_pair(object);
    return setup_.group.mul(h, g);
}

ALabel AnnularAlgebra::label_of(std::size_t i) const {
    const auto& g = setup_.group;
    const std::size_t ph2 = i % m_, s = (i / m_) % n_, o1 = i / (n_ * m_);
    const auto [h1, g1] = object_pair(o1);
    const Elem h2 = setup_.h[ph2], se = static_cast<Elem>(s);
    // g2 = h2^-1 s^-1 h1 g1 s
    const Elem g2 = g.mul(g.mul(g.inv(h2), g.inv(se)), g.mul(h1, g1, se));
    return {h1, g1, se, h2, g2};
}

std::size_t AnnularAlgebra::index_of(const ALabel& l) const {
    require_label(setup_, l);
    return (object_of(l.h1, l.g1) * n_ + l.s) * m_ + static_cast<std::size_t>(hpos_[l.h2]);
}

std::size_t AnnularAlgebra::target(std::size_t i) const {
    const auto l = label_of(i);
    return object_of(l.h2, l.g2);
}

Term AnnularAlgebra::compose(std::size_t left, std::size_t right) const {
    const auto r = a_mult(setup_, label_of(left), label_of(right));
    return {r->scalar, index_of(r->result)};
}

Term AnnularAlgebra::star(std::size_t i) const {
    const auto r = a_star(setup_, label_of(i));
    return {r.scalar, index_of(r.result)};
}

bool AnnularAlgebra::trace_one(std::size_t i) const { return a_trace(setup_, label_of(i)); }

std::size_t AnnularAlgebra::identity(std::size_t object) const {
    return (object * n_) * m_ + object / n_;
}

std::string AnnularAlgebra::label(std::size_t i) const {
    const auto l = label_of(i);
    return "(" + std::to_string(l.h1) + "," + std::to_string(l.g1) + "," + std::to_string(l.s) + "," +
           std::to_string(l.h2) + "," + std::to_string(l.g2) + ")";
}

std::optional<AProduct> a_mult(const BHSetup& st, const ALabel& b, const ALabel& a) {
    require_label(st, a);
    require_label(st, b);
    if (a.h2 != b.h1 || a.g2 != b.g1) return std::nullopt;
    const auto& g = st.group;
    const auto& om = st.omega;
    const Elem s = a.s, t = b.s;
    const Phase c = om(s, t, g.mul(b.h2, b.g2)) * om(s, g.mul(a.h2, a.g2), t).conj() *
                    om(g.mul(a.h1, a.g1), s, t);
    return AProduct{c, {a.h1, a.g1, g.mul(s, t), b.h2, b.g2}};
}

AProduct a_star(const BHSetup& st, const ALabel& a) {
    require_label(st, a);
    const auto& g = st.group;
    const auto& om = st.omega;
    const Elem si = g.inv(a.s), v1 = g.mul(a.h1, a.g1), v2 = g.mul(a.h2, a.g2);
    const Phase c = om(v1, a.s, si).conj() * om(a.s, v2, si) * om(a.s, si, v1).conj();
    return {c, {a.h2, a.g2, si, a.h1, a.g1}};
}

bool a_trace(const BHSetup& st, const ALabel& a) {
    require_label(st, a);
    return a.h1 == a.h2 && a.s == 0;
}

Phase a_normalization(const BHSetup& st, const ALabel& a) {
    require_label(st, a);
    return st.omega(a.h1, a.g1, a.s) * st.omega(a.s, a.h2, a.g2);
}

BoxProduct box_compose(const BHSetup& st, const BoxLabel& b2, const BoxLabel& b1) {
    require_box(st, b1);
    require_box(st, b2);
    if (b1.g2 != b2.g1) throw InputError("box gradings do not match", {b1.g2, b2.g1});
    const auto& g = st.group;
    const auto& om = st.omega;
    const Elem h1 = b1.h1, g1 = b1.g1, g2 = b1.g2, h2 = b1.h2;
    const Elem h3 = b2.h1, g3 = b2.g2, h4 = b2.h2;
    const Phase c = om(h3, h1, g1).conj() * om(h3, g2, h2) * om(g3, h4, h2).conj();
    return {c, {g.mul(h3, h1), g1, g3, g.mul(h4, h2)}};
}

BoxProduct box_star(const BHSetup& st, const BoxLabel& b) {
    require_box(st, b);
    const auto& g = st.group;
    const Elem h2i = g.inv(b.h2);
    return {st.omega(b.h1, b.g1, h2i).conj(), {g.inv(b.h1), b.g2, b.g1, h2i}};
}

std::vector<BoxLabel> box_basis(const GroupTable& g, std::span<const Elem> h, Elem g1, Elem g2) {
    std::vector<BoxLabel> out;
    for (Elem h1 : h) {
        const Elem h2 = g.mul(g.inv(g2), g.mul(h1, g1));
        if (std::find(h.begin(), h.end(), h2) != h.end()) out.push_back({h1, g1, g2, h2});
    }
    return out;
}

BoxAlgebra::BoxAlgebra(const BHSetup& setup) : setup_(setup) {
    require_setup_shape(setup_);
    const std::size_t n = setup_.group.order(), m = setup_.h.size();
    index_.assign(m * n * n, -1);
    for (Elem g1 = 0; g1 < n; ++g1)
        for (Elem g2 = 0; g2 < n; ++g2)
            for (const auto& b : box_basis(setup_.group, setup_.h, g1, g2)) {
                const auto ph1 = static_cast<std::size_t>(
                    std::lower_bound(setup_.h.begin(), setup_.h.end(), b.h1) - setup_.h.begin());
                index_[(ph1 * n + b.g1) * n + b.g2] = w(boxes_.size());
                boxes_.push_back(b);
            }
}

std::size_t BoxAlgebra::index_of(const BoxLabel& b) const {
    require_box(setup_, b);
    const std::size_t n = setup_.group.order();
    const auto ph1 =
        static_cast<std::size_t>(std::lower_bound(setup_.h.begin(), setup_.h.end(), b.h1) - setup_.h.begin());
    return static_cast<std::size_t>(index_[(ph1 * n + b.g1) * n + b.g2]);
}

Term BoxAlgebra::compose(std::size_t left, std::size_t right) const {
    const auto r = box_compose(setup_, boxes_[left], boxes_[right]);
    return {r.scalar, index_of(r.result)};
}

Term BoxAlgebra::star(std::size_t i) const {
    const auto r = box_star(setup_, boxes_[i]);
    return {r.scalar, index_of(r.result)};
}

bool BoxAlgebra::trace_one(std::size_t i) const {
    const auto& b = boxes_[i];
    return b.h1 == 0 && b.g1 == b.g2;
}

std::size_t BoxAlgebra::identity(std::size_t object) const {
    return index_of({0, static_cast<Elem>(object), static_cast<Elem>(object), 0});
}

std::string BoxAlgebra::label(std::size_t i) const {
    const auto& b = boxes_[i];
    return "(" + std::to_string(b.h1) + "," + std::to_string(b.g1) + "," + std::to_string(b.g2) + "," +
           std::to_string(b.h2) + ")";
}

CheckResult check_box_unitarity(const BoxAlgebra& alg) {
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const Term s = alg.star(i);
        const Term p = alg.compose(s.index, i);
        const Term unit{Phase(), alg.identity(alg.source(i))};
        if (p.index != unit.index || !(s.coeff * p.coeff).is_one())
            return CheckResult::fail("box-unitarity", {w(i)}, alg.label(i));
    }
    return CheckResult::pass(alg.dimension());
}

std::vector<Elem> stabilizer_subgroup(const BHSetup& s, Elem g) {
    std::vector<Elem> out;
    for (Elem h : s.h)
        if (in_h(s, s.group.conj(g, h))) out.push_back(h);
    return out;
}

Cocycle2 end_xg_twist(const BHSetup& s, Elem g) {
    require_setup_shape(s);
    const auto& G = s.group;
    const auto& om = s.omega;
    Cocycle2 psi(G.order(), stabilizer_subgroup(s, g));
    for (Elem h1 : psi.elements())
        for (Elem h2 : psi.elements()) {
            const Elem c1 = G.conj(g, h1), c2 = G.conj(g, h2);
            psi(h1, h2) = om(c1, c2, g).conj() * om(c1, g, h2) * om(g, h1, h2).conj();
        }
    return psi;
}

TwistedGroupAlgebra end_xg_algebra(const BHSetup& s, Elem g) { return TwistedGroupAlgebra(s.group, end_xg_twist(s, g)); }

std::vector<Elem> double_coset_representatives(const GroupTable& g, std::span<const Elem> h) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (Elem a : h)
            for (Elem b : h) seen[g.mul(a, x, b)] = true;
    }
    return reps;
}

}  // namespace tubealg
