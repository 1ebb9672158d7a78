#include "tubealg/tube.hpp"

#include <algorithm>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_label(const GroupTable& g, const TubeLabel& l) {
    const std::size_t n = g.order();
    if (l.g1 >= n || l.s >= n || l.g2 >= n) throw InputError("tube label out of range", {l.g1, l.s, l.g2});
    if (g.mul(l.g1, l.s) != g.mul(l.s, l.g2))
        throw InputError("tube label violates g1 s = s g2", {l.g1, l.s, l.g2});
}

}  // namespace

TubeAlgebra::TubeAlgebra(const GroupTable& group, Cocycle3 omega)
    : group_(group), omega_(std::move(omega)), n_(group.order()) {
    if (omega_.n != n_) throw InputError("cocycle does not match the group order", {w(omega_.n), w(n_)});
}

TubeLabel TubeAlgebra::label_of(std::size_t i) const {
    const Elem g1 = static_cast<Elem>(i / n_), s = static_cast<Elem>(i % n_);
    return {g1, s, group_.mul(group_.inv(s), group_.mul(g1, s))};
}

std::size_t TubeAlgebra::index_of(const TubeLabel& l) const {
    require_label(group_, l);
    return static_cast<std::size_t>(l.g1) * n_ + l.s;
}

Term TubeAlgebra::compose(std::size_t left, std::size_t right) const {
    const auto r = tube_mult(group_, omega_, label_of(left), label_of(right));
    return {r->scalar, index_of(r->result)};
}

Term TubeAlgebra::star(std::size_t i) const {
    const auto r = tube_star(group_, omega_, label_of(i));
    return {r.scalar, index_of(r.result)};
}

std::string TubeAlgebra::label(std::size_t i) const {
    const auto l = label_of(i);
    return "(" + std::to_string(l.g1) + "," + std::to_string(l.s) + "," + std::to_string(l.g2) + ")";
}

std::optional<TubeProduct> tube_mult(const GroupTable& g, const Cocycle3& omega, const TubeLabel& b,
                                     const TubeLabel& a) {
    require_label(g, a);
    require_label(g, b);
    if (a.g2 != b.g1) return std::nullopt;
    const Elem g1 = a.g1, s = a.s, g2 = a.g2, t = b.s, g3 = b.g2;
    const Phase c = omega(g1, s, t) * omega(s, g2, t).conj() * omega(s, t, g3);
    return TubeProduct{c, {g1, g.mul(s, t), g3}};
}

TubeProduct tube_star(const GroupTable& g, const Cocycle3& omega, const TubeLabel& a) {
    require_label(g, a);
    const Elem si = g.inv(a.s);
    const Phase c = omega(a.g1, a.s, si).conj() * omega(a.s, a.g2, si) * omega(a.s, si, a.g1).conj();
    return {c, {a.g2, si, a.g1}};
}

bool tube_trace(const TubeLabel& a) { return a.g1 == a.g2 && a.s == 0; }

std::string to_string(TwistConvention c) {
    return c == TwistConvention::Opposite ? "opposite" : "conjugate";
}

Cocycle2 class_twist(const GroupTable& g, const Cocycle3& omega, const ClassData& cd, std::size_t c,
                     TwistConvention convention) {
    return convention == TwistConvention::Opposite ? phi_C(g, omega, cd, c) : phi_C_conjugate(g, omega, cd, c);
}

PhiImage phi_image(const TubeLikeAlgebra& alg, const ClassData& cd, std::size_t i) {
    const auto& g = alg.group();
    const std::size_t o1 = alg.source(i), o2 = alg.target(i);
    const Elem v1 = alg.object_value(o1), v2 = alg.object_value(o2), s = alg.arrow(i);
    const std::size_t c = cd.class_of[v1];
    const Elem w1 = cd.transport[v1], w2 = cd.transport[v2];
    const Elem arg = g.mul(g.inv(w1), s, w2);
    if (g.conj(g.inv(arg), cd.rep[c]) != cd.rep[c])
        throw std::logic_error("transported label left the centralizer");
    return {c, gamma(g, alg.cocycle(), cd.rep[c], w1, w2, arg).conj(), o2, o1, g.inv(arg)};
}

BlockPresentation block_presentation(const TubeLikeAlgebra& alg, TwistConvention convention) {
    const auto& g = alg.group();
    BlockPresentation out;
    out.classes = conjugacy_data(g);
    out.convention = convention;
    const auto& cd = out.classes;

    std::vector<Block> blocks(cd.class_count());
    out.object_block.assign(alg.object_count(), 0);
    out.object_position.assign(alg.object_count(), 0);
    for (std::size_t o = 0; o < alg.object_count(); ++o) {
        const std::size_t c = cd.class_of[alg.object_value(o)];
        out.object_block[o] = c;
        out.object_position[o] = blocks[c].objects.size();
        blocks[c].objects.push_back(o);
    }
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        blocks[c].twist = class_twist(g, alg.cocycle(), cd, c, convention);
        blocks[c].name = "C" + std::to_string(c);
    }
    out.blocks = std::make_shared<BlockAlgebra>(g, std::move(blocks));

    out.phi.image.resize(alg.dimension());
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const auto im = phi_image(alg, cd, i);
        out.phi.image[i] = {im.scalar, out.blocks->index(im.cls, out.object_position[im.row_object],
                                                         out.object_position[im.col_object], im.element)};
    }
    out.phi_inverse = inverse_map(out.phi);
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        const auto o = alg.base_object(cd.rep[c]);
        out.base_object.push_back(o);
        out.base_projection.push_back(alg.identity(o));
    }
    return out;
}

Term phi_inverse_image(const TubeLikeAlgebra& alg, const ClassData& cd, std::size_t row_object,
                       std::size_t col_object, Elem x) {
    const auto& g = alg.group();
    const Elem v1 = alg.object_value(col_object), v2 = alg.object_value(row_object);
    if (cd.class_of[v1] != cd.class_of[v2]) throw InputError("matrix unit crosses classes", {w(row_object), w(col_object)});
    const Elem w1 = cd.transport[v1], w2 = cd.transport[v2];
    // x = w2^-1 s^-1 w1
    const Elem s = g.mul(w1, g.inv(x), g.inv(w2));
    const MorphismIndex idx(alg);
    for (std::size_t i : idx.from(col_object)) {
        if (alg.arrow(i) != s || alg.target(i) != row_object) continue;
        const auto im = phi_image(alg, cd, i);
        return {im.scalar.conj(), i};
    }
    throw InputError("no basis element for this block label", {w(row_object), w(col_object), x});
}

IsoReport verify_block_isomorphism(const TubeLikeAlgebra& alg) {
    IsoReport rep;
    const auto opp = block_presentation(alg, TwistConvention::Opposite);
    rep.opposite = verify_star_isomorphism(alg, *opp.blocks, opp.phi);
    const auto con = block_presentation(alg, TwistConvention::Conjugate);
    rep.conjugate = verify_star_isomorphism(alg, *con.blocks, con.phi);
    if (rep.opposite) rep.selected = TwistConvention::Opposite;
    else if (rep.conjugate) rep.selected = TwistConvention::Conjugate;
    return rep;
}

SimpleCount simple_count(const TubeLikeAlgebra& alg, TwistConvention convention) {
    const auto& g = alg.group();
    const auto cd = conjugacy_data(g);
    SimpleCount out;
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        const TwistedGroupAlgebra tw(g, class_twist(g, alg.cocycle(), cd, c, convention));
        out.per_class.push_back(center_dimension(tw));
        out.total += out.per_class.back();
    }
    return out;
}

}  // namespace tubealg
