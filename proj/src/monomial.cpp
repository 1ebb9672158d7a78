#include "tubealg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "tubealg/cyclotomic.hpp"

namespace tubealg {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

// (c b) a versus c (b a) for one composable triple.
bool associative_at(const MonomialAlgebra& alg, std::size_t c, std::size_t b, std::size_t a) {
    const Term cb = alg.compose(c, b);
    const Term ba = alg.compose(b, a);
    const Term lhs = alg.compose(cb.index, a);
    const Term rhs = alg.compose(c, ba.index);
    return lhs.index == rhs.index && cb.coeff * lhs.coeff == ba.coeff * rhs.coeff;
}

}  // namespace

MorphismIndex::MorphismIndex(const MonomialAlgebra& alg)
    : from_(alg.object_count()), into_(alg.object_count()), endo_(alg.object_count()) {
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const auto s = alg.source(i), t = alg.target(i);
        from_[s].push_back(i);
        into_[t].push_back(i);
        if (s == t) endo_[s].push_back(i);
    }
}

CheckResult check_associativity(const MonomialAlgebra& alg, const AlgebraCheckOptions& opts) {
    const MorphismIndex idx(alg);
    const std::size_t d = alg.dimension();
    if (d == 0) return CheckResult::pass();
    if (d <= opts.exhaustive_max_dimension) {
        std::size_t cases = 0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b : idx.from(alg.target(a)))
                for (std::size_t c : idx.from(alg.target(b))) {
                    ++cases;
                    if (!associative_at(alg, c, b, a))
                        return CheckResult::fail("associativity", {w(c), w(b), w(a)});
                }
        return CheckResult::pass(cases);
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (std::size_t k = 0; k < opts.samples; ++k) {
        const std::size_t a = pick(rng);
        const auto& bs = idx.from(alg.target(a));
        const std::size_t b = bs[rng() % bs.size()];
        const auto& cs = idx.from(alg.target(b));
        const std::size_t c = cs[rng() % cs.size()];
        if (!associative_at(alg, c, b, a)) return CheckResult::fail("associativity", {w(c), w(b), w(a)});
    }
    return CheckResult::pass(opts.samples);
}

CheckResult check_star(const MonomialAlgebra& alg) {
    const std::size_t d = alg.dimension();
    const MorphismIndex idx(alg);
    for (std::size_t i = 0; i < d; ++i) {
        const Term s = alg.star(i);
        if (alg.source(s.index) != alg.target(i) || alg.target(s.index) != alg.source(i))
            return CheckResult::fail("star-grading", {w(i)});
        const Term ss = alg.star(s.index);
        if (ss.index != i || !(s.coeff.conj() * ss.coeff).is_one())
            return CheckResult::fail("star-involution", {w(i)});
    }
    std::size_t cases = 0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b : idx.from(alg.target(a))) {
            ++cases;
            const Term ba = alg.compose(b, a);
            const Term lhs = alg.star(ba.index);  // (ba)^# = conj(c) m^#
            const Term as = alg.star(a), bs = alg.star(b);
            const Term rhs = alg.compose(as.index, bs.index);
            if (lhs.index != rhs.index || ba.coeff.conj() * lhs.coeff != as.coeff * bs.coeff * rhs.coeff)
                return CheckResult::fail("star-antihomomorphism", {w(b), w(a)});
        }
    return CheckResult::pass(cases);
}

namespace {

Phase trace_of(const MonomialAlgebra& alg, const Term& t, bool& nonzero) {
    nonzero = alg.trace_one(t.index);
    return t.coeff;
}

}  // namespace

CheckResult check_trace(const MonomialAlgebra& alg) {
    const std::size_t d = alg.dimension();
    const MorphismIndex idx(alg);
    std::size_t cases = 0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b : idx.from(alg.target(a))) {
            ++cases;
            bool nz1 = false, nz2 = false;
            const Phase t1 = trace_of(alg, alg.compose(b, a), nz1);
            Phase t2;
            if (alg.source(a) == alg.target(b)) t2 = trace_of(alg, alg.compose(a, b), nz2);
            if (nz1 != nz2 || (nz1 && t1 != t2)) return CheckResult::fail("trace-symmetry", {w(b), w(a)});
        }
    return CheckResult::pass(cases);
}

CheckResult check_gram(const MonomialAlgebra& alg) {
    const std::size_t d = alg.dimension();
    const MorphismIndex idx(alg);
    std::size_t cases = 0;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y : idx.into(alg.target(x))) {
            ++cases;
            const Term ys = alg.star(y);
            const Term p = alg.compose(ys.index, x);
            const bool nz = alg.trace_one(p.index);
            const bool want = x == y;
            if (nz != want || (nz && !(ys.coeff * p.coeff).is_one()))
                return CheckResult::fail("gram", {w(x), w(y)});
        }
    return CheckResult::pass(cases);
}

CheckResult check_unit(const MonomialAlgebra& alg) {
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const Term l = alg.compose(alg.identity(alg.target(i)), i);
        const Term r = alg.compose(i, alg.identity(alg.source(i)));
        if (l.index != i || !l.coeff.is_one() || r.index != i || !r.coeff.is_one())
            return CheckResult::fail("unit", {w(i)});
    }
    return CheckResult::pass(alg.dimension());
}

CheckResult verify_star_isomorphism(const MonomialAlgebra& from, const MonomialAlgebra& to,
                                    const MonomialMap& map) {
    const std::size_t d = from.dimension();
    if (to.dimension() != d || map.image.size() != d)
        return CheckResult::fail("dimension", {w(from.dimension()), w(to.dimension())});
    std::vector<bool> hit(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        const auto j = map.image[i].index;
        if (j >= d || hit[j]) return CheckResult::fail("bijectivity", {w(i)});
        hit[j] = true;
    }
    std::size_t cases = 0;
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t a = 0; a < d; ++a) {
            ++cases;
            const Term fb = map.image[b], fa = map.image[a];
            const auto prod = to.product(fb.index, fa.index);
            const auto orig = from.product(b, a);
            if (!orig) {
                if (prod) return CheckResult::fail("multiplicativity", {w(b), w(a)}, "image product is nonzero");
                continue;
            }
            if (!prod) return CheckResult::fail("multiplicativity", {w(b), w(a)}, "image product vanishes");
            const Term fm = map.image[orig->index];
            if (fm.index != prod->index || orig->coeff * fm.coeff != fb.coeff * fa.coeff * prod->coeff)
                return CheckResult::fail("multiplicativity", {w(b), w(a)});
        }
    for (std::size_t a = 0; a < d; ++a) {
        const Term s = from.star(a);
        const Term lhs = map.image[s.index];  // Phi(a^#) = s.coeff * lhs
        const Term fa = map.image[a];
        const Term rhs = to.star(fa.index);   // Phi(a)^* = conj(fa.coeff) * rhs
        if (lhs.index != rhs.index || s.coeff * lhs.coeff != fa.coeff.conj() * rhs.coeff)
            return CheckResult::fail("star-preservation", {w(a)});
    }
    return CheckResult::pass(cases + d);
}

MonomialMap inverse_map(const MonomialMap& map) {
    MonomialMap out;
    out.image.resize(map.image.size());
    for (std::size_t i = 0; i < map.image.size(); ++i)
        out.image.at(map.image[i].index) = Term{map.image[i].coeff.conj(), i};
    return out;
}

std::int64_t structure_modulus(const MonomialAlgebra& alg) {
    std::int64_t m = 1;
    const MorphismIndex idx(alg);
    for (std::size_t a = 0; a < alg.dimension(); ++a) {
        m = std::lcm(m, alg.star(a).coeff.den());
        for (std::size_t b : idx.from(alg.target(a))) m = std::lcm(m, alg.compose(b, a).coeff.den());
    }
    return m;
}

std::size_t center_dimension(const MonomialAlgebra& alg) {
    const auto field = std::make_shared<CyclotomicField>(structure_modulus(alg));
    const MorphismIndex idx(alg);
    CyclotomicEchelon ech(field);
    std::size_t unknowns = 0;
    for (std::size_t o = 0; o < alg.object_count(); ++o) unknowns += idx.endo(o).size();

    for (std::size_t b = 0; b < alg.dimension(); ++b) {
        // coefficient of each output basis element in z b - b z
        std::map<std::size_t, CyclotomicRow> rows;
        auto add = [&](std::size_t out, std::size_t var, Phase c, bool negate) {
            auto& row = rows[out];
            auto [slot, fresh] = row.try_emplace(var, Cyclotomic::zero(field));
            const Cyclotomic v = Cyclotomic::from_phase(field, c);
            slot->second = negate ? slot->second - v : slot->second + v;
        };
        for (std::size_t e : idx.endo(alg.target(b))) {
            const Term t = alg.compose(e, b);
            add(t.index, e, t.coeff, false);
        }
        for (std::size_t e : idx.endo(alg.source(b))) {
            const Term t = alg.compose(b, e);
            add(t.index, e, t.coeff, true);
        }
        for (auto& [out, row] : rows) ech.add(std::move(row));
    }
    return unknowns - ech.rank();
}

// ---- TwistedGroupAlgebra ----

TwistedGroupAlgebra::TwistedGroupAlgebra(const GroupTable& group, Cocycle2 phi)
    : group_(std::make_shared<GroupTable>(group)), phi_(std::move(phi)) {
    if (!phi_.contains(0)) throw InputError("twist support does not contain the identity");
    if (auto r = cocycle2_check(group, phi_); !r)
        throw InputError("twist breaks associativity (" + r.relation + ")", r.witness);
    for (Elem x : phi_.elements())
        if (!phi_(0, x).is_one() || !phi_(x, 0).is_one())
            throw InputError("twist is not normalized", {x});
}

Term TwistedGroupAlgebra::compose(std::size_t left, std::size_t right) const {
    const Elem g = element(left), h = element(right);
    return {phi_(g, h), phi_.position(group_->mul(g, h))};
}

Term TwistedGroupAlgebra::star(std::size_t i) const {
    const Elem g = element(i), gi = group_->inv(g);
    return {phi_(gi, g).conj(), phi_.position(gi)};
}

std::string TwistedGroupAlgebra::label(std::size_t i) const {
    return "[" + std::to_string(element(i)) + "]";
}

// ---- BlockAlgebra ----

BlockAlgebra::BlockAlgebra(const GroupTable& group, std::vector<Block> blocks)
    : group_(std::make_shared<GroupTable>(group)), blocks_(std::move(blocks)) {
    std::size_t objs = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto& blk = blocks_[b];
        if (!blk.twist.contains(0)) throw InputError("block twist support lacks the identity", {w(b)});
        offset_.push_back(dim_);
        object_offset_.push_back(objs);
        dim_ += blk.objects.size() * blk.objects.size() * blk.twist.size();
        objs += blk.objects.size();
        for (std::size_t r = 0; r < blk.objects.size(); ++r) object_block_.push_back(b);
    }
}

BlockAlgebra::Coord BlockAlgebra::coord(std::size_t i) const {
    const auto b = static_cast<std::size_t>(std::upper_bound(offset_.begin(), offset_.end(), i) - offset_.begin()) - 1;
    const auto& blk = blocks_[b];
    const std::size_t m = blk.objects.size(), k = blk.twist.size();
    std::size_t r = i - offset_[b];
    const Elem x = blk.twist.elements()[r % k];
    r /= k;
    return {b, r / m, r % m, x};
}

std::size_t BlockAlgebra::index(std::size_t block, std::size_t row, std::size_t col, Elem element) const {
    const auto& blk = blocks_[block];
    const std::size_t m = blk.objects.size(), k = blk.twist.size();
    return offset_[block] + (row * m + col) * k + blk.twist.position(element);
}

std::size_t BlockAlgebra::source(std::size_t i) const {
    const auto c = coord(i);
    return object_offset_[c.block] + c.col;
}

std::size_t BlockAlgebra::target(std::size_t i) const {
    const auto c = coord(i);
    return object_offset_[c.block] + c.row;
}

Term BlockAlgebra::compose(std::size_t left, std::size_t right) const {
    const auto l = coord(left), r = coord(right);
    const auto& phi = blocks_[l.block].twist;
    return {phi(l.element, r.element), index(l.block, l.row, r.col, group_->mul(l.element, r.element))};
}

Term BlockAlgebra::star(std::size_t i) const {
    const auto c = coord(i);
    const auto& phi = blocks_[c.block].twist;
    const Elem xi = group_->inv(c.element);
    return {phi(xi, c.element).conj(), index(c.block, c.col, c.row, xi)};
}

bool BlockAlgebra::trace_one(std::size_t i) const {
    const auto c = coord(i);
    return c.row == c.col && c.element == 0;
}

std::size_t BlockAlgebra::identity(std::size_t object) const {
    const auto b = object_block_[object];
    const auto r = object - object_offset_[b];
    return index(b, r, r, 0);
}

std::string BlockAlgebra::label(std::size_t i) const {
    const auto c = coord(i);
    const auto& blk = blocks_[c.block];
    return blk.name + ":E(" + std::to_string(blk.objects[c.row]) + "," + std::to_string(blk.objects[c.col]) +
           ")[" + group_->name(c.element) + "]";
}

// ---- CornerAlgebra ----

CornerAlgebra::CornerAlgebra(std::shared_ptr<const MonomialAlgebra> parent, std::vector<std::size_t> objects)
    : parent_(std::move(parent)), objects_(std::move(objects)) {
    std::sort(objects_.begin(), objects_.end());
    local_object_.assign(parent_->object_count(), npos);
    for (std::size_t k = 0; k < objects_.size(); ++k) local_object_.at(objects_[k]) = k;
    local_.assign(parent_->dimension(), npos);
    for (std::size_t i = 0; i < parent_->dimension(); ++i)
        if (local_object_[parent_->source(i)] != npos && local_object_[parent_->target(i)] != npos) {
            local_[i] = basis_.size();
            basis_.push_back(i);
        }
}

Term CornerAlgebra::compose(std::size_t left, std::size_t right) const {
    const Term t = parent_->compose(basis_[left], basis_[right]);
    return {t.coeff, local_[t.index]};
}

Term CornerAlgebra::star(std::size_t i) const {
    const Term t = parent_->star(basis_[i]);
    return {t.coeff, local_[t.index]};
}

std::size_t CornerAlgebra::identity(std::size_t object) const {
    return local_[parent_->identity(objects_[object])];
}

std::optional<std::size_t> CornerAlgebra::local_index(std::size_t parent_i) const {
    if (local_[parent_i] == npos) return std::nullopt;
    return local_[parent_i];
}

std::vector<StructureEntry> structure_constants(const MonomialAlgebra& alg) {
    const MorphismIndex idx(alg);
    std::vector<StructureEntry> out;
    for (std::size_t b = 0; b < alg.dimension(); ++b)
        for (std::size_t a : idx.into(alg.source(b))) out.push_back({b, a, alg.compose(b, a)});
    return out;
}

}  // namespace tubealg
