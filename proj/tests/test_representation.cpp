#include "doctest.h"
#include "fixtures.hpp"
#include "tubealg/annular.hpp"
#include "tubealg/representation.hpp"

using namespace tubealg;

namespace {

bool same_matrices(const Representation& a, const Representation& b) {
    if (a.dimension != b.dimension || a.matrices.size() != b.matrices.size()) return false;
    for (std::size_t i = 0; i < a.matrices.size(); ++i)
        if (CMatrix(a.matrices[i]) != CMatrix(b.matrices[i])) return false;
    return true;
}

Representation one_dim(std::vector<Complex> values) {
    Representation r;
    r.dimension = 1;
    for (auto v : values) {
        SMatrix m(1, 1);
        m.insert(0, 0) = v;
        r.matrices.push_back(m);
    }
    return r;
}

TwistedGroupAlgebra class_algebra(const BlockPresentation& bp, const GroupTable& g, std::size_t c) {
    return TwistedGroupAlgebra(g, bp.blocks->blocks()[c].twist);
}

}  // namespace

TEST_CASE("twisted algebra decompositions") {
    auto z2 = fx::z(2);
    Cocycle2 minus(2, {0, 1});
    minus(1, 1) = Phase::minus_one();
    TwistedGroupAlgebra a(z2, minus);
    auto c = a.compose(1, 1);
    CHECK(c.index == 0);
    CHECK(c.coeff == Phase::minus_one());
    CHECK(center_dimension(a) == 2);

    auto reg = regular_representation(a);
    CHECK(check_representation(a, reg).passed);
    auto dec = decompose(a, reg, 3);
    REQUIRE(dec.blocks.size() == 2);
    std::vector<Complex> vals;
    for (const auto& b : dec.blocks) {
        CHECK(b.dimension == 1);
        CHECK(b.multiplicity == 1);
        vals.push_back(CMatrix(b.rep.matrices[1])(0, 0));
    }
    std::sort(vals.begin(), vals.end(), [](Complex x, Complex y) { return x.imag() < y.imag(); });
    CHECK(std::abs(vals[0] - Complex(0, -1)) < 1e-9);
    CHECK(std::abs(vals[1] - Complex(0, 1)) < 1e-9);

    auto s3 = fx::s3();
    std::vector<Elem> all(6);
    std::iota(all.begin(), all.end(), Elem{0});
    TwistedGroupAlgebra cs3(s3, Cocycle2(6, all));
    CHECK(center_dimension(cs3) == 3);
    auto d3 = decompose(cs3, regular_representation(cs3), 1);
    std::vector<std::pair<std::size_t, std::size_t>> shape;
    for (const auto& b : d3.blocks) shape.emplace_back(b.dimension, b.multiplicity);
    std::sort(shape.begin(), shape.end());
    CHECK(shape == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 1}, {2, 2}});

    TwistedGroupAlgebra one(fx::z(1), Cocycle2(1, {0}));
    auto d1 = decompose(one, regular_representation(one));
    REQUIRE(d1.blocks.size() == 1);
    CHECK(d1.blocks[0].dimension == 1);

    // non-cocycle rejected
    Cocycle2 bad(6, all);
    bad(1, 2) = Phase(1, 3);
    CHECK_THROWS_AS(TwistedGroupAlgebra(s3, bad), InputError);
}

TEST_CASE("class algebras: block dimensions square-sum to the dimension") {
    for (const auto& f : fx::all_fixtures()) {
        if (f.group.order() > 12) continue;
        CAPTURE(f.name);
        TubeAlgebra t(f.group, f.omega);
        const auto bp = block_presentation(t);
        for (std::size_t c = 0; c < bp.classes.class_count(); ++c) {
            auto ca = class_algebra(bp, f.group, c);
            auto dec = decompose(ca, regular_representation(ca), 7);
            std::size_t sq = 0;
            for (const auto& b : dec.blocks) {
                sq += b.dimension * b.dimension;
                CHECK(b.multiplicity == b.dimension);
            }
            CHECK(sq == ca.dimension());
            CHECK(dec.blocks.size() == center_dimension(ca));
        }
    }
}

TEST_CASE("simple counts twice: centers versus regular decomposition") {
    for (const auto& f : fx::all_fixtures()) {
        CAPTURE(f.name);
        TubeAlgebra t(f.group, f.omega);
        const auto exact = simple_count(t);
        auto reg = regular_representation(t);
        if (t.dimension() <= 144) CHECK(check_representation(t, reg).passed);
        const auto dec = decompose(t, reg, 17);
        CHECK(dec.blocks.size() == exact.total);
        std::size_t sq = 0;
        for (const auto& b : dec.blocks) sq += b.dimension * b.dimension;
        CHECK(sq == t.dimension());
    }
    // semion: four 1-dimensional blocks
    TubeAlgebra sem(fx::z(2), fx::semion());
    const auto dec = decompose(sem, regular_representation(sem), 2);
    CHECK(dec.blocks.size() == 4);
    for (const auto& b : dec.blocks) CHECK(b.dimension == 1);

    AnnularAlgebra ann(fx::s3_trivial_setup());
    const auto da = decompose(ann, regular_representation(ann), 5);
    CHECK(da.blocks.size() == simple_count(ann).total);
}

TEST_CASE("decompose retries are seeded") {
    TubeAlgebra t(fx::s3(), Cocycle3::trivial(6));
    auto reg = regular_representation(t);
    const auto a = decompose(t, reg, 9), b = decompose(t, reg, 9);
    CHECK(a.seed == b.seed);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i) CHECK(a.blocks[i].character == b.blocks[i].character);
}

TEST_CASE("induction and restriction") {
    auto z2 = fx::z(2);
    TubeAlgebra sem(z2, fx::semion());
    const auto bp = block_presentation(sem);
    const std::size_t c1 = bp.classes.class_of[1];
    CHECK(bp.blocks->blocks()[c1].twist(1, 1) == Phase::minus_one());
    const auto pi = one_dim({Complex(1, 0), Complex(0, 1)});
    CHECK(check_representation(class_algebra(bp, z2, c1), pi).passed);
    const auto big = induce(sem, bp, c1, pi);
    CHECK(big.dimension == 1);
    CHECK(check_representation(sem, big).passed);
    CHECK(same_matrices(restrict_to_class(sem, bp, c1, big), pi));

    // trivial pi on C = {e}
    const std::size_t c0 = bp.classes.class_of[0];
    const auto triv = induce(sem, bp, c0, one_dim({1.0, 1.0}));
    CHECK(check_representation(sem, triv).passed);

    for (const auto& f : fx::all_fixtures()) {
        if (f.group.order() > 8) continue;
        CAPTURE(f.name);
        TubeAlgebra t(f.group, f.omega);
        const auto b = block_presentation(t);
        for (std::size_t c = 0; c < b.classes.class_count(); ++c) {
            auto ca = class_algebra(b, f.group, c);
            const auto reg = regular_representation(ca);
            const auto ind = induce(t, b, c, reg);
            CHECK(ind.dimension == b.classes.classes[c].size() * ca.dimension());
            CHECK(check_representation(t, ind).passed);
            // restrict o induce is the identity, exactly
            CHECK(same_matrices(restrict_to_class(t, b, c, ind), reg));
        }
    }
}

TEST_CASE("restrict then induce is character-equal") {
    for (const auto& f : fx::all_fixtures()) {
        if (f.group.order() > 8) continue;
        CAPTURE(f.name);
        TubeAlgebra t(f.group, f.omega);
        const auto bp = block_presentation(t);
        const auto dec = decompose(t, regular_representation(t), 4);
        for (const auto& blk : dec.blocks) {
            const auto sup = support_decompose(t, bp, blk.rep);
            CHECK(sup.check.passed);
            std::size_t nonzero = 0, cls = 0;
            for (const auto& p : sup.parts)
                if (p.rep.dimension > 0) {
                    ++nonzero;
                    cls = p.cls;
                }
            REQUIRE(nonzero == 1);
            const auto pi = restrict_to_class(t, bp, cls, blk.rep);
            CHECK(check_representation(class_algebra(bp, f.group, cls), pi).passed);
            const auto back = induce(t, bp, cls, pi);
            CHECK(back.dimension == blk.dimension);
            CHECK(characters_equal(character(back), blk.character));
        }
    }
}

TEST_CASE("support decomposition") {
    TubeAlgebra t(fx::s3(), Cocycle3::trivial(6));
    const auto bp = block_presentation(t);
    auto ca0 = class_algebra(bp, fx::s3(), 0), ca2 = class_algebra(bp, fx::s3(), 2);
    const auto i0 = induce(t, bp, 0, regular_representation(ca0));
    const auto i2 = induce(t, bp, 2, regular_representation(ca2));

    auto s0 = support_decompose(t, bp, i0);
    CHECK(s0.check.passed);
    CHECK(s0.parts[0].rep.dimension == i0.dimension);
    CHECK(s0.parts[1].rep.dimension == 0);
    CHECK(s0.parts[2].rep.dimension == 0);

    const auto sum = direct_sum(i0, i2);
    CHECK(check_representation(t, sum).passed);
    auto s = support_decompose(t, bp, sum);
    CHECK(s.check.passed);
    CHECK(s.parts[0].rep.dimension == i0.dimension);
    CHECK(s.parts[1].rep.dimension == 0);
    CHECK(s.parts[2].rep.dimension == i2.dimension);
    CHECK(check_representation(t, s.parts[2].rep).passed);
    CHECK(characters_equal(character(s.parts[2].rep), character(i2)));

    Representation zero;
    zero.matrices.assign(t.dimension(), SMatrix(0, 0));
    auto sz = support_decompose(t, bp, zero);
    CHECK(sz.check.passed);
    for (const auto& p : sz.parts) CHECK(p.rep.dimension == 0);
}
