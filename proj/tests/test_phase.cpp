#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace tubealg;

TEST_CASE("phase arithmetic") {
    CHECK(Phase(1, 2) * Phase(1, 2) == Phase::one());
    CHECK(Phase(1, 3).inv() == Phase(2, 3));
    CHECK(Phase(1, 4).pow(3) == Phase(3, 4));
    CHECK(Phase(-1, 4) == Phase(3, 4));
    CHECK(Phase(6, 4) == Phase(1, 2));
    CHECK(Phase(1, 6) * Phase(1, 4) == Phase(5, 12));
    CHECK(Phase(1, 2).to_complex() == std::complex<double>(-1, 0));
    CHECK(Phase(1, 4).to_complex() == std::complex<double>(0, 1));
    CHECK(Phase::parse("3/8") == Phase(3, 8));
    CHECK(Phase(3, 8).str() == "3/8");
    CHECK(Phase().str() == "0");
    CHECK_THROWS(Phase(1, 0));
    CHECK_THROWS(Phase::parse("x/2"));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
    for (int i = 0; i < 2000; ++i) {
        Phase p(num(rng), den(rng)), q(num(rng), den(rng)), r(num(rng), den(rng));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * p.inv() == Phase::one());
        CHECK(p * q == q * p);
    }
}

namespace {

Cocycle3 perturbed_z2() {
    auto w = Cocycle3::trivial(2);
    w(1, 1, 0) = Phase::minus_one();
    return w;
}

Cochain2 random_cochain(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> k(0, 11);
    auto phi = Cochain2::trivial(n);
    for (auto& v : phi.values) v = Phase(k(rng), 12);
    return phi;
}

}  // namespace

TEST_CASE("3-cocycle law") {
    CHECK(cocycle3_check(fx::z(5), Cocycle3::trivial(5)).passed);
    CHECK(cocycle3_check(fx::z(2), fx::semion()).passed);
    auto r = cocycle3_check(fx::z(2), perturbed_z2());
    REQUIRE_FALSE(r.passed);
    CHECK(r.relation == "3-cocycle");
    CHECK(r.witness.size() == 4);
    CHECK(cocycle3_check(fx::z(4), standard_cyclic_cocycle(4, 1)).cases == 256);
    CHECK(cocycle3_check(fx::v4(), product_type_cocycle()).passed);
    CHECK(cocycle3_check(fx::s3(), fx::inflate_parity(fx::s3())).passed);
    CHECK_FALSE(cocycle3_check(fx::z(3), Cocycle3::trivial(2)).passed);

    // only omega(1,1,1) is nontrivial for the semion
    auto s = fx::semion();
    for (Elem a = 0; a < 2; ++a)
        for (Elem b = 0; b < 2; ++b)
            for (Elem c = 0; c < 2; ++c)
                CHECK(s(a, b, c) == ((a & b & c) ? Phase::minus_one() : Phase::one()));
    CHECK(standard_cyclic_cocycle(3, 0).is_trivial());
}

TEST_CASE("2-cocycle law") {
    auto z2 = fx::z(2);
    CHECK(cocycle2_check(z2, Cocycle2(2, {0, 1})).passed);
    Cocycle2 phi(2, {0, 1});
    phi(1, 1) = Phase::minus_one();
    CHECK(cocycle2_check(z2, phi).passed);
    Cocycle2 bad(2, {0, 1});
    bad(1, 0) = Phase::minus_one();
    CHECK_FALSE(cocycle2_check(z2, bad).passed);
}

TEST_CASE("coboundaries") {
    auto z2 = fx::z(2);
    CHECK(coboundary1(z2, Cochain1::trivial(2)).is_trivial());
    CHECK(coboundary2(z2, Cochain2::trivial(2)).is_trivial());
    Cochain1 g{{Phase(), Phase(1, 4)}};
    CHECK(coboundary1(z2, g)(1, 1) == Phase::minus_one());

    std::mt19937_64 rng(11);
    for (auto grp : {fx::z(4), fx::s3(), fx::v4(), dihedral_group(4)}) {
        const auto n = grp.order();
        for (int rep = 0; rep < 3; ++rep) {
            auto phi = random_cochain(n, rng);
            CHECK(cocycle3_check(grp, coboundary2(grp, phi)).passed);
            Cochain1 gam = Cochain1::trivial(n);
            for (auto& v : gam.values) v = Phase(static_cast<std::int64_t>(rng() % 8), 8);
            CHECK(coboundary2(grp, coboundary1(grp, gam)).is_trivial());
        }
    }
}

TEST_CASE("normalization") {
    CHECK(is_normalized(fx::z(3), Cocycle3::trivial(3)));
    CHECK(is_normalized(fx::z(2), fx::semion()));
    auto w = fx::semion();
    w(0, 1, 1) = Phase(1, 3);
    CHECK_FALSE(is_normalized(fx::z(2), w));

    CHECK(normalize3(fx::z(2), fx::semion()) == fx::semion());
    CHECK_THROWS_AS(normalize3(fx::z(2), perturbed_z2()), InputError);

    // twist good cocycles by random coboundaries, then normalize back
    std::mt19937_64 rng(3);
    for (const auto& f : fx::all_fixtures()) {
        if (f.group.order() > 8) continue;
        CAPTURE(f.name);
        const auto n = f.group.order();
        auto raw = pointwise_product(coboundary2(f.group, random_cochain(n, rng)), f.omega);
        REQUIRE(cocycle3_check(f.group, raw).passed);
        auto out = normalize3(f.group, raw);
        CHECK(is_normalized(f.group, out));
        CHECK(cocycle3_check(f.group, out).passed);
        CHECK(pointwise_quotient(out, raw) == coboundary2(f.group, normalizing_cochain(f.group, raw)));
    }
}

TEST_CASE("fixture generators") {
    auto v4 = fx::v4();
    auto w = product_type_cocycle();
    CHECK(check_trivial_on(v4, w, std::vector<Elem>{0, 2}).passed);
    CHECK(check_trivial_on(v4, w, std::vector<Elem>{0, 1}).passed);
    CHECK(w(2, 1, 1) == Phase::minus_one());
    CHECK(w.modulus() == 2);

    auto s3 = fx::s3();
    CHECK(inflate_cocycle(s3, fx::z(2), Cocycle3::trivial(2), parity_map(s3)).is_trivial());
    std::vector<Elem> id{0, 1, 2, 3};
    CHECK(inflate_cocycle(fx::z(4), fx::z(4), standard_cyclic_cocycle(4, 1), id) ==
          standard_cyclic_cocycle(4, 1));
    std::vector<Elem> not_hom{0, 1, 1, 1};
    CHECK_THROWS_AS(inflate_cocycle(fx::z(4), fx::z(2), fx::semion(), not_hom), InputError);
    std::vector<Elem> not_onto{0, 0, 0, 0};
    CHECK_THROWS_AS(inflate_cocycle(fx::z(4), fx::z(2), fx::semion(), not_onto), InputError);
}
