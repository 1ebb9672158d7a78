#include "doctest.h"
#include "fixtures.hpp"

using namespace tubealg;

namespace {

// Brute-force conjugacy oracle: h ~ g iff some x has x g x^-1 = h.
bool conjugate_brute(const GroupTable& g, Elem a, Elem b) {
    for (Elem x = 0; x < g.order(); ++x)
        if (g.mul(g.mul(x, a), g.inv(x)) == b) return true;
    return false;
}

std::size_t element_order(const GroupTable& g, Elem a) {
    std::size_t k = 1;
    for (Elem p = a; p != 0; p = g.mul(p, a)) ++k;
    return k;
}

}  // namespace

TEST_CASE("table ingestion") {
    auto t = GroupTable::from_table({{0}});
    CHECK(t.order() == 1);

    auto z4 = GroupTable::from_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
    CHECK(z4.inv(1) == 3);
    CHECK(z4.inv(2) == 2);

    auto bad = GroupTable::validate({{0, 1}, {1, 1}});
    CHECK_FALSE(bad.passed);
    CHECK(bad.relation == "inverse");
    CHECK(bad.witness == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(GroupTable::from_table({{0, 1}, {1, 1}}), InputError);

    // 0 is not an identity here
    CHECK_FALSE(GroupTable::validate({{1, 0}, {0, 1}}).passed);
    CHECK_FALSE(GroupTable::validate({{0, 1}, {1, 2}}).passed);
}

TEST_CASE("non-associative table is caught with a triple") {
    // Latin square with identity 0 and inverses, but not associative.
    std::vector<std::vector<Elem>> m = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    auto r = GroupTable::validate(m);
    REQUIRE_FALSE(r.passed);
    CHECK(r.relation == "associativity");
    REQUIRE(r.witness.size() == 3);
    const auto a = r.witness[0], b = r.witness[1], c = r.witness[2];
    CHECK(m[m[a][b]][c] != m[a][m[b][c]]);
}

TEST_CASE("permutation closure") {
    auto s3 = fx::s3();
    CHECK(s3.order() == 6);
    CHECK(group_from_permutations(3, {}).order() == 1);
    CHECK(group_from_permutations(3, {{1, 0, 2}}).order() == 2);
    CHECK(fx::s4().order() == 24);
    CHECK_THROWS_AS(group_from_permutations(8, {{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}, 1000),
                    InputError);
    // BFS order: generators land at 1 and 2
    CHECK((*s3.permutations())[1] == Permutation{1, 0, 2});
    CHECK((*s3.permutations())[2] == Permutation{1, 2, 0});
}

TEST_CASE("conjugacy data of S3") {
    auto g = fx::s3();
    auto cd = conjugacy_data(g);
    REQUIRE(cd.class_count() == 3);
    std::vector<std::size_t> sizes, cents;
    for (std::size_t c = 0; c < 3; ++c) {
        sizes.push_back(cd.classes[c].size());
        cents.push_back(cd.centralizers[c].size());
    }
    CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
    CHECK(cents == std::vector<std::size_t>{6, 2, 3});
}

TEST_CASE("conjugacy invariants over fixtures") {
    for (const auto& f : fx::all_fixtures()) {
        CAPTURE(f.name);
        const auto& g = f.group;
        auto cd = conjugacy_data(g);
        std::size_t total = 0;
        for (std::size_t c = 0; c < cd.class_count(); ++c) {
            total += cd.classes[c].size();
            CHECK(cd.classes[c].size() * cd.centralizers[c].size() == g.order());
            CHECK(cd.rep[c] == cd.classes[c].front());
            CHECK(cd.transport[cd.rep[c]] == 0);
            for (Elem s = 0; s < g.order(); ++s) {
                const bool fixes = g.conj(s, cd.rep[c]) == cd.rep[c];
                CHECK(fixes == std::binary_search(cd.centralizers[c].begin(), cd.centralizers[c].end(), s));
            }
        }
        CHECK(total == g.order());
        for (Elem a = 0; a < g.order(); ++a) {
            const auto c = cd.class_of[a];
            CHECK(g.conj(cd.transport[a], cd.rep[c]) == a);
            // w_g is the first conjugator in index order
            for (Elem x = 0; x < cd.transport[a]; ++x) CHECK(g.conj(x, cd.rep[c]) != a);
            for (Elem b = 0; b < g.order(); ++b)
                CHECK((cd.class_of[a] == cd.class_of[b]) == conjugate_brute(g, a, b));
        }
        CHECK(conjugacy_data(g) == cd);
        if (g.is_abelian()) {
            for (auto& c : cd.classes) CHECK(c.size() == 1);
            for (Elem a = 0; a < g.order(); ++a) CHECK(cd.transport[a] == 0);
        }
    }
    auto z2 = conjugacy_data(fx::z(2));
    CHECK(z2.classes == std::vector<std::vector<Elem>>{{0}, {1}});
}

TEST_CASE("closure and centralizer") {
    auto g = fx::s3();
    const Elem t = fx::find_perm(g, {1, 0, 2});
    const Elem r = fx::find_perm(g, {1, 2, 0});
    CHECK(subgroup_closure(g, std::vector<Elem>{t, r}).size() == 6);
    CHECK(subgroup_closure(g, std::vector<Elem>{0}) == std::vector<Elem>{0});
    CHECK(subgroup_closure(fx::z(4), std::vector<Elem>{1}).size() == 4);
    CHECK(centralizer(g, 0).size() == 6);
    CHECK(centralizer(g, t) == std::vector<Elem>{0, t});
    for (Elem a = 0; a < 4; ++a) CHECK(centralizer(fx::z(4), a).size() == 4);
    CHECK(is_subgroup(g, std::vector<Elem>{0, t}));
    CHECK_FALSE(is_subgroup(g, std::vector<Elem>{0, r}));
}

TEST_CASE("direct products") {
    auto v4 = fx::v4();
    CHECK(v4.order() == 4);
    for (Elem a = 0; a < 4; ++a) CHECK(v4.inv(a) == a);
    CHECK(direct_product(fx::z(1), fx::s3()) == fx::s3());
    // Z2 x Z3 is cyclic: some element has order 6
    auto z6 = direct_product(fx::z(2), fx::z(3));
    std::size_t best = 0;
    for (Elem a = 0; a < 6; ++a) best = std::max(best, element_order(z6, a));
    CHECK(best == 6);
}
