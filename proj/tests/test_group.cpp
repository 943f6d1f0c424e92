#include "doctest.h"

#include <stdexcept>

#include <set>

#include "zmom/group.hpp"

using namespace zmom;

namespace {

bool exhaustively_associative(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
}

std::multiset<size_t> class_sizes(const FiniteGroup& g) {
    std::multiset<size_t> sizes;
    for (const auto& c : conjugacy_classes(g).classes) sizes.insert(c.size());
    return sizes;
}

} // namespace

TEST_CASE("C3 x| C2 with inversion is S3") {
    Preset p = preset("dihedral:3");
    const FiniteGroup& g = p.pres.G;
    CHECK(g.order == 6);
    CHECK(exhaustively_associative(g));
    CHECK_FALSE(g.is_abelian());
    CHECK(class_sizes(g) == std::multiset<size_t>{1, 2, 3});
}

TEST_CASE("C4 x| C2 with inversion is dihedral of order 8") {
    Preset p = preset("dihedral:4");
    const FiniteGroup& g = p.pres.G;
    CHECK(g.order == 8);
    CHECK(exhaustively_associative(g));
    // every element with a nontrivial H part is an involution
    for (int n = 0; n < 4; ++n) CHECK(g.element_order(n * 2 + 1) == 2);
    CHECK(class_sizes(g) == std::multiset<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("trivial H gives G isomorphic to N") {
    Preset p = preset("galois:cyclic:5");
    CHECK(p.pres.G.order == 5);
    CHECK(p.pres.G.table == p.pres.N.table);
}

TEST_CASE("a4 preset is V4 x| C3 with class sizes 1,3,4,4") {
    Preset p = preset("a4");
    const FiniteGroup& g = p.pres.G;
    CHECK(g.order == 12);
    CHECK(exhaustively_associative(g));
    CHECK(class_sizes(g) == std::multiset<size_t>{1, 3, 4, 4});
}

TEST_CASE("build_semidirect rejects a non-homomorphic phi") {
    FiniteGroup n = FiniteGroup::cyclic(4);
    FiniteGroup h = FiniteGroup::cyclic(2);
    Action bogus;
    bogus.map = {{0, 1, 2, 3}, {0, 2, 1, 3}}; // swaps n and n^2: not an automorphism
    CHECK_THROWS_AS(build_semidirect(n, h, bogus), std::invalid_argument);

    Action not_bijective;
    not_bijective.map = {{0, 1, 2, 3}, {0, 0, 0, 0}};
    CHECK_THROWS_AS(build_semidirect(n, h, not_bijective), std::invalid_argument);
}

TEST_CASE("normality equivalence booleans") {
    SUBCASE("trivial N' in S3") {
        Preset p = preset("dihedral:3");
        SubgroupData np = make_subgroup(p.pres.N, {0});
        auto [c1, c2] = check_normality_equivalence(p.pres, np);
        CHECK(c1);
        CHECK(c2);
    }
    SUBCASE("order-2 subgroup of C4 in D8") {
        Preset p = preset("dihedral:4");
        SubgroupData np = make_subgroup(p.pres.N, {0, 2});
        auto [c1, c2] = check_normality_equivalence(p.pres, np);
        CHECK(c1);
        CHECK(c2);
    }
    SUBCASE("order-2 subgroup of V4 in A4 fails both") {
        Preset p = preset("a4");
        const auto& choice = find_nprime(p, "order2");
        SubgroupData np = make_subgroup(p.pres.N, choice.members);
        auto [c1, c2] = check_normality_equivalence(p.pres, np);
        CHECK_FALSE(c1);
        CHECK_FALSE(c2);
    }
}

TEST_CASE("fixed subgroups of the quotient action") {
    SUBCASE("inversion on C3 fixes only e") {
        Preset p = preset("dihedral:3");
        SubgroupData np = make_subgroup(p.pres.N, {0});
        Quotient nq = make_quotient(p.pres.N, np);
        CHECK(fixed_subgroup(p.pres, np, nq, 1).size() == 1);
    }
    SUBCASE("inversion on C4 fixes e and n^2") {
        Preset p = preset("dihedral:4");
        SubgroupData np = make_subgroup(p.pres.N, {0});
        Quotient nq = make_quotient(p.pres.N, np);
        SubgroupData fixed = fixed_subgroup(p.pres, np, nq, 1);
        CHECK(fixed.members == std::vector<uint16_t>{0, 2});
    }
    SUBCASE("A4: non-identity rotations fix only e in V4") {
        Preset p = preset("a4");
        SubgroupData np = make_subgroup(p.pres.N, {0});
        Quotient nq = make_quotient(p.pres.N, np);
        CHECK(fixed_subgroup(p.pres, np, nq, 1).size() == 1);
        CHECK(fixed_subgroup(p.pres, np, nq, 2).size() == 1);
    }
    SUBCASE("h = e_H is rejected") {
        Preset p = preset("dihedral:3");
        SubgroupData np = make_subgroup(p.pres.N, {0});
        Quotient nq = make_quotient(p.pres.N, np);
        CHECK_THROWS_AS(fixed_subgroup(p.pres, np, nq, p.pres.H.identity),
                        std::invalid_argument);
    }
}

TEST_CASE("coset actions") {
    SUBCASE("S3 on cosets of C2: 3-cycles stay 3-cycles") {
        Preset p = preset("dihedral:3");
        std::vector<uint16_t> c2 = {uint16_t(p.pres.embed_h(0)), uint16_t(p.pres.embed_h(1))};
        CosetAction act = coset_action(p.pres.G, make_subgroup(p.pres.G, c2));
        CHECK(act.num_cosets == 3);
        int three_cycle = p.pres.embed_n(1);
        CHECK(act.cycle_type(three_cycle) == std::vector<int>{3});
    }
    SUBCASE("D8 on cosets of a reflection: the rotation is a 4-cycle") {
        Preset p = preset("dihedral:4");
        std::vector<uint16_t> refl = {uint16_t(p.pres.G.identity), uint16_t(p.pres.embed_h(1))};
        CosetAction act = coset_action(p.pres.G, make_subgroup(p.pres.G, refl));
        CHECK(act.num_cosets == 4);
        CHECK(act.cycle_type(p.pres.embed_n(1)) == std::vector<int>{4});
    }
    SUBCASE("G' = G gives the trivial one-point action") {
        Preset p = preset("dihedral:4");
        std::vector<uint16_t> all(p.pres.G.order);
        for (int i = 0; i < p.pres.G.order; ++i) all[i] = uint16_t(i);
        CosetAction act = coset_action(p.pres.G, make_subgroup(p.pres.G, all));
        CHECK(act.num_cosets == 1);
        for (int g = 0; g < p.pres.G.order; ++g) CHECK(act.fixed_points(g) == 1);
    }
}

TEST_CASE("group invariants multiply up") {
    for (const char* name : {"dihedral:3", "dihedral:4", "dihedral:5", "a4", "galois:cyclic:4"}) {
        Preset p = preset(name);
        for (const auto& choice : p.nprime_choices) {
            SubgroupData np = make_subgroup(p.pres.N, choice.members);
            GroupInvariants inv = group_invariants(p.pres, np);
            CHECK(inv.n == inv.n_prime * inv.n_dprime * inv.h);
        }
    }
}

TEST_CASE("preset bounds and names") {
    CHECK_THROWS_AS(preset("symmetric:8"), std::invalid_argument); // 40320 > 10^4
    CHECK_THROWS_AS(preset("galois:cyclic:20000"), std::invalid_argument);
    CHECK_THROWS_AS(preset("nosuch"), std::invalid_argument);
    CHECK(preset("symmetric:4").pres.G.order == 24);
}

TEST_CASE("symmetric preset matches the A_n facts") {
    Preset p = preset("symmetric:6");
    CHECK(p.pres.G.order == 720);
    SubgroupData np = make_subgroup(p.pres.N, find_nprime(p, "trivial").members);
    GroupInvariants inv = group_invariants(p.pres, np);
    CHECK(inv.n_dprime == 360);
    // fixed points of conjugation by (1,2): the centralizer in A_6, size (n-2)!
    CHECK(inv.n_h_dprime.size() == 1);
    CHECK(inv.n_h_dprime[0].second == 24);
}

TEST_CASE("custom group file round trip") {
    FiniteGroup g = FiniteGroup::cyclic(3);
    std::string path = "/tmp/zmom_test_group.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f);
        fprintf(f, "3\n");
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) fprintf(f, "%d ", g.mul(a, b));
            fprintf(f, "\n");
        }
        fclose(f);
    }
    FiniteGroup loaded = read_group_table_file(path);
    CHECK(loaded.order == 3);
    CHECK(loaded.table == g.table);
    Preset p = preset_from_group_file(path);
    CHECK(p.pres.G.order == 3);
}
