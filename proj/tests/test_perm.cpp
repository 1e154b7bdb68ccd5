#include "semisym/perm.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace semisym;

TEST_CASE("one-line basics") {
    Permutation p({2, 3, 1});
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(p(3) == 1);
    CHECK(p.inverse() == Permutation({3, 1, 2}));
    CHECK(p.sign() == 1);
    CHECK(Permutation({2, 1, 3}).sign() == -1);
    CHECK(Permutation::identity(4).is_identity());
    CHECK(p.padded(5) == Permutation({2, 3, 1, 4, 5}));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), error);
    CHECK_THROWS_AS(Permutation({0, 1}), error);
}

TEST_CASE("composition applies the right factor first") {
    PermutationGroup s4 = PermutationGroup::symmetric(4);
    for (const Permutation& a : s4.elements())
        for (const Permutation& b : s4.elements()) {
            Permutation c = compose(a, b);
            for (int x = 1; x <= 4; ++x) CHECK(c(x) == a(b(x)));
        }
    for (const Permutation& a : s4.elements()) {
        CHECK(compose(a, a.inverse()).is_identity());
        CHECK(a.sign() * a.sign() == 1);
        CHECK(compose(a, a).sign() == 1);
    }
}

TEST_CASE("cycle notation parsing") {
    CHECK(parse_permutation("(1 2)(3 4)", 4) == Permutation({2, 1, 4, 3}));
    CHECK(parse_permutation("[2,1,4,3]", 4) == Permutation({2, 1, 4, 3}));
    CHECK(parse_permutation("()", 3).is_identity());
    CHECK(parse_permutation("(1 2 3)", 3) == Permutation({2, 3, 1}));
    CHECK_THROWS_AS(parse_permutation("(1 5)", 4), error);
    CHECK_THROWS_AS(parse_permutation("(1 1)", 4), error);
    PermutationGroup s4 = PermutationGroup::symmetric(4);
    for (const Permutation& p : s4.elements())
        CHECK(parse_permutation(cycle_string(p), 4) == p);
}

TEST_CASE("omega shifts a permutation one place up") {
    // omega(s) fixes 1 and maps i+1 to s(i)+1.
    CHECK(omega(Permutation({2, 1})) == Permutation({1, 3, 2}));
    CHECK(omega_power(Permutation({2, 1}), 2) == Permutation({1, 2, 4, 3}));
    CHECK(omega_shift(Permutation({2, 1}), 5) == Permutation({1, 2, 3, 5, 4}));
    Permutation s({3, 1, 2});
    Permutation t = omega(s);
    CHECK(t.degree() == 4);
    CHECK(t(1) == 1);
    for (int i = 1; i <= 3; ++i) CHECK(t(i + 1) == s(i) + 1);
    CHECK(t.sign() == s.sign());
}

TEST_CASE("group construction") {
    CHECK(PermutationGroup::trivial(3).order() == 1);
    CHECK(PermutationGroup::symmetric(4).order() == 24);

    PermutationGroup c3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    CHECK(c3.order() == 3);
    CHECK(c3.contains(parse_permutation("(1 3 2)", 3)));
    CHECK_FALSE(c3.contains(parse_permutation("(1 2)", 3)));

    PermutationGroup klein = PermutationGroup::closure(
        4, {parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)});
    CHECK(klein.order() == 4);
    CHECK(klein.contains(parse_permutation("(1 4)(2 3)", 4)));

    CHECK_THROWS_AS(PermutationGroup::symmetric(6, 100), error);
    CHECK_THROWS_AS(
        PermutationGroup::closure(6, {parse_permutation("(1 2 3 4 5 6)", 6),
                                      parse_permutation("(1 2)", 6)},
                                  100),
        error);

    PermutationGroup two = PermutationGroup::from_elements(
        2, {Permutation::identity(2), Permutation({2, 1})});
    CHECK(two.order() == 2);
    CHECK_THROWS_AS(PermutationGroup::from_elements(2, {Permutation({2, 1})}), error);
}

TEST_CASE("membership helpers") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    PermutationGroup c3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    CHECK(c3.is_subgroup_of(s3));
    CHECK_FALSE(s3.is_subgroup_of(c3));
    for (std::size_t i = 0; i < s3.order(); ++i)
        CHECK(s3.position_of(s3.elements()[i]) == i);
    CHECK_THROWS_AS(c3.position_of(parse_permutation("(1 2)", 3)), error);
}

TEST_CASE("left coset representatives are lex-minimal and cover") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    PermutationGroup a3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    std::vector<Permutation> reps = left_coset_reps(s3, a3);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].is_identity());
    CHECK(std::is_sorted(reps.begin(), reps.end()));

    // Every group element lies in exactly one coset rep * H, and each rep is
    // the lex minimum of its coset.
    std::set<Permutation> seen;
    for (const Permutation& r : reps)
        for (const Permutation& h : a3.elements()) {
            Permutation g = compose(r, h);
            CHECK(r <= g);
            CHECK(seen.insert(g).second);
        }
    CHECK(seen.size() == s3.order());
}

TEST_CASE("young products place factors at offsets") {
    PermutationGroup s2 = PermutationGroup::symmetric(2);
    PermutationGroup x = young_product(4, {{s2, 0}, {s2, 2}});
    CHECK(x.degree() == 4);
    CHECK(x.order() == 4);
    CHECK(x.contains(parse_permutation("(1 2)(3 4)", 4)));
    CHECK_FALSE(x.contains(parse_permutation("(2 3)", 4)));
    CHECK_THROWS_AS(young_product(3, {{s2, 0}, {s2, 1}}), error);

    PermutationGroup s3 = PermutationGroup::symmetric(3);
    CHECK(young_product(5, {{s3, 0}, {s2, 3}}).order() == 12);
    CHECK(young_product(5, {{s3, 2}}).contains(parse_permutation("(3 4 5)", 5)));
}
