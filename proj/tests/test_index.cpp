#include "semisym/index.hpp"

#include "semisym/character.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace semisym;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

PermutationGroup c3() { return PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)}); }

// Brute-force orbit minimum and transporter, independent of classify.
MultiIndex orbit_min(const PermutationGroup& w, const MultiIndex& i) {
    MultiIndex best = i;
    for (const Permutation& s : w.elements()) best = std::min(best, act(s, i));
    return best;
}

}  // namespace

TEST_CASE("place permutation action") {
    // (s.i)_k = i_{s^{-1}(k)}: the value in place t moves to place s(t).
    MultiIndex i(9, {5, 7, 9});
    Permutation s = parse_permutation("(1 2 3)", 3);
    CHECK(act(s, i) == MultiIndex(9, {9, 5, 7}));
    CHECK(act(s.inverse(), act(s, i)) == i);
    CHECK(act(Permutation::identity(3), i) == i);

    PermutationGroup s3 = PermutationGroup::symmetric(3);
    for (const Permutation& a : s3.elements())
        for (const Permutation& b : s3.elements())
            CHECK(act(compose(a, b), i) == act(a, act(b, i)));

    CHECK_THROWS_AS(MultiIndex(2, {1, 3}), error);
    CHECK_THROWS_AS(act(s, MultiIndex(9, {1, 2})), error);
}

TEST_CASE("stabilizers") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    CHECK(stabilizer(s3, MultiIndex(2, {1, 1, 2})).order() == 2);
    CHECK(stabilizer(s3, MultiIndex(3, {1, 2, 3})).order() == 1);
    CHECK(stabilizer(s3, MultiIndex(1, {1, 1, 1})).order() == 6);
    CHECK(stabilizer(c3(), MultiIndex(2, {1, 1, 2})).order() == 1);
}

TEST_CASE("classification against brute force") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    Character triv = Character::trivial(s3, kQ);
    Character sgn = Character::sign(s3, kQ);

    CanonicalIndex c = classify(s3, triv, MultiIndex(3, {2, 1, 1}));
    CHECK_FALSE(c.zero);
    CHECK(c.rep == MultiIndex(3, {1, 1, 2}));
    CHECK(c.coeff.is_one());

    // A repeated entry has a transposition in its stabilizer, which the sign
    // character does not kill.
    CHECK(classify(s3, sgn, MultiIndex(3, {1, 1, 2})).zero);

    CanonicalIndex e = classify(s3, sgn, MultiIndex(3, {2, 1, 3}));
    CHECK_FALSE(e.zero);
    CHECK(e.rep == MultiIndex(3, {1, 2, 3}));
    CHECK(e.coeff == RingElement::from_int(-1, kQ));

    // rep is always the orbit minimum, and coeff transports the index onto
    // it: coeff(tau.i) = coeff(i) * chi(tau)^{-1}.
    for (const MultiIndex& i :
         {MultiIndex(3, {3, 2, 1}), MultiIndex(3, {2, 3, 2}), MultiIndex(3, {1, 3, 2})}) {
        CanonicalIndex k = classify(s3, sgn, i);
        if (!k.zero) CHECK(k.rep == orbit_min(s3, i));
        for (const Permutation& tau : s3.elements()) {
            CanonicalIndex kt = classify(s3, sgn, act(tau, i));
            CHECK(kt.zero == k.zero);
            if (!k.zero) CHECK(kt.coeff * sgn.value(tau) == k.coeff);
        }
    }
}

TEST_CASE("classification with a cube root of unity over F7") {
    RingDescriptor f7 = RingDescriptor::modular(7);
    Character chi = Character::from_generators(c3(), {RingElement::from_int(2, f7)});

    // (2,1,1) = (1 2 3).(1,1,2), so the transporter back is (1 3 2).
    CanonicalIndex c = classify(c3(), chi, MultiIndex(2, {2, 1, 1}));
    CHECK_FALSE(c.zero);
    CHECK(c.rep == MultiIndex(2, {1, 1, 2}));
    CHECK(c.coeff == RingElement::from_int(4, f7));

    CanonicalIndex d = classify(c3(), chi, MultiIndex(2, {1, 2, 1}));
    CHECK(d.coeff == RingElement::from_int(2, f7));

    // Constant words have the full group as stabilizer; chi is nontrivial on
    // it, so they die.
    CHECK(classify(c3(), chi, MultiIndex(2, {1, 1, 1})).zero);
    CHECK(classify(c3(), chi, MultiIndex(2, {2, 2, 2})).zero);
}

TEST_CASE("canonical index enumeration") {
    PermutationGroup s2 = PermutationGroup::symmetric(2);
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    CHECK(enum_J(PermutationGroup::trivial(2), Character::trivial(PermutationGroup::trivial(2), kQ), 3, 2).size() == 9);
    CHECK(enum_J(s2, Character::trivial(s2, kQ), 3, 2).size() == 6);
    CHECK(enum_J(s2, Character::sign(s2, kQ), 3, 2).size() == 3);
    CHECK(enum_J(s3, Character::sign(s3, kQ), 4, 3).size() == 4);
    CHECK(enum_J(s3, Character::sign(s3, kQ), 2, 3).empty());

    RingDescriptor f7 = RingDescriptor::modular(7);
    Character chi = Character::from_generators(c3(), {RingElement::from_int(2, f7)});
    std::vector<MultiIndex> j = enum_J(c3(), chi, 2, 3);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == MultiIndex(2, {1, 1, 2}));
    CHECK(j[1] == MultiIndex(2, {1, 2, 2}));

    CHECK(std::is_sorted(j.begin(), j.end()));
    CHECK_THROWS_AS(enum_J(PermutationGroup::trivial(2),
                           Character::trivial(PermutationGroup::trivial(2), kQ), 1000, 2, 100),
                    error);
}

TEST_CASE("composition representatives") {
    CharacterSequence sym = CharacterSequence::builtin(BuiltinKind::symmetric, kQ, 4);
    CompositionRepSet m = composition_reps(sym, 4, {2, 2});
    CHECK(m.reps.size() == 6);
    CHECK(m.block_group.order() == 4);
    CHECK(m.reps.front().is_identity());
    CHECK(std::is_sorted(m.reps.begin(), m.reps.end()));

    // Each representative is the lex minimum of its coset, and the cosets
    // partition the ambient group.
    std::set<Permutation> covered;
    for (const Permutation& r : m.reps)
        for (const Permutation& x : m.block_group.elements()) {
            Permutation g = compose(r, x);
            CHECK(r <= g);
            CHECK(covered.insert(g).second);
        }
    CHECK(covered.size() == m.ambient.order());

    // Zero parts collapse to the same coset space.
    CHECK(composition_reps(sym, 2, {0, 2}).reps.size() == 1);
    CHECK(composition_reps(sym, 2, {2, 0}).reps.size() == 1);
    CHECK(composition_reps(sym, 3, {1, 0, 2}).reps.size() ==
          composition_reps(sym, 3, {1, 2}).reps.size());
    CHECK(composition_reps(sym, 0, {0, 0}).reps.size() == 1);
    CHECK_THROWS_AS(composition_reps(sym, 3, {1, 1}), error);
}

TEST_CASE("representative blocks and independent tuple enumeration") {
    CharacterSequence sym = CharacterSequence::builtin(BuiltinKind::symmetric, kQ, 3);
    CompositionRepSet m = composition_reps(sym, 3, {1, 2});
    std::vector<std::vector<MultiIndex>> blocks = rep_blocks(m);
    REQUIRE(blocks.size() == m.reps.size());
    for (const auto& tuple : blocks) {
        REQUIRE(tuple.size() == 2);
        CHECK(tuple[0].degree() == 1);
        CHECK(tuple[1].degree() == 2);
    }

    std::vector<std::vector<MultiIndex>> tuples = enum_J_composition(sym, 3, {1, 2});
    CHECK(tuples.size() == m.reps.size());

    CharacterSequence ext = CharacterSequence::builtin(BuiltinKind::exterior, kQ, 4);
    CHECK(enum_J_composition(ext, 4, {2, 2}).size() ==
          composition_reps(ext, 4, {2, 2}).reps.size());
    CHECK(enum_J_composition(ext, 4, {1, 3}).size() == 4);
}

TEST_CASE("dot action factors through the block subgroup") {
    CharacterSequence ext = CharacterSequence::builtin(BuiltinKind::exterior, kQ, 4);
    CompositionRepSet m = composition_reps(ext, 4, {2, 2});
    for (const Permutation& zp : m.ambient.elements())
        for (const Permutation& z : m.reps) {
            DotAction a = dot_action(zp, z, m);
            CHECK(std::binary_search(m.reps.begin(), m.reps.end(), a.rep));
            CHECK(m.block_group.contains(a.factor));
            CHECK(compose(zp, z) == compose(a.rep, a.factor));
            REQUIRE(a.block_factors.size() == m.parts.size());
            for (std::size_t b = 0; b < a.block_factors.size(); ++b)
                CHECK(a.block_factors[b].degree() == m.parts[b]);
        }
}

TEST_CASE("coset factorization bijections") {
    CharacterSequence sym = CharacterSequence::builtin(BuiltinKind::symmetric, kQ, 4);
    CharacterSequence ext = CharacterSequence::builtin(BuiltinKind::exterior, kQ, 4);
    CHECK(factorization_bijection_check(sym, 4, 2, 2, {1, 1}));
    CHECK(factorization_bijection_check(sym, 4, 3, 1, {1, 2}));
    CHECK(factorization_bijection_check(ext, 4, 2, 2, {1, 1}));
    CHECK(factorization_bijection_check(ext, 3, 2, 1, {1, 1}));
}
