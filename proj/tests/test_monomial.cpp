#include "semisym/monomial.hpp"

#include "doctest.h"

#include <random>

using namespace semisym;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

SparseVector rand_sparse(std::size_t size, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<std::size_t> pos(0, size - 1);
    SparseVector z;
    for (int t = 0; t < 3; ++t) z.add(pos(rng), RingElement::from_int(coeff(rng), kQ));
    return z;
}

}  // namespace

TEST_CASE("tensor power module layout") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    MonomialModule m = MonomialModule::tensor_power(s3, kQ, 2, 3);
    CHECK(m.size() == 8);
    REQUIRE(m.labels().size() == 8);
    CHECK(m.labels().front() == MultiIndex(2, {1, 1, 1}));
    CHECK(m.labels().back() == MultiIndex(2, {2, 2, 2}));

    // The module action matches the place action on labels.
    for (const Permutation& s : s3.elements())
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::size_t img = m.apply(s3.position_of(s), i);
            CHECK(m.labels()[img] == act(s, m.labels()[i]));
        }
    CHECK_THROWS_AS(MonomialModule::tensor_power(s3, kQ, 2, 2), error);
}

TEST_CASE("module construction validates the axioms") {
    PermutationGroup s2 = PermutationGroup::symmetric(2);
    auto ok_action = [&](const Permutation& s, std::size_t i) {
        return s.is_identity() ? i : 1 - i;
    };
    auto one = [&](std::size_t, const Permutation&) { return RingElement::one(kQ); };
    CHECK_NOTHROW(MonomialModule(s2, kQ, 2, ok_action, one));

    // Identity must act trivially.
    auto bad_action = [](const Permutation&, std::size_t) { return std::size_t{0}; };
    CHECK_THROWS_AS(MonomialModule(s2, kQ, 2, bad_action, one), error);

    // gamma must satisfy the cocycle law; a constant 2 off the identity
    // breaks it at s t = id.
    auto bad_gamma = [&](std::size_t, const Permutation& s) {
        return s.is_identity() ? RingElement::one(kQ) : RingElement::from_int(2, kQ);
    };
    CHECK_THROWS_AS(MonomialModule(s2, kQ, 2, ok_action, bad_gamma), error);

    // gamma values must be units.
    auto zero_gamma = [&](std::size_t, const Permutation& s) {
        return s.is_identity() ? RingElement::one(kQ) : RingElement::zero(kQ);
    };
    CHECK_THROWS_AS(MonomialModule(PermutationGroup::symmetric(2), RingDescriptor::integer(), 2,
                                   ok_action,
                                   [&](std::size_t, const Permutation& s) {
                                       return s.is_identity()
                                                  ? RingElement::one(RingDescriptor::integer())
                                                  : RingElement::from_int(2,
                                                                          RingDescriptor::integer());
                                   }),
                    not_a_unit);
    CHECK_THROWS_AS(MonomialModule(s2, kQ, 2, ok_action, zero_gamma), not_a_unit);
}

TEST_CASE("averaging lands in the semi-invariants and is idempotent") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    MonomialModule m = MonomialModule::tensor_power(s3, kQ, 2, 3);
    std::mt19937 rng(3);
    for (const Character& chi : {Character::trivial(s3, kQ), Character::sign(s3, kQ)}) {
        for (int t = 0; t < 20; ++t) {
            SparseVector z = rand_sparse(m.size(), rng);
            SparseVector p = a_chi(m, chi, z);
            CHECK(a_chi(m, chi, p) == p);
            // s p = chi(s) p for every s.
            for (const Permutation& s : s3.elements())
                CHECK(m.act(s, p) == scale(chi.value(s), p));
        }
    }
}

TEST_CASE("unnormalized averaging differs by the group order") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    MonomialModule m = MonomialModule::tensor_power(s3, kQ, 2, 3);
    Character sgn = Character::sign(s3, kQ);
    std::mt19937 rng(5);
    SparseVector z = rand_sparse(m.size(), rng);
    CHECK(A_chi_unnormalized(m, sgn.inverted(), z) ==
          scale(RingElement::from_int(6, kQ), a_chi(m, sgn, z)));
}

TEST_CASE("index classification for the sign character, n = 2, d = 3") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    MonomialModule m = MonomialModule::tensor_power(s3, kQ, 2, 3);
    IndexClassification cls = classify_indices(m, Character::sign(s3, kQ));
    // Every word of length 3 over two letters repeats a letter, so no index
    // survives the sign character.
    CHECK(cls.orbit_reps.size() == 4);
    CHECK(cls.j_set.empty());
    CHECK(cls.j0_set.size() == 4);
    CHECK(cls.in_kernel.empty());
    CHECK(cls.outside.size() == 8);

    IndexClassification triv = classify_indices(m, Character::trivial(s3, kQ));
    CHECK(triv.j_set.size() == 4);
    CHECK(triv.j0_set.empty());
}

TEST_CASE("fixed, relation and quotient bases") {
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    MonomialModule m = MonomialModule::tensor_power(s3, kQ, 2, 3);
    Character triv = Character::trivial(s3, kQ);
    SubmoduleBases bases = submodule_bases(m, triv);

    CHECK(bases.fixed_basis.size() == 4);
    CHECK(bases.quotient_basis.size() == 4);
    // One difference per non-minimal orbit member: 8 - 4 orbits = 4.
    CHECK(bases.relation_basis.size() == 4);

    // Relation members average to zero, fixed members are semi-invariant.
    for (const SparseVector& v : bases.relation_basis) CHECK(a_chi(m, triv, v).is_zero());
    for (const SparseVector& v : bases.fixed_basis) CHECK(a_chi(m, triv, v) == v);

    Character sgn = Character::sign(s3, kQ);
    SubmoduleBases sbases = submodule_bases(m, sgn);
    CHECK(sbases.fixed_basis.empty());
    // 4 differences plus the 4 orbit minima lying outside the kernel set.
    CHECK(sbases.relation_basis.size() == 8);
    for (const SparseVector& v : sbases.relation_basis) CHECK(a_chi(m, sgn, v).is_zero());

    MonomialModule zmod = MonomialModule::tensor_power(s3, RingDescriptor::integer(), 2, 3);
    CHECK_THROWS_AS(submodule_bases(zmod, Character::trivial(s3, RingDescriptor::integer())),
                    hypothesis_error);
}
