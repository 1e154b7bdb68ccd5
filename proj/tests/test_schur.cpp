#include "semisym/schur.hpp"

#include "semisym/context.hpp"

#include "doctest.h"

#include <random>

using namespace semisym;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

RingElement q(long long v) { return RingElement::from_int(Int(v), kQ); }

ExactMatrix rand_matrix(int rows, int cols, const RingDescriptor& ring, std::mt19937& rng) {
    std::uniform_int_distribution<long long> val(-9, 9);
    ExactMatrix a(rows, cols, ring);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) a.entry(r, c) = RingElement::from_int(Int(val(rng)), ring);
    return a;
}

}  // namespace

TEST_CASE("exact matrices") {
    ExactMatrix a = ExactMatrix::from_int_rows({{1, 2}, {3, 4}}, kQ);
    CHECK(a.entry(2, 1) == q(3));
    CHECK(a.transposed().entry(1, 2) == q(3));
    CHECK_THROWS_AS(a.entry(0, 1), error);
    CHECK_THROWS_AS(a.entry(1, 3), error);
    CHECK_THROWS_AS(ExactMatrix::from_int_rows({{1, 2}, {3}}, kQ), error);

    ExactMatrix i2 = ExactMatrix::identity(2, kQ);
    CHECK(a * i2 == a);
    CHECK((i2 * a) == a);
    ExactMatrix b = ExactMatrix::from_int_rows({{0, 1}, {1, 0}}, kQ);
    CHECK((a * b) == ExactMatrix::from_int_rows({{2, 1}, {4, 3}}, kQ));
    CHECK_THROWS_AS(a * ExactMatrix(3, 2, kQ), error);
}

TEST_CASE("permanent, determinant and the diagonal degenerate case") {
    ExactMatrix a = ExactMatrix::from_int_rows({{1, 2}, {3, 4}}, kQ);
    PermutationGroup s2 = PermutationGroup::symmetric(2);
    CHECK(schur_direct(a, s2, Character::trivial(s2, kQ)) == q(10));
    CHECK(schur_direct(a, s2, Character::sign(s2, kQ)) == q(-2));

    // The trivial group picks out the diagonal product.
    PermutationGroup t2 = PermutationGroup::trivial(2);
    CHECK(schur_direct(a, t2, Character::trivial(t2, kQ)) == q(4));

    PermutationGroup s3 = PermutationGroup::symmetric(3);
    CHECK(schur_direct(ExactMatrix::identity(3, kQ), s3, Character::sign(s3, kQ)) == q(1));
    ExactMatrix ones = ExactMatrix::from_int_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, kQ);
    CHECK(schur_direct(ones, s3, Character::sign(s3, kQ)).is_zero());
    CHECK(schur_direct(ones, s3, Character::trivial(s3, kQ)) == q(6));

    CHECK_THROWS_AS(schur_direct(ExactMatrix(2, 3, kQ), s2, Character::trivial(s2, kQ)), error);
    CHECK_THROWS_AS(schur_direct(ExactMatrix(3, 3, kQ), s2, Character::trivial(s2, kQ)), error);
}

TEST_CASE("schur value of a cyclic-group character") {
    RingDescriptor f7 = RingDescriptor::modular(7);
    PermutationGroup c3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    Character chi = Character::from_generators(c3, {RingElement::from_int(2, f7)});

    ExactMatrix a = ExactMatrix::from_int_rows({{1, 2, 0}, {0, 1, 3}, {2, 0, 1}}, f7);
    CHECK(schur_direct(a, c3, chi) == RingElement::from_int(4, f7));

    // Summing the character over the group: 1 + 2 + 4 = 0 in F7.
    ExactMatrix ones = ExactMatrix::from_int_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, f7);
    CHECK(schur_direct(ones, c3, chi).is_zero());
    CHECK(schur_direct(ExactMatrix::identity(3, f7), c3, chi).is_one());

    // Independent restatement of the defining sum.
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix m = rand_matrix(3, 3, f7, rng);
        RingElement sum = RingElement::zero(f7);
        for (const Permutation& s : c3.elements()) {
            RingElement prod = chi.value(s);
            Permutation inv = s.inverse();
            for (int col = 1; col <= 3; ++col) prod *= m.entry(inv(col), col);
            sum += prod;
        }
        CHECK(schur_direct(m, c3, chi) == sum);
    }
}

TEST_CASE("row minors") {
    ExactMatrix a = ExactMatrix::from_int_rows({{1, 3}, {2, 4}}, kQ);
    PermutationGroup s2 = PermutationGroup::symmetric(2);
    Character triv = Character::trivial(s2, kQ);
    Character sgn = Character::sign(s2, kQ);
    MultiIndex full(2, {1, 2});

    CHECK(row_minor(a, full, full, s2, triv) == q(10));
    CHECK(row_minor(a, full, full, s2, sgn) == q(-2));
    // A repeated row has stabilizer S2, so only one coset survives.
    CHECK(row_minor(a, MultiIndex(2, {1, 1}), full, s2, triv) == q(3));
    CHECK(row_minor(a, MultiIndex(2, {1, 1}), full, s2, sgn) == q(3));

    CHECK_THROWS_AS(row_minor(a, MultiIndex(2, {1}), full, s2, triv), error);
    CHECK_THROWS_AS(row_minor(a, MultiIndex(3, {3, 1}), full, s2, triv), error);
    CHECK_THROWS_AS(row_minor(a, full, MultiIndex(3, {1, 3}), s2, triv), error);
}

TEST_CASE("laplace expansion matches the direct sum") {
    ExactMatrix a = ExactMatrix::from_int_rows({{1, 2}, {3, 4}}, kQ);

    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    for (std::vector<int> block : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
        std::vector<MultiIndex> blocks = {MultiIndex(2, {block[0]}), MultiIndex(2, {block[1]})};
        CHECK(schur_laplace(a, *sym, {1, 1}, blocks) == q(10));
    }
    CHECK(schur_laplace(a, *sym, {2}, {MultiIndex(2, {1, 2})}) == q(10));

    ContextPtr ext = Context::builtin(BuiltinKind::exterior, kQ, 2, 2);
    CHECK(schur_laplace(a, *ext, {1, 1}, {MultiIndex(2, {1}), MultiIndex(2, {2})}) == q(-2));
    CHECK(schur_laplace(a, *ext, {1, 1}, {MultiIndex(2, {2}), MultiIndex(2, {1})}) == q(-2));

    // Block tuples must concatenate to a canonical representative.
    CHECK_THROWS_AS(schur_laplace(a, *ext, {1, 1}, {MultiIndex(2, {1}), MultiIndex(2, {1})}),
                    error);
    CHECK_THROWS_AS(schur_laplace(a, *sym, {2}, {MultiIndex(2, {2, 1})}), error);
    CHECK_THROWS_AS(schur_laplace(a, *sym, {1, 1}, {MultiIndex(2, {1, 2})}), error);

    std::mt19937 rng(29);
    for (BuiltinKind kind : {BuiltinKind::symmetric, BuiltinKind::exterior}) {
        ContextPtr ctx = Context::builtin(kind, kQ, 3, 3);
        std::vector<std::vector<int>> parts_list = {{1, 2}, {2, 1}, {1, 1, 1}, {3}};
        for (int t = 0; t < 5; ++t) {
            ExactMatrix m = rand_matrix(3, 3, kQ, rng);
            RingElement direct = schur_direct(m, ctx->group(3), ctx->chi(3));
            for (const std::vector<int>& parts : parts_list)
                for (const std::vector<MultiIndex>& blocks :
                     enum_J_composition(ctx->sequence(), 3, parts))
                    CHECK(schur_laplace(m, *ctx, parts, blocks) == direct);
        }
    }
}

TEST_CASE("lagrange identity on random rectangular matrices") {
    std::mt19937 rng(31);
    PermutationGroup s2 = PermutationGroup::symmetric(2);
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = rand_matrix(3, 2, kQ, rng);
        CHECK(lagrange_check(a, s2, Character::trivial(s2, kQ)).equal);
        CHECK(lagrange_check(a, s2, Character::sign(s2, kQ)).equal);
        ExactMatrix b = rand_matrix(2, 3, kQ, rng);
        CHECK(lagrange_check(b, s3, Character::trivial(s3, kQ)).equal);
        CHECK(lagrange_check(b, s3, Character::sign(s3, kQ)).equal);
    }

    RingDescriptor f7 = RingDescriptor::modular(7);
    PermutationGroup c3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    Character chi = Character::from_generators(c3, {RingElement::from_int(2, f7)});
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = rand_matrix(2, 3, f7, rng);
        LagrangeResult res = lagrange_check(a, c3, chi);
        CHECK(res.equal);
        CHECK(res.lhs == res.rhs);
    }
    CHECK_THROWS_AS(lagrange_check(ExactMatrix(2, 2, kQ), s3, Character::trivial(s3, kQ)),
                    error);
}

TEST_CASE("transposing swaps the character with its inverse") {
    std::mt19937 rng(37);
    RingDescriptor f7 = RingDescriptor::modular(7);
    PermutationGroup c3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    Character chi = Character::from_generators(c3, {RingElement::from_int(2, f7)});
    PermutationGroup s3 = PermutationGroup::symmetric(3);
    for (int t = 0; t < 10; ++t) {
        CHECK(transpose_identity_check(rand_matrix(3, 3, f7, rng), c3, chi));
        CHECK(transpose_identity_check(rand_matrix(3, 3, kQ, rng), s3, Character::sign(s3, kQ)));
    }
}
