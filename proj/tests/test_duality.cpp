#include "semisym/duality.hpp"

#include "doctest.h"

#include <random>
#include <vector>

using namespace semisym;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

RingElement q(long long v) { return RingElement::from_int(Int(v), kQ); }

ChiVector e(const ContextPtr& ctx, std::vector<int> word) {
    return ChiVector::basis_element(ctx, MultiIndex(ctx->n(), std::move(word)));
}

ChiForm f(const ContextPtr& ctx, std::vector<int> word) {
    return ChiForm::basis_element(ctx, MultiIndex(ctx->n(), std::move(word)));
}

ContextPtr f7_context() {
    RingDescriptor f7 = RingDescriptor::modular(7);
    PermutationGroup c3 = PermutationGroup::closure(3, {parse_permutation("(1 2 3)", 3)});
    Character chi = Character::from_generators(c3, {RingElement::from_int(2, f7)});
    return Context::single_degree(f7, 2, c3, chi);
}

std::vector<std::vector<RingElement>> rand_columns(int count, int n, const RingDescriptor& ring,
                                                   std::mt19937& rng) {
    std::uniform_int_distribution<long long> val(-4, 4);
    std::vector<std::vector<RingElement>> out;
    for (int c = 0; c < count; ++c) {
        std::vector<RingElement> col;
        for (int r = 0; r < n; ++r) col.push_back(RingElement::from_int(Int(val(rng)), ring));
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace

TEST_CASE("the pairing is diagonal with stabilizer-order weights") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    CHECK(pair(e(sym, {1, 1}), f(sym, {1, 1})) == q(2));
    CHECK(pair(e(sym, {1, 2}), f(sym, {1, 2})) == q(1));
    CHECK(pair(e(sym, {1, 1}), f(sym, {1, 2})) == q(0));
    CHECK(pair(e(sym, {1, 1}).scaled(q(2)) + e(sym, {1, 2}),
               f(sym, {1, 1}) + f(sym, {1, 2}).scaled(q(3))) == q(7));

    CHECK_THROWS_AS(pair(e(sym, {1}), f(sym, {1, 2})), error);
    // A zero operand pairs to zero regardless of the declared degrees.
    CHECK(pair(ChiVector(sym, 1), f(sym, {1, 2})) == q(0));

    // Non-constant words under a cyclic group have trivial stabilizers.
    ContextPtr c3 = f7_context();
    for (const MultiIndex& j : c3->basis(3))
        for (const MultiIndex& k : c3->basis(3)) {
            RingElement expect =
                j == k ? RingElement::one(c3->ring()) : RingElement::zero(c3->ring());
            CHECK(pair(ChiVector::basis_element(c3, j), ChiForm::basis_element(c3, k)) ==
                  expect);
        }
}

TEST_CASE("decomposable pairing is the schur function of the cross matrix") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    CHECK(pair_decomposable(sym, {{q(1), q(2)}}, {{q(3), q(4)}}) == q(11));
    CHECK(pair_decomposable(sym, {{q(1), q(0)}, {q(0), q(1)}},
                            {{q(1), q(0)}, {q(0), q(1)}}) == q(1));
    CHECK(pair_decomposable(sym, {}, {}) == q(1));
    CHECK_THROWS_AS(pair_decomposable(sym, {{q(1), q(2)}}, {}), error);

    std::mt19937 rng(41);
    for (BuiltinKind kind : {BuiltinKind::symmetric, BuiltinKind::exterior}) {
        ContextPtr ctx = Context::builtin(kind, kQ, 3, 3);
        for (int t = 0; t < 10; ++t) {
            auto xs = rand_columns(3, 3, kQ, rng);
            auto ys = rand_columns(3, 3, kQ, rng);
            CHECK(pair_decomposable(ctx, xs, ys) ==
                  pair(decomposable<Side::primal>(ctx, xs), decomposable<Side::dual>(ctx, ys)));
        }
    }
}

TEST_CASE("the two sides use mutually inverse weights") {
    // Over a character that differs from its inverse, pairing the primal
    // expansion against the dual expansion must still reproduce the cross
    // schur function; weighting either side by the wrong character breaks
    // this.
    ContextPtr ctx = f7_context();
    std::mt19937 rng(43);
    for (int t = 0; t < 20; ++t) {
        auto xs = rand_columns(3, 2, ctx->ring(), rng);
        auto ys = rand_columns(3, 2, ctx->ring(), rng);
        CHECK(pair_decomposable(ctx, xs, ys) ==
              pair(decomposable<Side::primal>(ctx, xs), decomposable<Side::dual>(ctx, ys)));
    }
}

TEST_CASE("dual basis coefficients invert the stabilizer orders") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    std::map<MultiIndex, RingElement> coef = dual_basis_coefficients(*sym, 2);
    REQUIRE(coef.size() == 3);
    CHECK(coef.at(MultiIndex(2, {1, 1})) == RingElement::rational(1, 2));
    CHECK(coef.at(MultiIndex(2, {1, 2})) == q(1));
    for (const auto& [j, c] : coef)
        CHECK(pair(ChiVector::basis_element(sym, j).scaled(c),
                   ChiForm::basis_element(sym, j)).is_one());

    RingDescriptor z = RingDescriptor::integer();
    ContextPtr ten = Context::builtin(BuiltinKind::tensor, z, 2, 2);
    for (const auto& [j, c] : dual_basis_coefficients(*ten, 2)) CHECK(c.is_one());
    // Over Z the basis enumeration itself already needs |W_2| = 2 inverted.
    ContextPtr zsym = Context::builtin(BuiltinKind::symmetric, z, 2, 2);
    CHECK_THROWS_AS(dual_basis_coefficients(*zsym, 2), hypothesis_error);
}

TEST_CASE("graded pairing keeps degrees orthogonal") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    GradedChiVector x(sym);
    x.set_part(e(sym, {1}));
    x.set_part(e(sym, {1, 1}).scaled(q(3)));
    GradedChiForm g(sym);
    g.set_part(f(sym, {1}).scaled(q(5)));
    g.set_part(f(sym, {1, 1}));
    CHECK(pair_graded(x, g) == q(5 + 3 * 2));

    GradedChiForm only2(sym);
    only2.set_part(f(sym, {1, 2}));
    GradedChiVector only1(sym);
    only1.set_part(e(sym, {2}));
    CHECK(pair_graded(only1, only2) == q(0));
}

TEST_CASE("tensor power pairing multiplies the slots") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    CHECK(pair_tensor_power({e(sym, {1}), e(sym, {1, 1})},
                            {f(sym, {1}), f(sym, {1, 1})}) == q(2));
    // Degree tuples that disagree pair to zero.
    CHECK(pair_tensor_power({e(sym, {1}), e(sym, {1, 1})},
                            {f(sym, {1, 1}), f(sym, {1})}) == q(0));
    CHECK_THROWS_AS(pair_tensor_power({e(sym, {1})}, {f(sym, {1}), f(sym, {2})}), error);
    CHECK_THROWS_AS(pair_tensor_power({}, {}), error);
}

TEST_CASE("laplace expansions of the pairing") {
    std::mt19937 rng(47);
    for (BuiltinKind kind : {BuiltinKind::symmetric, BuiltinKind::exterior}) {
        ContextPtr ctx = Context::builtin(kind, kQ, 3, 3);
        for (const std::vector<int>& parts :
             {std::vector<int>{1, 2}, std::vector<int>{2, 1}, std::vector<int>{1, 1, 1}}) {
            for (int t = 0; t < 5; ++t) {
                auto xs = rand_columns(3, 3, kQ, rng);
                auto ys = rand_columns(3, 3, kQ, rng);
                PairLaplace res = pair_laplace(ctx, xs, ys, parts);
                CHECK(res.equal);
                CHECK(res.direct == pair_decomposable(ctx, xs, ys));
            }
        }
    }

    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    CHECK_THROWS_AS(pair_laplace(sym, rand_columns(1, 2, kQ, rng),
                                 rand_columns(2, 2, kQ, rng), {1, 1}),
                    error);

    // Blockwise expansion needs a multiplicative sequence; a lone stage
    // whose character is not involutive is rejected.
    ContextPtr c3 = f7_context();
    auto xs = rand_columns(3, 2, c3->ring(), rng);
    CHECK_THROWS_AS(pair_laplace(c3, xs, xs, {1, 2}), validation_error);
}
