// The canonical bilinear form between chi-vectors and chi-forms: diagonal
// Gram matrix |W_j| on the canonical bases, Schur evaluation on
// decomposables, dual bases, graded and slotwise pairings, and the Laplace
// expansions of the form along a composition.
#pragma once

#include "semisym/algebra.hpp"
#include "semisym/schur.hpp"

#include <map>
#include <vector>

namespace semisym {

// <x, f> = sum_j |W_j| x_j f_j. Throws on context or degree mismatch.
RingElement pair(const ChiVector& x, const ChiForm& f);

// Pairing of two decomposables given by coordinate columns: the Schur
// function of the cross matrix (<x_s, y_t>). Agrees with
// pair(decomposable(xs), decomposable(ys)); the empty product pairs to 1.
RingElement pair_decomposable(ContextPtr ctx,
                              const std::vector<std::vector<RingElement>>& xs,
                              const std::vector<std::vector<RingElement>>& ys);

// Coefficients c_j with (e_j) and (c_j e_j^*) dual: c_j = 1/|W_j|.
// Throws not_a_unit when some |W_j| is not invertible.
std::map<MultiIndex, RingElement> dual_basis_coefficients(const Context& ctx, int d);

// Sum of the homogeneous pairings; components of distinct degrees are
// orthogonal.
RingElement pair_graded(const GradedChiVector& x, const GradedChiForm& f);

// Pairing on the k-fold tensor power: zero unless the degree tuples agree,
// otherwise the product of the slotwise pairings.
RingElement pair_tensor_power(const std::vector<ChiVector>& xs,
                              const std::vector<ChiForm>& fs);

struct PairLaplace {
    RingElement direct;  // Schur function of the cross matrix
    RingElement first;   // vector side permuted blockwise
    RingElement second;  // form side permuted blockwise
    bool equal = false;
};

// Both blockwise expansions of the pairing of decomposables along a
// composition of n; each must equal the direct value. The first expansion
// weights a representative z by chi^{-1}(z), the second by chi(z); the two
// weights agree exactly when chi is involutive.
PairLaplace pair_laplace(ContextPtr ctx, const std::vector<std::vector<RingElement>>& xs,
                         const std::vector<std::vector<RingElement>>& ys,
                         const std::vector<int>& parts);

}  // namespace semisym
