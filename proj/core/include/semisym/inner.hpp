// Left and right interior products between chi-vectors and chi-forms:
// the coset-sum formulas, their filtered basis specializations, and the
// module laws they satisfy.
#pragma once

#include "semisym/algebra.hpp"
#include "semisym/duality.hpp"

#include <vector>

namespace semisym {

// Representatives rho in M(chi;n;parts) whose named block of k-values
// matches j entry for entry (no re-sorting).
struct FilteredRepSet {
    std::vector<int> parts;
    MultiIndex k;  // ambient canonical index, degree n
    MultiIndex j;  // block index the filter matches
    std::vector<Permutation> members;
};

// M_{k,.,j}(chi;n;d,q) = {rho : k_{rho(d+u)} = j_u, u = 1..q}.
FilteredRepSet left_filtered_reps(const Context& ctx, const MultiIndex& k, const MultiIndex& j);

// M'_{k,j,.}(chi;n;p,h) = {rho : k_{rho(u)} = j_u, u = 1..p}.
FilteredRepSet right_filtered_reps(const Context& ctx, const MultiIndex& k, const MultiIndex& j);

// a (deg q) contracted into f (deg n): the form of degree n - q adjoint to
// right multiplication, <x chi a, f> = <x, left_inner(a, f)>. Sums chi(rho)
// <a, suffix block of f> prefix block over rho in M(chi;n;n-q,q); zero when
// n < q.
ChiForm left_inner(const ChiVector& a, const ChiForm& f);

// left_inner on a basis pair via the filtered set: |W_j| times the sum of
// chi(rho) times the projected prefix tuple over rho in M_{k,.,j}. The
// stabilizer factor |W_j| is forced by <e_j, e_j*> = |W_j|.
ChiForm left_inner_basis(ContextPtr ctx, const MultiIndex& j, const MultiIndex& k);

// a (deg n) contracted by f (deg p): the vector of degree n - p adjoint to
// left multiplication, <right_inner(a, f), y> = <a, f chi y>. Sums
// chi^{-1}(rho) <prefix block of a, f> suffix block over rho in
// M(chi;n;p,n-p); zero when n < p.
ChiVector right_inner(const ChiVector& a, const ChiForm& f);

// right_inner on a basis pair via the filtered set, with the same
// stabilizer factor.
ChiVector right_inner_basis(ContextPtr ctx, const MultiIndex& k, const MultiIndex& j);

struct ModuleLawReport {
    bool left_associative = false;   // (a chi b) -| f == a -| (b -| f)
    bool right_associative = false;  // a |- (f chi g) == (a |- f) |- g
    bool left_unital = false;        // 1 -| f == f
    bool right_unital = false;       // a |- 1 == a
    bool all() const {
        return left_associative && right_associative && left_unital && right_unital;
    }
};

// Checks the four laws on random canonical basis elements, degrees chosen
// so every product stays within the context's multiplicative range.
ModuleLawReport module_law_checks(ContextPtr ctx, int samples, unsigned seed);

}  // namespace semisym
