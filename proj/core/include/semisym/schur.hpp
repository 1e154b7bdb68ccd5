// Exact matrices and generalized Schur functions
// d_chi(A) = sum_{s in W} chi(s) a_{s^{-1}(1),1} ... a_{s^{-1}(d),d},
// together with row minors and the Laplace expansion along a composition.
#pragma once

#include "semisym/character.hpp"
#include "semisym/context.hpp"
#include "semisym/index.hpp"
#include "semisym/perm.hpp"
#include "semisym/ring.hpp"

#include <vector>

namespace semisym {

class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols, const RingDescriptor& ring);
    static ExactMatrix identity(int n, const RingDescriptor& ring);
    static ExactMatrix from_int_rows(const std::vector<std::vector<long long>>& rows,
                                     const RingDescriptor& ring);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingDescriptor& ring() const { return ring_; }

    // 1-based access, matching the index conventions.
    RingElement& entry(int r, int c);
    const RingElement& entry(int r, int c) const;

    ExactMatrix transposed() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    bool operator==(const ExactMatrix&) const = default;

  private:
    int rows_, cols_;
    RingDescriptor ring_;
    std::vector<RingElement> data_;
};

// d_chi(A) for a square matrix whose side equals the group degree.
RingElement schur_direct(const ExactMatrix& a, const PermutationGroup& w, const Character& chi);

// Row minor A_{(j)k}(chi) = sum over coset representatives t of W modulo
// the stabilizer of j of chi^{-1}(t) prod_m a_{(t j)_m, k_m}. Entries of j
// index rows, entries of k index columns.
RingElement row_minor(const ExactMatrix& a, const MultiIndex& j, const MultiIndex& k,
                      const PermutationGroup& w, const Character& chi);

// Laplace expansion of d_chi(A) along a composition of n, evaluated at a
// block tuple from the canonical composition set; must equal schur_direct.
RingElement schur_laplace(const ExactMatrix& a, const Context& ctx,
                          const std::vector<int>& parts,
                          const std::vector<MultiIndex>& blocks);

struct LagrangeResult {
    RingElement lhs;  // d_chi of ^tA A
    RingElement rhs;  // sum over canonical j of |W_j| A_(j)(chi) A_(j)(chi^{-1})
    bool equal;
};

// The Lagrange identity for an n x d matrix.
LagrangeResult lagrange_check(const ExactMatrix& a, const PermutationGroup& w,
                              const Character& chi);

// d_chi(^tA) == d_{chi^{-1}}(A).
bool transpose_identity_check(const ExactMatrix& a, const PermutationGroup& w,
                              const Character& chi);

}  // namespace semisym
