// Finitely generated free modules with a monomial group action
// s e_i = gamma_i(s) e_{s i}, the averaging operator, and the basis
// families for the fixed submodule, the relation submodule and the
// quotient.
#pragma once

#include "semisym/character.hpp"
#include "semisym/index.hpp"
#include "semisym/perm.hpp"
#include "semisym/ring.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace semisym {

// Sparse vector keyed by basis position.
struct SparseVector {
    std::map<std::size_t, RingElement> coeff;

    void add(std::size_t i, const RingElement& c);
    bool is_zero() const { return coeff.empty(); }
    bool operator==(const SparseVector&) const = default;
};

SparseVector scale(const RingElement& c, const SparseVector& z);
SparseVector add(const SparseVector& a, const SparseVector& b);

class MonomialModule {
  public:
    using ActionFn = std::function<std::size_t(const Permutation&, std::size_t)>;
    using GammaFn = std::function<RingElement(std::size_t, const Permutation&)>;

    // Validates that action is a left action, gamma satisfies the cocycle
    // law gamma_i(s t) = gamma_{t i}(s) gamma_i(t), and all gamma values
    // are units.
    MonomialModule(PermutationGroup w, RingDescriptor ring, std::size_t basis_size,
                   const ActionFn& action, const GammaFn& gamma,
                   std::vector<MultiIndex> labels = {});

    // The tensor power module: basis indexed by 1..n words of length d with
    // the place-permutation action and gamma identically one.
    static MonomialModule tensor_power(const PermutationGroup& w, const RingDescriptor& ring,
                                       int n, int d);

    const PermutationGroup& group() const { return w_; }
    const RingDescriptor& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    const std::vector<MultiIndex>& labels() const { return labels_; }

    std::size_t apply(std::size_t elem_pos, std::size_t i) const {
        return action_[elem_pos][i];
    }
    const RingElement& gamma(std::size_t i, std::size_t elem_pos) const {
        return gamma_[i][elem_pos];
    }

    // The module action extended linearly to sparse vectors.
    SparseVector act(const Permutation& s, const SparseVector& z) const;

  private:
    PermutationGroup w_;
    RingDescriptor ring_;
    std::size_t size_;
    std::vector<std::vector<std::size_t>> action_;  // [elem position][basis] -> basis
    std::vector<std::vector<RingElement>> gamma_;   // [basis][elem position]
    std::vector<MultiIndex> labels_;
};

// |W|^{-1} sum_s chi^{-1}(s) s z. Throws not_a_unit when |W| is not
// invertible in the coefficient ring.
SparseVector a_chi(const MonomialModule& m, const Character& chi, const SparseVector& z);

// sum_s weight(s) s z with an explicit weight character and no 1/|W|
// normalization; usable over rings where |W| is not invertible.
SparseVector A_chi_unnormalized(const MonomialModule& m, const Character& weight,
                                const SparseVector& z);

struct IndexClassification {
    std::vector<std::size_t> orbit_reps;  // least basis position per orbit
    std::vector<std::size_t> in_kernel;   // I(chi, M): gamma_i = chi on the stabilizer
    std::vector<std::size_t> outside;     // complement of I(chi, M)
    std::vector<std::size_t> j_set;       // orbit_reps intersect in_kernel
    std::vector<std::size_t> j0_set;      // orbit_reps intersect outside
};

IndexClassification classify_indices(const MonomialModule& m, const Character& chi);

struct SubmoduleBases {
    // Basis of the relation submodule generated by chi(s) z - s z:
    // differences e_i - chi(s) gamma_i(s) e_{s i} plus the e_i with i in J0.
    std::vector<SparseVector> relation_basis;
    // Basis a_chi(e_j), j in J, of the fixed submodule.
    std::vector<SparseVector> fixed_basis;
    // Basis positions whose classes form a basis of the quotient.
    std::vector<std::size_t> quotient_basis;
};

// Requires integral-domain coefficients and |W| invertible.
SubmoduleBases submodule_bases(const MonomialModule& m, const Character& chi);

}  // namespace semisym
