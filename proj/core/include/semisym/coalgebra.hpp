// Comultiplication into the k-fold tensor power of the graded algebra,
// the counit, and the checks tying them to the multiplication through the
// canonical pairing.
#pragma once

#include "semisym/algebra.hpp"
#include "semisym/duality.hpp"

#include <map>
#include <vector>

namespace semisym {

// Sparse element of the k-fold tensor power: keys are k-tuples of
// canonical indices, the slot degree being the length of its index.
template <Side S>
class TensorVec {
  public:
    TensorVec() = default;
    TensorVec(ContextPtr ctx, int slots);

    const ContextPtr& context() const { return ctx_; }
    int slots() const { return slots_; }
    const std::map<std::vector<MultiIndex>, RingElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<MultiIndex>& key, const RingElement& c);

    TensorVec operator+(const TensorVec& other) const;
    TensorVec scaled(const RingElement& c) const;
    bool operator==(const TensorVec& other) const;

  private:
    ContextPtr ctx_;
    int slots_ = 1;
    std::map<std::vector<MultiIndex>, RingElement> terms_;
};

using TensorVector = TensorVec<Side::primal>;
using TensorForm = TensorVec<Side::dual>;

// A homogeneous element viewed as a one-slot tensor.
template <Side S>
TensorVec<S> as_tensor(const ChiVec<S>& x);

// c_k: sum over the k-part compositions of the degree (zero parts allowed)
// and the composition representatives z, of the representative's weight
// times the tensor of projected blocks. On the vector side the weight is
// chi^{-1}(z), on the form side chi(z); this is what makes the map
// independent of the presentation of its argument.
template <Side S>
TensorVec<S> comul(const ChiVec<S>& x, int k);

// Degree-0 coefficient.
template <Side S>
RingElement counit(const GradedChiVec<S>& x);
template <Side S>
RingElement counit(const ChiVec<S>& x);

// Applies c_k2 to one slot (0-based), expanding to slots + k2 - 1 slots.
template <Side S>
TensorVec<S> comul_slot(const TensorVec<S>& t, int slot, int k2);

// Contracts one slot by the counit, dropping it.
template <Side S>
TensorVec<S> counit_slot(const TensorVec<S>& t, int slot);

// c_k(x) == (c_{k-1} (x) 1) o c_2 (x) == (1 (x) c_{k-1}) o c_2 (x), k >= 3.
template <Side S>
bool coassociativity_check(const ChiVec<S>& x, int k);

// (eps (x) 1) o c_2 = id = (1 (x) eps) o c_2 on x.
template <Side S>
bool counit_law_check(const ChiVec<S>& x);

// Slotwise pairing of a tensor against a tuple of homogeneous operands;
// slots of mismatched degree contribute zero.
RingElement pair_tensor(const TensorVector& t, const std::vector<ChiForm>& fs);
RingElement pair_tensor(const std::vector<ChiVector>& xs, const TensorForm& t);

// Three routes to the same scalar: the direct pairing of the full
// decomposables, <c_k(x), blocks of y>, and <blocks of x, c_k(y)>, with
// blocks cut along the composition.
bool duality_check(ContextPtr ctx, const std::vector<std::vector<RingElement>>& xs,
                   const std::vector<std::vector<RingElement>>& ys,
                   const std::vector<int>& parts);

extern template class TensorVec<Side::primal>;
extern template class TensorVec<Side::dual>;

}  // namespace semisym
