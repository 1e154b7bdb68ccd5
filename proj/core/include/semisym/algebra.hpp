// Elements of the semi-symmetric powers: sparse coordinate vectors over
// the canonical basis, tensor projection, decomposable elements, the
// basis-level multiplication and functorial power maps. The Side tag
// distinguishes vectors from linear forms; the dual side weights by the
// inverse character.
#pragma once

#include "semisym/context.hpp"
#include "semisym/index.hpp"
#include "semisym/schur.hpp"

#include <map>
#include <memory>
#include <vector>

namespace semisym {

enum class Side { primal, dual };

template <Side S>
const Character& weight_character(const Context& ctx, int d);

template <Side S>
class ChiVec {
  public:
    ChiVec() = default;
    ChiVec(ContextPtr ctx, int degree);

    static ChiVec basis_element(ContextPtr ctx, const MultiIndex& j);

    const ContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }
    const std::map<MultiIndex, RingElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c e_j; the key must already be canonical.
    void add_term(const MultiIndex& j, const RingElement& c);
    RingElement coefficient(const MultiIndex& j) const;

    ChiVec operator+(const ChiVec& other) const;
    ChiVec operator-(const ChiVec& other) const;
    ChiVec scaled(const RingElement& c) const;
    bool operator==(const ChiVec& other) const;

  private:
    ContextPtr ctx_;
    int degree_ = 0;
    std::map<MultiIndex, RingElement> terms_;
};

using ChiVector = ChiVec<Side::primal>;
using ChiForm = ChiVec<Side::dual>;

// Image of c e_i under the projection onto the power: zero, or
// c zeta(i) e_{rep(i)}.
template <Side S>
ChiVec<S> project_tensor(ContextPtr ctx, const RingElement& c, const MultiIndex& i);

// Product x_1 chi ... chi x_d of coordinate columns (each of length n),
// expanded over the canonical basis by row minors.
template <Side S>
ChiVec<S> decomposable(ContextPtr ctx, const std::vector<std::vector<RingElement>>& columns);

// Basis-level multiplication: e_j e_k = zeta(j k) e_{rep(j k)} or zero.
// Requires the standing hypotheses at the product degree and a sequence
// valid through it.
template <Side S>
ChiVec<S> multiply(const ChiVec<S>& a, const ChiVec<S>& b);

template <Side S>
class GradedChiVec {
  public:
    GradedChiVec() = default;
    explicit GradedChiVec(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static GradedChiVec unit(ContextPtr ctx);  // 1 in degree zero

    const ContextPtr& context() const { return ctx_; }
    const std::map<int, ChiVec<S>>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    void set_part(ChiVec<S> part);
    ChiVec<S> part(int degree) const;

    GradedChiVec operator+(const GradedChiVec& other) const;
    GradedChiVec scaled(const RingElement& c) const;
    GradedChiVec grade_project(int degree) const;
    bool operator==(const GradedChiVec& other) const;

  private:
    ContextPtr ctx_;
    std::map<int, ChiVec<S>> parts_;  // nonzero homogeneous parts
};

using GradedChiVector = GradedChiVec<Side::primal>;
using GradedChiForm = GradedChiVec<Side::dual>;

template <Side S>
GradedChiVec<S> multiply(const GradedChiVec<S>& a, const GradedChiVec<S>& b);

// Matrix of the degree-d power of the linear map u (an m x n matrix):
// columns indexed by the canonical degree-d basis over n, rows over m.
struct PowerMapMatrix {
    std::vector<MultiIndex> rows;
    std::vector<MultiIndex> cols;
    ExactMatrix matrix;
};

template <Side S>
PowerMapMatrix power_map(ContextPtr ctx, const ExactMatrix& u, int d);

// Applies a power-map matrix to coordinates.
template <Side S>
ChiVec<S> apply_power_map(const PowerMapMatrix& pm, ContextPtr target, const ChiVec<S>& x);

extern template class ChiVec<Side::primal>;
extern template class ChiVec<Side::dual>;
extern template class GradedChiVec<Side::primal>;
extern template class GradedChiVec<Side::dual>;

}  // namespace semisym
