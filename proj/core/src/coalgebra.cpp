#include "semisym/coalgebra.hpp"

#include <algorithm>

namespace semisym {

namespace {

// Non-negative compositions of n into k parts, lexicographic.
std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace

template <Side S>
TensorVec<S>::TensorVec(ContextPtr ctx, int slots) : ctx_(std::move(ctx)), slots_(slots) {
    if (!ctx_) throw error("missing context");
    if (slots_ < 1) throw error("slot count must be positive");
}

template <Side S>
void TensorVec<S>::add_term(const std::vector<MultiIndex>& key, const RingElement& c) {
    if (static_cast<int>(key.size()) != slots_) throw error("slot count mismatch");
    for (const MultiIndex& j : key) {
        const std::vector<MultiIndex>& basis = ctx_->basis(j.degree());
        if (!std::binary_search(basis.begin(), basis.end(), j))
            throw error("index " + j.str() + " is not a canonical basis index");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

template <Side S>
TensorVec<S> TensorVec<S>::operator+(const TensorVec& other) const {
    if (slots_ != other.slots_) throw error("slot count mismatch");
    TensorVec out = *this;
    for (const auto& [key, c] : other.terms_) out.add_term(key, c);
    return out;
}

template <Side S>
TensorVec<S> TensorVec<S>::scaled(const RingElement& c) const {
    TensorVec out(ctx_, slots_);
    for (const auto& [key, v] : terms_) out.add_term(key, c * v);
    return out;
}

template <Side S>
bool TensorVec<S>::operator==(const TensorVec& other) const {
    if (!ctx_ || !other.ctx_) return is_zero() && other.is_zero();
    if (!ctx_->same_structure(*other.ctx_)) return false;
    if (is_zero() && other.is_zero()) return true;
    return slots_ == other.slots_ && terms_ == other.terms_;
}

template <Side S>
TensorVec<S> as_tensor(const ChiVec<S>& x) {
    TensorVec<S> out(x.context(), 1);
    for (const auto& [j, c] : x.terms()) out.add_term({j}, c);
    return out;
}

template <Side S>
TensorVec<S> comul(const ChiVec<S>& x, int k) {
    const ContextPtr& ctx = x.context();
    if (!ctx) throw error("missing context");
    if (k < 1) throw error("slot count must be positive");
    const int n = x.degree();
    ctx->require_multiplicative(n);

    TensorVec<S> out(ctx, k);
    if (x.is_zero()) return out;
    if (n == 0) {
        std::vector<MultiIndex> key(static_cast<std::size_t>(k), MultiIndex(ctx->n(), {}));
        for (const auto& [j, c] : x.terms()) out.add_term(key, c);
        return out;
    }

    const Character* weight;  // of the representative, per side
    if constexpr (S == Side::primal)
        weight = &ctx->chi_inverse(n);
    else
        weight = &ctx->chi(n);

    for (const std::vector<int>& parts : compositions(n, k)) {
        const CompositionRepSet& m = ctx->reps(parts);
        for (const Permutation& z : m.reps) {
            RingElement zw = weight->value(z);
            for (const auto& [j, c] : x.terms()) {
                RingElement coeff = c * zw;
                std::vector<MultiIndex> key;
                key.reserve(parts.size());
                int offset = 0;
                bool dead = false;
                for (int q : parts) {
                    std::vector<int> block(static_cast<std::size_t>(q));
                    for (int u = 1; u <= q; ++u)
                        block[static_cast<std::size_t>(u - 1)] =
                            j.entries[static_cast<std::size_t>(z(offset + u) - 1)];
                    CanonicalIndex canon = classify(ctx->group(q), weight_character<S>(*ctx, q),
                                                    MultiIndex(ctx->n(), std::move(block)));
                    if (canon.zero) {
                        dead = true;
                        break;
                    }
                    coeff *= canon.coeff;
                    key.push_back(canon.rep);
                    offset += q;
                }
                if (!dead) out.add_term(key, coeff);
            }
        }
    }
    return out;
}

template <Side S>
RingElement counit(const GradedChiVec<S>& x) {
    if (!x.context()) throw error("missing context");
    return x.part(0).coefficient(MultiIndex(x.context()->n(), {}));
}

template <Side S>
RingElement counit(const ChiVec<S>& x) {
    if (!x.context()) throw error("missing context");
    if (x.degree() != 0) return RingElement::zero(x.context()->ring());
    return x.coefficient(MultiIndex(x.context()->n(), {}));
}

template <Side S>
TensorVec<S> comul_slot(const TensorVec<S>& t, int slot, int k2) {
    if (slot < 0 || slot >= t.slots()) throw error("slot out of range");
    const ContextPtr& ctx = t.context();
    TensorVec<S> out(ctx, t.slots() + k2 - 1);
    for (const auto& [key, c] : t.terms()) {
        ChiVec<S> piece = ChiVec<S>::basis_element(ctx, key[static_cast<std::size_t>(slot)]);
        TensorVec<S> expanded = comul(piece, k2);
        for (const auto& [ekey, ec] : expanded.terms()) {
            std::vector<MultiIndex> merged;
            merged.reserve(key.size() + ekey.size() - 1);
            merged.insert(merged.end(), key.begin(), key.begin() + slot);
            merged.insert(merged.end(), ekey.begin(), ekey.end());
            merged.insert(merged.end(), key.begin() + slot + 1, key.end());
            out.add_term(merged, c * ec);
        }
    }
    return out;
}

template <Side S>
TensorVec<S> counit_slot(const TensorVec<S>& t, int slot) {
    if (slot < 0 || slot >= t.slots()) throw error("slot out of range");
    if (t.slots() == 1) throw error("cannot drop the only slot");
    TensorVec<S> out(t.context(), t.slots() - 1);
    for (const auto& [key, c] : t.terms()) {
        if (key[static_cast<std::size_t>(slot)].degree() != 0) continue;
        std::vector<MultiIndex> reduced;
        reduced.reserve(key.size() - 1);
        for (int b = 0; b < t.slots(); ++b)
            if (b != slot) reduced.push_back(key[static_cast<std::size_t>(b)]);
        out.add_term(reduced, c);
    }
    return out;
}

template <Side S>
bool coassociativity_check(const ChiVec<S>& x, int k) {
    if (k < 3) throw error("coassociativity needs at least three slots");
    TensorVec<S> direct = comul(x, k);
    TensorVec<S> two = comul(x, 2);
    TensorVec<S> left = comul_slot(two, 0, k - 1);
    TensorVec<S> right = comul_slot(two, 1, k - 1);
    return direct == left && direct == right;
}

template <Side S>
bool counit_law_check(const ChiVec<S>& x) {
    TensorVec<S> two = comul(x, 2);
    TensorVec<S> expected = as_tensor(x);
    return counit_slot(two, 0) == expected && counit_slot(two, 1) == expected;
}

RingElement pair_tensor(const TensorVector& t, const std::vector<ChiForm>& fs) {
    if (static_cast<int>(fs.size()) != t.slots()) throw error("slot count mismatch");
    const Context& ctx = *t.context();
    RingElement out = RingElement::zero(ctx.ring());
    for (const auto& [key, c] : t.terms()) {
        RingElement term = c;
        for (std::size_t b = 0; b < key.size(); ++b) {
            const MultiIndex& j = key[b];
            if (fs[b].degree() != j.degree()) {
                term = RingElement::zero(ctx.ring());
                break;
            }
            term *= RingElement::from_int(ctx.stabilizer_order(j.degree(), j), ctx.ring()) *
                    fs[b].coefficient(j);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

RingElement pair_tensor(const std::vector<ChiVector>& xs, const TensorForm& t) {
    if (static_cast<int>(xs.size()) != t.slots()) throw error("slot count mismatch");
    const Context& ctx = *t.context();
    RingElement out = RingElement::zero(ctx.ring());
    for (const auto& [key, c] : t.terms()) {
        RingElement term = c;
        for (std::size_t b = 0; b < key.size(); ++b) {
            const MultiIndex& j = key[b];
            if (xs[b].degree() != j.degree()) {
                term = RingElement::zero(ctx.ring());
                break;
            }
            term *= RingElement::from_int(ctx.stabilizer_order(j.degree(), j), ctx.ring()) *
                    xs[b].coefficient(j);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

bool duality_check(ContextPtr ctx, const std::vector<std::vector<RingElement>>& xs,
                   const std::vector<std::vector<RingElement>>& ys,
                   const std::vector<int>& parts) {
    const int n = static_cast<int>(xs.size());
    if (ys.size() != xs.size()) throw error("operand count mismatch");
    int total = 0;
    for (int q : parts) total += q;
    if (total != n) throw error("composition does not match the number of operands");
    const int k = static_cast<int>(parts.size());

    RingElement direct = pair_decomposable(ctx, xs, ys);

    ChiVector x = decomposable<Side::primal>(ctx, xs);
    ChiForm y = decomposable<Side::dual>(ctx, ys);

    using Columns = std::vector<std::vector<RingElement>>;
    std::vector<ChiVector> x_blocks;
    std::vector<ChiForm> y_blocks;
    int offset = 0;
    for (int q : parts) {
        Columns bx(xs.begin() + offset, xs.begin() + offset + q);
        Columns by(ys.begin() + offset, ys.begin() + offset + q);
        x_blocks.push_back(decomposable<Side::primal>(ctx, bx));
        y_blocks.push_back(decomposable<Side::dual>(ctx, by));
        offset += q;
    }

    RingElement via_comul = pair_tensor(comul(x, k), y_blocks);
    RingElement via_dual_comul = pair_tensor(x_blocks, comul(y, k));
    return direct == via_comul && direct == via_dual_comul;
}

template class TensorVec<Side::primal>;
template class TensorVec<Side::dual>;

template TensorVec<Side::primal> as_tensor<Side::primal>(const ChiVec<Side::primal>&);
template TensorVec<Side::dual> as_tensor<Side::dual>(const ChiVec<Side::dual>&);
template TensorVec<Side::primal> comul<Side::primal>(const ChiVec<Side::primal>&, int);
template TensorVec<Side::dual> comul<Side::dual>(const ChiVec<Side::dual>&, int);
template RingElement counit<Side::primal>(const GradedChiVec<Side::primal>&);
template RingElement counit<Side::dual>(const GradedChiVec<Side::dual>&);
template RingElement counit<Side::primal>(const ChiVec<Side::primal>&);
template RingElement counit<Side::dual>(const ChiVec<Side::dual>&);
template TensorVec<Side::primal> comul_slot<Side::primal>(const TensorVec<Side::primal>&, int,
                                                          int);
template TensorVec<Side::dual> comul_slot<Side::dual>(const TensorVec<Side::dual>&, int, int);
template TensorVec<Side::primal> counit_slot<Side::primal>(const TensorVec<Side::primal>&, int);
template TensorVec<Side::dual> counit_slot<Side::dual>(const TensorVec<Side::dual>&, int);
template bool coassociativity_check<Side::primal>(const ChiVec<Side::primal>&, int);
template bool coassociativity_check<Side::dual>(const ChiVec<Side::dual>&, int);
template bool counit_law_check<Side::primal>(const ChiVec<Side::primal>&);
template bool counit_law_check<Side::dual>(const ChiVec<Side::dual>&);

}  // namespace semisym
