#include "semisym/duality.hpp"

#include <numeric>

namespace semisym {

namespace {

void check_same(const ContextPtr& a, const ContextPtr& b) {
    if (!a || !b) throw error("missing context");
    if (a.get() != b.get() && !a->same_structure(*b)) throw error("context mismatch");
}

void check_columns(const Context& ctx, const std::vector<std::vector<RingElement>>& cols) {
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != ctx.n()) throw error("column length mismatch");
}

}  // namespace

RingElement pair(const ChiVector& x, const ChiForm& f) {
    check_same(x.context(), f.context());
    if (x.degree() != f.degree() && !x.is_zero() && !f.is_zero())
        throw error("degree mismatch in pairing");
    const Context& ctx = *x.context();
    const int d = x.degree();
    RingElement out = RingElement::zero(ctx.ring());
    for (const auto& [j, xj] : x.terms()) {
        RingElement fj = f.coefficient(j);
        if (fj.is_zero()) continue;
        out += RingElement::from_int(ctx.stabilizer_order(d, j), ctx.ring()) * xj * fj;
    }
    return out;
}

RingElement pair_decomposable(ContextPtr ctx,
                              const std::vector<std::vector<RingElement>>& xs,
                              const std::vector<std::vector<RingElement>>& ys) {
    if (xs.size() != ys.size()) throw error("operand count mismatch");
    const int d = static_cast<int>(xs.size());
    ctx->require_hypotheses(d);
    if (d == 0) return RingElement::one(ctx->ring());
    check_columns(*ctx, xs);
    check_columns(*ctx, ys);

    ExactMatrix cross(d, d, ctx->ring());
    for (int s = 1; s <= d; ++s) {
        for (int t = 1; t <= d; ++t) {
            RingElement dot = RingElement::zero(ctx->ring());
            for (int r = 0; r < ctx->n(); ++r)
                dot += xs[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(r)] *
                       ys[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(r)];
            cross.entry(s, t) = dot;
        }
    }
    return schur_direct(cross, ctx->group(d), ctx->chi(d));
}

std::map<MultiIndex, RingElement> dual_basis_coefficients(const Context& ctx, int d) {
    std::map<MultiIndex, RingElement> out;
    for (const MultiIndex& j : ctx.basis(d)) {
        Int order = ctx.stabilizer_order(d, j);
        auto inv = invert_integer(order, ctx.ring());
        if (!inv)
            throw not_a_unit("stabilizer order " + order.str() + " of " + j.str() +
                             " is not a unit in " + ctx.ring().name());
        out.emplace(j, *inv);
    }
    return out;
}

RingElement pair_graded(const GradedChiVector& x, const GradedChiForm& f) {
    if (!x.context() || !f.context()) throw error("missing context");
    check_same(x.context(), f.context());
    RingElement out = RingElement::zero(x.context()->ring());
    for (const auto& [d, part] : x.parts()) {
        ChiForm other = f.part(d);
        if (!other.is_zero()) out += pair(part, other);
    }
    return out;
}

RingElement pair_tensor_power(const std::vector<ChiVector>& xs,
                              const std::vector<ChiForm>& fs) {
    if (xs.size() != fs.size()) throw error("slot count mismatch");
    if (xs.empty()) throw error("empty tensor pairing");
    check_same(xs.front().context(), fs.front().context());
    RingElement out = RingElement::one(xs.front().context()->ring());
    for (std::size_t b = 0; b < xs.size(); ++b) {
        if (xs[b].degree() != fs[b].degree())
            return RingElement::zero(xs.front().context()->ring());
        out *= pair(xs[b], fs[b]);
        if (out.is_zero()) return out;
    }
    return out;
}

PairLaplace pair_laplace(ContextPtr ctx, const std::vector<std::vector<RingElement>>& xs,
                         const std::vector<std::vector<RingElement>>& ys,
                         const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
        throw error("composition does not match the number of operands");
    ctx->require_multiplicative(n);

    PairLaplace out;
    out.direct = pair_decomposable(ctx, xs, ys);
    out.first = RingElement::zero(ctx->ring());
    out.second = RingElement::zero(ctx->ring());

    const CompositionRepSet& m = ctx->reps(parts);
    const Character& chi = ctx->chi(n);
    const Character& chi_inv = ctx->chi_inverse(n);

    using Columns = std::vector<std::vector<RingElement>>;
    for (const Permutation& z : m.reps) {
        RingElement first_term = chi_inv.value(z);
        RingElement second_term = chi.value(z);
        int offset = 0;
        for (int q : parts) {
            Columns bx, by, cx, cy;
            for (int u = 1; u <= q; ++u) {
                bx.push_back(xs[static_cast<std::size_t>(z(offset + u) - 1)]);
                by.push_back(ys[static_cast<std::size_t>(offset + u - 1)]);
                cx.push_back(xs[static_cast<std::size_t>(offset + u - 1)]);
                cy.push_back(ys[static_cast<std::size_t>(z(offset + u) - 1)]);
            }
            first_term *= pair_decomposable(ctx, bx, by);
            second_term *= pair_decomposable(ctx, cx, cy);
            offset += q;
        }
        out.first += first_term;
        out.second += second_term;
    }
    out.equal = out.first == out.direct && out.second == out.direct;
    return out;
}

}  // namespace semisym
