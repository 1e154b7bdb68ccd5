#include "semisym/inner.hpp"

#include <algorithm>
#include <random>

namespace semisym {

namespace {

void check_basis_index(const Context& ctx, const MultiIndex& j) {
    const std::vector<MultiIndex>& basis = ctx.basis(j.degree());
    if (!std::binary_search(basis.begin(), basis.end(), j))
        throw error("index " + j.str() + " is not a canonical basis index");
}

void check_operands(const ChiVector& a, const ChiForm& f) {
    if (!a.context() || !f.context()) throw error("missing context");
    if (!a.context()->same_structure(*f.context())) throw error("context mismatch");
}

MultiIndex block_values(const MultiIndex& k, const Permutation& rho, int offset, int len) {
    std::vector<int> vals(static_cast<std::size_t>(len));
    for (int u = 1; u <= len; ++u)
        vals[static_cast<std::size_t>(u - 1)] =
            k.entries[static_cast<std::size_t>(rho(offset + u) - 1)];
    return MultiIndex(k.n, std::move(vals));
}

}  // namespace

FilteredRepSet left_filtered_reps(const Context& ctx, const MultiIndex& k,
                                  const MultiIndex& j) {
    const int n = k.degree();
    const int q = j.degree();
    if (q > n) throw error("block degree exceeds the ambient degree");
    FilteredRepSet out;
    out.parts = {n - q, q};
    out.k = k;
    out.j = j;
    for (const Permutation& rho : ctx.reps(out.parts).reps)
        if (block_values(k, rho, n - q, q) == j) out.members.push_back(rho);
    return out;
}

FilteredRepSet right_filtered_reps(const Context& ctx, const MultiIndex& k,
                                   const MultiIndex& j) {
    const int n = k.degree();
    const int p = j.degree();
    if (p > n) throw error("block degree exceeds the ambient degree");
    FilteredRepSet out;
    out.parts = {p, n - p};
    out.k = k;
    out.j = j;
    for (const Permutation& rho : ctx.reps(out.parts).reps)
        if (block_values(k, rho, 0, p) == j) out.members.push_back(rho);
    return out;
}

ChiForm left_inner(const ChiVector& a, const ChiForm& f) {
    check_operands(a, f);
    const ContextPtr& ctx = f.context();
    const int q = a.degree();
    const int n = f.degree();
    if (n < q) return ChiForm(ctx, 0);
    ctx->require_multiplicative(n);
    const int d = n - q;

    const CompositionRepSet& m = ctx->reps({d, q});
    const Character& chi_n = ctx->chi(n);
    const PermutationGroup& wd = ctx->group(d);
    const PermutationGroup& wq = ctx->group(q);
    const Character& dual_d = weight_character<Side::dual>(*ctx, d);
    const Character& dual_q = weight_character<Side::dual>(*ctx, q);

    ChiForm out(ctx, d);
    for (const auto& [j, ca] : a.terms()) {
        RingElement stab = RingElement::from_int(ctx->stabilizer_order(q, j), ctx->ring());
        for (const auto& [k, cf] : f.terms()) {
            for (const Permutation& rho : m.reps) {
                CanonicalIndex suffix = classify(wq, dual_q, block_values(k, rho, d, q));
                if (suffix.zero || !(suffix.rep == j)) continue;
                CanonicalIndex prefix = classify(wd, dual_d, block_values(k, rho, 0, d));
                if (prefix.zero) continue;
                out.add_term(prefix.rep, ca * cf * chi_n.value(rho) * suffix.coeff * stab *
                                             prefix.coeff);
            }
        }
    }
    return out;
}

ChiForm left_inner_basis(ContextPtr ctx, const MultiIndex& j, const MultiIndex& k) {
    if (!ctx) throw error("missing context");
    check_basis_index(*ctx, j);
    check_basis_index(*ctx, k);
    const int q = j.degree();
    const int n = k.degree();
    if (n < q) return ChiForm(ctx, 0);
    ctx->require_multiplicative(n);
    const int d = n - q;

    const Character& chi_n = ctx->chi(n);
    const PermutationGroup& wd = ctx->group(d);
    const Character& dual_d = weight_character<Side::dual>(*ctx, d);
    RingElement stab = RingElement::from_int(ctx->stabilizer_order(q, j), ctx->ring());

    ChiForm out(ctx, d);
    for (const Permutation& rho : left_filtered_reps(*ctx, k, j).members) {
        CanonicalIndex prefix = classify(wd, dual_d, block_values(k, rho, 0, d));
        if (prefix.zero) continue;
        out.add_term(prefix.rep, chi_n.value(rho) * stab * prefix.coeff);
    }
    return out;
}

ChiVector right_inner(const ChiVector& a, const ChiForm& f) {
    check_operands(a, f);
    const ContextPtr& ctx = a.context();
    const int n = a.degree();
    const int p = f.degree();
    if (n < p) return ChiVector(ctx, 0);
    ctx->require_multiplicative(n);
    const int h = n - p;

    const CompositionRepSet& m = ctx->reps({p, h});
    const Character& chi_n_inv = ctx->chi_inverse(n);
    const PermutationGroup& wp = ctx->group(p);
    const PermutationGroup& wh = ctx->group(h);
    const Character& primal_p = weight_character<Side::primal>(*ctx, p);
    const Character& primal_h = weight_character<Side::primal>(*ctx, h);

    ChiVector out(ctx, h);
    for (const auto& [j, cf] : f.terms()) {
        RingElement stab = RingElement::from_int(ctx->stabilizer_order(p, j), ctx->ring());
        for (const auto& [k, ca] : a.terms()) {
            for (const Permutation& rho : m.reps) {
                CanonicalIndex prefix = classify(wp, primal_p, block_values(k, rho, 0, p));
                if (prefix.zero || !(prefix.rep == j)) continue;
                CanonicalIndex suffix = classify(wh, primal_h, block_values(k, rho, p, h));
                if (suffix.zero) continue;
                out.add_term(suffix.rep, ca * cf * chi_n_inv.value(rho) * prefix.coeff * stab *
                                             suffix.coeff);
            }
        }
    }
    return out;
}

ChiVector right_inner_basis(ContextPtr ctx, const MultiIndex& k, const MultiIndex& j) {
    if (!ctx) throw error("missing context");
    check_basis_index(*ctx, k);
    check_basis_index(*ctx, j);
    const int n = k.degree();
    const int p = j.degree();
    if (n < p) return ChiVector(ctx, 0);
    ctx->require_multiplicative(n);
    const int h = n - p;

    const Character& chi_n_inv = ctx->chi_inverse(n);
    const PermutationGroup& wh = ctx->group(h);
    const Character& primal_h = weight_character<Side::primal>(*ctx, h);
    RingElement stab = RingElement::from_int(ctx->stabilizer_order(p, j), ctx->ring());

    ChiVector out(ctx, h);
    for (const Permutation& rho : right_filtered_reps(*ctx, k, j).members) {
        CanonicalIndex suffix = classify(wh, primal_h, block_values(k, rho, p, h));
        if (suffix.zero) continue;
        out.add_term(suffix.rep, chi_n_inv.value(rho) * stab * suffix.coeff);
    }
    return out;
}

ModuleLawReport module_law_checks(ContextPtr ctx, int samples, unsigned seed) {
    if (!ctx) throw error("missing context");
    std::mt19937 rng(seed);
    const int top = ctx->max_degree();

    auto random_index = [&](int degree) {
        const std::vector<MultiIndex>& basis = ctx->basis(degree);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        return basis[pick(rng)];
    };
    auto random_degree = [&](int lo, int hi) {
        std::uniform_int_distribution<int> pick(lo, hi);
        return pick(rng);
    };

    ModuleLawReport report;
    report.left_associative = true;
    report.right_associative = true;
    report.left_unital = true;
    report.right_unital = true;

    MultiIndex empty(ctx->n(), {});
    ChiVector one = ChiVector::basis_element(ctx, empty);
    ChiForm one_form = ChiForm::basis_element(ctx, empty);

    for (int s = 0; s < samples; ++s) {
        int n = random_degree(0, top);
        int qa = random_degree(0, n);
        int qb = random_degree(0, n - qa);
        // Degrees past the alphabet can have an empty basis (exterior).
        if (ctx->basis(n).empty() || ctx->basis(qa).empty() || ctx->basis(qb).empty()) continue;
        ChiVector a = ChiVector::basis_element(ctx, random_index(qa));
        ChiVector b = ChiVector::basis_element(ctx, random_index(qb));
        ChiForm f = ChiForm::basis_element(ctx, random_index(n));
        if (!(left_inner(multiply(a, b), f) == left_inner(a, left_inner(b, f))))
            report.left_associative = false;
        if (!(left_inner(one, f) == f)) report.left_unital = false;

        ChiVector x = ChiVector::basis_element(ctx, random_index(n));
        ChiForm g1 = ChiForm::basis_element(ctx, random_index(qa));
        ChiForm g2 = ChiForm::basis_element(ctx, random_index(qb));
        if (!(right_inner(x, multiply(g1, g2)) == right_inner(right_inner(x, g1), g2)))
            report.right_associative = false;
        if (!(right_inner(x, one_form) == x)) report.right_unital = false;
    }
    return report;
}

}  // namespace semisym
