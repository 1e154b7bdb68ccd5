#include "semisym/algebra.hpp"

#include <algorithm>

namespace semisym {

template <Side S>
const Character& weight_character(const Context& ctx, int d) {
    if constexpr (S == Side::primal)
        return ctx.chi(d);
    else
        return ctx.chi_inverse(d);
}

template const Character& weight_character<Side::primal>(const Context&, int);
template const Character& weight_character<Side::dual>(const Context&, int);

namespace {

void check_context(const ContextPtr& a, const ContextPtr& b) {
    if (!a || !b) throw error("missing context");
    if (a.get() == b.get()) return;
    if (!a->same_structure(*b)) throw error("context mismatch");
}

bool basis_contains(const std::vector<MultiIndex>& basis, const MultiIndex& j) {
    return std::binary_search(basis.begin(), basis.end(), j);
}

}  // namespace

template <Side S>
ChiVec<S>::ChiVec(ContextPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {
    if (!ctx_) throw error("missing context");
    if (degree_ < 0) throw error("negative degree");
}

template <Side S>
ChiVec<S> ChiVec<S>::basis_element(ContextPtr ctx, const MultiIndex& j) {
    ChiVec v(ctx, j.degree());
    v.add_term(j, RingElement::one(ctx->ring()));
    return v;
}

template <Side S>
void ChiVec<S>::add_term(const MultiIndex& j, const RingElement& c) {
    if (j.degree() != degree_) throw error("term degree mismatch");
    if (!basis_contains(ctx_->basis(degree_), j))
        throw error("index " + j.str() + " is not a canonical basis index");
    if (c.is_zero()) return;
    auto it = terms_.find(j);
    if (it == terms_.end()) {
        terms_.emplace(j, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

template <Side S>
RingElement ChiVec<S>::coefficient(const MultiIndex& j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? RingElement::zero(ctx_->ring()) : it->second;
}

template <Side S>
ChiVec<S> ChiVec<S>::operator+(const ChiVec& other) const {
    check_context(ctx_, other.ctx_);
    if (degree_ != other.degree_) throw error("degree mismatch in addition");
    ChiVec out = *this;
    for (const auto& [j, c] : other.terms_) out.add_term(j, c);
    return out;
}

template <Side S>
ChiVec<S> ChiVec<S>::operator-(const ChiVec& other) const {
    check_context(ctx_, other.ctx_);
    if (degree_ != other.degree_) throw error("degree mismatch in subtraction");
    ChiVec out = *this;
    for (const auto& [j, c] : other.terms_) out.add_term(j, -c);
    return out;
}

template <Side S>
ChiVec<S> ChiVec<S>::scaled(const RingElement& c) const {
    ChiVec out(ctx_, degree_);
    for (const auto& [j, v] : terms_) out.add_term(j, c * v);
    return out;
}

template <Side S>
bool ChiVec<S>::operator==(const ChiVec& other) const {
    if (!ctx_ || !other.ctx_) return is_zero() && other.is_zero();
    if (!ctx_->same_structure(*other.ctx_)) return false;
    if (is_zero() && other.is_zero()) return true;
    return degree_ == other.degree_ && terms_ == other.terms_;
}

template <Side S>
ChiVec<S> project_tensor(ContextPtr ctx, const RingElement& c, const MultiIndex& i) {
    const int d = i.degree();
    ctx->require_hypotheses(d);
    ChiVec<S> out(ctx, d);
    if (i.n != ctx->n()) throw error("alphabet mismatch");
    CanonicalIndex canon = classify(ctx->group(d), weight_character<S>(*ctx, d), i);
    if (!canon.zero) out.add_term(canon.rep, c * canon.coeff);
    return out;
}

template <Side S>
ChiVec<S> decomposable(ContextPtr ctx, const std::vector<std::vector<RingElement>>& columns) {
    const int d = static_cast<int>(columns.size());
    const int n = ctx->n();
    ctx->require_hypotheses(d);
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != n) throw error("column length mismatch");

    ChiVec<S> out(ctx, d);
    if (d == 0) {
        out.add_term(MultiIndex(n, {}), RingElement::one(ctx->ring()));
        return out;
    }
    ExactMatrix a(n, d, ctx->ring());
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= d; ++c)
            a.entry(r, c) = columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(r - 1)];

    std::vector<int> cols(static_cast<std::size_t>(d));
    for (int t = 1; t <= d; ++t) cols[static_cast<std::size_t>(t - 1)] = t;
    MultiIndex k(d, std::move(cols));

    const Character& weight = weight_character<S>(*ctx, d);
    for (const MultiIndex& j : ctx->basis(d))
        out.add_term(j, row_minor(a, j, k, ctx->group(d), weight));
    return out;
}

template <Side S>
ChiVec<S> multiply(const ChiVec<S>& a, const ChiVec<S>& b) {
    check_context(a.context(), b.context());
    const ContextPtr& ctx = a.context();
    const int d = a.degree() + b.degree();
    ctx->require_multiplicative(d);

    const PermutationGroup& w = ctx->group(d);
    const Character& weight = weight_character<S>(*ctx, d);
    ChiVec<S> out(ctx, d);
    for (const auto& [j, cj] : a.terms()) {
        for (const auto& [k, ck] : b.terms()) {
            std::vector<int> entries = j.entries;
            entries.insert(entries.end(), k.entries.begin(), k.entries.end());
            CanonicalIndex canon = classify(w, weight, MultiIndex(ctx->n(), std::move(entries)));
            if (!canon.zero) out.add_term(canon.rep, cj * ck * canon.coeff);
        }
    }
    return out;
}

template <Side S>
GradedChiVec<S> GradedChiVec<S>::unit(ContextPtr ctx) {
    GradedChiVec out(ctx);
    ChiVec<S> one(ctx, 0);
    one.add_term(MultiIndex(ctx->n(), {}), RingElement::one(ctx->ring()));
    out.set_part(std::move(one));
    return out;
}

template <Side S>
void GradedChiVec<S>::set_part(ChiVec<S> part) {
    if (!ctx_) ctx_ = part.context();
    check_context(ctx_, part.context());
    if (part.is_zero())
        parts_.erase(part.degree());
    else
        parts_.insert_or_assign(part.degree(), std::move(part));
}

template <Side S>
ChiVec<S> GradedChiVec<S>::part(int degree) const {
    auto it = parts_.find(degree);
    if (it != parts_.end()) return it->second;
    return ChiVec<S>(ctx_, degree);
}

template <Side S>
GradedChiVec<S> GradedChiVec<S>::operator+(const GradedChiVec& other) const {
    check_context(ctx_, other.ctx_);
    GradedChiVec out = *this;
    for (const auto& [d, part] : other.parts_) out.set_part(out.part(d) + part);
    return out;
}

template <Side S>
GradedChiVec<S> GradedChiVec<S>::scaled(const RingElement& c) const {
    GradedChiVec out(ctx_);
    for (const auto& [d, part] : parts_) out.set_part(part.scaled(c));
    return out;
}

template <Side S>
GradedChiVec<S> GradedChiVec<S>::grade_project(int degree) const {
    GradedChiVec out(ctx_);
    auto it = parts_.find(degree);
    if (it != parts_.end()) out.set_part(it->second);
    return out;
}

template <Side S>
bool GradedChiVec<S>::operator==(const GradedChiVec& other) const {
    if (!ctx_ || !other.ctx_) return is_zero() && other.is_zero();
    return ctx_->same_structure(*other.ctx_) && parts_ == other.parts_;
}

template <Side S>
GradedChiVec<S> multiply(const GradedChiVec<S>& a, const GradedChiVec<S>& b) {
    check_context(a.context(), b.context());
    GradedChiVec<S> out(a.context());
    for (const auto& [da, xa] : a.parts())
        for (const auto& [db, xb] : b.parts())
            out.set_part(out.part(da + db) + multiply(xa, xb));
    return out;
}

template <Side S>
PowerMapMatrix power_map(ContextPtr ctx, const ExactMatrix& u, int d) {
    if (u.cols() != ctx->n()) throw error("matrix width must match the context alphabet");
    ContextPtr target = ctx->with_alphabet(u.rows());
    const std::vector<MultiIndex>& cols = ctx->basis(d);
    const std::vector<MultiIndex>& rows = target->basis(d);

    PowerMapMatrix out{rows, cols,
                       ExactMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                                   ctx->ring())};
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<std::vector<RingElement>> images;
        for (int t = 0; t < d; ++t) {
            int source = cols[c].entries[static_cast<std::size_t>(t)];
            std::vector<RingElement> col;
            col.reserve(static_cast<std::size_t>(u.rows()));
            for (int r = 1; r <= u.rows(); ++r) col.push_back(u.entry(r, source));
            images.push_back(std::move(col));
        }
        ChiVec<S> image = decomposable<S>(target, images);
        for (std::size_t r = 0; r < rows.size(); ++r)
            out.matrix.entry(static_cast<int>(r) + 1, static_cast<int>(c) + 1) =
                image.coefficient(rows[r]);
    }
    return out;
}

template <Side S>
ChiVec<S> apply_power_map(const PowerMapMatrix& pm, ContextPtr target, const ChiVec<S>& x) {
    ChiVec<S> out(target, x.degree());
    for (std::size_t r = 0; r < pm.rows.size(); ++r) {
        RingElement sum = RingElement::zero(target->ring());
        for (std::size_t c = 0; c < pm.cols.size(); ++c) {
            RingElement xc = x.coefficient(pm.cols[c]);
            if (!xc.is_zero())
                sum += pm.matrix.entry(static_cast<int>(r) + 1, static_cast<int>(c) + 1) * xc;
        }
        out.add_term(pm.rows[r], sum);
    }
    return out;
}

template class ChiVec<Side::primal>;
template class ChiVec<Side::dual>;
template class GradedChiVec<Side::primal>;
template class GradedChiVec<Side::dual>;

template ChiVec<Side::primal> project_tensor<Side::primal>(ContextPtr, const RingElement&,
                                                           const MultiIndex&);
template ChiVec<Side::dual> project_tensor<Side::dual>(ContextPtr, const RingElement&,
                                                       const MultiIndex&);
template ChiVec<Side::primal> decomposable<Side::primal>(
    ContextPtr, const std::vector<std::vector<RingElement>>&);
template ChiVec<Side::dual> decomposable<Side::dual>(
    ContextPtr, const std::vector<std::vector<RingElement>>&);
template ChiVec<Side::primal> multiply<Side::primal>(const ChiVec<Side::primal>&,
                                                     const ChiVec<Side::primal>&);
template ChiVec<Side::dual> multiply<Side::dual>(const ChiVec<Side::dual>&,
                                                 const ChiVec<Side::dual>&);
template GradedChiVec<Side::primal> multiply<Side::primal>(const GradedChiVec<Side::primal>&,
                                                           const GradedChiVec<Side::primal>&);
template GradedChiVec<Side::dual> multiply<Side::dual>(const GradedChiVec<Side::dual>&,
                                                       const GradedChiVec<Side::dual>&);
template PowerMapMatrix power_map<Side::primal>(ContextPtr, const ExactMatrix&, int);
template PowerMapMatrix power_map<Side::dual>(ContextPtr, const ExactMatrix&, int);
template ChiVec<Side::primal> apply_power_map<Side::primal>(const PowerMapMatrix&, ContextPtr,
                                                            const ChiVec<Side::primal>&);
template ChiVec<Side::dual> apply_power_map<Side::dual>(const PowerMapMatrix&, ContextPtr,
                                                        const ChiVec<Side::dual>&);

}  // namespace semisym
