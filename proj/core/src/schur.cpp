#include "semisym/schur.hpp"

#include <algorithm>

namespace semisym {

ExactMatrix::ExactMatrix(int rows, int cols, const RingDescriptor& ring)
    : rows_(rows), cols_(cols), ring_(ring),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            RingElement::zero(ring)) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n, const RingDescriptor& ring) {
    ExactMatrix m(n, n, ring);
    for (int i = 1; i <= n; ++i) m.entry(i, i) = RingElement::one(ring);
    return m;
}

ExactMatrix ExactMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows,
                                       const RingDescriptor& ring) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(r, c, ring);
    for (int i = 1; i <= r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != c)
            throw error("ragged matrix rows");
        for (int j = 1; j <= c; ++j)
            m.entry(i, j) = RingElement::from_int(
                Int(rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]),
                ring);
    }
    return m;
}

RingElement& ExactMatrix::entry(int r, int c) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw error("matrix index out of range");
    return data_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c - 1)];
}

const RingElement& ExactMatrix::entry(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw error("matrix index out of range");
    return data_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c - 1)];
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix m(cols_, rows_, ring_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c) m.entry(c, r) = entry(r, c);
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw error("matrix dimension mismatch");
    if (a.ring() != b.ring()) throw error("matrix ring mismatch");
    ExactMatrix m(a.rows(), b.cols(), a.ring());
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= b.cols(); ++c) {
            RingElement sum = RingElement::zero(a.ring());
            for (int k = 1; k <= a.cols(); ++k) sum += a.entry(r, k) * b.entry(k, c);
            m.entry(r, c) = std::move(sum);
        }
    return m;
}

RingElement schur_direct(const ExactMatrix& a, const PermutationGroup& w,
                         const Character& chi) {
    if (a.rows() != a.cols()) throw error("schur function requires a square matrix");
    if (a.rows() != w.degree()) throw error("matrix side must equal the group degree");
    const int d = a.rows();
    RingElement sum = RingElement::zero(a.ring());
    for (std::size_t e = 0; e < w.order(); ++e) {
        Permutation inv = w.elements()[e].inverse();
        RingElement prod = chi.values()[e];
        for (int t = 1; t <= d && !prod.is_zero(); ++t) prod *= a.entry(inv(t), t);
        sum += prod;
    }
    return sum;
}

RingElement row_minor(const ExactMatrix& a, const MultiIndex& j, const MultiIndex& k,
                      const PermutationGroup& w, const Character& chi) {
    if (j.degree() != k.degree() || j.degree() != w.degree())
        throw error("row minor degree mismatch");
    const int d = j.degree();
    for (int v : j.entries)
        if (v > a.rows()) throw error("row index out of range");
    for (int v : k.entries)
        if (v > a.cols()) throw error("column index out of range");

    PermutationGroup stab = stabilizer(w, j);
    std::vector<Permutation> reps = left_coset_reps(w, stab);
    Character chi_inv = chi.inverted();
    RingElement sum = RingElement::zero(a.ring());
    for (const Permutation& t : reps) {
        MultiIndex tj = act(t, j);
        RingElement prod = chi_inv.value(t);
        for (int m = 1; m <= d && !prod.is_zero(); ++m)
            prod *= a.entry(tj.entries[static_cast<std::size_t>(m - 1)],
                            k.entries[static_cast<std::size_t>(m - 1)]);
        sum += prod;
    }
    return sum;
}

RingElement schur_laplace(const ExactMatrix& a, const Context& ctx,
                          const std::vector<int>& parts,
                          const std::vector<MultiIndex>& blocks) {
    const int n = a.rows();
    if (a.cols() != n) throw error("laplace expansion requires a square matrix");
    if (ctx.group(n).degree() != n) throw error("context degree mismatch");

    // The column block tuple must be canonical: its concatenation read as a
    // permutation word must be one of the composition representatives.
    if (blocks.size() != parts.size()) throw error("block count does not match composition");
    std::vector<int> concat;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].degree() != parts[b]) throw error("block size mismatch");
        for (int v : blocks[b].entries) concat.push_back(v);
    }
    const CompositionRepSet& m = ctx.reps(parts);
    Permutation word;
    try {
        word = Permutation(concat);
    } catch (const error&) {
        throw error("invalid block tuple: concatenation is not a rearrangement of 1..n");
    }
    if (!std::binary_search(m.reps.begin(), m.reps.end(), word))
        throw error("invalid block tuple: not a canonical composition representative");

    const Character& chi_n = ctx.chi(n);
    RingElement zeta_cols = chi_n.value(word);
    RingElement sum = RingElement::zero(a.ring());
    for (const Permutation& rep : m.reps) {
        RingElement term = chi_n.value(rep);
        int offset = 0;
        for (std::size_t b = 0; b < parts.size() && !term.is_zero(); ++b) {
            int p = parts[b];
            if (p == 0) continue;
            std::vector<int> row_entries;
            row_entries.reserve(static_cast<std::size_t>(p));
            for (int t = 1; t <= p; ++t) row_entries.push_back(rep(offset + t));
            MultiIndex row_block(n, std::move(row_entries));
            term *= row_minor(a, row_block, blocks[b], ctx.group(p), ctx.chi(p));
            offset += p;
        }
        sum += term;
    }
    return zeta_cols * sum;
}

LagrangeResult lagrange_check(const ExactMatrix& a, const PermutationGroup& w,
                              const Character& chi) {
    const int n = a.rows();
    const int d = a.cols();
    if (w.degree() != d) throw error("group degree must equal the column count");

    LagrangeResult out{RingElement::zero(a.ring()), RingElement::zero(a.ring()), false};
    out.lhs = schur_direct(a.transposed() * a, w, chi);

    std::vector<int> cols(static_cast<std::size_t>(d));
    for (int t = 1; t <= d; ++t) cols[static_cast<std::size_t>(t - 1)] = t;
    MultiIndex k(std::max(d, 1), cols);

    Character chi_inv = chi.inverted();
    for (const MultiIndex& j : enum_J(w, chi, n, d)) {
        Int stab_order = 0;
        for (const Permutation& s : w.elements())
            if (act(s, j) == j) ++stab_order;
        RingElement weight = RingElement::from_int(stab_order, a.ring());
        out.rhs += weight * row_minor(a, j, k, w, chi) * row_minor(a, j, k, w, chi_inv);
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

bool transpose_identity_check(const ExactMatrix& a, const PermutationGroup& w,
                              const Character& chi) {
    return schur_direct(a.transposed(), w, chi) == schur_direct(a, w, chi.inverted());
}

}  // namespace semisym
