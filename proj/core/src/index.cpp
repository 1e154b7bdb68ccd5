#include "semisym/index.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace semisym {

MultiIndex::MultiIndex(int alphabet, std::vector<int> e) : n(alphabet), entries(std::move(e)) {
    if (n < 1) throw error("alphabet size must be positive");
    for (int v : entries)
        if (v < 1 || v > n) throw error("multi-index entry out of range");
}

std::string MultiIndex::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k) out << ',';
        out << entries[k];
    }
    out << ')';
    return out.str();
}

MultiIndex act(const Permutation& s, const MultiIndex& i) {
    if (s.degree() != i.degree()) throw error("degree mismatch in index action");
    std::vector<int> out(i.entries.size());
    for (int t = 1; t <= s.degree(); ++t)
        out[static_cast<std::size_t>(s(t) - 1)] = i.entries[static_cast<std::size_t>(t - 1)];
    MultiIndex r;
    r.n = i.n;
    r.entries = std::move(out);
    return r;
}

PermutationGroup stabilizer(const PermutationGroup& w, const MultiIndex& i) {
    std::vector<Permutation> elems;
    for (const Permutation& s : w.elements())
        if (act(s, i) == i) elems.push_back(s);
    return PermutationGroup::from_elements(w.degree(), std::move(elems));
}

namespace {

void require_hypotheses(const PermutationGroup& w, const RingDescriptor& ring) {
    if (!ring.is_integral_domain())
        throw hypothesis_error("coefficient ring " + ring.name() + " is not an integral domain");
    if (!invert_integer(Int(w.order()), ring))
        throw hypothesis_error("group order " + std::to_string(w.order()) +
                               " is not invertible in " + ring.name());
}

}  // namespace

CanonicalIndex classify(const PermutationGroup& w, const Character& chi, const MultiIndex& i) {
    require_hypotheses(w, chi.ring());
    if (w.degree() != i.degree()) throw error("degree mismatch in classify");

    const RingElement one = RingElement::one(chi.ring());
    bool have = false;
    MultiIndex best;
    std::size_t best_idx = 0;
    for (std::size_t idx = 0; idx < w.order(); ++idx) {
        MultiIndex moved = act(w.elements()[idx], i);
        if (moved == i && chi.values()[idx] != one) {
            CanonicalIndex out;
            out.zero = true;
            out.coeff = RingElement::zero(chi.ring());
            return out;  // chi nontrivial on the stabilizer
        }
        if (!have || moved < best) {
            best = std::move(moved);
            best_idx = idx;
            have = true;
        }
    }
    CanonicalIndex out;
    out.zero = false;
    out.rep = std::move(best);
    out.coeff = chi.values()[best_idx];
    return out;
}

std::vector<MultiIndex> enum_J(const PermutationGroup& w, const Character& chi, int n, int d,
                               std::size_t max_indices) {
    require_hypotheses(w, chi.ring());
    if (w.degree() != d) throw error("group degree must equal d");
    if (d == 0) return {MultiIndex(n, {})};

    double total = 1;
    for (int t = 0; t < d; ++t) total *= n;
    if (total > static_cast<double>(max_indices))
        throw error("index grid exceeds cap of " + std::to_string(max_indices));

    const RingElement one = RingElement::one(chi.ring());
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(d), 1);
    while (true) {
        MultiIndex i(n, cur);
        bool minimal = true;
        bool trivial_on_stab = true;
        for (std::size_t idx = 0; idx < w.order() && minimal && trivial_on_stab; ++idx) {
            MultiIndex moved = act(w.elements()[idx], i);
            if (moved < i) minimal = false;
            if (moved == i && chi.values()[idx] != one) trivial_on_stab = false;
        }
        if (minimal && trivial_on_stab) out.push_back(std::move(i));

        int t = d - 1;
        while (t >= 0 && cur[static_cast<std::size_t>(t)] == n) {
            cur[static_cast<std::size_t>(t)] = 1;
            --t;
        }
        if (t < 0) break;
        ++cur[static_cast<std::size_t>(t)];
    }
    return out;
}

CompositionRepSet composition_reps(const CharacterSequence& seq, int n,
                                   const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw error("negative composition part");
        sum += p;
    }
    if (sum != n) throw error("composition does not sum to the degree");
    if (n < 0 || n > seq.max_degree()) throw error("degree outside the sequence range");
    if (n == 0) {
        PermutationGroup trivial0 = PermutationGroup::trivial(0);
        return CompositionRepSet{0, parts, trivial0, trivial0,
                                 {Permutation::identity(0)}};
    }

    std::vector<std::pair<PermutationGroup, int>> blocks;
    int offset = 0;
    for (int p : parts) {
        if (p > 0) blocks.emplace_back(seq.stage(p).group, offset);
        offset += p;
    }
    PermutationGroup x = young_product(n, blocks);
    const PermutationGroup& ambient = seq.stage(n).group;
    if (!x.is_subgroup_of(ambient))
        throw error("block product is not contained in the ambient stage group");

    std::vector<Permutation> reps = left_coset_reps(ambient, x);
    return CompositionRepSet{n, parts, ambient, std::move(x), std::move(reps)};
}

std::vector<std::vector<MultiIndex>> rep_blocks(const CompositionRepSet& m) {
    std::vector<std::vector<MultiIndex>> out;
    out.reserve(m.reps.size());
    for (const Permutation& rep : m.reps) {
        std::vector<MultiIndex> blocks;
        int offset = 0;
        for (int p : m.parts) {
            std::vector<int> entries;
            entries.reserve(static_cast<std::size_t>(p));
            for (int t = 1; t <= p; ++t) entries.push_back(rep(offset + t));
            blocks.emplace_back(m.n, std::move(entries));
            offset += p;
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

std::vector<std::vector<MultiIndex>> enum_J_composition(const CharacterSequence& seq, int n,
                                                        const std::vector<int>& parts) {
    CompositionRepSet m = composition_reps(seq, n, parts);
    const SequenceStage& top = seq.stage(n);

    // Independent scan: tuples of canonical indices whose concatenation is a
    // rearrangement of (1..n) canonicalizing to (1..n).
    std::vector<std::vector<MultiIndex>> block_choices;
    for (int p : parts)
        block_choices.push_back(p == 0 ? std::vector<MultiIndex>{MultiIndex(n, {})}
                                       : enum_J(seq.stage(p).group, seq.stage(p).chi, n, p));

    std::vector<std::vector<MultiIndex>> out;
    std::vector<std::size_t> pick(block_choices.size(), 0);
    while (true) {
        std::vector<int> concat;
        concat.reserve(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < pick.size(); ++b)
            for (int v : block_choices[b][pick[b]].entries) concat.push_back(v);
        std::vector<int> sorted = concat;
        std::sort(sorted.begin(), sorted.end());
        bool is_permutation = true;
        for (int t = 0; t < n; ++t)
            if (sorted[static_cast<std::size_t>(t)] != t + 1) is_permutation = false;
        if (is_permutation) {
            MultiIndex word(n, concat);
            CanonicalIndex c = classify(top.group, top.chi, word);
            if (!c.zero && c.rep.entries == sorted) {
                std::vector<MultiIndex> tuple;
                for (std::size_t b = 0; b < pick.size(); ++b)
                    tuple.push_back(block_choices[b][pick[b]]);
                out.push_back(std::move(tuple));
            }
        }
        std::size_t b = pick.size();
        while (b > 0 && pick[b - 1] + 1 == block_choices[b - 1].size()) {
            pick[b - 1] = 0;
            --b;
        }
        if (b == 0) break;
        ++pick[b - 1];
    }

    // Cross-check against the coset representatives.
    std::vector<std::vector<MultiIndex>> from_reps = rep_blocks(m);
    std::sort(from_reps.begin(), from_reps.end());
    std::sort(out.begin(), out.end());
    if (from_reps != out)
        throw error("coset representatives and canonical-index tuples disagree");
    return out;
}

DotAction dot_action(const Permutation& zp, const Permutation& z, const CompositionRepSet& m) {
    if (!m.ambient.contains(zp) || !m.ambient.contains(z))
        throw error("dot action arguments must lie in the ambient group");
    Permutation product = compose(zp, z);
    Permutation best = product;
    Permutation best_x = Permutation::identity(m.n);
    for (const Permutation& x : m.block_group.elements()) {
        Permutation candidate = compose(product, x);
        if (candidate < best) {
            best = candidate;
            best_x = x;
        }
    }
    DotAction out;
    out.rep = best;
    out.factor = best_x;
    int offset = 0;
    for (int p : m.parts) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(p));
        for (int t = 1; t <= p; ++t) w.push_back(best_x(offset + t) - offset);
        out.block_factors.emplace_back(std::move(w));
        offset += p;
    }
    return out;
}

bool factorization_bijection_check(const CharacterSequence& seq, int n, int p, int h,
                                   const std::vector<int>& inner) {
    if (p + h != n) throw error("p + h must equal n");
    int inner_sum = 0;
    for (int v : inner) inner_sum += v;
    if (inner_sum != p) throw error("inner composition must sum to p");

    std::vector<int> refined = inner;
    refined.push_back(h);
    CompositionRepSet fine = composition_reps(seq, n, refined);

    auto image_matches = [&](const std::vector<Permutation>& products) {
        std::set<Permutation> image;
        for (const Permutation& prod : products) {
            Permutation best = prod;
            for (const Permutation& x : fine.block_group.elements()) {
                Permutation candidate = compose(prod, x);
                if (candidate < best) best = candidate;
            }
            if (!image.insert(best).second) return false;  // not injective
        }
        std::set<Permutation> target(fine.reps.begin(), fine.reps.end());
        return image == target;
    };

    // First factorization: M(n; p, h) x M(p; inner).
    CompositionRepSet coarse = composition_reps(seq, n, {p, h});
    std::vector<Permutation> products;
    if (p == 0) {
        for (const Permutation& rho : coarse.reps) products.push_back(rho);
    } else {
        CompositionRepSet inner_set = composition_reps(seq, p, inner);
        for (const Permutation& rho : coarse.reps)
            for (const Permutation& sigma : inner_set.reps)
                products.push_back(compose(rho, sigma.padded(n)));
    }
    if (!image_matches(products)) return false;

    // Second factorization: M(n; d, q) x omega^d M(q; tail) where d is the
    // first inner part and the tail is the remaining refined composition.
    if (inner.empty()) return true;
    int d = inner[0];
    int q = n - d;
    std::vector<int> tail(inner.begin() + 1, inner.end());
    tail.push_back(h);
    CompositionRepSet head_set = composition_reps(seq, n, {d, q});
    products.clear();
    if (q == 0) {
        for (const Permutation& rho : head_set.reps) products.push_back(rho);
    } else {
        CompositionRepSet tail_set = composition_reps(seq, q, tail);
        for (const Permutation& rho : head_set.reps)
            for (const Permutation& sigma : tail_set.reps)
                products.push_back(compose(rho, omega_power(sigma, d)));
    }
    return image_matches(products);
}

}  // namespace semisym
