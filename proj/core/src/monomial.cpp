#include "semisym/monomial.hpp"

#include <algorithm>

namespace semisym {

void SparseVector::add(std::size_t i, const RingElement& c) {
    if (c.is_zero()) return;
    auto it = coeff.find(i);
    if (it == coeff.end()) {
        coeff.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeff.erase(it);
}

SparseVector scale(const RingElement& c, const SparseVector& z) {
    SparseVector out;
    for (const auto& [i, v] : z.coeff) out.add(i, c * v);
    return out;
}

SparseVector add(const SparseVector& a, const SparseVector& b) {
    SparseVector out = a;
    for (const auto& [i, v] : b.coeff) out.add(i, v);
    return out;
}

MonomialModule::MonomialModule(PermutationGroup w, RingDescriptor ring, std::size_t basis_size,
                               const ActionFn& action, const GammaFn& gamma,
                               std::vector<MultiIndex> labels)
    : w_(std::move(w)), ring_(ring), size_(basis_size), labels_(std::move(labels)) {
    const std::vector<Permutation>& elems = w_.elements();
    action_.resize(elems.size());
    for (std::size_t e = 0; e < elems.size(); ++e) {
        action_[e].resize(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            std::size_t img = action(elems[e], i);
            if (img >= size_) throw error("action image out of range");
            action_[e][i] = img;
        }
    }
    gamma_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        gamma_[i].reserve(elems.size());
        for (std::size_t e = 0; e < elems.size(); ++e) {
            RingElement g = gamma(i, elems[e]);
            if (g.descriptor() != ring_) throw error("gamma value ring mismatch");
            if (!try_invert(g)) throw not_a_unit("gamma value " + g.str() + " is not a unit");
            gamma_[i].push_back(std::move(g));
        }
    }

    // Left action: (s t) i = s (t i), with the identity acting trivially.
    std::size_t id_pos = w_.position_of(Permutation::identity(w_.degree()));
    for (std::size_t i = 0; i < size_; ++i) {
        if (action_[id_pos][i] != i) throw error("identity does not act trivially");
        if (!gamma_[i][id_pos].is_one()) throw error("gamma at the identity is not one");
    }
    for (std::size_t s = 0; s < elems.size(); ++s) {
        for (std::size_t t = 0; t < elems.size(); ++t) {
            std::size_t st = w_.position_of(compose(elems[s], elems[t]));
            for (std::size_t i = 0; i < size_; ++i) {
                std::size_t ti = action_[t][i];
                if (action_[st][i] != action_[s][ti])
                    throw error("action is not a left action");
                // Cocycle law gamma_i(s t) = gamma_{t i}(s) gamma_i(t).
                if (gamma_[i][st] != gamma_[ti][s] * gamma_[i][t])
                    throw error("gamma violates the cocycle law");
            }
        }
    }
}

MonomialModule MonomialModule::tensor_power(const PermutationGroup& w,
                                            const RingDescriptor& ring, int n, int d) {
    if (w.degree() != d) throw error("group degree must equal the tensor power");
    std::vector<MultiIndex> labels;
    std::vector<int> cur(static_cast<std::size_t>(d), 1);
    if (d == 0) {
        labels.emplace_back(n, std::vector<int>{});
    } else {
        while (true) {
            labels.emplace_back(n, cur);
            int t = d - 1;
            while (t >= 0 && cur[static_cast<std::size_t>(t)] == n) {
                cur[static_cast<std::size_t>(t)] = 1;
                --t;
            }
            if (t < 0) break;
            ++cur[static_cast<std::size_t>(t)];
        }
    }
    std::map<MultiIndex, std::size_t> position;
    for (std::size_t i = 0; i < labels.size(); ++i) position.emplace(labels[i], i);

    auto action = [labels, position](const Permutation& s, std::size_t i) {
        return position.at(semisym::act(s, labels[i]));
    };
    auto gamma = [ring](std::size_t, const Permutation&) { return RingElement::one(ring); };
    return MonomialModule(w, ring, labels.size(), action, gamma, labels);
}

SparseVector MonomialModule::act(const Permutation& s, const SparseVector& z) const {
    std::size_t pos = w_.position_of(s);
    SparseVector out;
    for (const auto& [i, c] : z.coeff) out.add(action_[pos][i], c * gamma_[i][pos]);
    return out;
}

SparseVector a_chi(const MonomialModule& m, const Character& chi, const SparseVector& z) {
    auto inv_order = invert_integer(Int(m.group().order()), m.ring());
    if (!inv_order)
        throw not_a_unit("group order " + std::to_string(m.group().order()) +
                         " is not invertible in " + m.ring().name());
    Character chi_inv = chi.inverted();
    SparseVector sum;
    const std::vector<Permutation>& elems = m.group().elements();
    for (std::size_t e = 0; e < elems.size(); ++e) {
        const RingElement& wgt = chi_inv.values()[e];
        for (const auto& [i, c] : z.coeff)
            sum.add(m.apply(e, i), wgt * c * m.gamma(i, e));
    }
    return scale(*inv_order, sum);
}

SparseVector A_chi_unnormalized(const MonomialModule& m, const Character& weight,
                                const SparseVector& z) {
    SparseVector sum;
    const std::vector<Permutation>& elems = m.group().elements();
    for (std::size_t e = 0; e < elems.size(); ++e) {
        const RingElement& wgt = weight.values()[e];
        for (const auto& [i, c] : z.coeff)
            sum.add(m.apply(e, i), wgt * c * m.gamma(i, e));
    }
    return sum;
}

IndexClassification classify_indices(const MonomialModule& m, const Character& chi) {
    const std::size_t count = m.size();
    const std::size_t order = m.group().order();
    const RingElement one = RingElement::one(m.ring());

    IndexClassification out;
    std::vector<bool> seen(count, false);
    for (std::size_t i = 0; i < count; ++i) {
        if (seen[i]) continue;
        std::size_t least = i;
        for (std::size_t e = 0; e < order; ++e) {
            std::size_t img = m.apply(e, i);
            seen[img] = true;
            least = std::min(least, img);
        }
        out.orbit_reps.push_back(least);
    }

    for (std::size_t i = 0; i < count; ++i) {
        bool kernel = true;
        for (std::size_t e = 0; e < order && kernel; ++e)
            if (m.apply(e, i) == i && m.gamma(i, e) != chi.values()[e]) kernel = false;
        (kernel ? out.in_kernel : out.outside).push_back(i);
    }

    // I(chi, M) is stable under the action.
    for (std::size_t i : out.in_kernel)
        for (std::size_t e = 0; e < order; ++e) {
            std::size_t img = m.apply(e, i);
            if (!std::binary_search(out.in_kernel.begin(), out.in_kernel.end(), img))
                throw error("kernel index set is not action-stable");
        }

    for (std::size_t i : out.orbit_reps) {
        if (std::binary_search(out.in_kernel.begin(), out.in_kernel.end(), i))
            out.j_set.push_back(i);
        else
            out.j0_set.push_back(i);
    }
    return out;
}

SubmoduleBases submodule_bases(const MonomialModule& m, const Character& chi) {
    if (!m.ring().is_integral_domain())
        throw hypothesis_error("coefficient ring " + m.ring().name() +
                               " is not an integral domain");
    if (!invert_integer(Int(m.group().order()), m.ring()))
        throw hypothesis_error("group order " + std::to_string(m.group().order()) +
                               " is not invertible in " + m.ring().name());

    IndexClassification cls = classify_indices(m, chi);
    const std::vector<Permutation>& elems = m.group().elements();
    Character chi_inv = chi.inverted();

    SubmoduleBases out;
    for (std::size_t i : cls.orbit_reps) {
        // Coset representatives of W modulo the stabilizer of i: one s per
        // distinct image s i, skipping the stabilizer itself. The member
        // e_i - chi^{-1}(s) gamma_i(s) e_{s i} is chi^{-1}(s) times the
        // generator chi(s) e_i - s e_i, so it always lies in the kernel of
        // a_chi; for involutive characters it is the usual difference
        // family.
        std::map<std::size_t, std::size_t> first_to_image;
        for (std::size_t e = 0; e < elems.size(); ++e) {
            std::size_t img = m.apply(e, i);
            if (img != i) first_to_image.emplace(img, e);
        }
        for (const auto& [img, e] : first_to_image) {
            SparseVector v;
            v.add(i, RingElement::one(m.ring()));
            v.add(img, -(chi_inv.values()[e] * m.gamma(i, e)));
            out.relation_basis.push_back(std::move(v));
        }
    }
    for (std::size_t i : cls.j0_set) {
        SparseVector v;
        v.add(i, RingElement::one(m.ring()));
        out.relation_basis.push_back(std::move(v));
    }
    for (std::size_t j : cls.j_set) {
        SparseVector v;
        v.add(j, RingElement::one(m.ring()));
        out.fixed_basis.push_back(a_chi(m, chi, v));
    }
    out.quotient_basis = cls.j_set;
    return out;
}

}  // namespace semisym
