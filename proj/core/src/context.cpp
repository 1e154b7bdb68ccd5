#include "semisym/context.hpp"

#include <algorithm>

namespace semisym {

Context::Context(RingDescriptor ring, int n, CharacterSequence seq)
    : ring_(ring), n_(n), seq_(std::move(seq)), chi0_(Character::trivial(trivial0_, ring)) {
    if (n_ < 1) throw error("alphabet size must be positive");
    if (seq_.ring() != ring_) throw error("sequence ring does not match context ring");
}

std::shared_ptr<const Context> Context::make(const RingDescriptor& ring, int n,
                                             CharacterSequence seq) {
    return std::shared_ptr<const Context>(new Context(ring, n, std::move(seq)));
}

std::shared_ptr<const Context> Context::builtin(BuiltinKind kind, const RingDescriptor& ring,
                                                int n, int max_degree, int truncation) {
    return make(ring, n, CharacterSequence::builtin(kind, ring, max_degree, truncation));
}

std::shared_ptr<const Context> Context::single_degree(const RingDescriptor& ring, int n,
                                                      const PermutationGroup& w,
                                                      const Character& chi) {
    std::vector<SequenceStage> stages;
    for (int d = 1; d < w.degree(); ++d) {
        PermutationGroup g = PermutationGroup::trivial(d);
        Character c = Character::trivial(g, ring);
        stages.push_back({std::move(g), std::move(c)});
    }
    stages.push_back({w, chi});
    return make(ring, n, CharacterSequence(ring, std::move(stages)));
}

const PermutationGroup& Context::group(int d) const {
    if (d == 0) return trivial0_;
    return seq_.stage(d).group;
}

const Character& Context::chi(int d) const {
    if (d == 0) return chi0_;
    return seq_.stage(d).chi;
}

const Character& Context::chi_inverse(int d) const {
    if (d == 0) return chi0_;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = chi_inv_.find(d);
    if (it == chi_inv_.end()) it = chi_inv_.emplace(d, seq_.stage(d).chi.inverted()).first;
    return it->second;
}

const std::vector<MultiIndex>& Context::basis(int d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = basis_.find(d);
    if (it == basis_.end()) {
        if (d == 0)
            it = basis_.emplace(d, std::vector<MultiIndex>{MultiIndex(n_, {})}).first;
        else
            it = basis_.emplace(d, enum_J(seq_.stage(d).group, seq_.stage(d).chi, n_, d)).first;
    }
    return it->second;
}

Int Context::stabilizer_order(int d, const MultiIndex& j) const {
    if (d == 0) return 1;
    const PermutationGroup& w = seq_.stage(d).group;
    std::size_t count = 0;
    for (const Permutation& s : w.elements())
        if (act(s, j) == j) ++count;
    return Int(count);
}

const CompositionRepSet& Context::reps(const std::vector<int>& parts) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reps_.find(parts);
    if (it == reps_.end()) {
        int n = 0;
        for (int p : parts) n += p;
        it = reps_.emplace(parts, composition_reps(seq_, n, parts)).first;
    }
    return it->second;
}

const ValidationReport& Context::validation() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!report_) report_ = validate_sequence(seq_);
    return *report_;
}

void Context::require_hypotheses(int d) const {
    if (!ring_.is_integral_domain())
        throw hypothesis_error("coefficient ring " + ring_.name() +
                               " is not an integral domain");
    if (!invert_integer(Int(group(d).order()), ring_))
        throw hypothesis_error("group order " + std::to_string(group(d).order()) +
                               " at degree " + std::to_string(d) + " is not invertible in " +
                               ring_.name());
}

void Context::require_multiplicative(int d) const {
    require_hypotheses(d);
    if (!valid_through(d)) {
        const ValidationReport& report = validation();
        for (const ValidationIssue& issue : report.issues)
            if (issue.degree <= d)
                throw validation_error("sequence invalid through degree " + std::to_string(d) +
                                       ": " + to_string(issue.kind) + ": " + issue.detail);
    }
}

std::shared_ptr<const Context> Context::with_alphabet(int m) const {
    return make(ring_, m, seq_);
}

bool Context::same_structure(const Context& other) const {
    if (this == &other) return true;
    if (ring_ != other.ring_ || n_ != other.n_ || max_degree() != other.max_degree())
        return false;
    for (int d = 1; d <= max_degree(); ++d) {
        if (!(seq_.stage(d).group == other.seq_.stage(d).group)) return false;
        if (!(seq_.stage(d).chi == other.seq_.stage(d).chi)) return false;
    }
    return true;
}

}  // namespace semisym
