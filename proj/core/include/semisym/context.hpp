// Shared evaluation context: coefficient ring, alphabet size, and the
// degree-indexed stage sequence, with memoized canonical bases, stabilizer
// orders, inverted characters and composition representatives.
#pragma once

#include "semisym/character.hpp"
#include "semisym/index.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace semisym {

class Context {
  public:
    static std::shared_ptr<const Context> make(const RingDescriptor& ring, int n,
                                               CharacterSequence seq);
    static std::shared_ptr<const Context> builtin(BuiltinKind kind, const RingDescriptor& ring,
                                                  int n, int max_degree, int truncation = 0);
    // Stage max_degree carries (w, chi); the lower stages are trivial.
    static std::shared_ptr<const Context> single_degree(const RingDescriptor& ring, int n,
                                                        const PermutationGroup& w,
                                                        const Character& chi);

    const RingDescriptor& ring() const { return ring_; }
    int n() const { return n_; }
    int max_degree() const { return seq_.max_degree(); }
    const CharacterSequence& sequence() const { return seq_; }

    const PermutationGroup& group(int d) const;   // d = 0 gives the trivial group
    const Character& chi(int d) const;
    const Character& chi_inverse(int d) const;

    // J(chi, n, d) in lexicographic order.
    const std::vector<MultiIndex>& basis(int d) const;
    // |W_j| for a degree-d index (not necessarily canonical).
    Int stabilizer_order(int d, const MultiIndex& j) const;
    const CompositionRepSet& reps(const std::vector<int>& parts) const;

    const ValidationReport& validation() const;
    bool valid_through(int d) const { return validation().valid_through(d); }
    // Integral domain + |W_d| invertible; throws hypothesis_error.
    void require_hypotheses(int d) const;
    // Valid sequence through degree d on top of the standing hypotheses;
    // throws validation_error / hypothesis_error.
    void require_multiplicative(int d) const;

    // Same stages over a different alphabet (used by power maps).
    std::shared_ptr<const Context> with_alphabet(int m) const;

    bool same_structure(const Context& other) const;

  private:
    Context(RingDescriptor ring, int n, CharacterSequence seq);

    RingDescriptor ring_;
    int n_;
    CharacterSequence seq_;
    PermutationGroup trivial0_ = PermutationGroup::trivial(0);
    Character chi0_;

    mutable std::mutex mu_;
    mutable std::map<int, std::vector<MultiIndex>> basis_;
    mutable std::map<int, Character> chi_inv_;
    mutable std::map<std::vector<int>, CompositionRepSet> reps_;
    mutable std::optional<ValidationReport> report_;
};

using ContextPtr = std::shared_ptr<const Context>;

}  // namespace semisym
