// Multi-indices over the alphabet 1..n, the place-permutation action
// (s.i)_k = i_{s^{-1}(k)}, canonical orbit representatives, and the
// composition coset machinery used by Laplace expansions.
#pragma once

#include "semisym/character.hpp"
#include "semisym/perm.hpp"
#include "semisym/ring.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace semisym {

struct MultiIndex {
    int n = 1;                // alphabet size
    std::vector<int> entries; // values in 1..n; empty for degree 0

    MultiIndex() = default;
    MultiIndex(int alphabet, std::vector<int> e);

    int degree() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.entries == b.entries;
    }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.entries <=> b.entries;
    }

    std::string str() const;
};

MultiIndex act(const Permutation& s, const MultiIndex& i);

// Subgroup of w fixing i under the place-permutation action.
PermutationGroup stabilizer(const PermutationGroup& w, const MultiIndex& i);

// Projection data of a tensor basis vector e_i into the quotient power:
// either zero (chi nontrivial on the stabilizer of i) or the orbit minimum
// together with the unit chi(s) for any s with s.i == min.
struct CanonicalIndex {
    bool zero = true;
    MultiIndex rep;
    RingElement coeff;
};

// Requires the standing hypotheses: integral-domain coefficients and |w|
// invertible; throws hypothesis_error otherwise.
CanonicalIndex classify(const PermutationGroup& w, const Character& chi, const MultiIndex& i);

// All canonical representatives in lexicographic order: orbit minima whose
// stabilizer lies in the kernel of chi. Scans the full n^d grid.
std::vector<MultiIndex> enum_J(const PermutationGroup& w, const Character& chi, int n, int d,
                               std::size_t max_indices = 1000000);

class CharacterSequence;

// Lexicographically minimal representatives of the left cosets of
// X = W_{p_1} x omega^{p_1}(W_{p_2}) x ... inside W_n, for a composition
// (p_1, ..., p_k) of n with zero parts allowed.
struct CompositionRepSet {
    int n = 0;
    std::vector<int> parts;
    PermutationGroup ambient;  // W_n
    PermutationGroup block_group;  // X
    std::vector<Permutation> reps; // sorted
};

CompositionRepSet composition_reps(const CharacterSequence& seq, int n,
                                   const std::vector<int>& parts);

// The block decomposition of each representative: rep -> (first p_1
// entries, next p_2 entries, ...), each block a multi-index over 1..n.
std::vector<std::vector<MultiIndex>> rep_blocks(const CompositionRepSet& m);

// Same tuples computed independently by scanning canonical indices whose
// concatenation canonicalizes to (1, ..., n).
std::vector<std::vector<MultiIndex>> enum_J_composition(const CharacterSequence& seq, int n,
                                                        const std::vector<int>& parts);

// zp . z = the representative of (zp z) X, written zp z upsilon with
// upsilon in X; block_factors are upsilon's blocks brought back to S_{p_b}.
struct DotAction {
    Permutation rep;
    Permutation factor;
    std::vector<Permutation> block_factors;
};

DotAction dot_action(const Permutation& zp, const Permutation& z, const CompositionRepSet& m);

// Verifies both coset-factorization bijections for a refinement: the pair
// sets M(n; p, h) x M(p; inner) and M(n; d, q) x omega^d M(q; tail) must
// map bijectively onto the refined set under (a, b) -> rep(a b X).
bool factorization_bijection_check(const CharacterSequence& seq, int n, int p, int h,
                                   const std::vector<int>& inner);

}  // namespace semisym
