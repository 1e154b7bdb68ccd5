// Permutations in one-line notation (1-based images) and fully enumerated
// permutation groups. Composition applies the right factor first:
// compose(a, b)(x) = a(b(x)).
#pragma once

#include "semisym/ring.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semisym {

class Permutation {
  public:
    Permutation() = default;  // degree-0 identity
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(word_.size()); }
    int operator()(int x) const { return word_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& word() const { return word_; }

    bool is_identity() const;
    Permutation inverse() const;
    // Same mapping on 1..degree, fixed points up to target_degree.
    Permutation padded(int target_degree) const;
    // Parity of the permutation: +1 or -1.
    int sign() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

  private:
    std::vector<int> word_;
};

Permutation compose(const Permutation& a, const Permutation& b);

// The shift endomorphism: omega(s) fixes 1 and maps i+1 to s(i)+1.
Permutation omega(const Permutation& s);
// omega applied k times; the result has degree s.degree() + k.
Permutation omega_power(const Permutation& s, int k);
// omega applied (target_degree - degree) times.
Permutation omega_shift(const Permutation& s, int target_degree);

// Accepts cycle notation "(1 2)(3 4)", the identity "()", and one-line
// notation "[2,1,4,3]". Points must lie in 1..degree.
Permutation parse_permutation(std::string_view text, int degree);
std::string cycle_string(const Permutation& p);

class PermutationGroup {
  public:
    static constexpr std::size_t default_max_order = 50000;

    static PermutationGroup trivial(int degree);
    static PermutationGroup symmetric(int degree, std::size_t max_order = default_max_order);
    // Closure of the generators under composition (breadth-first).
    static PermutationGroup closure(int degree, std::vector<Permutation> generators,
                                    std::size_t max_order = default_max_order);
    // Wraps an explicit element list; verifies it forms a group. If no
    // generators are supplied the element list doubles as one.
    static PermutationGroup from_elements(int degree, std::vector<Permutation> elements,
                                          std::vector<Permutation> generators = {});

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const;
    // Position of p in the sorted element list; throws if absent.
    std::size_t position_of(const Permutation& p) const;
    bool is_subgroup_of(const PermutationGroup& g) const;

    bool operator==(const PermutationGroup& other) const {
        return degree_ == other.degree_ && elements_ == other.elements_;
    }

  private:
    PermutationGroup(int degree, std::vector<Permutation> gens, std::vector<Permutation> elems)
        : degree_(degree), generators_(std::move(gens)), elements_(std::move(elems)) {}

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;  // sorted by one-line word
};

// Lexicographically minimal representatives of the left cosets gH, sorted.
std::vector<Permutation> left_coset_reps(const PermutationGroup& g, const PermutationGroup& h);

// Internal direct product of groups placed at consecutive offsets inside
// S_n: each (group, offset) pair contributes omega^offset(group) padded to
// degree n. Blocks must not overlap.
PermutationGroup young_product(int n, const std::vector<std::pair<PermutationGroup, int>>& parts);

}  // namespace semisym
