// Linear characters of permutation groups with values in the units of a
// coefficient ring, and degree-indexed sequences of them compatible with
// the shift endomorphism omega.
#pragma once

#include "semisym/perm.hpp"
#include "semisym/ring.hpp"

#include <string>
#include <vector>

namespace semisym {

struct inconsistent_character : error {
    explicit inconsistent_character(const std::string& msg) : error(msg) {}
};

class Character {
  public:
    static Character trivial(const PermutationGroup& g, const RingDescriptor& ring);
    // Parity character; values are the images of +-1 in the ring.
    static Character sign(const PermutationGroup& g, const RingDescriptor& ring);
    // Multiplicative extension of values on the group's generators. Throws
    // inconsistent_character when the values do not extend, not_a_unit when
    // a generator value is not invertible.
    static Character from_generators(const PermutationGroup& g,
                                     const std::vector<RingElement>& generator_values);
    static Character from_values(const PermutationGroup& g, std::vector<RingElement> values);

    const PermutationGroup& group() const { return group_; }
    RingDescriptor ring() const;
    const RingElement& value(const Permutation& p) const;
    const std::vector<RingElement>& values() const { return values_; }

    Character inverted() const;
    bool is_trivial() const;

    bool operator==(const Character& other) const {
        return group_ == other.group_ && values_ == other.values_;
    }

  private:
    Character(PermutationGroup g, std::vector<RingElement> values)
        : group_(std::move(g)), values_(std::move(values)) {}

    PermutationGroup group_;
    std::vector<RingElement> values_;  // parallel to group_.elements()
};

struct SequenceStage {
    PermutationGroup group;  // subgroup of S_d for stage degree d
    Character chi;           // character of that group
};

enum class BuiltinKind { tensor, symmetric, exterior, truncated };

BuiltinKind parse_builtin_kind(std::string_view text, int& truncation);

class CharacterSequence {
  public:
    CharacterSequence(RingDescriptor ring, std::vector<SequenceStage> stages);

    // tensor: trivial groups; symmetric: S_d with the trivial character;
    // exterior: S_d with sign; truncated(k): trivial through degree k, then
    // S_d with sign.
    static CharacterSequence builtin(BuiltinKind kind, const RingDescriptor& ring,
                                     int max_degree, int truncation = 0);

    const RingDescriptor& ring() const { return ring_; }
    int max_degree() const { return static_cast<int>(stages_.size()); }
    const SequenceStage& stage(int d) const;  // 1-based

  private:
    RingDescriptor ring_;
    std::vector<SequenceStage> stages_;
};

struct ValidationIssue {
    enum class Kind {
        admissibility,       // stage group is not a subgroup of S_d
        subgroup,            // W_d (padded) is not contained in W_{d+1}
        omega_subgroup,      // omega(W_d) is not contained in W_{d+1}
        restriction,         // chi_{d+1} restricted to W_d differs from chi_d
        omega_restriction,   // chi_{d+1} on omega(W_d) differs from chi_d
        involution,          // a character value v has v^2 != 1
        plus_minus_one,      // over an integral domain a value is not +-1
    };
    Kind kind;
    int degree;  // stage at which the issue was detected
    std::string detail;
};

std::string to_string(ValidationIssue::Kind kind);

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    // True when no issue involves a stage of degree <= d.
    bool valid_through(int d) const;
};

ValidationReport validate_sequence(const CharacterSequence& seq);

Character invert_character(const Character& chi);

}  // namespace semisym
