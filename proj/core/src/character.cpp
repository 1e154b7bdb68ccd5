#include "semisym/character.hpp"

#include <deque>
#include <sstream>

namespace semisym {

Character Character::trivial(const PermutationGroup& g, const RingDescriptor& ring) {
    std::vector<RingElement> vals(g.order(), RingElement::one(ring));
    return Character(g, std::move(vals));
}

Character Character::sign(const PermutationGroup& g, const RingDescriptor& ring) {
    std::vector<RingElement> vals;
    vals.reserve(g.order());
    RingElement one = RingElement::one(ring);
    for (const Permutation& p : g.elements()) vals.push_back(p.sign() > 0 ? one : -one);
    return Character(g, std::move(vals));
}

Character Character::from_values(const PermutationGroup& g, std::vector<RingElement> values) {
    if (values.size() != g.order()) throw error("value count does not match group order");
    return Character(g, std::move(values));
}

Character Character::from_generators(const PermutationGroup& g,
                                     const std::vector<RingElement>& generator_values) {
    const std::vector<Permutation>& gens = g.generators();
    if (gens.size() != generator_values.size())
        throw error("generator value count mismatch");
    RingDescriptor ring =
        generator_values.empty() ? RingDescriptor::rational() : generator_values[0].descriptor();
    for (const RingElement& v : generator_values) {
        if (v.descriptor() != ring) throw error("mixed rings in generator values");
        if (!try_invert(v))
            throw not_a_unit("character value " + v.str() + " is not a unit");
    }

    std::vector<RingElement> values(g.order(), RingElement::zero(ring));
    std::vector<bool> known(g.order(), false);
    std::size_t id_pos = g.position_of(Permutation::identity(g.degree()));
    values[id_pos] = RingElement::one(ring);
    known[id_pos] = true;

    std::deque<std::size_t> frontier = {id_pos};
    while (!frontier.empty()) {
        std::size_t pos = frontier.front();
        frontier.pop_front();
        const Permutation& e = g.elements()[pos];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Permutation next = compose(e, gens[k]);
            std::size_t npos = g.position_of(next);
            RingElement v = values[pos] * generator_values[k];
            if (known[npos]) {
                if (values[npos] != v) {
                    std::ostringstream msg;
                    msg << "generator values do not extend to a character: element "
                        << cycle_string(next) << " receives " << values[npos].str() << " and "
                        << v.str();
                    throw inconsistent_character(msg.str());
                }
            } else {
                values[npos] = std::move(v);
                known[npos] = true;
                frontier.push_back(npos);
            }
        }
    }
    for (bool k : known)
        if (!k) throw inconsistent_character("generators do not generate the group");
    return Character(g, std::move(values));
}

RingDescriptor Character::ring() const {
    if (values_.empty()) return RingDescriptor::rational();
    return values_[0].descriptor();
}

const RingElement& Character::value(const Permutation& p) const {
    return values_[group_.position_of(p)];
}

Character Character::inverted() const {
    std::vector<RingElement> vals;
    vals.reserve(values_.size());
    for (const RingElement& v : values_) {
        auto inv = try_invert(v);
        if (!inv) throw not_a_unit("character value " + v.str() + " is not a unit");
        vals.push_back(std::move(*inv));
    }
    return Character(group_, std::move(vals));
}

bool Character::is_trivial() const {
    for (const RingElement& v : values_)
        if (!v.is_one()) return false;
    return true;
}

Character invert_character(const Character& chi) { return chi.inverted(); }

BuiltinKind parse_builtin_kind(std::string_view text, int& truncation) {
    truncation = 0;
    if (text == "tensor") return BuiltinKind::tensor;
    if (text == "symmetric") return BuiltinKind::symmetric;
    if (text == "exterior") return BuiltinKind::exterior;
    if (text.rfind("truncated:", 0) == 0) {
        std::string digits(text.substr(10));
        if (digits.empty()) throw error("missing truncation bound");
        truncation = std::stoi(digits);
        if (truncation < 0) throw error("negative truncation bound");
        return BuiltinKind::truncated;
    }
    throw error("unknown builtin sequence: " + std::string(text));
}

CharacterSequence::CharacterSequence(RingDescriptor ring, std::vector<SequenceStage> stages)
    : ring_(ring), stages_(std::move(stages)) {
    for (std::size_t d = 0; d < stages_.size(); ++d) {
        const SequenceStage& s = stages_[d];
        if (s.group.degree() != static_cast<int>(d) + 1)
            throw error("stage " + std::to_string(d + 1) + " has wrong degree");
        if (!(s.chi.group() == s.group)) throw error("stage character group mismatch");
        if (s.chi.ring() != ring_) throw error("stage character ring mismatch");
    }
}

const SequenceStage& CharacterSequence::stage(int d) const {
    if (d < 1 || d > max_degree()) throw error("stage degree out of range");
    return stages_[static_cast<std::size_t>(d - 1)];
}

CharacterSequence CharacterSequence::builtin(BuiltinKind kind, const RingDescriptor& ring,
                                             int max_degree, int truncation) {
    std::vector<SequenceStage> stages;
    for (int d = 1; d <= max_degree; ++d) {
        PermutationGroup g = PermutationGroup::trivial(d);
        bool sign = false;
        switch (kind) {
            case BuiltinKind::tensor: break;
            case BuiltinKind::symmetric: g = PermutationGroup::symmetric(d); break;
            case BuiltinKind::exterior:
                g = PermutationGroup::symmetric(d);
                sign = true;
                break;
            case BuiltinKind::truncated:
                if (d > truncation) {
                    g = PermutationGroup::symmetric(d);
                    sign = true;
                }
                break;
        }
        Character chi = sign ? Character::sign(g, ring) : Character::trivial(g, ring);
        stages.push_back({std::move(g), std::move(chi)});
    }
    return CharacterSequence(ring, std::move(stages));
}

std::string to_string(ValidationIssue::Kind kind) {
    switch (kind) {
        case ValidationIssue::Kind::admissibility: return "admissibility";
        case ValidationIssue::Kind::subgroup: return "subgroup";
        case ValidationIssue::Kind::omega_subgroup: return "omega-subgroup";
        case ValidationIssue::Kind::restriction: return "restriction";
        case ValidationIssue::Kind::omega_restriction: return "omega-restriction";
        case ValidationIssue::Kind::involution: return "involution";
        case ValidationIssue::Kind::plus_minus_one: return "plus-minus-one";
    }
    return "?";
}

bool ValidationReport::valid_through(int d) const {
    for (const ValidationIssue& issue : issues)
        if (issue.degree <= d) return false;
    return true;
}

ValidationReport validate_sequence(const CharacterSequence& seq) {
    ValidationReport report;
    const RingDescriptor& ring = seq.ring();
    RingElement one = RingElement::one(ring);
    RingElement minus_one = -one;

    for (int d = 1; d <= seq.max_degree(); ++d) {
        const SequenceStage& s = seq.stage(d);
        const std::vector<Permutation>& elems = s.group.elements();
        for (std::size_t idx = 0; idx < elems.size(); ++idx) {
            const RingElement& v = s.chi.values()[idx];
            if (v * v != one)
                report.issues.push_back({ValidationIssue::Kind::involution, d,
                                         "chi_" + std::to_string(d) + "(" +
                                             cycle_string(elems[idx]) + ") = " + v.str() +
                                             " is not an involution"});
            if (ring.is_integral_domain() && v != one && v != minus_one)
                report.issues.push_back({ValidationIssue::Kind::plus_minus_one, d,
                                         "chi_" + std::to_string(d) + "(" +
                                             cycle_string(elems[idx]) + ") = " + v.str() +
                                             " is not +-1 over an integral domain"});
        }
    }

    for (int d = 1; d < seq.max_degree(); ++d) {
        const SequenceStage& lo = seq.stage(d);
        const SequenceStage& hi = seq.stage(d + 1);
        for (const Permutation& p : lo.group.elements()) {
            Permutation embedded = p.padded(d + 1);
            Permutation shifted = omega(p);
            if (!hi.group.contains(embedded)) {
                report.issues.push_back({ValidationIssue::Kind::subgroup, d + 1,
                                         "W_" + std::to_string(d) + " element " +
                                             cycle_string(p) + " is missing from W_" +
                                             std::to_string(d + 1)});
                continue;
            }
            if (!hi.group.contains(shifted)) {
                report.issues.push_back({ValidationIssue::Kind::omega_subgroup, d + 1,
                                         "omega(" + cycle_string(p) + ") is missing from W_" +
                                             std::to_string(d + 1)});
                continue;
            }
            if (hi.chi.value(embedded) != lo.chi.value(p))
                report.issues.push_back(
                    {ValidationIssue::Kind::restriction, d + 1,
                     "chi_" + std::to_string(d + 1) + "(" + cycle_string(p) +
                         ") = " + hi.chi.value(embedded).str() + " but chi_" +
                         std::to_string(d) + "(" + cycle_string(p) +
                         ") = " + lo.chi.value(p).str()});
            if (hi.chi.value(shifted) != lo.chi.value(p))
                report.issues.push_back(
                    {ValidationIssue::Kind::omega_restriction, d + 1,
                     "chi_" + std::to_string(d + 1) + "(omega(" + cycle_string(p) +
                         ")) = " + hi.chi.value(shifted).str() + " but chi_" +
                         std::to_string(d) + "(" + cycle_string(p) +
                         ") = " + lo.chi.value(p).str()});
        }
    }
    return report;
}

}  // namespace semisym
