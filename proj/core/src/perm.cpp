#include "semisym/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace semisym {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)])
            throw error("not a permutation word");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> w(static_cast<std::size_t>(degree));
    for (int i = 1; i <= degree; ++i) w[static_cast<std::size_t>(i - 1)] = i;
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= degree(); ++i) w[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::padded(int target_degree) const {
    if (target_degree < degree()) throw error("padding cannot shrink a permutation");
    std::vector<int> w = word_;
    for (int i = degree() + 1; i <= target_degree; ++i) w.push_back(i);
    return Permutation(std::move(w));
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw error("degree mismatch in composition");
    std::vector<int> w(static_cast<std::size_t>(a.degree()));
    for (int x = 1; x <= a.degree(); ++x) w[static_cast<std::size_t>(x - 1)] = a(b(x));
    return Permutation(std::move(w));
}

Permutation omega(const Permutation& s) {
    std::vector<int> w(static_cast<std::size_t>(s.degree()) + 1);
    w[0] = 1;
    for (int i = 1; i <= s.degree(); ++i) w[static_cast<std::size_t>(i)] = s(i) + 1;
    return Permutation(std::move(w));
}

Permutation omega_power(const Permutation& s, int k) {
    if (k < 0) throw error("negative omega power");
    Permutation p = s;
    for (int i = 0; i < k; ++i) p = omega(p);
    return p;
}

Permutation omega_shift(const Permutation& s, int target_degree) {
    if (target_degree < s.degree() + 1) throw error("omega_shift target below degree+1");
    return omega_power(s, target_degree - s.degree());
}

Permutation parse_permutation(std::string_view text, int degree) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw error("expected point in permutation: " + std::string(text));
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<int> word;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                word.push_back(read_int());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ']') {
                    ++pos;
                    break;
                }
                throw error("malformed one-line permutation: " + std::string(text));
            }
        }
        if (static_cast<int>(word.size()) != degree)
            throw error("one-line word length does not match degree");
        return Permutation(std::move(word));
    }

    std::vector<int> word(static_cast<std::size_t>(degree));
    for (int i = 1; i <= degree; ++i) word[static_cast<std::size_t>(i - 1)] = i;
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw error("malformed cycle notation: " + std::string(text));
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            cycle.push_back(read_int());
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        if (pos >= text.size()) throw error("unterminated cycle: " + std::string(text));
        ++pos;  // ')'
        any = true;
        for (int v : cycle)
            if (v < 1 || v > degree) throw error("cycle point out of range");
        std::set<int> dedupe(cycle.begin(), cycle.end());
        if (dedupe.size() != cycle.size()) throw error("repeated point in cycle");
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            int from = cycle[t];
            int to = cycle[(t + 1) % cycle.size()];
            if (word[static_cast<std::size_t>(from - 1)] != from)
                throw error("cycles are not disjoint");
            word[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    if (!any) throw error("empty permutation text");
    return Permutation(std::move(word));
}

std::string cycle_string(const Permutation& p) {
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    std::ostringstream out;
    bool any = false;
    for (int start = 1; start <= p.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)] || p(start) == start) continue;
        out << '(';
        int x = start;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << x;
            seen[static_cast<std::size_t>(x - 1)] = true;
            x = p(x);
            first = false;
        } while (x != start);
        out << ')';
        any = true;
    }
    if (!any) return "()";
    return out.str();
}

PermutationGroup PermutationGroup::trivial(int degree) {
    return PermutationGroup(degree, {}, {Permutation::identity(degree)});
}

PermutationGroup PermutationGroup::symmetric(int degree, std::size_t max_order) {
    std::vector<Permutation> gens;
    for (int i = 1; i < degree; ++i) {
        std::vector<int> w(static_cast<std::size_t>(degree));
        for (int x = 1; x <= degree; ++x) w[static_cast<std::size_t>(x - 1)] = x;
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
        gens.emplace_back(std::move(w));
    }
    return closure(degree, std::move(gens), max_order);
}

PermutationGroup PermutationGroup::closure(int degree, std::vector<Permutation> generators,
                                           std::size_t max_order) {
    for (const Permutation& g : generators)
        if (g.degree() != degree) throw error("generator degree mismatch");
    std::set<Permutation> elems;
    elems.insert(Permutation::identity(degree));
    std::vector<Permutation> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& e : frontier) {
            for (const Permutation& g : generators) {
                Permutation c = compose(e, g);
                if (elems.insert(c).second) {
                    if (elems.size() > max_order)
                        throw error("group closure exceeds cap of " +
                                    std::to_string(max_order) + " elements");
                    next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Permutation> sorted(elems.begin(), elems.end());
    return PermutationGroup(degree, std::move(generators), std::move(sorted));
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Permutation> elements,
                                                 std::vector<Permutation> generators) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw error("empty element list");
    for (const Permutation& p : elements)
        if (p.degree() != degree) throw error("element degree mismatch");
    auto member = [&](const Permutation& p) {
        return std::binary_search(elements.begin(), elements.end(), p);
    };
    if (!member(Permutation::identity(degree))) throw error("element list lacks identity");
    for (const Permutation& a : elements)
        for (const Permutation& b : elements)
            if (!member(compose(a, b))) throw error("element list is not closed");
    if (generators.empty()) generators = elements;
    return PermutationGroup(degree, std::move(generators), std::move(elements));
}

bool PermutationGroup::contains(const Permutation& p) const {
    return p.degree() == degree_ &&
           std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermutationGroup::position_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw error("permutation not in group");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
    if (degree_ != g.degree()) return false;
    for (const Permutation& e : elements_)
        if (!g.contains(e)) return false;
    return true;
}

std::vector<Permutation> left_coset_reps(const PermutationGroup& g, const PermutationGroup& h) {
    if (!h.is_subgroup_of(g)) throw error("coset reps require a subgroup");
    std::set<Permutation> reps;
    std::set<Permutation> covered;
    for (const Permutation& e : g.elements()) {
        if (covered.count(e)) continue;
        Permutation best = e;
        for (const Permutation& x : h.elements()) {
            Permutation c = compose(e, x);
            if (c < best) best = c;
            covered.insert(std::move(c));
        }
        reps.insert(std::move(best));
    }
    return {reps.begin(), reps.end()};
}

PermutationGroup young_product(int n, const std::vector<std::pair<PermutationGroup, int>>& parts) {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<std::vector<Permutation>> shifted;
    std::vector<Permutation> gens;
    for (const auto& [group, offset] : parts) {
        if (group.degree() == 0) continue;
        if (offset < 0 || offset + group.degree() > n) throw error("block exceeds degree");
        for (int i = offset; i < offset + group.degree(); ++i) {
            if (used[static_cast<std::size_t>(i)]) throw error("overlapping blocks");
            used[static_cast<std::size_t>(i)] = true;
        }
        std::vector<Permutation> block;
        block.reserve(group.order());
        for (const Permutation& e : group.elements())
            block.push_back(omega_power(e, offset).padded(n));
        shifted.push_back(std::move(block));
        for (const Permutation& g : group.generators())
            gens.push_back(omega_power(g, offset).padded(n));
    }
    std::vector<Permutation> elems = {Permutation::identity(n)};
    for (const auto& block : shifted) {
        std::vector<Permutation> next;
        next.reserve(elems.size() * block.size());
        for (const Permutation& e : elems)
            for (const Permutation& b : block) next.push_back(compose(e, b));
        elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return PermutationGroup::from_elements(n, std::move(elems), std::move(gens));
}

}  // namespace semisym
