#include "semisym/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace semisym {

namespace {

std::string coeff_string(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw error("expected a coefficient string or integer, got " + j.dump());
}

}  // namespace

Json index_json(const MultiIndex& i) {
    Json out = Json::array();
    for (int e : i.entries) out.push_back(e);
    return out;
}

MultiIndex index_from_json(const Json& j, int n) {
    if (!j.is_array()) throw error("expected an index array, got " + j.dump());
    std::vector<int> entries;
    entries.reserve(j.size());
    for (const Json& e : j) entries.push_back(e.get<int>());
    return MultiIndex(n, std::move(entries));
}

template <Side S>
Json chivec_json(const ChiVec<S>& x) {
    Json out;
    out["degree"] = x.degree();
    Json terms = Json::array();
    for (const auto& [j, c] : x.terms())
        terms.push_back(Json{{"index", index_json(j)}, {"coeff", c.str()}});
    out["terms"] = std::move(terms);
    return out;
}

template <Side S>
ChiVec<S> chivec_from_json(ContextPtr ctx, const Json& j) {
    if (!ctx) throw error("missing context");
    if (!j.contains("degree")) throw error("operand is missing \"degree\"");
    ChiVec<S> out(ctx, j["degree"].get<int>());
    if (j.contains("terms"))
        for (const Json& t : j["terms"])
            out.add_term(index_from_json(t.at("index"), ctx->n()),
                         RingElement::parse(coeff_string(t.at("coeff")), ctx->ring()));
    return out;
}

template <Side S>
Json tensor_json(const TensorVec<S>& t) {
    Json out;
    out["slots"] = t.slots();
    Json terms = Json::array();
    for (const auto& [key, c] : t.terms()) {
        Json indices = Json::array();
        for (const MultiIndex& j : key) indices.push_back(index_json(j));
        terms.push_back(Json{{"indices", std::move(indices)}, {"coeff", c.str()}});
    }
    out["terms"] = std::move(terms);
    return out;
}

Json matrix_json(const ExactMatrix& a) {
    Json out = Json::array();
    for (int r = 1; r <= a.rows(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= a.cols(); ++c) row.push_back(a.entry(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

ExactMatrix matrix_from_json(const Json& j, const RingDescriptor& ring) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw error("expected a matrix as an array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    ExactMatrix out(rows, cols, ring);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw error("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            out.entry(r + 1, c + 1) = RingElement::parse(coeff_string(j[r][c]), ring);
    }
    return out;
}

ExactMatrix matrix_from_csv(const std::string& text, const RingDescriptor& ring) {
    std::vector<std::vector<std::string>> cells;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) row.push_back(field);
        cells.push_back(std::move(row));
    }
    if (cells.empty()) throw error("empty matrix");
    const int rows = static_cast<int>(cells.size());
    const int cols = static_cast<int>(cells[0].size());
    ExactMatrix out(rows, cols, ring);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(cells[r].size()) != cols) throw error("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            out.entry(r + 1, c + 1) = RingElement::parse(cells[r][c], ring);
    }
    return out;
}

ExactMatrix load_matrix(const std::string& path, const RingDescriptor& ring) {
    std::ifstream file(path);
    if (!file) throw error("cannot open " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return matrix_from_json(Json::parse(buffer.str()), ring);
    return matrix_from_csv(buffer.str(), ring);
}

CharacterSequence sequence_from_json(const Json& config, const RingDescriptor& ring,
                                     std::size_t max_group) {
    if (!config.contains("stages") || !config["stages"].is_array())
        throw error("config is missing a \"stages\" array");
    std::vector<const Json*> by_degree(config["stages"].size(), nullptr);
    for (const Json& stage : config["stages"]) {
        int d = stage.at("degree").get<int>();
        if (d < 1 || d > static_cast<int>(by_degree.size()))
            throw error("stage degrees must cover 1.." + std::to_string(by_degree.size()));
        if (by_degree[static_cast<std::size_t>(d - 1)])
            throw error("duplicate stage for degree " + std::to_string(d));
        by_degree[static_cast<std::size_t>(d - 1)] = &stage;
    }

    std::vector<SequenceStage> stages;
    for (std::size_t k = 0; k < by_degree.size(); ++k) {
        const Json& stage = *by_degree[k];
        const int d = static_cast<int>(k) + 1;
        std::vector<Permutation> gens;
        if (stage.contains("generators"))
            for (const Json& g : stage["generators"])
                gens.push_back(parse_permutation(g.get<std::string>(), d));
        PermutationGroup group = gens.empty() ? PermutationGroup::trivial(d)
                                              : PermutationGroup::closure(d, gens, max_group);
        std::vector<RingElement> values;
        if (stage.contains("values"))
            for (const Json& v : stage["values"])
                values.push_back(RingElement::parse(coeff_string(v), ring));
        if (values.size() != group.generators().size())
            throw error("stage " + std::to_string(d) + " has " + std::to_string(values.size()) +
                        " values for " + std::to_string(group.generators().size()) +
                        " generators");
        Character chi = values.empty() ? Character::trivial(group, ring)
                                       : Character::from_generators(group, values);
        stages.push_back({std::move(group), std::move(chi)});
    }
    return CharacterSequence(ring, std::move(stages));
}

Json validation_json(const ValidationReport& r) {
    Json out;
    out["valid"] = r.valid();
    Json issues = Json::array();
    for (const ValidationIssue& issue : r.issues)
        issues.push_back(Json{{"kind", to_string(issue.kind)},
                              {"degree", issue.degree},
                              {"detail", issue.detail}});
    out["issues"] = std::move(issues);
    return out;
}

Json basis_json(const Context& ctx, int d) {
    Json out = Json::array();
    for (const MultiIndex& j : ctx.basis(d)) out.push_back(index_json(j));
    return out;
}

Json z15_json(const Z15Report& r) {
    Json out;
    Json gens = Json::array();
    for (const std::vector<Int>& g : r.generators) {
        Json row = Json::array();
        for (const Int& x : g) row.push_back(x.str());
        gens.push_back(std::move(row));
    }
    out["generators"] = std::move(gens);
    out["disjoint_supports"] = r.disjoint_supports;
    out["image_rank_mod3"] = r.image_rank_mod3;
    out["image_rank_mod5"] = r.image_rank_mod5;
    out["image_cardinality"] = r.image_cardinality.str();
    out["image_cardinality_factored"] = "3^" + std::to_string(r.image_rank_mod3) + " * 5^" +
                                        std::to_string(r.image_rank_mod5);
    if (r.image_rank_mod3 >= r.image_rank_mod5)
        out["image_cardinality_as_15_powers"] =
            "15^" + std::to_string(r.image_rank_mod5) + " * 3^" +
            std::to_string(r.image_rank_mod3 - r.image_rank_mod5);
    out["cardinality_power_of_15"] = r.cardinality_power_of_15;
    out["relation_rank_mod3"] = r.relation_rank_mod3;
    out["relation_rank_mod5"] = r.relation_rank_mod5;
    out["quotient_exp3"] = r.quotient_exp3;
    out["quotient_exp5"] = r.quotient_exp5;
    out["quotient_free"] = r.quotient_free;
    return out;
}

Json eisenstein_json(const EisensteinReport& r) {
    Json out;
    Json factors = Json::array();
    for (const Int& f : r.invariant_factors) factors.push_back(f.str());
    out["invariant_factors"] = std::move(factors);
    out["torsion"] = r.torsion;
    out["e111_in_lattice"] = r.e111_in_lattice;
    out["quotient_free"] = r.quotient_free;
    return out;
}

template Json chivec_json<Side::primal>(const ChiVec<Side::primal>&);
template Json chivec_json<Side::dual>(const ChiVec<Side::dual>&);
template ChiVec<Side::primal> chivec_from_json<Side::primal>(ContextPtr, const Json&);
template ChiVec<Side::dual> chivec_from_json<Side::dual>(ContextPtr, const Json&);
template Json tensor_json<Side::primal>(const TensorVec<Side::primal>&);
template Json tensor_json<Side::dual>(const TensorVec<Side::dual>&);

}  // namespace semisym
