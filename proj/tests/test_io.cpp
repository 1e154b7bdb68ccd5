#include "semisym/io.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

using namespace semisym;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

RingElement q(long long v) { return RingElement::from_int(Int(v), kQ); }

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("semisym_io_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("index round trip") {
    MultiIndex j(3, {1, 3, 2});
    Json enc = index_json(j);
    CHECK(enc.dump() == "[1,3,2]");
    CHECK(index_from_json(enc, 3) == j);
    CHECK_THROWS_AS(index_from_json(enc, 2), error);
    CHECK_THROWS_AS(index_from_json(Json::parse("[0]"), 2), error);
    CHECK(index_from_json(Json::parse("[]"), 2) == MultiIndex(2, {}));
}

TEST_CASE("chi-vector round trip") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    ChiVector x(sym, 2);
    x.add_term(MultiIndex(2, {1, 1}), RingElement::rational(1, 2));
    x.add_term(MultiIndex(2, {1, 2}), q(-3));

    Json enc = chivec_json(x);
    CHECK(enc["degree"] == 2);
    REQUIRE(enc["terms"].size() == 2);
    CHECK(enc["terms"][0]["coeff"] == "1/2");

    ChiVector back = chivec_from_json<Side::primal>(sym, enc);
    CHECK(back == x);

    // Integer coefficients may arrive as JSON numbers.
    Json lit = Json::parse(R"({"degree": 1, "terms": [{"index": [2], "coeff": 4}]})");
    ChiVector y = chivec_from_json<Side::primal>(sym, lit);
    CHECK(y.coefficient(MultiIndex(2, {2})) == q(4));

    CHECK_THROWS_AS(
        chivec_from_json<Side::primal>(
            sym, Json::parse(R"({"degree": 2, "terms": [{"index": [2, 1], "coeff": 1}]})")),
        error);
}

TEST_CASE("tensor serialization") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    TensorVector t(sym, 2);
    t.add_term({MultiIndex(2, {1}), MultiIndex(2, {2})}, q(5));
    Json enc = tensor_json(t);
    CHECK(enc["slots"] == 2);
    REQUIRE(enc["terms"].size() == 1);
    CHECK(enc["terms"][0]["indices"].dump() == "[[1],[2]]");
    CHECK(enc["terms"][0]["coeff"] == "5");
}

TEST_CASE("matrix serialization and parsing") {
    ExactMatrix a = ExactMatrix::from_int_rows({{1, 2}, {3, 4}}, kQ);
    Json enc = matrix_json(a);
    CHECK(enc.dump() == R"([["1","2"],["3","4"]])");
    CHECK(matrix_from_json(enc, kQ) == a);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["2","3"]])"), kQ), error);

    ExactMatrix c = matrix_from_csv("1,2\n3,4\n", kQ);
    CHECK(c == a);
    ExactMatrix r = matrix_from_csv("1/2,-2\n", kQ);
    CHECK(r.entry(1, 1) == RingElement::rational(1, 2));
    CHECK(r.entry(1, 2) == q(-2));

    TempFile csv("m.csv", "1,2\n3,4\n");
    CHECK(load_matrix(csv.path, kQ) == a);
    TempFile js("m.json", R"([["1","2"],["3","4"]])");
    CHECK(load_matrix(js.path, kQ) == a);
    CHECK_THROWS_AS(load_matrix("semisym_io_test_missing.csv", kQ), error);
}

TEST_CASE("stage configuration files") {
    Json config = Json::parse(R"json({
        "stages": [
            {"degree": 1, "generators": [], "values": []},
            {"degree": 2, "generators": ["(1 2)"], "values": ["-1"]},
            {"degree": 3, "generators": ["(1 2)", "(1 2 3)"], "values": ["-1", "1"]}
        ]
    })json");
    CharacterSequence seq = sequence_from_json(config, kQ);
    CHECK(seq.max_degree() == 3);
    CHECK(seq.stage(2).group.order() == 2);
    CHECK(seq.stage(3).group.order() == 6);
    CHECK(seq.stage(3).chi.value(parse_permutation("(1 3)", 3)) == q(-1));
    CHECK(validate_sequence(seq).valid());

    // Missing degrees and duplicate degrees are rejected.
    Json gap = Json::parse(R"({"stages": [{"degree": 2, "generators": [], "values": []}]})");
    CHECK_THROWS_AS(sequence_from_json(gap, kQ), error);
    Json dup = Json::parse(R"({
        "stages": [
            {"degree": 1, "generators": [], "values": []},
            {"degree": 1, "generators": [], "values": []}
        ]
    })");
    CHECK_THROWS_AS(sequence_from_json(dup, kQ), error);
    Json mismatch = Json::parse(
        R"({"stages": [{"degree": 1, "generators": [], "values": ["1"]}]})");
    CHECK_THROWS_AS(sequence_from_json(mismatch, kQ), error);
}

TEST_CASE("validation and basis reports") {
    ContextPtr sym = Context::builtin(BuiltinKind::symmetric, kQ, 2, 2);
    Json v = validation_json(sym->validation());
    CHECK(v["valid"] == true);
    CHECK(v["issues"].empty());

    Json b = basis_json(*sym, 2);
    CHECK(b.dump() == "[[1,1],[1,2],[2,2]]");
}

TEST_CASE("diagnostic reports serialize every field") {
    Json z = z15_json(z15_counterexample());
    CHECK(z["image_cardinality"] == "273375");
    CHECK(z["image_cardinality_factored"] == "3^7 * 5^3");
    CHECK(z["image_cardinality_as_15_powers"] == "15^3 * 3^4");
    CHECK(z["cardinality_power_of_15"] == false);
    CHECK(z["quotient_free"] == false);
    CHECK(z["generators"].size() == 7);

    Json e = eisenstein_json(eisenstein_counterexample());
    CHECK(e["torsion"] == true);
    CHECK(e["e111_in_lattice"] == false);
    CHECK(e["quotient_free"] == false);
    CHECK(e["invariant_factors"].size() == 16);
}
