// Batch front end over the semisym library. Builds a context from flags
// or a JSON stage file, runs one subcommand, and prints compact JSON
// (default) or plain text. Output is deterministic byte for byte: bases
// are sorted and coefficients use canonical strings.
//
// Exit codes: 0 success, 1 validation failure (or any other error),
// 2 standing-hypothesis violation.

#include "semisym/coalgebra.hpp"
#include "semisym/diag.hpp"
#include "semisym/inner.hpp"
#include "semisym/io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ss = semisym;
using ss::Json;

namespace {

std::size_t group_cap() {
    const char* raw = std::getenv("SEMISYM_MAX_GROUP");
    if (!raw || !*raw) return ss::PermutationGroup::default_max_order;
    return static_cast<std::size_t>(std::stoull(raw));
}

// Operand arguments are either a path or an inline JSON literal.
Json read_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return Json::parse(arg);
    std::ifstream file(arg);
    if (!file) throw ss::error("cannot open " + arg);
    return Json::parse(file);
}

struct CommonOpts {
    std::string ring_text = "Q";
    int n = 2;
    std::string builtin = "symmetric";
    std::string config_path;
    std::string format = "json";
    int max_degree = 0;  // 0 means: whatever the command needs
};

void add_common(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_option("--ring", opt.ring_text, "coefficient ring: Q, Z, mod:m, eisenstein");
    cmd->add_option("--n", opt.n, "alphabet size (module rank)");
    cmd->add_option("--builtin", opt.builtin,
                    "stage sequence: tensor, symmetric, exterior, truncated:k");
    cmd->add_option("--config", opt.config_path, "JSON stage file (overrides --builtin)");
    cmd->add_option("--max-degree", opt.max_degree, "top degree of the stage sequence");
    cmd->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

ss::ContextPtr build_context(const CommonOpts& opt, int needed_degree) {
    ss::RingDescriptor ring = ss::parse_ring_descriptor(opt.ring_text);
    if (!opt.config_path.empty()) {
        Json config = read_json_arg(opt.config_path);
        return ss::Context::make(ring, opt.n,
                                 ss::sequence_from_json(config, ring, group_cap()));
    }
    int top = opt.max_degree > 0 ? opt.max_degree : needed_degree;
    if (top < 1) top = 1;
    int truncation = 0;
    ss::BuiltinKind kind = ss::parse_builtin_kind(opt.builtin, truncation);
    return ss::Context::builtin(kind, ring, opt.n, top, truncation);
}

std::vector<int> parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::istringstream fields(text);
    std::string field;
    while (std::getline(fields, field, ',')) parts.push_back(std::stoi(field));
    if (parts.empty()) throw ss::error("empty composition");
    return parts;
}

const char* symbol(ss::Side s) { return s == ss::Side::primal ? "e" : "e*"; }

template <ss::Side S>
std::string chivec_text(const ss::ChiVec<S>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [j, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.str() + " ";
        out += symbol(S) + j.str();
    }
    return out;
}

template <ss::Side S>
std::string tensor_text(const ss::TensorVec<S>& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : t.terms()) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.str() + " ";
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s) out += " (x) ";
            out += symbol(S) + key[s].str();
        }
    }
    return out;
}

void emit(const std::string& format, const Json& j, const std::string& text) {
    if (format == "text")
        std::cout << text;
    else
        std::cout << j.dump() << "\n";
}

// ---- subcommands ----

int run_basis(const CommonOpts& opt, int degree) {
    ss::ContextPtr ctx = build_context(opt, degree);
    std::string text;
    for (const ss::MultiIndex& j : ctx->basis(degree)) text += j.str() + "\n";
    emit(opt.format, ss::basis_json(*ctx, degree), text);
    return 0;
}

int run_table(const CommonOpts& opt, int degree, int degree2) {
    if (degree2 <= 0) degree2 = degree;
    ss::ContextPtr ctx = build_context(opt, degree + degree2);
    Json rows = Json::array();
    std::string text;
    for (const ss::MultiIndex& j : ctx->basis(degree)) {
        for (const ss::MultiIndex& k : ctx->basis(degree2)) {
            ss::ChiVector p = ss::multiply(ss::ChiVector::basis_element(ctx, j),
                                           ss::ChiVector::basis_element(ctx, k));
            rows.push_back(Json{{"left", ss::index_json(j)},
                                {"right", ss::index_json(k)},
                                {"product", ss::chivec_json(p)["terms"]}});
            text += "e" + j.str() + " * e" + k.str() + " = " + chivec_text(p) + "\n";
        }
    }
    emit(opt.format, rows, text);
    return 0;
}

int run_schur(const CommonOpts& opt, const std::string& matrix_arg,
              const std::string& composition) {
    ss::RingDescriptor ring = ss::parse_ring_descriptor(opt.ring_text);
    ss::ExactMatrix a = matrix_arg.empty()
                            ? throw ss::error("schur requires --matrix")
                            : ss::load_matrix(matrix_arg, ring);
    if (a.rows() != a.cols()) throw ss::error("schur requires a square matrix");
    CommonOpts local = opt;
    local.n = a.rows();
    ss::ContextPtr ctx = build_context(local, a.rows());
    const int d = a.rows();
    ctx->require_hypotheses(d);
    ss::RingElement direct = ss::schur_direct(a, ctx->group(d), ctx->chi(d));

    Json out;
    out["direct"] = direct.str();
    std::string text = "direct = " + direct.str() + "\n";
    if (!composition.empty()) {
        std::vector<int> parts = parse_composition(composition);
        Json expansions = Json::array();
        bool all_equal = true;
        for (const std::vector<ss::MultiIndex>& blocks :
             ss::enum_J_composition(ctx->sequence(), d, parts)) {
            ss::RingElement v = ss::schur_laplace(a, *ctx, parts, blocks);
            all_equal = all_equal && v == direct;
            Json tuple = Json::array();
            std::string label;
            for (const ss::MultiIndex& b : blocks) {
                tuple.push_back(ss::index_json(b));
                label += b.str();
            }
            expansions.push_back(Json{{"blocks", std::move(tuple)}, {"value", v.str()}});
            text += "laplace at " + label + " = " + v.str() + "\n";
        }
        out["laplace"] = std::move(expansions);
        out["all_equal"] = all_equal;
        text += std::string("all equal: ") + (all_equal ? "yes" : "no") + "\n";
    }
    emit(opt.format, out, text);
    return 0;
}

int run_pair(const CommonOpts& opt, const std::string& vec_arg, const std::string& form_arg) {
    Json jx = read_json_arg(vec_arg);
    Json jf = read_json_arg(form_arg);
    int top = std::max(jx.at("degree").get<int>(), jf.at("degree").get<int>());
    ss::ContextPtr ctx = build_context(opt, top);
    ss::RingElement v = ss::pair(ss::chivec_from_json<ss::Side::primal>(ctx, jx),
                                 ss::chivec_from_json<ss::Side::dual>(ctx, jf));
    emit(opt.format, Json{{"value", v.str()}}, "value = " + v.str() + "\n");
    return 0;
}

int run_comul(const CommonOpts& opt, const std::string& input_arg, int slots) {
    Json jx = read_json_arg(input_arg);
    ss::ContextPtr ctx = build_context(opt, jx.at("degree").get<int>());
    ss::TensorVector t = ss::comul(ss::chivec_from_json<ss::Side::primal>(ctx, jx), slots);
    emit(opt.format, ss::tensor_json(t), tensor_text(t) + "\n");
    return 0;
}

int run_inner(const CommonOpts& opt, const std::string& side, const std::string& vec_arg,
              const std::string& form_arg) {
    Json jx = read_json_arg(vec_arg);
    Json jf = read_json_arg(form_arg);
    int top = std::max(jx.at("degree").get<int>(), jf.at("degree").get<int>());
    ss::ContextPtr ctx = build_context(opt, top);
    ss::ChiVector a = ss::chivec_from_json<ss::Side::primal>(ctx, jx);
    ss::ChiForm f = ss::chivec_from_json<ss::Side::dual>(ctx, jf);
    if (side == "left") {
        ss::ChiForm g = ss::left_inner(a, f);
        emit(opt.format, ss::chivec_json(g), chivec_text(g) + "\n");
    } else {
        ss::ChiVector y = ss::right_inner(a, f);
        emit(opt.format, ss::chivec_json(y), chivec_text(y) + "\n");
    }
    return 0;
}

// ---- the check suite ----

ss::RingElement rand_scalar(const ss::RingDescriptor& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    return ss::RingElement::from_int(coeff(rng), ring);
}

template <ss::Side S>
ss::ChiVec<S> rand_vec(ss::ContextPtr ctx, int d, std::mt19937& rng) {
    const auto& basis = ctx->basis(d);
    ss::ChiVec<S> out(ctx, d);
    if (basis.empty()) return out;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 2; ++t) out.add_term(basis[pick(rng)], rand_scalar(ctx->ring(), rng));
    return out;
}

std::vector<std::vector<ss::RingElement>> rand_columns(ss::ContextPtr ctx, int d,
                                                       std::mt19937& rng) {
    std::vector<std::vector<ss::RingElement>> cols(static_cast<std::size_t>(d));
    for (auto& col : cols) {
        col.resize(static_cast<std::size_t>(ctx->n()));
        for (auto& x : col) x = rand_scalar(ctx->ring(), rng);
    }
    return cols;
}

ss::ExactMatrix rand_matrix(int rows, int cols, const ss::RingDescriptor& ring,
                            std::mt19937& rng) {
    ss::ExactMatrix a(rows, cols, ring);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            a.entry(r, c) = ss::RingElement::from_int(coeff(rng), ring);
    return a;
}

int run_check(const CommonOpts& opt, int samples, unsigned seed) {
    const int top = opt.max_degree > 0 ? opt.max_degree : 4;
    CommonOpts local = opt;
    local.max_degree = top;
    ss::ContextPtr ctx = build_context(local, top);
    std::mt19937 rng(seed);

    Json out;
    out["ring"] = ctx->ring().name();
    out["n"] = ctx->n();
    out["max_degree"] = top;
    const ss::ValidationReport& report = ctx->validation();
    out["validation"] = ss::validation_json(report);

    std::string text;
    if (!report.valid()) {
        for (const ss::ValidationIssue& issue : report.issues)
            text += "FAIL validation degree " + std::to_string(issue.degree) + ": " +
                    ss::to_string(issue.kind) + ": " + issue.detail + "\n";
        emit(opt.format, out, text);
        return 1;
    }
    text += "PASS sequence-validation\n";

    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool pass) {
        checks.push_back(Json{{"name", name}, {"pass", pass}});
        text += std::string(pass ? "PASS " : "FAIL ") + name + "\n";
        all = all && pass;
    };

    const int small = std::min(top, 3);

    bool assoc = true;
    for (int s = 0; s < samples; ++s) {
        std::uniform_int_distribution<int> da(0, top);
        int d1 = da(rng);
        std::uniform_int_distribution<int> db(0, top - d1);
        int d2 = db(rng);
        std::uniform_int_distribution<int> dc(0, top - d1 - d2);
        int d3 = dc(rng);
        ss::ChiVector a = rand_vec<ss::Side::primal>(ctx, d1, rng);
        ss::ChiVector b = rand_vec<ss::Side::primal>(ctx, d2, rng);
        ss::ChiVector c = rand_vec<ss::Side::primal>(ctx, d3, rng);
        assoc = assoc && ss::multiply(ss::multiply(a, b), c) == ss::multiply(a, ss::multiply(b, c));
    }
    record("associativity", assoc);

    bool coassoc = true, counit_ok = true;
    for (int d = 0; d <= std::min(top, 4); ++d)
        for (const ss::MultiIndex& j : ctx->basis(d)) {
            ss::ChiVector e = ss::ChiVector::basis_element(ctx, j);
            coassoc = coassoc && ss::coassociativity_check(e, 3);
            counit_ok = counit_ok && ss::counit_law_check(e);
        }
    record("coassociativity", coassoc);
    record("counit-laws", counit_ok);

    bool lagrange = true;
    for (int d = 1; d <= small; ++d)
        for (int s = 0; s < std::max(1, samples / 4); ++s) {
            ss::ExactMatrix a = rand_matrix(ctx->n(), d, ctx->ring(), rng);
            lagrange = lagrange && ss::lagrange_check(a, ctx->group(d), ctx->chi(d)).equal;
        }
    record("lagrange", lagrange);

    if (ctx->n() <= top) {
        bool schur_ok = true;
        const int d = ctx->n();
        std::vector<int> parts = d > 1 ? std::vector<int>{1, d - 1} : std::vector<int>{d};
        auto tuples = ss::enum_J_composition(ctx->sequence(), d, parts);
        for (int s = 0; s < std::max(1, samples / 4); ++s) {
            ss::ExactMatrix a = rand_matrix(d, d, ctx->ring(), rng);
            ss::RingElement direct = ss::schur_direct(a, ctx->group(d), ctx->chi(d));
            for (const auto& blocks : tuples)
                schur_ok = schur_ok && ss::schur_laplace(a, *ctx, parts, blocks) == direct;
        }
        record("schur-laplace", schur_ok);
    }

    bool laplace_pair = true, dual_ok = true;
    for (int d = 2; d <= small; ++d) {
        std::vector<int> parts{1, d - 1};
        for (int s = 0; s < std::max(1, samples / 4); ++s) {
            auto xs = rand_columns(ctx, d, rng);
            auto ys = rand_columns(ctx, d, rng);
            laplace_pair = laplace_pair && ss::pair_laplace(ctx, xs, ys, parts).equal;
            dual_ok = dual_ok && ss::duality_check(ctx, xs, ys, parts);
        }
    }
    record("pair-laplace", laplace_pair);
    record("comul-duality", dual_ok);

    bool adj_left = true, adj_right = true;
    for (int s = 0; s < samples; ++s) {
        std::uniform_int_distribution<int> dn(0, small);
        int d = dn(rng);
        std::uniform_int_distribution<int> dq(0, d);
        int q = dq(rng);
        ss::ChiVector x = rand_vec<ss::Side::primal>(ctx, d - q, rng);
        ss::ChiVector a = rand_vec<ss::Side::primal>(ctx, q, rng);
        ss::ChiForm f = rand_vec<ss::Side::dual>(ctx, d, rng);
        adj_left = adj_left &&
                   ss::pair(ss::multiply(x, a), f) == ss::pair(x, ss::left_inner(a, f));
        ss::ChiVector big = rand_vec<ss::Side::primal>(ctx, d, rng);
        ss::ChiForm g = rand_vec<ss::Side::dual>(ctx, q, rng);
        ss::ChiForm y = rand_vec<ss::Side::dual>(ctx, d - q, rng);
        adj_right = adj_right &&
                    ss::pair(ss::right_inner(big, g), y) == ss::pair(big, ss::multiply(g, y));
    }
    record("adjunction-left", adj_left);
    record("adjunction-right", adj_right);

    record("module-laws", ss::module_law_checks(ctx, samples, seed).all());

    out["checks"] = std::move(checks);
    out["all_pass"] = all;
    text += std::string(all ? "all checks passed" : "some checks FAILED") + "\n";
    emit(opt.format, out, text);
    return all ? 0 : 1;
}

int run_counterexample(const CommonOpts& opt, const std::string& which) {
    if (which == "z15") {
        ss::Z15Report r = ss::z15_counterexample();
        Json j = ss::z15_json(r);
        std::string text;
        text += "orbit generators: " + std::to_string(r.generators.size()) + "\n";
        text += std::string("disjoint supports: ") + (r.disjoint_supports ? "yes" : "no") + "\n";
        text += "image rank mod 3: " + std::to_string(r.image_rank_mod3) + "\n";
        text += "image rank mod 5: " + std::to_string(r.image_rank_mod5) + "\n";
        text += "image cardinality: " + r.image_cardinality.str() + " = " +
                j["image_cardinality_factored"].get<std::string>();
        if (j.contains("image_cardinality_as_15_powers"))
            text += " = " + j["image_cardinality_as_15_powers"].get<std::string>();
        text += "\n";
        text += std::string("power of 15: ") + (r.cardinality_power_of_15 ? "yes" : "no") + "\n";
        text += "relation rank mod 3: " + std::to_string(r.relation_rank_mod3) + "\n";
        text += "relation rank mod 5: " + std::to_string(r.relation_rank_mod5) + "\n";
        text += "quotient exponents: " + std::to_string(r.quotient_exp3) + " vs " +
                std::to_string(r.quotient_exp5) + "\n";
        text += std::string("quotient free: ") + (r.quotient_free ? "yes" : "no") + "\n";
        emit(opt.format, j, text);
        return 0;
    }
    if (which == "eisenstein") {
        ss::EisensteinReport r = ss::eisenstein_counterexample();
        Json j = ss::eisenstein_json(r);
        std::string text = "invariant factors:";
        for (const ss::Int& f : r.invariant_factors) text += " " + f.str();
        text += "\n";
        text += std::string("torsion: ") + (r.torsion ? "yes" : "no") + "\n";
        text += std::string("e(1,1,1) in relation lattice: ") +
                (r.e111_in_lattice ? "yes" : "no") + "\n";
        text += std::string("quotient free: ") + (r.quotient_free ? "yes" : "no") + "\n";
        emit(opt.format, j, text);
        return 0;
    }
    throw ss::error("unknown counterexample " + which + " (use z15 or eisenstein)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semi-symmetric power calculator"};
    app.require_subcommand(1);

    CommonOpts opt;
    int degree = 1, degree2 = 0, slots = 2, samples = 20;
    unsigned seed = 12345;
    std::string matrix_arg, composition, vec_arg, form_arg, input_arg, side = "left", which;

    CLI::App* basis = app.add_subcommand("basis", "canonical basis of one degree");
    add_common(basis, opt);
    basis->add_option("--degree", degree, "degree")->required();

    CLI::App* table = app.add_subcommand("table", "basis multiplication table");
    add_common(table, opt);
    table->add_option("--degree", degree, "left degree")->required();
    table->add_option("--degree2", degree2, "right degree (default: --degree)");

    CLI::App* schur = app.add_subcommand("schur", "generalized Schur function of a matrix");
    add_common(schur, opt);
    schur->add_option("--matrix", matrix_arg, "matrix file (.json or CSV)")->required();
    schur->add_option("--composition", composition,
                      "comma-separated parts; adds every Laplace expansion");

    CLI::App* pair = app.add_subcommand("pair", "canonical pairing of a vector and a form");
    add_common(pair, opt);
    pair->add_option("--vector", vec_arg, "vector operand (path or JSON literal)")->required();
    pair->add_option("--form", form_arg, "form operand (path or JSON literal)")->required();

    CLI::App* comul = app.add_subcommand("comul", "comultiplication into k slots");
    add_common(comul, opt);
    comul->add_option("--input", input_arg, "vector operand (path or JSON literal)")->required();
    comul->add_option("--slots", slots, "number of tensor slots (default 2)");

    CLI::App* inner = app.add_subcommand("inner", "left or right inner product");
    add_common(inner, opt);
    inner->add_option("--side", side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    inner->add_option("--vector", vec_arg, "vector operand (path or JSON literal)")->required();
    inner->add_option("--form", form_arg, "form operand (path or JSON literal)")->required();

    CLI::App* check = app.add_subcommand("check", "run the full axiom suite");
    add_common(check, opt);
    check->add_option("--samples", samples, "random samples per check");
    check->add_option("--seed", seed, "random seed");

    CLI::App* counter = app.add_subcommand("counterexample", "non-freeness diagnostics");
    add_common(counter, opt);
    counter->add_option("which", which, "z15 or eisenstein")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed()) return run_basis(opt, degree);
        if (table->parsed()) return run_table(opt, degree, degree2);
        if (schur->parsed()) return run_schur(opt, matrix_arg, composition);
        if (pair->parsed()) return run_pair(opt, vec_arg, form_arg);
        if (comul->parsed()) return run_comul(opt, input_arg, slots);
        if (inner->parsed()) return run_inner(opt, side, vec_arg, form_arg);
        if (check->parsed()) return run_check(opt, samples, seed);
        if (counter->parsed()) return run_counterexample(opt, which);
    } catch (const ss::hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const ss::validation_error& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
