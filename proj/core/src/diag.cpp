#include "semisym/diag.hpp"

#include "semisym/perm.hpp"

#include <algorithm>
#include <utility>

namespace semisym {

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int mod_reduce(const Int& x, const Int& p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
}

// Elementary row operations shared by the eliminations below.
void swap_rows(IntMatrix& m, int r1, int r2) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void add_row_multiple(IntMatrix& m, int dst, int src, const Int& f) {
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void swap_cols(IntMatrix& m, int c1, int c2) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

void add_col_multiple(IntMatrix& m, int dst, int src, const Int& f) {
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

// Diagonalizes m in place by unimodular row and column operations; row
// operations are mirrored on u when given, so u * (original m) * V = D.
void diagonalize(IntMatrix& m, IntMatrix* u) {
    int t = 0;
    const int limit = std::min(m.rows, m.cols);
    while (t < limit) {
        // Pick the entry of least nonzero magnitude as the pivot.
        int pr = -1, pc = -1;
        Int best;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                if (m.at(r, c) == 0) continue;
                Int mag = abs(m.at(r, c));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // submatrix is zero
        if (pr != t) {
            swap_rows(m, t, pr);
            if (u) swap_rows(*u, t, pr);
        }
        if (pc != t) swap_cols(m, t, pc);

        bool dirty = false;
        for (int r = t + 1; r < m.rows; ++r) {
            if (m.at(r, t) == 0) continue;
            Int q = m.at(r, t) / m.at(t, t);
            add_row_multiple(m, r, t, -q);
            if (u) add_row_multiple(*u, r, t, -q);
            if (m.at(r, t) != 0) dirty = true;
        }
        for (int c = t + 1; c < m.cols; ++c) {
            if (m.at(t, c) == 0) continue;
            Int q = m.at(t, c) / m.at(t, t);
            add_col_multiple(m, c, t, -q);
            if (m.at(t, c) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders appeared; re-pivot

        // Divisibility fix-up: fold a bad row in and reduce again.
        bool fixed = true;
        for (int r = t + 1; r < m.rows && fixed; ++r)
            for (int c = t + 1; c < m.cols && fixed; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    add_row_multiple(m, t, r, Int(1));
                    if (u) add_row_multiple(*u, t, r, Int(1));
                    fixed = false;
                }
        if (fixed) ++t;
    }
    for (int k = 0; k < limit; ++k)
        if (m.at(k, k) < 0) {
            for (int c = 0; c < m.cols; ++c) m.at(k, c) = -m.at(k, c);
            if (u)
                for (int c = 0; c < u->cols; ++c) u->at(k, c) = -u->at(k, c);
        }
}

}  // namespace

RankReport rank_mod_p(const IntMatrix& m, const Int& p) {
    if (!is_prime(p)) throw error("modulus " + p.str() + " is not prime");
    IntMatrix w = m;
    for (Int& x : w.a) x = mod_reduce(x, p);

    RankReport report;
    report.prime = p;
    report.rows = m.rows;
    report.cols = m.cols;

    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < w.rows; ++i)
            if (w.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) swap_rows(w, r, pivot);
        // Clearing below the pivot after scaling by it keeps entries in F_p
        // without needing an inverse.
        for (int i = r + 1; i < w.rows; ++i) {
            if (w.at(i, c) == 0) continue;
            Int f = w.at(i, c);
            for (int j = c; j < w.cols; ++j)
                w.at(i, j) = mod_reduce(w.at(i, j) * w.at(r, c) - w.at(r, j) * f, p);
        }
        ++r;
    }
    report.rank = r;
    return report;
}

SnfReport smith_normal_form(const IntMatrix& m) {
    IntMatrix w = m;
    diagonalize(w, nullptr);
    SnfReport report;
    const int limit = std::min(m.rows, m.cols);
    for (int k = 0; k < limit; ++k) report.factors.push_back(w.at(k, k));
    return report;
}

bool in_column_lattice(const IntMatrix& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.rows) throw error("vector length mismatch");
    IntMatrix w = m;
    IntMatrix u(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) u.at(i, i) = 1;
    diagonalize(w, &u);

    // m x = v has an integer solution iff D y = U v does.
    std::vector<Int> uv(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) {
        Int s = 0;
        for (int c = 0; c < m.rows; ++c) s += u.at(r, c) * v[static_cast<std::size_t>(c)];
        uv[static_cast<std::size_t>(r)] = s;
    }
    const int limit = std::min(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        Int d = r < limit ? w.at(r, r) : Int(0);
        if (d == 0) {
            if (uv[static_cast<std::size_t>(r)] != 0) return false;
        } else if (uv[static_cast<std::size_t>(r)] % d != 0) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<MultiIndex> grid_indices(int n, int d) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(d), 1);
    while (true) {
        out.emplace_back(n, cur);
        int pos = d - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n) {
            cur[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

int position_of(const std::vector<MultiIndex>& indices, const MultiIndex& i) {
    auto it = std::lower_bound(indices.begin(), indices.end(), i);
    return static_cast<int>(it - indices.begin());
}

}  // namespace

Z15Report z15_counterexample() {
    const Int mod = 15;
    std::vector<Permutation> klein = {Permutation({1, 2, 3, 4}), Permutation({2, 1, 4, 3}),
                                      Permutation({3, 4, 1, 2}), Permutation({4, 3, 2, 1})};
    std::vector<Int> chi = {1, 4, 4, 1};  // chi = chi^{-1}: 4*4 = 16 = 1 (mod 15)
    const Int quarter = 4;                // 1/|W| = 4 (mod 15)

    std::vector<MultiIndex> indices = grid_indices(2, 4);
    const int dim = static_cast<int>(indices.size());

    // One averaged generator per orbit, taken at the orbit's minimum.
    Z15Report report;
    std::vector<bool> seen(static_cast<std::size_t>(dim), false);
    for (int pos = 0; pos < dim; ++pos) {
        if (seen[static_cast<std::size_t>(pos)]) continue;
        std::vector<Int> gen(static_cast<std::size_t>(dim), Int(0));
        for (std::size_t s = 0; s < klein.size(); ++s) {
            int target = position_of(indices, act(klein[s], indices[static_cast<std::size_t>(pos)]));
            seen[static_cast<std::size_t>(target)] = true;
            Int& slot = gen[static_cast<std::size_t>(target)];
            slot = mod_reduce(slot + quarter * chi[s], mod);
        }
        report.generators.push_back(std::move(gen));
    }

    // Orbits partition the grid, so the supports must be pairwise disjoint.
    report.disjoint_supports = true;
    std::vector<int> owner(static_cast<std::size_t>(dim), -1);
    for (std::size_t g = 0; g < report.generators.size(); ++g)
        for (int c = 0; c < dim; ++c)
            if (report.generators[g][static_cast<std::size_t>(c)] != 0) {
                if (owner[static_cast<std::size_t>(c)] >= 0) report.disjoint_supports = false;
                owner[static_cast<std::size_t>(c)] = static_cast<int>(g);
            }

    IntMatrix image(static_cast<int>(report.generators.size()), dim);
    for (int r = 0; r < image.rows; ++r)
        for (int c = 0; c < dim; ++c)
            image.at(r, c) = report.generators[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    report.image_rank_mod3 = rank_mod_p(image, Int(3)).rank;
    report.image_rank_mod5 = rank_mod_p(image, Int(5)).rank;

    report.image_cardinality = 1;
    for (int k = 0; k < report.image_rank_mod3; ++k) report.image_cardinality *= 3;
    for (int k = 0; k < report.image_rank_mod5; ++k) report.image_cardinality *= 5;
    report.cardinality_power_of_15 = report.image_rank_mod3 == report.image_rank_mod5;

    // Relation span of chi(s)e_i - s e_i over all s and i.
    IntMatrix rel(static_cast<int>(klein.size() - 1) * dim, dim);
    int row = 0;
    for (std::size_t s = 1; s < klein.size(); ++s)
        for (int pos = 0; pos < dim; ++pos) {
            rel.at(row, pos) += chi[s];
            int target = position_of(indices, act(klein[s], indices[static_cast<std::size_t>(pos)]));
            rel.at(row, target) -= 1;
            ++row;
        }
    report.relation_rank_mod3 = rank_mod_p(rel, Int(3)).rank;
    report.relation_rank_mod5 = rank_mod_p(rel, Int(5)).rank;
    report.quotient_exp3 = dim - report.relation_rank_mod3;
    report.quotient_exp5 = dim - report.relation_rank_mod5;
    report.quotient_free = report.quotient_exp3 == report.quotient_exp5;
    return report;
}

EisensteinReport eisenstein_counterexample() {
    // Z[eps] with eps^2 = -1 - eps; an element a + b eps occupies two
    // integer coordinates per tensor index.
    std::vector<MultiIndex> indices = grid_indices(2, 3);
    const int dim = 2 * static_cast<int>(indices.size());

    auto eps_times = [](std::vector<Int> v) {
        for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
            Int a = v[i], b = v[i + 1];
            v[i] = -b;
            v[i + 1] = a - b;
        }
        return v;
    };

    Permutation three_cycle({2, 3, 1});                     // (1 2 3)
    Permutation three_cycle_inv({3, 1, 2});                 // (1 3 2)
    std::pair<Int, Int> eps = {0, 1};                       // chi((1 2 3))
    std::pair<Int, Int> eps_sq = {-1, -1};                  // chi((1 3 2))

    // chi^{-1}(s) e_i - s e_i for both nontrivial s, then the eps-multiple
    // of each, spanning the relation lattice over Z.
    std::vector<std::vector<Int>> gens;
    auto add_relation = [&](const Permutation& s, const std::pair<Int, Int>& chi_inv_s) {
        for (const MultiIndex& i : indices) {
            std::vector<Int> v(static_cast<std::size_t>(dim), Int(0));
            int src = position_of(indices, i);
            int dst = position_of(indices, act(s, i));
            v[static_cast<std::size_t>(2 * src)] += chi_inv_s.first;
            v[static_cast<std::size_t>(2 * src + 1)] += chi_inv_s.second;
            v[static_cast<std::size_t>(2 * dst)] -= 1;
            gens.push_back(v);
            gens.push_back(eps_times(v));
        }
    };
    add_relation(three_cycle, eps_sq);
    add_relation(three_cycle_inv, eps);

    IntMatrix lattice(dim, static_cast<int>(gens.size()));
    for (int c = 0; c < lattice.cols; ++c)
        for (int r = 0; r < dim; ++r)
            lattice.at(r, c) = gens[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];

    EisensteinReport report;
    report.invariant_factors = smith_normal_form(lattice).factors;
    for (const Int& f : report.invariant_factors)
        if (f != 0 && f != 1) report.torsion = true;

    std::vector<Int> e111(static_cast<std::size_t>(dim), Int(0));
    e111[static_cast<std::size_t>(2 * position_of(indices, MultiIndex(2, {1, 1, 1})))] = 1;
    report.e111_in_lattice = in_column_lattice(lattice, e111);
    report.quotient_free = !report.torsion;
    return report;
}

}  // namespace semisym
