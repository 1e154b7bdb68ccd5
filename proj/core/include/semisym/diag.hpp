// Freeness counterexamples over Z_15 and Z[eps], computed by exact integer
// linear algebra on the raw tensor lattices. The canonical-basis machinery
// is deliberately bypassed: these are the rings where its hypotheses fail.
#pragma once

#include "semisym/index.hpp"
#include "semisym/ring.hpp"

#include <vector>

namespace semisym {

// Dense integer matrix, row-major, 0-based.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

struct RankReport {
    Int prime;
    int rank = 0;
    int rows = 0;
    int cols = 0;
};

// Rank over the field with p elements. Throws when p is not prime.
RankReport rank_mod_p(const IntMatrix& m, const Int& p);

struct SnfReport {
    std::vector<Int> factors;  // d_1 | d_2 | ..., zeros trailing, min(rows, cols) entries
};

SnfReport smith_normal_form(const IntMatrix& m);

// Whether v lies in the lattice spanned by the columns of m.
bool in_column_lattice(const IntMatrix& m, const std::vector<Int>& v);

// T^4(E) over Z_15 with the Klein four group, chi = (1, 4, 4, 1) on
// (1), (12)(34), (13)(24), (14)(23). The image of the averaging operator
// has 3^7 5^3 elements, not a power of 15, so the quotient power is not
// free.
struct Z15Report {
    std::vector<std::vector<Int>> generators;  // one per orbit, entries mod 15
    bool disjoint_supports = false;
    int image_rank_mod3 = 0;
    int image_rank_mod5 = 0;
    Int image_cardinality;      // 3^r3 * 5^r5
    bool cardinality_power_of_15 = false;
    int relation_rank_mod3 = 0;
    int relation_rank_mod5 = 0;
    int quotient_exp3 = 0;      // 16 - relation rank mod 3
    int quotient_exp5 = 0;
    bool quotient_free = false;
};

Z15Report z15_counterexample();

// T^3(E) over Z[eps] with W = <(1 2 3)>, chi((1 2 3)) = eps. The relation
// lattice inside the rank-16 Z-module has invariant factors divisible by
// 3, so the quotient has torsion and is not free; e_(1,1,1) itself does
// not lie in the lattice.
struct EisensteinReport {
    std::vector<Int> invariant_factors;
    bool torsion = false;
    bool e111_in_lattice = false;
    bool quotient_free = false;
};

EisensteinReport eisenstein_counterexample();

}  // namespace semisym
