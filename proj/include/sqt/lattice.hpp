#pragma once

#include <string>
#include <vector>

#include "sqt/numeric.hpp"

namespace sqt {

// Exponent vectors live in N^m; entries are exact integers.
using ExponentVector = std::vector<Int>;

struct IntMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<Int> data; // row-major

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Int(0)) {
        if (r <= 0 || c <= 0) throw ArgumentError("matrix dimensions must be positive");
    }
    static IntMatrix identity(long n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    Int& at(long i, long j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Int& at(long i, long j) const { return data[static_cast<size_t>(i) * cols + j]; }

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    std::vector<Int> col(long j) const;
    std::vector<Int> row(long i) const;
    IntMatrix with_swapped_cols(long a, long b) const;
    // [M | -M]
    IntMatrix cotangent_lift() const;

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }

    std::string json() const;
    static IntMatrix parse_json(const std::string& text);
};

// (gcd, lcm) of a nonempty list; lcm requires all values nonzero.
std::pair<Int, Int> gcd_lcm(const std::vector<Int>& values);

struct HnfResult {
    IntMatrix h; // row-style Hermite normal form, U*m == h
    IntMatrix u; // unimodular
};

// Row echelon over Z: pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows at the bottom.
HnfResult hermite_normal_form(const IntMatrix& m);

long rank(const IntMatrix& m);
Int determinant(const IntMatrix& m); // square only, Bareiss

// Nonzero rows of the HNF, as the canonical basis of the row lattice.
std::vector<std::vector<Int>> row_lattice_basis(const IntMatrix& m);
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

// Lattice basis of { x in Z^cols : M x = 0 }.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m);

// gcd of all nonzero maximal minors (full row rank required by callers that
// interpret it as a faithfulness test).
Int maximal_minor_gcd(const IntMatrix& m);
std::vector<Int> maximal_minors(const IntMatrix& m);

// Hilbert basis of the monoid { x in N^cols : M x = 0 }: the unique minimal
// generating set, sorted by total degree then descending lexicographic.
// max_degree < 0 means unbounded (completion runs to saturation).
std::vector<ExponentVector> monoid_hilbert_basis(const IntMatrix& m, long max_degree = -1);

Int total_degree(const ExponentVector& v);
bool componentwise_leq(const ExponentVector& a, const ExponentVector& b);
// degree asc, then lexicographically descending; the canonical output order.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

// Decides x in N-span of the given basis (exact search, used by tests and by
// invariant rewriting).
bool monoid_decompose(const ExponentVector& x, const std::vector<ExponentVector>& basis,
                      std::vector<long>* multipliers = nullptr);

} // namespace sqt
