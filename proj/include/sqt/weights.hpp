#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqt/lattice.hpp"
#include "sqt/numeric.hpp"

namespace sqt {

enum class MatrixKind { TypeI, TypeII, General };

// One way of writing the tail block as [c_1 n ... c_k n].
struct TailFactorization {
    std::vector<Int> n; // length ell
    std::vector<Int> c; // length k, in column order
    Int beta;
    Int eta;
};

struct TypeInfo {
    MatrixKind kind = MatrixKind::General;
    long k = 0;                  // number of tail columns
    std::vector<Int> a;          // diagonal magnitudes, length ell
    std::vector<Int> n;          // canonical common column (content kept in n)
    std::vector<Int> c;          // canonical multipliers, gcd(c) = 1, column order
    Int alpha = 0;
    std::vector<Int> m;
    Int beta = 0;
    Int eta = 0;
    // non-canonical ways of splitting the tails (the k = 1 and shared-content
    // ambiguity); empty when the factorization is unique
    std::vector<TailFactorization> alternatives;

    long ell() const { return static_cast<long>(a.size()); }
    bool is_type2() const { return kind != MatrixKind::General; }
};

// Detects the [D | c_1 n ... c_k n] block shape literally (no column search).
// Throws ArgumentError when A is rank deficient or has more rows than columns.
TypeInfo detect_type(const IntMatrix& a);

IntMatrix assemble(const TypeInfo& info);

// gcd of the nonzero maximal minors equals 1.
bool is_faithful(const IntMatrix& a);

// The pairwise-gcd criterion on (a, n, c); requires a detected Type I/II shape.
bool is_faithful_type2(const TypeInfo& info);

// B = (-alpha, c_1 beta, ..., c_k beta); requires a faithful Type II info.
IntMatrix reduce_to_circle(const TypeInfo& info);

// Coordinates of the shell embedding: target coordinate i of the big
// representation pulls back from source coordinate `source` scaled by `coeff`.
struct EmbeddingMap {
    long source_dim = 0;
    long target_dim = 0;
    std::vector<std::pair<Coeff, long>> assignments; // per target coordinate
};

EmbeddingMap embedding_map(const TypeInfo& info);

// Lift both matrices to [M | -M]; apply the column transpositions (0-indexed
// positions in the lift) to A's lift; compare row lattices.  Without an
// explicit pairing, searches all products of the n disjoint transpositions
// (j, j+n).
bool cotangent_lift_equivalent(const IntMatrix& a, const IntMatrix& b,
                               const std::optional<std::vector<std::pair<long, long>>>& pairing);

// eta of an [D|C] matrix read with the tail taken whole (the k = 1
// classification invariant).
Int eta_single_tail(const IntMatrix& a);

} // namespace sqt
