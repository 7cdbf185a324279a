#pragma once

#include <complex>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sqt/groebner.hpp"
#include "sqt/lattice.hpp"
#include "sqt/poly.hpp"
#include "sqt/weights.hpp"

namespace sqt {

// Component i of the moment map: (1/2) sum_j a_ij z_j zbar_j.
struct MomentForm {
    long index = 0;
    std::vector<Rat> coeff; // coefficient on z_j zbar_j
};

std::vector<MomentForm> moment_forms(const IntMatrix& a);

struct Generator {
    std::string name;
    ExponentVector u, v; // z- and zbar-exponents
    long degree = 0;
};

// Named monomial generators of the invariant ring, with two polynomial
// contexts: ambient z/w coordinates and the generator variables graded by
// degree.
struct GeneratorSet {
    IntMatrix weight_matrix;
    std::vector<Generator> gens;
    std::set<std::string> nonneg;
    CtxPtr ambient_ctx; // z1..zn, w1..wn
    CtxPtr gen_ctx;     // one variable per generator, weight = degree

    long n() const { return weight_matrix.cols; }
    long find(const std::string& name) const;
    Exp pair_exp(size_t i) const;                 // (u|v) in ambient exponents
    Polynomial ambient_monomial(size_t i) const;  // z^u w^v
    // exponent matrix whose columns are the (u|v) vectors
    IntMatrix exponent_matrix() const;
};

// Generic engine: Hilbert basis of {(u,v) : Au = Av} in N^{2n}, canonical
// order, names prefix0, prefix1, ...
GeneratorSet invariant_generators(const IntMatrix& a, const std::string& prefix = "p");

// Closed-form generators r_i, p{i}_{j}, q{s}, qbar{s} for faithful product
// weight matrices with identical tail columns.
GeneratorSet type1_generators(const TypeInfo& info);

enum class Shell { Off, On };

struct PresentationIdeal {
    std::shared_ptr<GeneratorSet> gens;
    IdealBasis ideal; // in gens->gen_ctx
    Shell shell = Shell::Off;
};

// Full lattice ideal of relations among the generator monomials, via
// saturation of kernel-basis binomials at the product of all variables.
PresentationIdeal toric_relations(const std::shared_ptr<GeneratorSet>& gens);

// The six closed-form binomial relation families (off-shell).
PresentationIdeal type1_relations(const TypeInfo& info,
                                  const std::shared_ptr<GeneratorSet>& gens);

// Appends the moment linear forms written in the diagonal generators.
PresentationIdeal with_moment(const PresentationIdeal& off);

// Moment component i as a linear form in generator variables (doubled to keep
// integer coefficients: sum_j a_ij x_{diag j}).
Polynomial moment_form_in_generators(const GeneratorSet& gens, long i);

// Canonical bracket on complexified coordinates: {z_i, w_j} = -2i delta_ij.
Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g);

// Writes an invariant ambient polynomial as a polynomial in the generators
// (every term of an invariant is itself an invariant monomial, so each term
// is decomposed over the generator exponents).
Polynomial rewrite_in_generators(const GeneratorSet& gens, const Polynomial& ambient);

Polynomial bracket_in_generators(const GeneratorSet& gens, const std::string& name1,
                                 const std::string& name2);

// Closed-form bracket of two named generators of a type1_generators set,
// returned in generator variables.
Polynomial type1_bracket_closed_form(const TypeInfo& info, const GeneratorSet& gens,
                                     const std::string& name1, const std::string& name2);

// Names of the generators cutting the quotient out of its Zariski closure
// (each listed name satisfies `name >= 0`).
std::vector<std::string> semialgebraic_description(const GeneratorSet& gens,
                                                   const TypeInfo& info);

using GenValues = std::map<std::string, std::complex<double>>;

GenValues evaluate_generators(const GeneratorSet& gens,
                              const std::vector<std::complex<double>>& z);

// Inverse of the Hilbert map up to the torus action, for consistent values.
std::vector<std::complex<double>> reconstruct_point(const GeneratorSet& gens,
                                                    const TypeInfo& info,
                                                    const GenValues& values);

// Convenience: generators + relations (+ moment forms when shell == On).
PresentationIdeal build_presentation(const IntMatrix& a, const std::string& prefix, Shell shell);

bool is_invariant_pair(const IntMatrix& a, const ExponentVector& u, const ExponentVector& v);

} // namespace sqt
