#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqt/poly.hpp"

namespace sqt {

struct IdealBasis {
    CtxPtr ctx;
    std::vector<Polynomial> gens;
    mutable std::map<std::string, std::vector<Polynomial>> gb_cache;

    IdealBasis() = default;
    IdealBasis(CtxPtr c, std::vector<Polynomial> g) : ctx(std::move(c)), gens(std::move(g)) {}

    const std::vector<Polynomial>& groebner(const TermOrder& ord) const;
};

// Full normal form of f modulo basis (basis need not be a GB; reduction is
// deterministic: divisors tried in basis order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& ord);

// Reduced Groebner basis: monic, interreduced, sorted by leading monomial.
// Requires radicand-1 coefficients.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord);

bool ideal_member(const Polynomial& f, const IdealBasis& ideal, Polynomial* nf_out = nullptr);
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

// ideal : f^infinity, computed with a Rabinowitsch variable.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f);

// GB elements free of the first `block` variables (elimination ideal
// generators, still expressed in the original context).
std::vector<Polynomial> eliminate_block(const std::vector<Polynomial>& gens, size_t block);

// f in radical(gens)? (Rabinowitsch trick)
bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens);

// Context surgery used by saturation/elimination and by presentation builders.
Polynomial rename_into(const Polynomial& p, const CtxPtr& target,
                       const std::vector<size_t>& var_map);

} // namespace sqt
