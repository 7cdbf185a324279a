#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sqt/numeric.hpp"

namespace sqt {

using Exp = std::vector<int32_t>;

struct VarContext {
    std::vector<std::string> names;
    std::vector<long> weights; // positive grading weights, one per variable
    std::map<std::string, size_t> index;

    size_t size() const { return names.size(); }
    long var(const std::string& name) const;
};

using CtxPtr = std::shared_ptr<const VarContext>;

CtxPtr make_context(std::vector<std::string> names, std::vector<long> weights = {});
bool same_context(const CtxPtr& a, const CtxPtr& b);

long long weighted_degree(const Exp& e, const std::vector<long>& weights);
Exp exp_mul(const Exp& a, const Exp& b);
bool exp_divides(const Exp& a, const Exp& b); // a | b
Exp exp_div(const Exp& b, const Exp& a);      // b / a
Exp exp_lcm(const Exp& a, const Exp& b);
bool exp_disjoint(const Exp& a, const Exp& b);

enum class OrderKind { GrevLex, Lex };

// Weighted term order with an optional elimination block on the first
// `elim` variables.
struct TermOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<long> weights;
    size_t elim = 0;

    static TermOrder grevlex(const CtxPtr& ctx);
    static TermOrder lex(const CtxPtr& ctx);
    static TermOrder elimination(const CtxPtr& ctx, size_t first_block);

    // >0 if a > b in the order
    int compare(const Exp& a, const Exp& b) const;
    bool less(const Exp& a, const Exp& b) const { return compare(a, b) < 0; }
    std::string key() const;
};

struct Polynomial {
    CtxPtr ctx;
    // sorted descending by the context's canonical grevlex order
    std::vector<std::pair<Exp, Coeff>> terms;

    Polynomial() = default;
    explicit Polynomial(CtxPtr c) : ctx(std::move(c)) {}

    static Polynomial zero(const CtxPtr& ctx) { return Polynomial(ctx); }
    static Polynomial constant(const CtxPtr& ctx, const Coeff& c);
    static Polynomial variable(const CtxPtr& ctx, size_t i);
    static Polynomial monomial(const CtxPtr& ctx, Exp e, Coeff c = Coeff::one());

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }
    const Exp& leading_exp() const;
    const Coeff& leading_coeff() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial pow(unsigned long e) const;
    bool operator==(const Polynomial& o) const;

    Polynomial derivative(size_t var) const;
    // substitute variable i by images[i] (all images share one target context)
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    std::complex<double> eval_double(const std::vector<std::complex<double>>& point) const;

    // weighted degree of every term equal; returns false for zero or mixed
    bool homogeneous_degree(long long& deg) const;
    long long max_degree() const;

    void canonicalize(); // sort + drop zeros (used after raw term edits)
    std::string str() const;
};

Polynomial parse_polynomial(const CtxPtr& ctx, const std::string& text);

} // namespace sqt
