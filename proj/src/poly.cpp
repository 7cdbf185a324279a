#include "sqt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sqt {

long VarContext::var(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) return -1;
    return static_cast<long>(it->second);
}

CtxPtr make_context(std::vector<std::string> names, std::vector<long> weights) {
    auto ctx = std::make_shared<VarContext>();
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) throw ArgumentError("weights/names size mismatch");
    for (long w : weights)
        if (w <= 0) throw ArgumentError("grading weights must be positive");
    ctx->names = std::move(names);
    ctx->weights = std::move(weights);
    for (size_t i = 0; i < ctx->names.size(); ++i) {
        if (!ctx->index.emplace(ctx->names[i], i).second)
            throw ArgumentError("duplicate variable name: " + ctx->names[i]);
    }
    return ctx;
}

bool same_context(const CtxPtr& a, const CtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names == b->names && a->weights == b->weights;
}

long long weighted_degree(const Exp& e, const std::vector<long>& weights) {
    long long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long long>(e[i]) * weights[i];
    return d;
}

Exp exp_mul(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool exp_divides(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_div(const Exp& b, const Exp& a) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_disjoint(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

TermOrder TermOrder::grevlex(const CtxPtr& ctx) { return {OrderKind::GrevLex, ctx->weights, 0}; }
TermOrder TermOrder::lex(const CtxPtr& ctx) { return {OrderKind::Lex, ctx->weights, 0}; }
TermOrder TermOrder::elimination(const CtxPtr& ctx, size_t first_block) {
    return {OrderKind::GrevLex, ctx->weights, first_block};
}

namespace {

int cmp_block_grevlex(const Exp& a, const Exp& b, const std::vector<long>& w, size_t lo,
                      size_t hi) {
    long long da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += static_cast<long long>(a[i]) * w[i];
        db += static_cast<long long>(b[i]) * w[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1; // reverse lex
    }
    return 0;
}

int cmp_block_lex(const Exp& a, const Exp& b, size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

int TermOrder::compare(const Exp& a, const Exp& b) const {
    size_t n = a.size();
    size_t split = elim > 0 && elim < n ? elim : 0;
    if (split) {
        int c = kind == OrderKind::Lex ? cmp_block_lex(a, b, 0, split)
                                       : cmp_block_grevlex(a, b, weights, 0, split);
        if (c) return c;
        return kind == OrderKind::Lex ? cmp_block_lex(a, b, split, n)
                                      : cmp_block_grevlex(a, b, weights, split, n);
    }
    return kind == OrderKind::Lex ? cmp_block_lex(a, b, 0, n)
                                  : cmp_block_grevlex(a, b, weights, 0, n);
}

std::string TermOrder::key() const {
    std::ostringstream out;
    out << (kind == OrderKind::Lex ? "lex" : "grevlex") << ":" << elim << ":";
    for (long w : weights) out << w << ",";
    return out.str();
}

Polynomial Polynomial::constant(const CtxPtr& ctx, const Coeff& c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms.emplace_back(Exp(ctx->size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const CtxPtr& ctx, size_t i) {
    Exp e(ctx->size(), 0);
    e[i] = 1;
    return monomial(ctx, e);
}

Polynomial Polynomial::monomial(const CtxPtr& ctx, Exp e, Coeff c) {
    Polynomial p(ctx);
    if (e.size() != ctx->size()) throw ArgumentError("exponent vector length mismatch");
    if (!c.is_zero()) p.terms.emplace_back(std::move(e), std::move(c));
    return p;
}

const Exp& Polynomial::leading_exp() const {
    if (terms.empty()) throw ArgumentError("leading term of zero polynomial");
    return terms.front().first;
}

const Coeff& Polynomial::leading_coeff() const {
    if (terms.empty()) throw ArgumentError("leading term of zero polynomial");
    return terms.front().second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!same_context(ctx, o.ctx)) throw ArgumentError("mismatched variable contexts");
    TermOrder ord = TermOrder::grevlex(ctx);
    Polynomial r(ctx);
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        int c = ord.compare(terms[i].first, o.terms[j].first);
        if (c > 0) {
            r.terms.push_back(terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(o.terms[j++]);
        } else {
            Coeff s = terms[i].second + o.terms[j].second;
            if (!s.is_zero()) r.terms.emplace_back(terms[i].first, std::move(s));
            ++i, ++j;
        }
    }
    while (i < terms.size()) r.terms.push_back(terms[i++]);
    while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!same_context(ctx, o.ctx)) throw ArgumentError("mismatched variable contexts");
    TermOrder ord = TermOrder::grevlex(ctx);
    auto cmp = [&ord](const Exp& a, const Exp& b) { return ord.compare(a, b) > 0; };
    std::map<Exp, Coeff, decltype(cmp)> acc(cmp);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            Exp e = exp_mul(ea, eb);
            Coeff prod = ca * cb;
            auto it = acc.find(e);
            if (it == acc.end()) {
                acc.emplace(std::move(e), std::move(prod));
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    Polynomial r(ctx);
    r.terms.assign(acc.begin(), acc.end());
    return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    if (c.is_zero()) return Polynomial::zero(ctx);
    Polynomial r = *this;
    for (auto& [e, v] : r.terms) v = v * c;
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r = Polynomial::constant(ctx, Coeff::one());
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_context(ctx, o.ctx) && terms == o.terms;
}

Polynomial Polynomial::derivative(size_t var) const {
    Polynomial r(ctx);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.terms.emplace_back(std::move(d), c * Coeff::from_long(e[var]));
    }
    r.canonicalize();
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ctx->size()) throw ArgumentError("substitution needs one image per variable");
    if (images.empty()) throw ArgumentError("empty substitution");
    CtxPtr target = images[0].ctx;
    Polynomial r = Polynomial::zero(target);
    for (const auto& [e, c] : terms) {
        Polynomial t = Polynomial::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * images[i].pow(static_cast<unsigned long>(e[i]));
        r = r + t;
    }
    return r;
}

std::complex<double> Polynomial::eval_double(const std::vector<std::complex<double>>& point) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms) {
        std::complex<double> t(c.real_part_double(), 0.0);
        double im = c.g.im.get_d() * std::sqrt(c.rad.get_d());
        t = std::complex<double>(c.g.re.get_d() * std::sqrt(c.rad.get_d()), im);
        for (size_t i = 0; i < e.size(); ++i)
            for (int32_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

bool Polynomial::homogeneous_degree(long long& deg) const {
    if (terms.empty()) return false;
    deg = weighted_degree(terms[0].first, ctx->weights);
    for (const auto& [e, c] : terms)
        if (weighted_degree(e, ctx->weights) != deg) return false;
    return true;
}

long long Polynomial::max_degree() const {
    long long d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, weighted_degree(e, ctx->weights));
    return d;
}

void Polynomial::canonicalize() {
    TermOrder ord = TermOrder::grevlex(ctx);
    std::sort(terms.begin(), terms.end(),
              [&ord](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    std::vector<std::pair<Exp, Coeff>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = out.back().second + t.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!t.second.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

std::string Polynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.str();
        bool unit = cs == "1";
        bool any_var = std::any_of(e.begin(), e.end(), [](int32_t v) { return v > 0; });
        if (!any_var) {
            out << cs;
            continue;
        }
        if (!unit) out << cs << "*";
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << ctx->names[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    CtxPtr ctx;

    explicit Parser(const std::string& text, CtxPtr c) : s(text), ctx(std::move(c)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    std::string read_number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return s.substr(start, pos - start);
    }

    Rat read_rational() {
        std::string num = read_number();
        if (eat('/')) {
            std::string den = read_number();
            return parse_rat(num + "/" + den);
        }
        return parse_rat(num);
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    // inside parens: rational, or a+bi / a-bi with optional coefficient on i
    Coeff parse_paren_coeff() {
        Rat re = read_rational();
        skip_ws();
        if (peek() == 'i') {
            ++pos;
            return Coeff(GaussRat(Rat(0), re));
        }
        if (peek() == '+' || peek() == '-') {
            bool neg = peek() == '-';
            ++pos;
            skip_ws();
            Rat im;
            if (peek() == 'i') {
                im = 1;
            } else {
                im = read_rational();
            }
            skip_ws();
            if (peek() != 'i') fail("expected 'i' in complex literal");
            ++pos;
            if (neg) im = -im;
            return Coeff(GaussRat(re, im));
        }
        return Coeff(GaussRat(re, Rat(0)));
    }

    // one multiplicative factor
    Polynomial parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Coeff k = parse_paren_coeff();
            if (!eat(')')) fail("expected ')'");
            return Polynomial::constant(ctx, k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat r = read_rational();
            return Polynomial::constant(ctx, Coeff(GaussRat(r, Rat(0))));
        }
        std::string id = read_ident();
        if (id == "sqrt") {
            if (!eat('(')) fail("expected '(' after sqrt");
            Rat r = read_rational();
            if (!eat(')')) fail("expected ')'");
            return Polynomial::constant(ctx, Coeff::sqrt_rational(r));
        }
        if (id == "i") return Polynomial::constant(ctx, Coeff::i());
        long v = ctx->var(id);
        if (v < 0) fail("unknown variable '" + id + "'");
        unsigned long e = 1;
        if (eat('^')) {
            std::string n = read_number();
            long val = std::stol(n);
            if (val < 0) fail("negative exponent");
            e = static_cast<unsigned long>(val);
        }
        Exp exp(ctx->size(), 0);
        exp[static_cast<size_t>(v)] = static_cast<int32_t>(e);
        return Polynomial::monomial(ctx, exp);
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                p = p * parse_factor();
                continue;
            }
            // implicit products are not part of the format
            break;
        }
        return p;
    }

    Polynomial parse_poly() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial p = parse_term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (eat('+')) {
                p = p + parse_term();
            } else if (eat('-')) {
                p = p - parse_term();
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

} // namespace

Polynomial parse_polynomial(const CtxPtr& ctx, const std::string& text) {
    Parser p(text, ctx);
    return p.parse_poly();
}

} // namespace sqt
