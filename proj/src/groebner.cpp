#include "sqt/groebner.hpp"

#include <algorithm>
#include <set>

namespace sqt {

namespace {

void require_rational_radicand(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        for (const auto& [e, c] : g.terms)
            if (c.has_radical())
                throw UnsupportedCoefficientError(
                    "Groebner routines need radicand-1 coefficients");
}

struct OrderedPoly {
    // terms sorted descending in the working order
    std::vector<std::pair<Exp, Coeff>> terms;
};

OrderedPoly to_ordered(const Polynomial& p, const TermOrder& ord) {
    OrderedPoly w{p.terms};
    std::sort(w.terms.begin(), w.terms.end(),
              [&ord](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    return w;
}

Polynomial from_ordered(const CtxPtr& ctx, OrderedPoly w) {
    Polynomial p(ctx);
    p.terms = std::move(w.terms);
    p.canonicalize();
    return p;
}

OrderedPoly add_scaled(const OrderedPoly& a, const OrderedPoly& b, const Exp& shift,
                       const Coeff& scale, const TermOrder& ord) {
    // a + scale * x^shift * b, merged in order
    OrderedPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    auto shifted = [&](size_t k) { return exp_mul(b.terms[k].first, shift); };
    while (i < a.terms.size() && j < b.terms.size()) {
        Exp eb = shifted(j);
        int c = ord.compare(a.terms[i].first, eb);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            Coeff v = b.terms[j].second * scale;
            if (!v.is_zero()) r.terms.emplace_back(std::move(eb), std::move(v));
            ++j;
        } else {
            Coeff v = a.terms[i].second + b.terms[j].second * scale;
            if (!v.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(v));
            ++i, ++j;
        }
    }
    while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) {
        Coeff v = b.terms[j].second * scale;
        if (!v.is_zero()) r.terms.emplace_back(shifted(j), std::move(v));
        ++j;
    }
    return r;
}

OrderedPoly reduce_full(OrderedPoly f, const std::vector<OrderedPoly>& basis,
                        const TermOrder& ord) {
    OrderedPoly out;
    size_t head = 0;
    while (head < f.terms.size()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.terms.empty()) continue;
            const Exp& lm = g.terms.front().first;
            if (exp_divides(lm, f.terms[head].first)) {
                Exp shift = exp_div(f.terms[head].first, lm);
                Coeff scale = -(f.terms[head].second / g.terms.front().second);
                OrderedPoly tail{{f.terms.begin() + head, f.terms.end()}};
                OrderedPoly combined = add_scaled(tail, g, shift, scale, ord);
                f.terms.resize(head);
                f.terms.insert(f.terms.end(), combined.terms.begin(), combined.terms.end());
                reduced = true;
                break;
            }
        }
        if (!reduced) ++head;
    }
    return f;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& ord) {
    std::vector<OrderedPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) b.push_back(to_ordered(g, ord));
    OrderedPoly w = to_ordered(f, ord);
    return from_ordered(f.ctx, reduce_full(std::move(w), b, ord));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord) {
    require_rational_radicand(gens);
    CtxPtr ctx;
    std::vector<OrderedPoly> g;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        if (!ctx) ctx = p.ctx;
        if (!same_context(ctx, p.ctx)) throw ArgumentError("mismatched variable contexts");
        OrderedPoly w = to_ordered(p, ord);
        Coeff inv = w.terms.front().second.inverse();
        for (auto& [e, c] : w.terms) c = c * inv;
        g.push_back(std::move(w));
    }
    if (g.empty()) return {};

    struct Pair {
        size_t i, j;
        Exp lcm;
        long long deg;
    };
    auto make_pair = [&](size_t i, size_t j) {
        Exp l = exp_lcm(g[i].terms.front().first, g[j].terms.front().first);
        long long d = weighted_degree(l, ord.weights);
        return Pair{i, j, std::move(l), d};
    };

    std::vector<Pair> pending;
    std::set<std::pair<size_t, size_t>> unfinished; // pairs not yet treated
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            pending.push_back(make_pair(i, k));
            unfinished.insert({i, k});
        }
    };
    for (size_t k = 0; k < g.size(); ++k) push_pairs_for(k);

    auto pick = [&]() {
        size_t best = 0;
        for (size_t i = 1; i < pending.size(); ++i) {
            if (pending[i].deg < pending[best].deg ||
                (pending[i].deg == pending[best].deg && pending[i].j < pending[best].j))
                best = i;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + best);
        return p;
    };

    while (!pending.empty()) {
        Pair p = pick();
        unfinished.erase({p.i, p.j});
        const Exp& lmi = g[p.i].terms.front().first;
        const Exp& lmj = g[p.j].terms.front().first;
        // coprime criterion
        if (exp_disjoint(lmi, lmj)) continue;
        // chain criterion: a third generator dividing the lcm whose pairs with
        // i and j were both already treated
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!exp_divides(g[k].terms.front().first, p.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!unfinished.count(key(p.i, k)) && !unfinished.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        // S-polynomial
        Exp si = exp_div(p.lcm, lmi), sj = exp_div(p.lcm, lmj);
        OrderedPoly zero;
        OrderedPoly s = add_scaled(zero, g[p.i], si, Coeff::one(), ord);
        s = add_scaled(s, g[p.j], sj, -Coeff::one(), ord);
        s = reduce_full(std::move(s), g, ord);
        if (s.terms.empty()) continue;
        Coeff inv = s.terms.front().second.inverse();
        for (auto& [e, c] : s.terms) c = c * inv;
        g.push_back(std::move(s));
        push_pairs_for(g.size() - 1);
    }

    // minimalize
    std::vector<size_t> keep;
    for (size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exp& a = g[j].terms.front().first;
            const Exp& b = g[i].terms.front().first;
            if (exp_divides(a, b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<OrderedPoly> minimal;
    for (size_t i : keep) minimal.push_back(g[i]);

    // interreduce tails
    std::vector<OrderedPoly> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<OrderedPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = reduce_full(std::move(reduced[i]), others, ord);
        // reduction keeps the leading term (others cannot divide it)
    }

    std::vector<Polynomial> out;
    for (auto& w : reduced) out.push_back(from_ordered(ctx, std::move(w)));
    std::sort(out.begin(), out.end(), [&ord](const Polynomial& a, const Polynomial& b) {
        std::vector<std::pair<Exp, Coeff>> ta = a.terms, tb = b.terms;
        std::sort(ta.begin(), ta.end(),
                  [&ord](const auto& x, const auto& y) { return ord.compare(x.first, y.first) > 0; });
        std::sort(tb.begin(), tb.end(),
                  [&ord](const auto& x, const auto& y) { return ord.compare(x.first, y.first) > 0; });
        return ord.compare(ta.front().first, tb.front().first) < 0;
    });
    return out;
}

const std::vector<Polynomial>& IdealBasis::groebner(const TermOrder& ord) const {
    std::string key = ord.key();
    auto it = gb_cache.find(key);
    if (it != gb_cache.end()) return it->second;
    auto gb = buchberger(gens, ord);
    return gb_cache.emplace(key, std::move(gb)).first->second;
}

bool ideal_member(const Polynomial& f, const IdealBasis& ideal, Polynomial* nf_out) {
    TermOrder ord = TermOrder::grevlex(ideal.ctx);
    const auto& gb = ideal.groebner(ord);
    Polynomial nf = normal_form(f, gb, ord);
    if (nf_out) *nf_out = nf;
    return nf.is_zero();
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
    if (!same_context(a.ctx, b.ctx)) throw ArgumentError("mismatched variable contexts");
    for (const auto& f : a.gens)
        if (!ideal_member(f, b)) return false;
    for (const auto& f : b.gens)
        if (!ideal_member(f, a)) return false;
    return true;
}

Polynomial rename_into(const Polynomial& p, const CtxPtr& target,
                       const std::vector<size_t>& var_map) {
    Polynomial r(target);
    for (const auto& [e, c] : p.terms) {
        Exp ne(target->size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            ne[var_map[i]] += e[i];
        }
        r.terms.emplace_back(std::move(ne), c);
    }
    r.canonicalize();
    return r;
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& f) {
    if (gens.empty()) return gens;
    CtxPtr ctx = gens[0].ctx;
    std::vector<std::string> names = {"_sat"};
    std::vector<long> weights = {1};
    names.insert(names.end(), ctx->names.begin(), ctx->names.end());
    weights.insert(weights.end(), ctx->weights.begin(), ctx->weights.end());
    CtxPtr ext = make_context(names, weights);
    std::vector<size_t> up(ctx->size());
    for (size_t i = 0; i < ctx->size(); ++i) up[i] = i + 1;

    std::vector<Polynomial> work;
    for (const auto& p : gens) work.push_back(rename_into(p, ext, up));
    Polynomial t = Polynomial::variable(ext, 0);
    work.push_back(t * rename_into(f, ext, up) - Polynomial::constant(ext, Coeff::one()));

    auto gb = buchberger(work, TermOrder::elimination(ext, 1));
    std::vector<size_t> down(ext->size(), 0);
    for (size_t i = 0; i < ctx->size(); ++i) down[i + 1] = i;
    std::vector<Polynomial> out;
    for (const auto& p : gb) {
        bool has_t = false;
        for (const auto& [e, c] : p.terms)
            if (e[0] != 0) { has_t = true; break; }
        if (!has_t) out.push_back(rename_into(p, ctx, {down.begin() + 1, down.end()}));
    }
    return out;
}

std::vector<Polynomial> eliminate_block(const std::vector<Polynomial>& gens, size_t block) {
    if (gens.empty()) return gens;
    CtxPtr ctx = gens[0].ctx;
    auto gb = buchberger(gens, TermOrder::elimination(ctx, block));
    std::vector<Polynomial> out;
    for (const auto& p : gb) {
        bool uses_block = false;
        for (const auto& [e, c] : p.terms)
            for (size_t i = 0; i < block && !uses_block; ++i)
                if (e[i] != 0) uses_block = true;
        if (!uses_block) out.push_back(p);
    }
    return out;
}

bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    if (gens.empty()) return false;
    CtxPtr ctx = gens[0].ctx;
    std::vector<std::string> names = ctx->names;
    names.push_back("_rab");
    std::vector<long> weights = ctx->weights;
    weights.push_back(1);
    CtxPtr ext = make_context(names, weights);
    std::vector<size_t> up(ctx->size());
    for (size_t i = 0; i < ctx->size(); ++i) up[i] = i;
    std::vector<Polynomial> work;
    for (const auto& p : gens) work.push_back(rename_into(p, ext, up));
    Polynomial y = Polynomial::variable(ext, ext->size() - 1);
    work.push_back(y * rename_into(f, ext, up) - Polynomial::constant(ext, Coeff::one()));
    auto gb = buchberger(work, TermOrder::grevlex(ext));
    // 1 in ideal iff GB == {1}
    return gb.size() == 1 && gb[0].term_count() == 1 &&
           weighted_degree(gb[0].leading_exp(), ext->weights) == 0;
}

} // namespace sqt
