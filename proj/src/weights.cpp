#include "sqt/weights.hpp"

#include <algorithm>

namespace sqt {

namespace {

Int content(const std::vector<Int>& v) {
    Int g(0);
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

void fill_derived(TypeInfo& info) {
    std::vector<Int> avec = info.a;
    auto [g, l] = gcd_lcm(avec);
    (void)g;
    info.alpha = l;
    info.m.clear();
    for (size_t i = 0; i < info.a.size(); ++i) info.m.push_back(info.n[i] * info.alpha / info.a[i]);
    info.beta = 0;
    for (const Int& mi : info.m) info.beta += mi;
    info.eta = info.alpha + info.beta;
}

} // namespace

TypeInfo detect_type(const IntMatrix& a) {
    const long ell = a.rows;
    if (a.cols < a.rows) throw ArgumentError("detect_type needs at least as many columns as rows");
    if (rank(a) < ell) throw ArgumentError("detect_type needs full row rank");

    TypeInfo info;
    info.kind = MatrixKind::General;
    info.k = a.cols - ell;

    // diagonal head with strictly negative entries
    for (long i = 0; i < ell; ++i)
        for (long j = 0; j < ell; ++j) {
            if (i == j) {
                if (a.at(i, j) >= 0) return info;
            } else if (a.at(i, j) != 0) {
                return info;
            }
        }
    if (info.k == 0) return info; // no tails to factor

    // tails strictly positive and pairwise parallel
    std::vector<std::vector<Int>> tails;
    for (long r = 0; r < info.k; ++r) {
        std::vector<Int> t = a.col(ell + r);
        for (const Int& v : t)
            if (v <= 0) return info;
        tails.push_back(std::move(t));
    }
    Int c0 = content(tails[0]);
    std::vector<Int> dir; // primitive direction
    for (const Int& v : tails[0]) dir.push_back(v / c0);
    std::vector<Int> mult = {c0};
    for (long r = 1; r < info.k; ++r) {
        Int cr = content(tails[r]);
        for (long i = 0; i < ell; ++i)
            if (tails[r][i] != cr * dir[i]) return info;
        mult.push_back(cr);
    }

    // canonical split: shared multiplier content goes into n, gcd(c) = 1
    Int shared = content(mult);
    info.n.clear();
    for (const Int& d : dir) info.n.push_back(d * shared);
    info.c.clear();
    for (const Int& cr : mult) info.c.push_back(cr / shared);
    info.a.clear();
    for (long i = 0; i < ell; ++i) info.a.push_back(-a.at(i, i));
    info.kind = std::all_of(info.c.begin(), info.c.end(), [](const Int& v) { return v == 1; })
                    ? MatrixKind::TypeI
                    : MatrixKind::TypeII;
    fill_derived(info);

    // alternative splits n -> d*dir for proper divisors d of the shared content
    if (shared > 1) {
        for (Int d(1); d < shared; ++d) {
            if (shared % d != 0) continue;
            TailFactorization alt;
            for (const Int& v : dir) alt.n.push_back(v * d);
            for (const Int& cr : mult) alt.c.push_back(cr / d);
            TypeInfo tmp = info;
            tmp.n = alt.n;
            fill_derived(tmp);
            alt.beta = tmp.beta;
            alt.eta = tmp.eta;
            info.alternatives.push_back(std::move(alt));
        }
    }
    return info;
}

IntMatrix assemble(const TypeInfo& info) {
    if (!info.is_type2()) throw ArgumentError("assemble needs Type I/II info");
    long ell = info.ell();
    IntMatrix a(ell, ell + info.k);
    for (long i = 0; i < ell; ++i) a.at(i, i) = -info.a[i];
    for (long r = 0; r < info.k; ++r)
        for (long i = 0; i < ell; ++i) a.at(i, ell + r) = info.c[r] * info.n[i];
    return a;
}

bool is_faithful(const IntMatrix& a) {
    if (rank(a) < a.rows) throw ArgumentError("faithfulness test needs full row rank");
    return maximal_minor_gcd(a) == 1;
}

bool is_faithful_type2(const TypeInfo& info) {
    if (!info.is_type2()) throw ArgumentError("is_faithful_type2 needs Type I/II info");
    long ell = info.ell();
    for (long i = 0; i < ell; ++i)
        for (long j = i + 1; j < ell; ++j)
            if (int_gcd(info.a[i], info.a[j]) != 1) return false;
    for (long j = 0; j < ell; ++j) {
        bool ok = false;
        for (long r = 0; r < info.k && !ok; ++r)
            if (int_gcd(info.a[j], info.c[r] * info.n[j]) == 1) ok = true;
        if (!ok) return false;
    }
    return true;
}

IntMatrix reduce_to_circle(const TypeInfo& info) {
    if (!info.is_type2()) throw ArgumentError("reduce_to_circle needs Type I/II info");
    if (!is_faithful_type2(info))
        throw ArgumentError("reduce_to_circle needs a faithful representation");
    IntMatrix b(1, info.k + 1);
    b.at(0, 0) = -info.alpha;
    for (long r = 0; r < info.k; ++r) b.at(0, 1 + r) = info.c[r] * info.beta;
    std::vector<Int> ent;
    ent.push_back(info.alpha);
    for (long r = 0; r < info.k; ++r) ent.push_back(info.c[r] * info.beta);
    if (gcd_lcm(ent).first != 1)
        throw InternalError("circle reduction is not faithful; hypothesis violated");
    return b;
}

EmbeddingMap embedding_map(const TypeInfo& info) {
    if (!info.is_type2()) throw ArgumentError("embedding_map needs Type I/II info");
    if (info.k < 1) throw ArgumentError("embedding_map needs at least one tail column");
    if (!is_faithful_type2(info)) throw ArgumentError("embedding_map needs a faithful representation");
    EmbeddingMap em;
    long ell = info.ell();
    em.source_dim = info.k + 1;
    em.target_dim = ell + info.k;
    for (long i = 0; i < ell; ++i) {
        Rat ratio = make_rat(info.m[i], info.beta);
        em.assignments.emplace_back(Coeff::sqrt_rational(ratio), 0);
    }
    for (long j = 0; j < info.k; ++j) em.assignments.emplace_back(Coeff::one(), 1 + j);
    return em;
}

bool cotangent_lift_equivalent(const IntMatrix& a, const IntMatrix& b,
                               const std::optional<std::vector<std::pair<long, long>>>& pairing) {
    if (a.rows != b.rows || a.cols != b.cols) throw ArgumentError("shape mismatch");
    IntMatrix la = a.cotangent_lift();
    IntMatrix lb = b.cotangent_lift();
    auto target = row_lattice_basis(lb);
    if (pairing) {
        IntMatrix p = la;
        for (auto [x, y] : *pairing) {
            if (x < 0 || y < 0 || x >= p.cols || y >= p.cols)
                throw ArgumentError("column pair out of range");
            p = p.with_swapped_cols(x, y);
        }
        return row_lattice_basis(p) == target;
    }
    long n = a.cols;
    if (n > 16) throw ArgumentError("cotangent lift search limited to 16 columns");
    for (long mask = 0; mask < (1L << n); ++mask) {
        IntMatrix p = la;
        for (long j = 0; j < n; ++j)
            if (mask & (1L << j)) p = p.with_swapped_cols(j, j + n);
        if (row_lattice_basis(p) == target) return true;
    }
    return false;
}

Int eta_single_tail(const IntMatrix& a) {
    if (a.cols != a.rows + 1) throw ArgumentError("eta_single_tail needs an ell x (ell+1) matrix");
    TypeInfo info = detect_type(a);
    if (!info.is_type2()) throw ArgumentError("matrix is not in [D | C] form");
    // tail taken whole: n = C, c = (1)
    TypeInfo whole = info;
    whole.n.clear();
    for (long i = 0; i < a.rows; ++i) whole.n.push_back(info.c[0] * info.n[i]);
    whole.c = {Int(1)};
    fill_derived(whole);
    return whole.eta;
}

} // namespace sqt
