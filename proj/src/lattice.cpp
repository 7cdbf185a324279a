#include "sqt/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace sqt {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows_in) {
    if (rows_in.empty() || rows_in[0].empty()) throw ArgumentError("empty matrix");
    IntMatrix m(static_cast<long>(rows_in.size()), static_cast<long>(rows_in[0].size()));
    for (long i = 0; i < m.rows; ++i) {
        if (static_cast<long>(rows_in[i].size()) != m.cols)
            throw ArgumentError("ragged matrix rows");
        for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols != o.rows) throw ArgumentError("matrix product shape mismatch");
    IntMatrix r(rows, o.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (long j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::col(long j) const {
    std::vector<Int> c(rows);
    for (long i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Int> IntMatrix::row(long i) const {
    std::vector<Int> r(cols);
    for (long j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix IntMatrix::with_swapped_cols(long a, long b) const {
    IntMatrix m = *this;
    for (long i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    return m;
}

IntMatrix IntMatrix::cotangent_lift() const {
    IntMatrix m(rows, 2 * cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            m.at(i, j) = at(i, j);
            m.at(i, j + cols) = -at(i, j);
        }
    return m;
}

std::string IntMatrix::json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (long i = 0; i < rows; ++i) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (long j = 0; j < cols; ++j) r.push_back(at(i, j).get_str());
        arr.push_back(r);
    }
    return arr.dump();
}

IntMatrix IntMatrix::parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw ParseError("matrix JSON must be a nonempty array");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : doc) {
        if (!r.is_array() || r.empty()) throw ParseError("matrix rows must be nonempty arrays");
        std::vector<Int> row;
        for (const auto& v : r) {
            if (v.is_number_integer()) {
                row.emplace_back(static_cast<long>(v.get<long long>()));
            } else if (v.is_string()) {
                Int x;
                if (x.set_str(v.get<std::string>(), 10) != 0)
                    throw ParseError("bad integer literal in matrix: " + v.get<std::string>());
                row.push_back(x);
            } else {
                throw ParseError("matrix entries must be integers or decimal strings");
            }
        }
        rows.push_back(std::move(row));
    }
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
    for (long i = 0; i < m.rows; ++i) {
        if (static_cast<long>(rows[i].size()) != m.cols) throw ParseError("ragged matrix rows");
        for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::pair<Int, Int> gcd_lcm(const std::vector<Int>& values) {
    if (values.empty()) throw ArgumentError("gcd_lcm of empty list");
    Int g(0), l(1);
    for (const Int& v : values) g = int_gcd(g, v);
    for (const Int& v : values) {
        if (v == 0) throw ArgumentError("lcm with a zero value");
        l = int_lcm(l, v);
    }
    return {g, l};
}

HnfResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    long pivot_row = 0;
    for (long col = 0; col < h.cols && pivot_row < h.rows; ++col) {
        // gcd elimination below pivot_row in this column
        long nz = -1;
        for (long i = pivot_row; i < h.rows; ++i)
            if (h.at(i, col) != 0) { nz = i; break; }
        if (nz < 0) continue;
        for (long i = nz + 1; i < h.rows; ++i) {
            while (h.at(i, col) != 0) {
                Int q = h.at(nz, col) / h.at(i, col); // truncated division is fine here
                for (long j = 0; j < h.cols; ++j) h.at(nz, j) -= q * h.at(i, j);
                for (long j = 0; j < u.cols; ++j) u.at(nz, j) -= q * u.at(i, j);
                for (long j = 0; j < h.cols; ++j) std::swap(h.at(nz, j), h.at(i, j));
                for (long j = 0; j < u.cols; ++j) std::swap(u.at(nz, j), u.at(i, j));
            }
        }
        if (nz != pivot_row) {
            for (long j = 0; j < h.cols; ++j) std::swap(h.at(nz, j), h.at(pivot_row, j));
            for (long j = 0; j < u.cols; ++j) std::swap(u.at(nz, j), u.at(pivot_row, j));
        }
        if (h.at(pivot_row, col) < 0) {
            for (long j = 0; j < h.cols; ++j) h.at(pivot_row, j) = -h.at(pivot_row, j);
            for (long j = 0; j < u.cols; ++j) u.at(pivot_row, j) = -u.at(pivot_row, j);
        }
        // reduce entries above the pivot into [0, pivot)
        const Int& p = h.at(pivot_row, col);
        for (long i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), p.get_mpz_t());
            if (q != 0) {
                for (long j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(pivot_row, j);
                for (long j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(pivot_row, j);
            }
        }
        ++pivot_row;
    }
    return {h, u};
}

long rank(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    long r = 0;
    for (long i = 0; i < h.rows; ++i) {
        bool nonzero = false;
        for (long j = 0; j < h.cols; ++j)
            if (h.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++r;
    }
    return r;
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw ArgumentError("determinant of non-square matrix");
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    long n = a.rows;
    Int prev(1);
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            long swap_row = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return Int(0);
            for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = v / prev;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<std::vector<Int>> row_lattice_basis(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    std::vector<std::vector<Int>> rows;
    for (long i = 0; i < h.rows; ++i) {
        std::vector<Int> r = h.row(i);
        if (std::any_of(r.begin(), r.end(), [](const Int& v) { return v != 0; }))
            rows.push_back(std::move(r));
    }
    return rows;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    return row_lattice_basis(a) == row_lattice_basis(b);
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m) {
    // HNF of the transpose: rows of V mapping to zero rows of H span ker(M).
    IntMatrix t = m.transpose();
    HnfResult res = hermite_normal_form(t);
    std::vector<std::vector<Int>> basis;
    for (long i = 0; i < res.h.rows; ++i) {
        bool zero = true;
        for (long j = 0; j < res.h.cols; ++j)
            if (res.h.at(i, j) != 0) { zero = false; break; }
        if (zero) basis.push_back(res.u.row(i));
    }
    return basis;
}

std::vector<Int> maximal_minors(const IntMatrix& m) {
    if (m.rows > m.cols) throw ArgumentError("maximal minors need rows <= cols");
    std::vector<Int> out;
    std::vector<long> idx(m.rows);
    for (long i = 0; i < m.rows; ++i) idx[i] = i;
    // iterate over all column subsets of size rows
    std::vector<long> comb(m.rows);
    for (long i = 0; i < m.rows; ++i) comb[i] = i;
    while (true) {
        IntMatrix sub(m.rows, m.rows);
        for (long i = 0; i < m.rows; ++i)
            for (long j = 0; j < m.rows; ++j) sub.at(i, j) = m.at(i, comb[j]);
        out.push_back(determinant(sub));
        long i = m.rows - 1;
        while (i >= 0 && comb[i] == m.cols - m.rows + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (long j = i + 1; j < m.rows; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

Int maximal_minor_gcd(const IntMatrix& m) {
    Int g(0);
    for (const Int& d : maximal_minors(m)) g = int_gcd(g, d);
    return g;
}

Int total_degree(const ExponentVector& v) {
    Int d(0);
    for (const Int& x : v) d += x;
    return d;
}

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
    Int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // descending lexicographic within a degree
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

std::vector<Int> apply(const IntMatrix& m, const ExponentVector& x) {
    std::vector<Int> v(m.rows, Int(0));
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j)
            if (x[j] != 0) v[i] += m.at(i, j) * x[j];
    return v;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

} // namespace

std::vector<ExponentVector> monoid_hilbert_basis(const IntMatrix& m, long max_degree) {
    // Contejean-Devie completion: grow candidates from the unit vectors, only
    // in directions that shrink the residual M x, pruning anything that
    // dominates a known solution.
    const long n = m.cols;
    std::vector<std::vector<Int>> mcols(n);
    for (long j = 0; j < n; ++j) mcols[j] = m.col(j);

    std::vector<ExponentVector> solutions;
    auto dominated = [&](const ExponentVector& x) {
        for (const auto& s : solutions)
            if (componentwise_leq(s, x)) return true;
        return false;
    };

    std::set<ExponentVector> frontier;
    for (long j = 0; j < n; ++j) {
        ExponentVector e(n, Int(0));
        e[j] = 1;
        frontier.insert(e);
    }
    while (!frontier.empty()) {
        std::set<ExponentVector> next;
        for (const auto& t : frontier) {
            std::vector<Int> val = apply(m, t);
            if (is_zero_vec(val)) {
                if (!dominated(t)) solutions.push_back(t);
                continue;
            }
            if (max_degree >= 0 && total_degree(t) >= max_degree) continue;
            for (long j = 0; j < n; ++j) {
                if (dot(val, mcols[j]) >= 0) continue;
                ExponentVector t2 = t;
                t2[j] += 1;
                if (!dominated(t2)) next.insert(std::move(t2));
            }
        }
        // solutions found this round may newly dominate queued candidates
        std::set<ExponentVector> pruned;
        for (auto& c : next)
            if (!dominated(c)) pruned.insert(c);
        frontier = std::move(pruned);
    }
    // final minimality sweep (completion can emit comparable pairs across rounds)
    std::sort(solutions.begin(), solutions.end(), graded_lex_less);
    std::vector<ExponentVector> basis;
    for (const auto& s : solutions) {
        bool minimal = true;
        for (const auto& b : basis)
            if (componentwise_leq(b, s)) { minimal = false; break; }
        if (minimal) basis.push_back(s);
    }
    return basis;
}

bool monoid_decompose(const ExponentVector& x, const std::vector<ExponentVector>& basis,
                      std::vector<long>* multipliers) {
    // depth-first exact decomposition; basis elements tried in order
    std::vector<long> mult(basis.size(), 0);
    ExponentVector rest = x;

    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (std::all_of(rest.begin(), rest.end(), [](const Int& v) { return v == 0; }))
            return true;
        if (i >= basis.size()) return false;
        // max usable count of basis[i]
        long cap = -1;
        for (size_t j = 0; j < rest.size(); ++j) {
            if (basis[i][j] == 0) continue;
            Int q = rest[j] / basis[i][j];
            long ql = q.fits_slong_p() ? q.get_si() : 0;
            cap = cap < 0 ? ql : std::min(cap, ql);
        }
        if (cap < 0) cap = 0; // zero vector in basis would loop; not expected
        for (long c = cap; c >= 0; --c) {
            ExponentVector saved = rest;
            for (size_t j = 0; j < rest.size(); ++j) rest[j] -= c * basis[i][j];
            bool neg = std::any_of(rest.begin(), rest.end(), [](const Int& v) { return v < 0; });
            if (!neg) {
                mult[i] = c;
                if (go(i + 1)) return true;
            }
            rest = saved;
            mult[i] = 0;
        }
        return false;
    };
    bool ok = go(0);
    if (ok && multipliers) *multipliers = mult;
    return ok;
}

} // namespace sqt
