#include "sqt/numeric.hpp"

#include <cmath>
#include <sstream>

namespace sqt {

Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw ArgumentError("zero to negative power");
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

std::string rat_str(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

double rat_to_double(const Rat& a) { return a.get_d(); }

Int squarefree_part(const Int& n, Int& root_out) {
    if (n <= 0) throw ArgumentError("squarefree_part needs a positive integer");
    Int rest = n;
    Int square(1), root(1);
    auto strip = [&](const Int& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e >= 2) root *= int_pow(p, e / 2);
        if (e % 2) square *= p;
    };
    strip(Int(2));
    strip(Int(3));
    // 6k+-1 wheel; inputs here are small (radicands come pre-factored when big)
    const long bound = 100000;
    for (long c = 5; c <= bound && rest > 1; c += 6) {
        strip(Int(c));
        strip(Int(c + 2));
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Int s;
            mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
            root *= s;
        } else {
            square *= rest; // no small factors left: squarefree at desk scale
        }
    }
    root_out = root;
    return square;
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw ArgumentError("division by zero coefficient");
    Rat n = norm();
    return GaussRat(re / n, -im / n);
}

void Coeff::normalize() {
    if (g.is_zero()) {
        rad = 1;
        return;
    }
    if (rad < 0) throw ArgumentError("negative radicand");
    if (rad == 0) {
        g = GaussRat();
        rad = 1;
        return;
    }
    if (rad == 1) return;
    Int root;
    Int sf = squarefree_part(rad, root);
    if (root != 1) g = g * GaussRat(Rat(root), Rat(0));
    rad = sf;
}

Coeff Coeff::sqrt_rational(const Rat& r) {
    if (r < 0) throw ArgumentError("sqrt of negative rational");
    if (r == 0) return Coeff::zero();
    // sqrt(p/q) = sqrt(p*q)/q
    Int p = r.get_num(), q = r.get_den();
    Coeff c(GaussRat(make_rat(1, q), Rat(0)), p * q);
    return c;
}

Coeff Coeff::sqrt_factored(const std::vector<std::pair<Int, long>>& powers) {
    GaussRat scale(Rat(1), Rat(0));
    Int rad(1);
    for (const auto& [p, e] : powers) {
        if (p <= 0) throw ArgumentError("sqrt_factored needs positive bases");
        long half = e >= 0 ? e / 2 : -((-e + 1) / 2); // floor(e/2)
        long rem = e - 2 * half;                      // 0 or 1
        Rat part = rat_pow(Rat(p), half);
        scale = scale * GaussRat(part, Rat(0));
        if (rem) rad *= p;
    }
    return Coeff(scale, rad);
}

Coeff Coeff::operator-() const {
    Coeff c = *this;
    c.g = -c.g;
    return c;
}

Coeff Coeff::operator+(const Coeff& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (rad != o.rad)
        throw UnsupportedCoefficientError("sum of unlike radicals: sqrt(" + rad.get_str() +
                                          ") vs sqrt(" + o.rad.get_str() + ")");
    Coeff c(g + o.g, rad);
    return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
    if (is_zero() || o.is_zero()) return Coeff::zero();
    Int d = int_gcd(rad, o.rad);
    Int new_rad = (rad / d) * (o.rad / d);
    GaussRat v = g * o.g * GaussRat(Rat(d), Rat(0));
    return Coeff(v, new_rad);
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw ArgumentError("division by zero coefficient");
    // 1/((g) sqrt(r)) = conj(g)/( |g|^2 r ) * sqrt(r)
    GaussRat gi = g.inverse();
    return Coeff(gi * GaussRat(make_rat(1, rad), Rat(0)), rad);
}

GaussRat Coeff::squared() const {
    GaussRat s = g * g;
    return s * GaussRat(Rat(rad), Rat(0));
}

std::string Coeff::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool need_times = false;
    if (g == GaussRat::of(1)) {
        if (rad == 1) return "1";
    } else if (g == GaussRat::of(-1) && rad != 1) {
        out << "(-1)";
        need_times = true;
    } else {
        if (g.is_real()) {
            out << "(" << rat_str(g.re) << ")";
        } else {
            out << "(" << rat_str(g.re);
            if (g.im >= 0) out << "+";
            out << rat_str(g.im) << "i)";
        }
        need_times = true;
    }
    if (rad != 1) {
        if (need_times) out << "*";
        out << "sqrt(" << rad.get_str() << ")";
    }
    return out.str();
}

double Coeff::real_part_double() const {
    double s = std::sqrt(rad.get_d());
    return g.re.get_d() * s;
}

} // namespace sqt
