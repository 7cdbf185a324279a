#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "sqt/errors.hpp"

namespace sqt {

using Int = mpz_class;
using Rat = mpq_class;

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);
Int int_pow(const Int& base, unsigned long e);

// den must be nonzero; result canonical with positive denominator.
Rat make_rat(const Int& num, const Int& den);
Rat rat_pow(const Rat& base, long e);
Rat rat_abs(const Rat& a);
std::string rat_str(const Rat& a);
Rat parse_rat(const std::string& s);
double rat_to_double(const Rat& a);

// n = square * f^2 with square squarefree; returns square, stores f.
// Factor search is by trial division at desk scale; a leftover cofactor is
// treated as squarefree once perfect-square extraction has been applied.
Int squarefree_part(const Int& n, Int& root_out);

// Exact complex rational a + b*i.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat of(long r, long i = 0) { return GaussRat(Rat(r), Rat(i)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat inverse() const;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

// Coefficient value (re + im*i) * sqrt(rad) with rad a squarefree positive
// integer; rad == 1 for plain Gaussian rationals.  Sums of unlike radicals are
// rejected (UnsupportedCoefficientError), which is all the invariant-theory
// computations here ever need.
struct Coeff {
    GaussRat g;
    Int rad = 1;

    Coeff() : g(), rad(1) {}
    explicit Coeff(GaussRat v, Int r = Int(1)) : g(std::move(v)), rad(std::move(r)) { normalize(); }

    static Coeff zero() { return Coeff(); }
    static Coeff one() { return Coeff(GaussRat::of(1)); }
    static Coeff i() { return Coeff(GaussRat::of(0, 1)); }
    static Coeff from_rat(const Rat& r) { return Coeff(GaussRat(r, Rat(0))); }
    static Coeff from_long(long v) { return Coeff(GaussRat::of(v)); }
    // sqrt(r) for rational r >= 0, normalized to (x)*sqrt(squarefree int).
    static Coeff sqrt_rational(const Rat& r);
    // sqrt of prod p_i^{e_i} (p_i > 0, e_i any sign); avoids factoring huge values.
    static Coeff sqrt_factored(const std::vector<std::pair<Int, long>>& powers);

    bool is_zero() const { return g.is_zero(); }
    bool is_rational() const { return g.is_real() && rad == 1; }
    bool has_radical() const { return rad != 1; }

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const { return *this + (-o); }
    Coeff operator*(const Coeff& o) const;
    Coeff inverse() const;
    Coeff operator/(const Coeff& o) const { return *this * o.inverse(); }
    Coeff conj() const { return Coeff(g.conj(), rad); }
    // (value)^2 as an exact Gaussian rational (radical squared out).
    GaussRat squared() const;

    bool operator==(const Coeff& o) const { return g == o.g && rad == o.rad; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    std::string str() const;
    double real_part_double() const;

  private:
    void normalize();
};

} // namespace sqt
