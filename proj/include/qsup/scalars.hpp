#pragma once

// Exact coefficient arithmetic for the quantum supergroup toolkit.
//
// All symbolic computations run over the field Q(i)(v): rational functions in
// an indeterminate v (with q = v^2) whose coefficients are Gaussian rationals.
// This subfield contains every constant the toolkit needs: signs, the fourth
// root of unity i, and q-powers of half-integral pairings realized as powers
// of v.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace qsup {

// ---------------------------------------------------------------------------
// GaussRat: a + b*i with exact rational a, b.
// ---------------------------------------------------------------------------
struct GaussRat {
    mpq_class re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(n), im(0) {}
    GaussRat(const mpq_class& r) : re(r), im(0) {}
    GaussRat(mpq_class r, mpq_class i_) : re(std::move(r)), im(std::move(i_)) {}

    static GaussRat unit_i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat inv() const;
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }
    GaussRat conj() const { return GaussRat(re, -im); }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. "3/2", "i", "-2*i", "(1+i)"
};

// ---------------------------------------------------------------------------
// LaurentPoly: finitely supported map  exponent of v -> GaussRat.
// Invariant: no stored zero coefficients; the empty map is 0.
// ---------------------------------------------------------------------------
class LaurentPoly {
  public:
    using Coeffs = std::map<int, GaussRat>;

    LaurentPoly() = default;
    LaurentPoly(long n) { set(0, GaussRat(n)); }
    explicit LaurentPoly(const GaussRat& c) { set(0, c); }

    static LaurentPoly monomial(int exp, const GaussRat& c) {
        LaurentPoly p;
        p.set(exp, c);
        return p;
    }

    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    GaussRat coeff(int exp) const;

    void set(int exp, const GaussRat& c) {
        if (c.is_zero())
            c_.erase(exp);
        else
            c_[exp] = c;
    }
    void add_term(int exp, const GaussRat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(int k) const;  // multiply by v^k
    LaurentPoly bar() const;           // v -> v^{-1}

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;  // arbitrary total order for map keys

    std::string to_string() const;  // e.g. "(-1)*v^-2 + i*v^3"

  private:
    Coeffs c_;
};

// ---------------------------------------------------------------------------
// Scalar: canonical rational function num/den over Q(i)[v, v^-1].
// Invariants: den != 0; the pair is gcd-reduced after clearing v-powers; den
// is an honest polynomial (valuation 0) and monic (leading coefficient 1).
// ---------------------------------------------------------------------------
class Scalar {
  public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    explicit Scalar(const GaussRat& c) : num_(c), den_(1) {}
    explicit Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar unit_i() { return Scalar(GaussRat::unit_i()); }
    static Scalar vpow(int k) { return Scalar(LaurentPoly::monomial(k, GaussRat(1))); }
    static Scalar qpow(int k) { return vpow(2 * k); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar inv() const;
    Scalar bar() const;  // v -> v^{-1}; ring involution

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order for map keys

    std::string to_string() const;

  private:
    void normalize();

    LaurentPoly num_, den_;
};

// Quantum integer [n]_d = (v^{2dn} - v^{-2dn}) / (v^{2d} - v^{-2d}).
Scalar qint(int n, int d);

// Square root of scalars of the shape u^2 * v^{2e} with u in Q(i)(v); the
// branch is fixed by normalizing the sign of the leading numerator
// coefficient. Throws if the argument is not of that shape.
Scalar scalar_sqrt(const Scalar& s);

// Floating probe used only for quick falsification in tests, never as an
// acceptance path. Throws on a denominator pole.
std::complex<double> eval_float(const Scalar& s, std::complex<double> v0);

// Parses the textual grammar emitted by Scalar::to_string (and general
// +,-,*,/,^ expressions in the atoms v, i and integer literals).
Scalar parse_scalar(const std::string& text);

}  // namespace qsup
