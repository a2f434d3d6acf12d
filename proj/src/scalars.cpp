#include "qsup/scalars.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qsup {

// --------------------------------------------------------------------------
// GaussRat
// --------------------------------------------------------------------------
GaussRat GaussRat::inv() const {
    mpq_class n = re * re + im * im;
    if (n == 0)
        throw std::domain_error("GaussRat: division by zero");
    return GaussRat(re / n, -im / n);
}

static std::string rat_str(const mpq_class& r) {
    return r.get_str();
}

std::string GaussRat::to_string() const {
    if (im == 0)
        return rat_str(re);
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = rat_str(im) + "*i";
    if (re == 0)
        return imag;
    std::string s = rat_str(re);
    if (im > 0)
        s += "+" + imag;
    else
        s += imag;  // imag already carries its sign
    return "(" + s + ")";
}

// --------------------------------------------------------------------------
// LaurentPoly
// --------------------------------------------------------------------------
int LaurentPoly::min_exp() const {
    if (c_.empty())
        throw std::logic_error("LaurentPoly: min_exp of zero");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty())
        throw std::logic_error("LaurentPoly: max_exp of zero");
    return c_.rbegin()->first;
}

GaussRat LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? GaussRat() : it->second;
}

void LaurentPoly::add_term(int exp, const GaussRat& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = c_.emplace(exp, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        r.c_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_)
        r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_)
        r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        r.c_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        r.c_.emplace(-e, c);
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    auto a = c_.begin(), b = o.c_.begin();
    for (; a != c_.end() && b != o.c_.end(); ++a, ++b) {
        if (a->first != b->first)
            return a->first < b->first;
        if (a->second.re != b->second.re)
            return a->second.re < b->second.re;
        if (a->second.im != b->second.im)
            return a->second.im < b->second.im;
    }
    return b != o.c_.end();
}

std::string LaurentPoly::to_string() const {
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first)
            out << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs.find('-') != std::string::npos && cs.front() != '(')
            cs = "(" + cs + ")";
        if (e == 0) {
            out << cs;
        } else {
            if (!c.is_one())
                out << cs << "*";
            out << "v";
            if (e != 1)
                out << "^" << e;
        }
    }
    return out.str();
}

// --------------------------------------------------------------------------
// Polynomial helpers over Q(i)[v] (valuation-0 Laurent polynomials).
// --------------------------------------------------------------------------
namespace {

// Division with remainder for honest polynomials (min_exp >= 0).
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem) {
    quo = LaurentPoly();
    rem = a;
    if (b.is_zero())
        throw std::domain_error("poly_divmod: division by zero polynomial");
    int db = b.max_exp();
    GaussRat lb = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        int d = rem.max_exp() - db;
        GaussRat c = rem.coeff(rem.max_exp()) / lb;
        LaurentPoly t = LaurentPoly::monomial(d, c);
        quo = quo + t;
        rem = rem - t * b;
    }
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.is_zero())
        return LaurentPoly(1);
    // Normalize the gcd to be monic so exact division below is stable.
    GaussRat lead = a.coeff(a.max_exp());
    return a * LaurentPoly(lead.inv());
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q, r;
    poly_divmod(a, b, q, r);
    if (!r.is_zero())
        throw std::logic_error("poly_div_exact: division was not exact");
    return q;
}

}  // namespace

// --------------------------------------------------------------------------
// Scalar
// --------------------------------------------------------------------------
Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("Scalar: zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Clear v-powers so both parts are polynomials with nonzero constant term;
    // the net shift is reattached to the numerator at the end.
    int a = num_.min_exp(), b = den_.min_exp();
    LaurentPoly p = num_.shifted(-a);
    LaurentPoly d = den_.shifted(-b);
    LaurentPoly g = poly_gcd(p, d);
    if (!g.is_one()) {
        p = poly_div_exact(p, g);
        d = poly_div_exact(d, g);
    }
    // Monic denominator (leading coefficient 1), valuation 0.
    GaussRat lead = d.coeff(d.max_exp());
    if (!lead.is_one()) {
        GaussRat li = lead.inv();
        p = p * LaurentPoly(li);
        d = d * LaurentPoly(li);
    }
    num_ = p.shifted(a - b);
    den_ = d;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw std::domain_error("Scalar: division by zero");
    return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inv();
}

Scalar Scalar::bar() const {
    return Scalar(num_.bar(), den_.bar());
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ < o.num_)
        return true;
    if (o.num_ < num_)
        return false;
    return den_ < o.den_;
}

std::string Scalar::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar qint(int n, int d) {
    if (d == 0)
        throw std::domain_error("qint: d must be nonzero");
    LaurentPoly num = LaurentPoly::monomial(2 * d * n, GaussRat(1)) -
                      LaurentPoly::monomial(-2 * d * n, GaussRat(1));
    LaurentPoly den = LaurentPoly::monomial(2 * d, GaussRat(1)) -
                      LaurentPoly::monomial(-2 * d, GaussRat(1));
    return Scalar(num, den);
}

// --------------------------------------------------------------------------
// Square root of u^2 * v^{2e}
// --------------------------------------------------------------------------
namespace {

// Square root of a rational if it is a perfect square, else nullopt-like throw.
mpq_class rat_sqrt(const mpq_class& r) {
    if (r < 0)
        throw std::domain_error("scalar_sqrt: negative rational leading part");
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (sn * sn != num || sd * sd != den)
        throw std::domain_error("scalar_sqrt: rational is not a perfect square");
    return mpq_class(sn, sd);
}

// Square root of c = (a + b i): try c = w^2 with w = x or x*i or x*(1+i)/k...
// We only need squares of Gaussian rationals of the forms x and x*i and
// general (x + y i); solve via the standard closed form using |c|.
GaussRat gauss_sqrt(const GaussRat& c) {
    if (c.is_zero())
        return GaussRat();
    if (c.im == 0) {
        if (c.re > 0)
            return GaussRat(rat_sqrt(c.re));
        return GaussRat(mpq_class(0), rat_sqrt(-c.re));
    }
    // |c|^2 must be a rational square: |c| = m, then x^2 = (re+m)/2.
    mpq_class m = rat_sqrt(c.re * c.re + c.im * c.im);
    mpq_class x2 = (c.re + m) / 2;
    mpq_class x = rat_sqrt(x2);
    if (x == 0)
        throw std::domain_error("scalar_sqrt: not a Gaussian-rational square");
    mpq_class y = c.im / (2 * x);
    GaussRat w(x, y);
    if (w * w != c)
        throw std::domain_error("scalar_sqrt: not a Gaussian-rational square");
    return w;
}

// Square root of a polynomial with nonzero constant term that is a perfect
// square in Q(i)[v]. Newton-style coefficient recursion from the bottom.
LaurentPoly poly_sqrt(const LaurentPoly& p) {
    int deg = p.max_exp();
    if (deg % 2 != 0)
        throw std::domain_error("scalar_sqrt: odd-degree polynomial");
    GaussRat c0 = gauss_sqrt(p.coeff(0));
    LaurentPoly root = LaurentPoly::monomial(0, c0);
    GaussRat two_c0 = c0 + c0;
    for (int k = 1; k <= deg / 2; ++k) {
        // Coefficient of v^k in root from matching coefficient of v^k in p.
        GaussRat acc = p.coeff(k);
        for (int j = 1; j < k; ++j)
            acc = acc - root.coeff(j) * root.coeff(k - j);
        root.set(k, acc / two_c0);
    }
    if (root * root != p)
        throw std::domain_error("scalar_sqrt: polynomial is not a perfect square");
    return root;
}

// Canonical branch: flip the overall sign so the leading coefficient has
// positive real part (or zero real part and positive imaginary part).
LaurentPoly canonical_branch(const LaurentPoly& p) {
    GaussRat lead = p.coeff(p.max_exp());
    if (lead.re < 0 || (lead.re == 0 && lead.im < 0))
        return -p;
    return p;
}

}  // namespace

Scalar scalar_sqrt(const Scalar& s) {
    if (s.is_zero())
        return Scalar();
    int a = s.num().min_exp();
    if (a % 2 != 0)
        throw std::domain_error("scalar_sqrt: odd v-valuation");
    LaurentPoly p = s.num().shifted(-a);
    LaurentPoly d = s.den();
    LaurentPoly rp = canonical_branch(poly_sqrt(p));
    LaurentPoly rd = canonical_branch(poly_sqrt(d));
    Scalar r(rp.shifted(a / 2), rd);
    return r;
}

// --------------------------------------------------------------------------
// Floating probe
// --------------------------------------------------------------------------
namespace {

std::complex<double> eval_poly(const LaurentPoly& p, std::complex<double> v0) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : p.coeffs()) {
        std::complex<double> coef(c.re.get_d(), c.im.get_d());
        acc += coef * std::pow(v0, e);
    }
    return acc;
}

}  // namespace

std::complex<double> eval_float(const Scalar& s, std::complex<double> v0) {
    std::complex<double> den = eval_poly(s.den(), v0);
    if (std::abs(den) < 1e-12)
        throw std::domain_error("eval_float: denominator pole");
    return eval_poly(s.num(), v0) / den;
}

// --------------------------------------------------------------------------
// Parser: +, -, *, /, ^ over the atoms v, i, integer literals, parentheses.
// --------------------------------------------------------------------------
namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("parse_scalar: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos));
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("parse_scalar: expected integer at position " +
                                        std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= s.size())
            throw std::invalid_argument("parse_scalar: unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar r = parse_expr();
            expect(')');
            return r;
        }
        if (c == 'v') {
            ++pos;
            return Scalar::vpow(1);
        }
        if (c == 'q') {
            ++pos;
            return Scalar::qpow(1);
        }
        if (c == 'i') {
            ++pos;
            return Scalar::unit_i();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar(parse_int());
        throw std::invalid_argument("parse_scalar: unexpected character '" + std::string(1, c) +
                                    "'");
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (accept('^')) {
            long e = parse_int();
            Scalar r(1);
            Scalar b = e >= 0 ? base : base.inv();
            for (long k = 0; k < (e >= 0 ? e : -e); ++k)
                r = r * b;
            return r;
        }
        return base;
    }

    Scalar parse_term() {
        Scalar r = parse_power();
        for (;;) {
            if (accept('*')) {
                r = r * parse_power();
            } else if (accept('/')) {
                r = r / parse_power();
            } else {
                // Implicit multiplication, e.g. "2v^3" or "3i".
                skip_ws();
                if (pos < s.size() && (s[pos] == 'v' || s[pos] == 'i' || s[pos] == 'q' || s[pos] == '('))
                    r = r * parse_power();
                else
                    break;
            }
        }
        return r;
    }

    Scalar parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Scalar r = parse_term();
        if (neg)
            r = -r;
        for (;;) {
            if (accept('+'))
                r = r + parse_term();
            else if (accept('-'))
                r = r - parse_term();
            else
                break;
        }
        return r;
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Parser p(text);
    Scalar r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("parse_scalar: trailing input at position " +
                                    std::to_string(p.pos));
    return r;
}

}  // namespace qsup
