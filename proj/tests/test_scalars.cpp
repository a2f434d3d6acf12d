#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsup/scalars.hpp"

#include <random>

using namespace qsup;

namespace {

Scalar v(int k) {
    return Scalar::vpow(k);
}

// Small random rational functions for property tests.
Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp_dist(-3, 3), coef_dist(-4, 4), len_dist(1, 3);
    auto random_poly = [&]() {
        LaurentPoly p;
        int len = len_dist(rng);
        for (int t = 0; t < len; ++t)
            p.add_term(exp_dist(rng), GaussRat(mpq_class(coef_dist(rng)), mpq_class(coef_dist(rng))));
        return p;
    };
    LaurentPoly num = random_poly();
    LaurentPoly den;
    do {
        den = random_poly();
    } while (den.is_zero());
    return Scalar(num, den);
}

}  // namespace

TEST_CASE("gaussian unit squares to -1") {
    CHECK(Scalar::unit_i() * Scalar::unit_i() == Scalar(-1));
}

TEST_CASE("basic laurent identities") {
    CHECK((v(1) + v(-1)) * (v(1) - v(-1)) == v(2) - v(-2));
    CHECK((v(1) - v(-1)).inv() + (v(-1) - v(1)).inv() == Scalar(0));
}

TEST_CASE("canonical form is stable under rescaling") {
    Scalar a(LaurentPoly::monomial(3, GaussRat(2)) + LaurentPoly::monomial(1, GaussRat(-2)),
             LaurentPoly::monomial(0, GaussRat(4)));
    Scalar b(LaurentPoly::monomial(4, GaussRat(1)) + LaurentPoly::monomial(2, GaussRat(-1)),
             LaurentPoly::monomial(1, GaussRat(2)));
    CHECK(a == b);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) {
            CHECK(a * a.inv() == Scalar(1));
            CHECK(a / a == Scalar(1));
        }
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS(Scalar(1) / Scalar(0));
    CHECK_THROWS(Scalar(0).inv());
}

TEST_CASE("bar involution") {
    CHECK(v(3).bar() == v(-3));
    Scalar qplus = Scalar::qpow(1) + Scalar::qpow(-1);
    CHECK(qplus.bar() == qplus);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
    // i itself is fixed: the involution only inverts v.
    CHECK(Scalar::unit_i().bar() == Scalar::unit_i());
}

TEST_CASE("quantum integers") {
    CHECK(qint(2, 1) == Scalar::qpow(1) + Scalar::qpow(-1));
    CHECK(qint(0, 3) == Scalar(0));
    CHECK(qint(1, 2) == Scalar(1));
    CHECK(qint(3, -1) == Scalar::qpow(2) + Scalar(1) + Scalar::qpow(-2));
    // [n]_d is odd in n and insensitive to the sign of d (it is the ordinary
    // quantum integer evaluated at q^d).
    for (int n = -8; n <= 8; ++n)
        for (int d : {-2, -1, 1, 2}) {
            CHECK(qint(n, -d) == qint(n, d));
            CHECK(qint(-n, d) == -qint(n, d));
            CHECK(qint(-n, -d) == -qint(n, d));
        }
}

TEST_CASE("square roots of admissible shapes") {
    // v^{2e} times a perfect square.
    Scalar s = (v(2) + Scalar(1)) * (v(2) + Scalar(1)) * Scalar::qpow(-3);
    Scalar r = scalar_sqrt(s);
    CHECK(r * r == s);
    CHECK(scalar_sqrt(Scalar(-1)) == Scalar::unit_i());
    CHECK(scalar_sqrt(Scalar::qpow(4)) == Scalar::qpow(2));
    CHECK(scalar_sqrt(Scalar(0)) == Scalar(0));
    CHECK_THROWS(scalar_sqrt(v(1)));
    CHECK_THROWS(scalar_sqrt(Scalar(2) + v(2)));
}

TEST_CASE("floating probe") {
    Scalar qplus = Scalar::qpow(1) + Scalar::qpow(-1);
    CHECK(std::abs(eval_float(qplus, {1.0, 0.0}) - std::complex<double>(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(eval_float(v(1), {2.0, 0.0}) - std::complex<double>(2.0, 0.0)) < 1e-12);
    Scalar pole = Scalar(1) / (v(1) - Scalar(1));
    CHECK_THROWS(eval_float(pole, {1.0, 0.0}));
}

TEST_CASE("printer and parser round-trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(parse_scalar(a.to_string()) == a);
    }
    CHECK(parse_scalar("(-1)*v^-2 + i*v^3") ==
          Scalar(LaurentPoly::monomial(-2, GaussRat(-1)) +
                 LaurentPoly::monomial(3, GaussRat::unit_i())));
    CHECK(parse_scalar("(v^2 - 1)/(v)") == (Scalar::qpow(1) - Scalar(1)) / v(1));
    CHECK(parse_scalar("q") == v(2));
    CHECK_THROWS(parse_scalar("v +"));
}
