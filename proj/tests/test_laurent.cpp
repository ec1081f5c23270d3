#include <doctest.h>

#include "braidrep/laurent.hpp"
#include "test_util.hpp"

using namespace braidrep;
using testutil::random_poly;

namespace {
LaurentPolynomial P(const char* text) { return LaurentPolynomial::parse(text); }
}  // namespace

TEST_CASE("addition cancels and respects identities") {
    CHECK(P("t + b") + P("-t") == P("b"));
    LaurentPolynomial p = P("a^2 - 3*b*t");
    CHECK(LaurentPolynomial::zero() + p == p);
    CHECK(P("b^-1 - a*b^-1") + P("a*b^-1") == P("b^-1"));
}

TEST_CASE("multiplication adds exponents") {
    CHECK(P("t") * P("t") == P("t^2"));
    CHECK(P("b") * P("t^-1") == P("b*t^-1"));
    LaurentPolynomial p = P("1 - a + 2*c*d^-3");
    CHECK(p * LaurentPolynomial::one() == p);
}

TEST_CASE("monomial_inverse inverts units") {
    CHECK(P("t").monomial_inverse() == P("t^-1"));
    CHECK(P("-b*t").monomial_inverse() == P("-b^-1*t^-1"));
    CHECK_THROWS_AS(P("1 - a").monomial_inverse(), NotAUnit);
    CHECK_THROWS_AS(P("2*t").monomial_inverse(), NotAUnit);
}

TEST_CASE("substitute evaluates mod a prime") {
    CHECK(P("t*b").substitute({{'t', 2}, {'b', 3}}, 101) == 6);
    CHECK(P("t^-1").substitute({{'t', 2}}, 101) == 51);  // 2*51 = 102 = 1 mod 101
    CHECK(LaurentPolynomial::zero().substitute({}, 101) == 0);
    CHECK_THROWS_AS(P("t*b").substitute({{'t', 2}}, 101), MissingVariable);
    CHECK_THROWS_AS(P("t^-1").substitute({{'t', 0}}, 101), ZeroAssignment);
}

TEST_CASE("parse handles the documented grammar") {
    CHECK(P("b^-1*t") == P("t") * P("b").monomial_inverse());
    CHECK(P("1 - b").str() == "-b + 1");
    CHECK(P("-a^2*d + a*d^2").str() == "-a^2*d + a*d^2");
    CHECK(P("2a b") == P("2*a*b"));
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(P(""), SyntaxError);
    CHECK_THROWS_AS(P("x + 1"), SyntaxError);
    CHECK_THROWS_AS(P("a +"), SyntaxError);
    CHECK_THROWS_AS(P("a^"), SyntaxError);
}

TEST_CASE("format is canonical") {
    CHECK(LaurentPolynomial::zero().str() == "0");
    CHECK((P("t") * P("b")).str() == "b*t");
    CHECK(P("1 - a").str() == "-a + 1");
    CHECK(P("-t").str() == "-t");
    CHECK(P("3*t^2 - 3*t^2").str() == "0");
}

TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        LaurentPolynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + LaurentPolynomial::zero() == p);
        CHECK(p * LaurentPolynomial::one() == p);
        CHECK((p + (-p)).is_zero());
    }
}

TEST_CASE("parse round-trips format") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        LaurentPolynomial p = random_poly(rng);
        CHECK(LaurentPolynomial::parse(p.str()) == p);
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(13);
    const std::uint64_t modulus = 2305843009213693951ULL;
    std::uniform_int_distribution<std::uint64_t> residue(1, modulus - 1);
    for (int it = 0; it < 100; ++it) {
        LaurentPolynomial p = random_poly(rng), q = random_poly(rng);
        std::map<char, std::uint64_t> assignment;
        for (char v : kVarNames) assignment[v] = residue(rng);
        std::uint64_t lhs = (p * q).substitute(assignment, modulus);
        std::uint64_t rhs = mul_mod(p.substitute(assignment, modulus),
                                    q.substitute(assignment, modulus), modulus);
        CHECK(lhs == rhs);
        std::uint64_t sum_lhs = (p + q).substitute(assignment, modulus);
        std::uint64_t sum_rhs =
            (p.substitute(assignment, modulus) + q.substitute(assignment, modulus)) % modulus;
        CHECK(sum_lhs == sum_rhs);
    }
}

TEST_CASE("unit times its inverse is one") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> exp_dist(-4, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int it = 0; it < 200; ++it) {
        Monomial m;
        for (std::size_t v = 0; v < kNumVars; ++v) m.exponents[v] = exp_dist(rng);
        LaurentPolynomial u = LaurentPolynomial::term(m, sign(rng) ? 1 : -1);
        CHECK((u * u.monomial_inverse()).is_one());
    }
}
