#pragma once

// Exact arithmetic in Z[a^{±1}, b^{±1}, c^{±1}, d^{±1}, t^{±1}].
// The variable alphabet is fixed and globally ordered a < b < c < d < t,
// which makes canonical formatting unambiguous.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidrep/errors.hpp"

namespace braidrep {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames = {'a', 'b', 'c', 'd', 't'};

// Returns the index of a variable in the fixed alphabet, or kNumVars if unknown.
std::size_t var_index(char v);

// Exponent vector over the fixed alphabet; zero exponents are implicit.
struct Monomial {
    std::array<int, kNumVars> exponents{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool is_constant() const;
    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
};

// Sparse Laurent polynomial with big-integer coefficients.
// Terms are kept in descending lexicographic order of exponent vectors,
// which is also the canonical formatting order.
class LaurentPolynomial {
  public:
    using TermMap = std::map<Monomial, BigInt, std::greater<Monomial>>;

    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return {}; }
    static LaurentPolynomial one() { return constant(1); }
    static LaurentPolynomial constant(BigInt c);
    static LaurentPolynomial variable(char v);
    static LaurentPolynomial term(Monomial m, BigInt c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // A unit of the Laurent ring: a single term with coefficient ±1.
    bool is_unit() const;
    // Exactly one term (any nonzero coefficient).
    bool is_single_term() const;

    const TermMap& terms() const { return terms_; }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    // Multiplicative inverse of a unit; throws NotAUnit otherwise.
    LaurentPolynomial monomial_inverse() const;

    // Evaluates mod a prime modulus. Negative exponents go through the
    // modular inverse; a zero residue under a negative exponent throws.
    std::uint64_t substitute(const std::map<char, std::uint64_t>& assignment,
                             std::uint64_t modulus) const;

    std::string str() const;
    static LaurentPolynomial parse(std::string_view text);

  private:
    void insert_term(const Monomial& m, BigInt c);

    TermMap terms_;
};

// Modular helpers shared with the search fingerprinting.
std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t prime);

}  // namespace braidrep
