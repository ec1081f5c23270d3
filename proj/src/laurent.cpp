#include "braidrep/laurent.hpp"

#include <cctype>
#include <sstream>

namespace braidrep {

std::size_t var_index(char v) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == v) return i;
    return kNumVars;
}

bool Monomial::is_constant() const {
    for (int e : exponents)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exponents[i] = exponents[i] + o.exponents[i];
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exponents[i] = -exponents[i];
    return r;
}

LaurentPolynomial LaurentPolynomial::constant(BigInt c) {
    LaurentPolynomial p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(char v) {
    std::size_t i = var_index(v);
    if (i == kNumVars) throw Error(std::string("unknown variable: ") + v);
    Monomial m;
    m.exponents[i] = 1;
    return term(m, 1);
}

LaurentPolynomial LaurentPolynomial::term(Monomial m, BigInt c) {
    LaurentPolynomial p;
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second == 1;
}

bool LaurentPolynomial::is_unit() const {
    if (terms_.size() != 1) return false;
    const BigInt& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

bool LaurentPolynomial::is_single_term() const { return terms_.size() == 1; }

void LaurentPolynomial::insert_term(const Monomial& m, BigInt c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.insert_term(m1 * m2, c1 * c2);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
}

LaurentPolynomial LaurentPolynomial::monomial_inverse() const {
    if (!is_unit()) throw NotAUnit("monomial_inverse: not a unit of the Laurent ring");
    const auto& [m, c] = *terms_.begin();
    return term(m.inverse(), c);
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t prime) {
    return pow_mod(x, prime - 2, prime);
}

std::uint64_t LaurentPolynomial::substitute(const std::map<char, std::uint64_t>& assignment,
                                            std::uint64_t modulus) const {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        BigInt cm = c % BigInt(modulus);
        if (cm < 0) cm += modulus;
        std::uint64_t v = static_cast<std::uint64_t>(cm);
        for (std::size_t i = 0; i < kNumVars; ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            auto it = assignment.find(kVarNames[i]);
            if (it == assignment.end())
                throw MissingVariable(std::string("no assignment for variable ") + kVarNames[i]);
            std::uint64_t x = it->second % modulus;
            if (e > 0) {
                v = mul_mod(v, pow_mod(x, static_cast<std::uint64_t>(e), modulus), modulus);
            } else {
                if (x == 0)
                    throw ZeroAssignment(std::string("negative exponent on zero residue for ") +
                                         kVarNames[i]);
                v = mul_mod(v, pow_mod(inv_mod(x, modulus), static_cast<std::uint64_t>(-e), modulus),
                            modulus);
            }
        }
        acc = (acc + v) % modulus;
    }
    return acc;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote_coeff = false;
        if (mag != 1 || m.is_constant()) {
            out << mag.str();
            wrote_coeff = true;
        }
        for (std::size_t i = 0; i < kNumVars; ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            if (wrote_coeff) out << "*";
            out << kVarNames[i];
            if (e != 1) out << "^" << e;
            wrote_coeff = true;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }

    BigInt parse_int() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) throw SyntaxError("expected integer", start);
        BigInt v(digits);
        return neg ? BigInt(-v) : v;
    }

    // term := [int] ('*'? var ('^' int)?)*
    LaurentPolynomial parse_term(bool negate) {
        skip_ws();
        BigInt coeff = 1;
        bool saw_anything = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_int();
            saw_anything = true;
        }
        Monomial m;
        while (true) {
            skip_ws();
            std::size_t save = pos;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= text.size() || var_index(text[pos]) == kNumVars) {
                if (save != pos) throw SyntaxError("expected variable after '*'", pos);
                break;
            }
            std::size_t vi = var_index(text[pos]);
            ++pos;
            int e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                BigInt be = parse_int();
                e = static_cast<int>(be);
            }
            m.exponents[vi] += e;
            saw_anything = true;
        }
        if (!saw_anything) throw SyntaxError("expected term", pos);
        if (negate) coeff = -coeff;
        return LaurentPolynomial::term(m, coeff);
    }

    LaurentPolynomial parse_poly() {
        LaurentPolynomial p;
        bool neg = false;
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos;
        }
        p += parse_term(neg);
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') throw SyntaxError("expected '+' or '-'", pos);
            ++pos;
            p += parse_term(c == '-');
        }
        return p;
    }
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
    PolyParser parser{text};
    if (parser.eof()) throw SyntaxError("empty input", 0);
    return parser.parse_poly();
}

}  // namespace braidrep
