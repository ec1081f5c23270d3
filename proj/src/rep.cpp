#include "braidrep/rep.hpp"

#include <cstdlib>

namespace braidrep {

namespace {

LaurentPolynomial var(char v) { return LaurentPolynomial::variable(v); }
LaurentPolynomial one() { return LaurentPolynomial::one(); }

const LaurentPolynomial& require_param(const RepSpec& spec, char name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        throw InvalidParams(std::string("missing parameter '") + name + "' for " +
                            rep_kind_name(spec.kind));
    return it->second;
}

PolyMatrix block2(const LaurentPolynomial& p00, const LaurentPolynomial& p01,
                  const LaurentPolynomial& p10, const LaurentPolynomial& p11) {
    PolyMatrix m(2);
    m.at(0, 0) = p00;
    m.at(0, 1) = p01;
    m.at(1, 0) = p10;
    m.at(1, 1) = p11;
    return m;
}

}  // namespace

const char* rep_kind_name(RepKind k) {
    switch (k) {
        case RepKind::Simple: return "simple";
        case RepKind::Case1: return "case1";
        case RepKind::Case2: return "case2";
        case RepKind::Case3: return "case3";
        case RepKind::UnreducedBurau: return "burau";
        case RepKind::Raw: return "raw";
    }
    return "?";
}

const char* case_kind_name(CaseKind k) {
    switch (k) {
        case CaseKind::Case1: return "Case1";
        case CaseKind::Case2: return "Case2";
        case CaseKind::Case3: return "Case3";
        case CaseKind::Trivial: return "Trivial";
        case CaseKind::Inadmissible: return "Inadmissible";
    }
    return "?";
}

RepSpec make_spec(RepKind kind, std::map<char, LaurentPolynomial> params) {
    RepSpec spec{kind, std::move(params)};
    switch (kind) {
        case RepKind::Simple:
        case RepKind::UnreducedBurau:
            break;
        case RepKind::Case1: {
            const auto& a = require_param(spec, 'a');
            const auto& b = require_param(spec, 'b');
            if (a == one()) throw InvalidParams("case1 requires a != 1");
            if (!b.is_unit())
                throw InvalidParams("case1 requires b to be a unit (c = (1-a)/b must be Laurent)");
            break;
        }
        case RepKind::Case2: {
            const auto& d = require_param(spec, 'd');
            const auto& b = require_param(spec, 'b');
            if (d == one()) throw InvalidParams("case2 requires d != 1");
            if (!b.is_unit())
                throw InvalidParams("case2 requires b to be a unit (c = (1-d)/b must be Laurent)");
            break;
        }
        case RepKind::Case3: {
            const auto& b = require_param(spec, 'b');
            const auto& c = require_param(spec, 'c');
            if (b.is_zero() || c.is_zero()) throw InvalidParams("case3 requires b != 0 and c != 0");
            break;
        }
        case RepKind::Raw:
            break;
    }
    return spec;
}

PolyMatrix crossing_block(const RepSpec& spec) {
    switch (spec.kind) {
        case RepKind::Simple:
            return block2({}, var('t'), var('b'), {});
        case RepKind::Case1: {
            const auto& a = require_param(spec, 'a');
            const auto& b = require_param(spec, 'b');
            return block2(a, b, (one() - a) * b.monomial_inverse(), {});
        }
        case RepKind::Case2: {
            const auto& d = require_param(spec, 'd');
            const auto& b = require_param(spec, 'b');
            return block2({}, b, (one() - d) * b.monomial_inverse(), d);
        }
        case RepKind::Case3:
            return block2({}, require_param(spec, 'b'), require_param(spec, 'c'), {});
        case RepKind::UnreducedBurau:
            return block2(one() - var('b'), var('b'), one(), {});
        case RepKind::Raw:
            throw NotEvaluable("raw spec must be classified before evaluation");
    }
    throw NotEvaluable("unknown spec kind");
}

PolyMatrix crossing_block_inverse(const RepSpec& spec) {
    PolyMatrix blk = crossing_block(spec);
    LaurentPolynomial det =
        blk.at(0, 0) * blk.at(1, 1) - blk.at(0, 1) * blk.at(1, 0);
    if (!det.is_unit())
        throw NonUnitDeterminant("block determinant " + det.str() +
                                 " is not a unit of the Laurent ring");
    LaurentPolynomial inv_det = det.monomial_inverse();
    return block2(inv_det * blk.at(1, 1), -(inv_det * blk.at(0, 1)),
                  -(inv_det * blk.at(1, 0)), inv_det * blk.at(0, 0));
}

PolyMatrix generator_image(const RepSpec& spec, std::size_t i, int sign, std::size_t n) {
    if (!spec.evaluable()) throw NotEvaluable("raw spec is not evaluable");
    if (i < 1 || i + 1 > n) throw IndexOutOfRange("generator index out of range");
    PolyMatrix blk = sign >= 0 ? crossing_block(spec) : crossing_block_inverse(spec);
    return PolyMatrix::block_embed(i, blk, n);
}

PolyMatrix evaluate(const RepSpec& spec, const BraidWord& w) {
    PolyMatrix acc = PolyMatrix::identity(w.n);
    for (int k : w.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(k));
        acc = acc * generator_image(spec, i, k > 0 ? 1 : -1, w.n);
    }
    return acc;
}

PolyMatrix cubic_residual(const LaurentPolynomial& a, const LaurentPolynomial& b,
                          const LaurentPolynomial& c, const LaurentPolynomial& d) {
    PolyMatrix blk = block2(a, b, c, d);
    PolyMatrix g1 = PolyMatrix::block_embed(1, blk, 3);
    PolyMatrix g2 = PolyMatrix::block_embed(2, blk, 3);
    PolyMatrix lhs = g1 * g2 * g1;
    PolyMatrix rhs = g2 * g1 * g2;
    PolyMatrix r(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.at(i, j) = lhs.at(i, j) - rhs.at(i, j);
    return r;
}

CaseLabel classify_case(const LaurentPolynomial& a, const LaurentPolynomial& b,
                        const LaurentPolynomial& c, const LaurentPolynomial& d) {
    LaurentPolynomial one_p = LaurentPolynomial::one();
    if (a == one_p && d == one_p && b.is_zero() && c.is_zero())
        return {CaseKind::Trivial, "b = c = 0 and a = d = 1: identity block"};
    if (a.is_zero() && d.is_zero()) {
        if (!b.is_zero() && !c.is_zero())
            return {CaseKind::Case3, "a = d = 0 with b, c nonzero"};
        return {CaseKind::Inadmissible, "a = d = 0 but b or c vanishes: singular block"};
    }
    if (d.is_zero()) {
        if (b * c == one_p - a && a != one_p)
            return {CaseKind::Case1, "d = 0, b*c = 1 - a, a != 1"};
        return {CaseKind::Inadmissible,
                a == one_p ? "d = 0 branch needs a != 1" : "d = 0 branch needs b*c = 1 - a"};
    }
    if (a.is_zero()) {
        if (b * c == one_p - d && d != one_p)
            return {CaseKind::Case2, "a = 0, b*c = 1 - d, d != 1"};
        return {CaseKind::Inadmissible,
                d == one_p ? "a = 0 branch needs d != 1" : "a = 0 branch needs b*c = 1 - d"};
    }
    return {CaseKind::Inadmissible, "cubic residual cannot vanish with a != 0 and d != 0"};
}

}  // namespace braidrep
