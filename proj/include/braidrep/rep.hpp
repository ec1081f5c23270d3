#pragma once

// The representation family: generator images, word evaluation, the cubic
// residual, and admissibility classification of 2x2 crossing blocks.

#include <map>
#include <string>

#include "braidrep/braid.hpp"
#include "braidrep/polymatrix.hpp"

namespace braidrep {

enum class RepKind { Simple, Case1, Case2, Case3, UnreducedBurau, Raw };

struct RepSpec {
    RepKind kind = RepKind::Simple;
    std::map<char, LaurentPolynomial> params;

    bool evaluable() const { return kind != RepKind::Raw; }
};

enum class CaseKind { Case1, Case2, Case3, Trivial, Inadmissible };

struct CaseLabel {
    CaseKind label;
    std::string reason;
};

const char* rep_kind_name(RepKind k);
const char* case_kind_name(CaseKind k);

// Validates params against the kind's admissibility conditions.
RepSpec make_spec(RepKind kind, std::map<char, LaurentPolynomial> params = {});

// The spec's 2x2 crossing block.
PolyMatrix crossing_block(const RepSpec& spec);

// Exact 2x2 inverse; requires a unit determinant.
PolyMatrix crossing_block_inverse(const RepSpec& spec);

// Image of sigma_i (sign=+1) or sigma_i^{-1} (sign=-1) in dimension n.
PolyMatrix generator_image(const RepSpec& spec, std::size_t i, int sign, std::size_t n);

// Ordered product of generator images; empty word maps to the identity.
PolyMatrix evaluate(const RepSpec& spec, const BraidWord& w);

// Psi(s1)Psi(s2)Psi(s1) - Psi(s2)Psi(s1)Psi(s2) in B_3 for the raw block
// [[a,b],[c,d]]; its vanishing characterizes admissible parameters.
PolyMatrix cubic_residual(const LaurentPolynomial& a, const LaurentPolynomial& b,
                          const LaurentPolynomial& c, const LaurentPolynomial& d);

CaseLabel classify_case(const LaurentPolynomial& a, const LaurentPolynomial& b,
                        const LaurentPolynomial& c, const LaurentPolynomial& d);

}  // namespace braidrep
