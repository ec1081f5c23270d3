#pragma once

// Square matrices over LaurentPolynomial. Dense storage: the dimension is a
// braid index, sparsity lives inside the polynomial entries.

#include <cstddef>
#include <map>
#include <vector>

#include "braidrep/laurent.hpp"

namespace braidrep {

class PolyMatrix {
  public:
    explicit PolyMatrix(std::size_t n)
        : n_(n), entries_(n * n) {}

    static PolyMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }

    LaurentPolynomial& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
    const LaurentPolynomial& at(std::size_t row, std::size_t col) const {
        return entries_[row * n_ + col];
    }

    PolyMatrix operator*(const PolyMatrix& o) const;
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    bool is_identity() const;

    // Identity everywhere except rows/columns {i, i+1}, which carry the 2x2
    // block. i is 1-based, 1 <= i <= n-1.
    static PolyMatrix block_embed(std::size_t i, const PolyMatrix& block, std::size_t n);

    LaurentPolynomial determinant() const;  // cofactor expansion, n <= 6

  private:
    std::size_t n_;
    std::vector<LaurentPolynomial> entries_;
};

// One nonzero single-term entry per row and column; its support is the graph
// of a permutation (1-based, row -> column).
struct MonomialDecomposition {
    std::vector<std::size_t> permutation;          // permutation[i-1] = j
    std::map<std::size_t, LaurentPolynomial> values;  // i -> entry at (i, permutation(i))
};

MonomialDecomposition monomial_decompose(const PolyMatrix& m);

}  // namespace braidrep
