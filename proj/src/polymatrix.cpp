#include "braidrep/polymatrix.hpp"

namespace braidrep {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial::one();
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    PolyMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const LaurentPolynomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

bool PolyMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

PolyMatrix PolyMatrix::block_embed(std::size_t i, const PolyMatrix& block, std::size_t n) {
    if (block.dim() != 2) throw DimensionMismatch("block must be 2x2");
    if (i < 1 || i + 1 > n || n < 2)
        throw IndexOutOfRange("block position out of range");
    PolyMatrix m = identity(n);
    m.at(i - 1, i - 1) = block.at(0, 0);
    m.at(i - 1, i) = block.at(0, 1);
    m.at(i, i - 1) = block.at(1, 0);
    m.at(i, i) = block.at(1, 1);
    return m;
}

LaurentPolynomial PolyMatrix::determinant() const {
    if (n_ > 6) throw DimensionTooLarge("determinant limited to n <= 6");
    if (n_ == 1) return at(0, 0);
    LaurentPolynomial det;
    for (std::size_t j = 0; j < n_; ++j) {
        if (at(0, j).is_zero()) continue;
        PolyMatrix minor(n_ - 1);
        for (std::size_t r = 1; r < n_; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        LaurentPolynomial cof = at(0, j) * minor.determinant();
        det += (j % 2 == 0) ? cof : -cof;
    }
    return det;
}

MonomialDecomposition monomial_decompose(const PolyMatrix& m) {
    std::size_t n = m.dim();
    MonomialDecomposition d;
    d.permutation.assign(n, 0);
    std::vector<bool> col_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t found = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            if (found != n) throw NotMonomialMatrix("row has more than one nonzero entry");
            found = j;
        }
        if (found == n) throw NotMonomialMatrix("row is zero");
        if (!m.at(i, found).is_single_term())
            throw NotMonomialMatrix("entry is not a single-term polynomial");
        if (col_used[found]) throw NotMonomialMatrix("column has more than one nonzero entry");
        col_used[found] = true;
        d.permutation[i] = found + 1;
        d.values[i + 1] = m.at(i, found);
    }
    return d;
}

}  // namespace braidrep
