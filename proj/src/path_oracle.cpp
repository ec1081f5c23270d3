#include "braidrep/path_oracle.hpp"

#include <cstdlib>

namespace braidrep {

PolyMatrix path_matrix(const BraidWord& w) {
    std::size_t n = w.n;
    // position[p] = index of the strand currently at column p+1.
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[p] = p;
    std::vector<LaurentPolynomial> acc(n, LaurentPolynomial::one());
    std::vector<bool> touched(n, false);

    LaurentPolynomial t = LaurentPolynomial::variable('t');
    LaurentPolynomial b = LaurentPolynomial::variable('b');
    LaurentPolynomial t_inv = t.monomial_inverse();
    LaurentPolynomial b_inv = b.monomial_inverse();

    for (int k : w.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(k)) - 1;
        std::size_t left = position[i], right = position[i + 1];
        if (k > 0) {
            // positive crossing: top strand moves left-to-right with t,
            // bottom strand right-to-left with b
            acc[left] *= t;
            acc[right] *= b;
        } else {
            // negative crossing: top strand moves right-to-left with t^-1,
            // bottom strand left-to-right with b^-1
            acc[right] *= t_inv;
            acc[left] *= b_inv;
        }
        touched[left] = touched[right] = true;
        std::swap(position[i], position[i + 1]);
    }

    PolyMatrix m(n);
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t strand = position[p];
        m.at(strand, p) = touched[strand] ? acc[strand] : LaurentPolynomial::one();
    }
    return m;
}

}  // namespace braidrep
