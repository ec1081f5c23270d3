#include <doctest.h>

#include "braidrep/path_oracle.hpp"
#include "braidrep/rep.hpp"
#include "test_util.hpp"

using namespace braidrep;

namespace {
LaurentPolynomial P(const char* text) { return LaurentPolynomial::parse(text); }
}  // namespace

TEST_CASE("path analysis reproduces the worked example") {
    PolyMatrix m = path_matrix(parse_word("2 -1 2", 3));
    CHECK(m.at(0, 2) == P("b^-1*t"));
    CHECK(m.at(1, 1) == P("t*b"));
    CHECK(m.at(2, 0) == P("b*t^-1"));
    CHECK(m.at(0, 0).is_zero());
}

TEST_CASE("empty word gives the identity") {
    CHECK(path_matrix(BraidWord{3, {}}).is_identity());
}

TEST_CASE("cubic words accumulate t^2, bt, b^2") {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
            int ii = static_cast<int>(i);
            PolyMatrix m = path_matrix(BraidWord{n, {ii, ii + 1, ii}});
            CHECK(m.at(i - 1, i + 1) == P("t^2"));
            CHECK(m.at(i, i) == P("b*t"));
            CHECK(m.at(i + 1, i - 1) == P("b^2"));
            // same matrix from the other side of the cubic relation
            CHECK(m == path_matrix(BraidWord{n, {ii + 1, ii, ii + 1}}));
        }
}

TEST_CASE("path oracle agrees with matrix evaluation") {
    std::mt19937_64 rng(41);
    RepSpec simple = make_spec(RepKind::Simple);
    std::uniform_int_distribution<std::size_t> n_dist(2, 5);
    for (int it = 0; it < 1000; ++it) {
        std::size_t n = n_dist(rng);
        BraidWord w = testutil::random_reduced_word(rng, n, 16);
        CHECK(path_matrix(w) == evaluate(simple, w));
    }
}

TEST_CASE("support pattern is the strand permutation") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 200; ++it) {
        BraidWord w = testutil::random_reduced_word(rng, 5, 12);
        PolyMatrix m = path_matrix(w);
        StrandPermutation perm = permutation(w);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(m.at(i, j).is_zero() == (perm[i] != j + 1));
    }
}
