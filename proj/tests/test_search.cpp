#include <doctest.h>

#include <algorithm>

#include "braidrep/search.hpp"
#include "test_util.hpp"

using namespace braidrep;

namespace {
const std::uint64_t kModulus = 2305843009213693951ULL;

bool is_identity_residues(const ResidueMatrix& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m[i * n + j] != (i == j ? 1u : 0u)) return false;
    return true;
}
}  // namespace

TEST_CASE("fingerprint of a kernel word is the identity under any assignment") {
    RepSpec simple = make_spec(RepKind::Simple);
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        auto assignment = fingerprint_assignment(seed, kModulus);
        CHECK(is_identity_residues(fingerprint(simple, parse_word("2 -2", 3), assignment, kModulus),
                                   3));
        CHECK(is_identity_residues(
            fingerprint(simple, parse_word("1 -2 1 -2 1 -2", 3), assignment, kModulus), 3));
    }
}

TEST_CASE("fingerprint of a generator is the substituted image") {
    RepSpec simple = make_spec(RepKind::Simple);
    ResidueMatrix m = fingerprint(simple, parse_word("1", 3), {{'t', 2}, {'b', 3}}, 101);
    CHECK(m == ResidueMatrix{0, 2, 0, 3, 0, 0, 0, 0, 1});
}

TEST_CASE("fingerprint equals entrywise substitution of the symbolic image") {
    std::mt19937_64 rng(51);
    RepSpec simple = make_spec(RepKind::Simple);
    auto assignment = fingerprint_assignment(99, kModulus);
    for (int it = 0; it < 50; ++it) {
        BraidWord w = testutil::random_reduced_word(rng, 4, 10);
        PolyMatrix sym = evaluate(simple, w);
        ResidueMatrix fp = fingerprint(simple, w, assignment, kModulus);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(fp[i * 4 + j] == sym.at(i, j).substitute(assignment, kModulus));
    }
}

TEST_CASE("search reproduces the length-6 witness in B3") {
    SearchConfig config;
    config.n = 3;
    config.max_len = 6;
    config.spec = make_spec(RepKind::Simple);
    SearchResult result = search_kernel(config);
    REQUIRE(result.witnesses.size() == 1);
    const BraidWord& w = result.witnesses[0].word;
    CHECK(w.letters.size() == 6);
    CHECK(result.witnesses[0].certified);
    // the alternating pattern (s_i s_j^-1)^3 up to the obvious symmetries
    std::vector<std::vector<int>> orbit = {{1, -2, 1, -2, 1, -2},
                                           {-2, 1, -2, 1, -2, 1},
                                           {2, -1, 2, -1, 2, -1},
                                           {-1, 2, -1, 2, -1, 2}};
    CHECK(std::find(orbit.begin(), orbit.end(), w.letters) != orbit.end());
    CHECK(result.confirmed >= 1);
    CHECK(result.fingerprint_hits >= result.confirmed);
    CHECK(result.words_enumerated >= result.fingerprint_hits);
}

TEST_CASE("no shorter witnesses exist in B3") {
    SearchConfig config;
    config.n = 3;
    config.max_len = 5;
    config.spec = make_spec(RepKind::Simple);
    config.limit = 100;
    SearchResult result = search_kernel(config);
    CHECK(result.witnesses.empty());
    CHECK(result.confirmed == 0);
}

TEST_CASE("no witnesses in B2 up to length 8") {
    SearchConfig config;
    config.n = 2;
    config.max_len = 8;
    config.spec = make_spec(RepKind::Simple);
    config.limit = 100;
    SearchResult result = search_kernel(config);
    CHECK(result.witnesses.empty());
    // freely reduced words in B2: sign runs only, 2 per length
    CHECK(result.words_enumerated == 16);
}

TEST_CASE("search is deterministic for a fixed config") {
    SearchConfig config;
    config.n = 3;
    config.max_len = 6;
    config.spec = make_spec(RepKind::Simple);
    config.seed = 7;
    config.limit = 10;
    SearchResult a = search_kernel(config);
    SearchResult b = search_kernel(config);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i)
        CHECK(a.witnesses[i].word == b.witnesses[i].word);
    CHECK(a.words_enumerated == b.words_enumerated);
    CHECK(a.fingerprint_hits == b.fingerprint_hits);
    CHECK(a.confirmed == b.confirmed);
}

TEST_CASE("invalid configs are rejected") {
    SearchConfig config;
    config.spec = make_spec(RepKind::Simple);
    config.n = 1;
    CHECK_THROWS_AS(search_kernel(config), InvalidConfig);
    config.n = 3;
    config.modulus = 101;
    CHECK_THROWS_AS(search_kernel(config), InvalidConfig);
    config.modulus = kModulus;
    config.spec = RepSpec{RepKind::Raw, {}};
    CHECK_THROWS_AS(search_kernel(config), InvalidConfig);
}
