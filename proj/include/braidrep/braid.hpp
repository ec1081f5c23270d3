#pragma once

// Braid words in B_n. Letter k stands for the Artin generator sigma_k,
// -k for its inverse. The strand count n is carried explicitly.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/errors.hpp"

namespace braidrep {

struct BraidWord {
    std::size_t n = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Bijection on {1..n}: mapping[i-1] is where the strand starting at the
// higher point i arrives at the bottom.
using StrandPermutation = std::vector<std::size_t>;

// Accepts either whitespace-separated signed integers ("1 -2 1") or
// sK^m tokens ("s2 s1^-1 s2"); powers are expanded letter by letter.
BraidWord parse_word(std::string_view text, std::size_t n);

// Canonical form: signed integers separated by single spaces; empty word is "e".
std::string format_word(const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord compose(const BraidWord& u, const BraidWord& v);

// Deletes adjacent cancelling pairs k,-k until none remain.
BraidWord free_reduce(const BraidWord& w);

StrandPermutation permutation(const BraidWord& w);

}  // namespace braidrep
