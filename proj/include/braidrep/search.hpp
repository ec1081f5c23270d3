#pragma once

// Bounded breadth-first search for kernel elements: enumerate freely-reduced
// words in length order, prune with a modular fingerprint, confirm hits
// symbolically and certify them against the unreduced Burau image.

#include <cstdint>
#include <vector>

#include "braidrep/verify.hpp"

namespace braidrep {

struct SearchConfig {
    std::size_t n = 3;
    std::size_t max_len = 6;
    RepSpec spec;
    std::uint64_t seed = 0;
    std::uint64_t modulus = 2305843009213693951ULL;  // 2^61 - 1
    std::size_t limit = 1;
};

struct SearchResult {
    std::vector<KernelWitness> witnesses;
    std::uint64_t words_enumerated = 0;
    std::uint64_t fingerprint_hits = 0;
    std::uint64_t confirmed = 0;
};

// Residue matrix, row-major, dimension n.
using ResidueMatrix = std::vector<std::uint64_t>;

// Draws a nonzero residue per variable, deterministically from the seed.
std::map<char, std::uint64_t> fingerprint_assignment(std::uint64_t seed, std::uint64_t modulus);

// Image of w with every entry reduced mod `modulus` under `assignment`.
// Computed as a product of per-generator residue matrices; by the
// homomorphism property this equals entrywise substitution of the symbolic
// image.
ResidueMatrix fingerprint(const RepSpec& spec, const BraidWord& w,
                          const std::map<char, std::uint64_t>& assignment, std::uint64_t modulus);

SearchResult search_kernel(const SearchConfig& config);

}  // namespace braidrep
