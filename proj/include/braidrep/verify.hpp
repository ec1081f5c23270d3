#pragma once

// Relation checking and kernel-witness certification.

#include <utility>
#include <vector>

#include "braidrep/rep.hpp"

namespace braidrep {

struct RelationReport {
    std::size_t n = 0;
    RepSpec spec;
    std::vector<std::size_t> cubic_failures;                     // i where s_i s_{i+1} s_i fails
    std::vector<std::pair<std::size_t, std::size_t>> commuting_failures;
    bool passed = false;
};

struct KernelWitness {
    BraidWord word;
    RepSpec spec;
    bool image_is_identity = false;
    bool burau_image_nontrivial = false;
    bool certified = false;  // image_is_identity && burau_image_nontrivial
};

// Symbolic check of all cubic triples and commuting pairs in dimension n.
RelationReport check_relations(const RepSpec& spec, std::size_t n);

// Certifies a kernel witness: the image under `spec` must be the identity,
// while the unreduced Burau image is not (any representation maps the trivial
// braid to I, so a non-identity image proves the braid is nontrivial).
KernelWitness verify_kernel_witness(const RepSpec& spec, const BraidWord& w);

}  // namespace braidrep
